#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace blescope {

// Number of beacons in the reference environment.
constexpr int kDefaultBeaconCount = 47;
// Window length H in seconds.
constexpr int kDefaultWindowLength = 5;

enum class Brand { kApple, kSamsung, kGoogle, kHuawei, kXiaomi };

const char* brand_name(Brand b);
Brand brand_from_string(const std::string& s);
std::vector<Brand> all_brands();

struct BeaconId {
  int index = 0;
};

struct PhoneModelId {
  int index = 0;
  Brand brand = Brand::kApple;

  bool operator==(const PhoneModelId& o) const {
    return index == o.index && brand == o.brand;
  }
};

struct Location {
  double x = 0.0;
  double y = 0.0;
};

// One sliding window of shifted RSSI: B rows (beacons) x H columns (seconds,
// oldest to newest). Entries are max(0, dBm + 100); 0 means "not detected".
struct RssiWindow {
  Eigen::MatrixXd values;
  PhoneModelId phone;
  long end_time = 0;  // 1 Hz grid, second of the newest column

  int beacons() const { return static_cast<int>(values.rows()); }
  int length() const { return static_cast<int>(values.cols()); }
};

struct LabeledSample {
  RssiWindow window;
  Location location;  // ground truth at window.end_time
};

struct UnlabeledSample {
  RssiWindow window;
};

enum class Split { kTrain, kVal, kTest };

const char* split_name(Split s);
Split split_from_string(const std::string& s);

// A contiguous 1 Hz recording from one phone. Columns of `rssi` are seconds
// starting at start_time; missing seconds were zero-filled at ingest.
struct Run {
  std::string id;
  PhoneModelId phone;
  Split split = Split::kTrain;
  long start_time = 0;
  Eigen::MatrixXd rssi;             // B x T, shifted encoding
  bool has_labels = false;
  std::vector<Location> locations;  // size T when has_labels

  int length() const { return static_cast<int>(rssi.cols()); }
  long time_at(int col) const { return start_time + col; }
};

}  // namespace blescope
