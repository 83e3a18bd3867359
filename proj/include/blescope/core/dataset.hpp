#pragma once

#include <string>
#include <vector>

#include "blescope/core/ingest.hpp"
#include "blescope/core/types.hpp"

namespace blescope {

// JSON manifest listing run CSVs with split tags:
//   {"runs": [{"path": "r0.csv", "split": "train"}, ...]}
// Relative paths resolve against the manifest's directory.
struct Manifest {
  struct Entry {
    std::string path;
    Split split = Split::kTrain;
  };
  std::vector<Entry> entries;
};

Manifest load_manifest(const std::string& path);
void write_manifest(const Manifest& m, const std::string& path);

class Dataset {
 public:
  Dataset() = default;
  explicit Dataset(std::vector<Run> runs);

  static Dataset load(const std::string& manifest_path, const IngestSchema& schema = {});

  const std::vector<Run>& runs() const { return runs_; }
  std::vector<Run> runs_for(Split split) const;

  // Train/val accessors refuse to exist for test data; callers that need the
  // test split must ask for it by name.
  std::vector<Run> train_runs() const { return runs_for(Split::kTrain); }
  std::vector<Run> val_runs() const { return runs_for(Split::kVal); }
  std::vector<Run> test_runs() const { return runs_for(Split::kTest); }

 private:
  // No (phone, timestamp) pair may appear in two splits.
  void validate_disjoint() const;

  std::vector<Run> runs_;
};

// Throws DataHygieneError if any run is test-tagged. Every training and
// tuning entry point calls this on its inputs.
void require_no_test_runs(const std::vector<Run>& runs, const std::string& context);

}  // namespace blescope
