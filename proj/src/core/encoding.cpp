#include "blescope/core/encoding.hpp"

#include <algorithm>

#include "blescope/core/error.hpp"
#include "blescope/core/types.hpp"

namespace blescope {

double shift_rssi(double dbm, double shift) { return std::max(0.0, dbm + shift); }

double unshift_rssi(double shifted, double shift) { return shifted - shift; }

const char* brand_name(Brand b) {
  switch (b) {
    case Brand::kApple: return "apple";
    case Brand::kSamsung: return "samsung";
    case Brand::kGoogle: return "google";
    case Brand::kHuawei: return "huawei";
    case Brand::kXiaomi: return "xiaomi";
  }
  return "?";
}

Brand brand_from_string(const std::string& s) {
  for (Brand b : all_brands())
    if (s == brand_name(b)) return b;
  throw Error("unknown brand: '" + s + "'");
}

std::vector<Brand> all_brands() {
  return {Brand::kApple, Brand::kSamsung, Brand::kGoogle, Brand::kHuawei, Brand::kXiaomi};
}

const char* split_name(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
  }
  return "?";
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::kTrain;
  if (s == "val" || s == "validation") return Split::kVal;
  if (s == "test") return Split::kTest;
  throw Error("unknown split tag: '" + s + "'");
}

}  // namespace blescope
