#pragma once

#include <string>

#include "blescope/nn/params.hpp"

namespace blescope::nn {

// Versioned binary checkpoint of every named tensor (data only, not Adam
// state). Round-trips are bit-exact in the 64-bit build.
void save_checkpoint(const ModelParams& params, const std::string& path);

// Loads into a fresh ModelParams; existing tensors are replaced.
ModelParams load_checkpoint(const std::string& path);

// FNV-1a hash of the serialized bytes, as a stable checkpoint id.
std::string checkpoint_id(const ModelParams& params);

}  // namespace blescope::nn
