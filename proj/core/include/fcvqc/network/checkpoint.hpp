#pragma once

#include <string>
#include <vector>

#include "fcvqc/network/spec.hpp"

namespace fcvqc::network {

// Plain-text checkpoint: architecture definition plus the flat parameter
// vector, printed with enough digits to round-trip doubles exactly. Loading
// rebuilds the spec through the same resolution rules and validates the
// parameter count, so a checkpoint can only be read back into the geometry
// it was written from.
void save_checkpoint(const std::string& path, const NetworkSpec& spec,
                     const std::vector<double>& params);

struct Checkpoint {
  NetworkSpec spec;
  std::vector<double> params;
};

Checkpoint load_checkpoint(const std::string& path);

}  // namespace fcvqc::network
