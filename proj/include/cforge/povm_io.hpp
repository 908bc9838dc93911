#pragma once

#include <string>

#include "cforge/measurement.hpp"

namespace cforge {

// POVM JSON schema:
//   { "dim": 2, "effects": [ [[re,im], ...], ... ] }
// Each effect is a row-major flat list of dim*dim [re, im] pairs.

Povm povm_from_json_text(const std::string& text);
Povm load_povm_json(const std::string& path);

std::string povm_to_json_text(const Povm& povm);
void save_povm_json(const Povm& povm, const std::string& path);

struct PovmValidationReport {
  int dim = 0;
  std::size_t n_effects = 0;
  double completeness_deviation = 0.0;
  std::vector<double> min_eigenvalues;
  std::vector<double> raw_quantumness;
  bool free_measurement = false;
  bool cnm = false;
};

PovmValidationReport inspect_povm(const Povm& povm);

}  // namespace cforge
