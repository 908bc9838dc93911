#include "cforge/povm_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cforge/coherence.hpp"
#include "cforge/csv.hpp"
#include "cforge/errors.hpp"

namespace cforge {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (parsed.is_discarded()) throw ParseError("povm json: malformed document");
  return parsed;
}

}  // namespace

Povm povm_from_json_text(const std::string& text) {
  const json doc = parse_or_throw(text);
  if (!doc.is_object()) throw ParseError("povm json: top level must be an object");
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "dim" && key != "effects") throw ParseError("povm json: unknown key '" + key + "'");
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    throw ParseError("povm json: missing integer 'dim'");
  }
  if (!doc.contains("effects") || !doc["effects"].is_array() || doc["effects"].empty()) {
    throw ParseError("povm json: missing nonempty 'effects' array");
  }
  const int dim = doc["dim"].get<int>();
  if (dim < 1) throw ParseError("povm json: dim must be positive");

  std::vector<ComplexMatrix> effects;
  for (const auto& entry : doc["effects"]) {
    if (!entry.is_array() || entry.size() != static_cast<std::size_t>(dim) * dim) {
      throw ParseError("povm json: each effect needs dim*dim [re, im] pairs");
    }
    ComplexMatrix e(dim, dim);
    std::size_t flat = 0;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j, ++flat) {
        const auto& pair = entry[flat];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
          throw ParseError("povm json: entries must be [re, im] number pairs");
        }
        e(i, j) = Complex(pair[0].get<double>(), pair[1].get<double>());
      }
    }
    effects.push_back(std::move(e));
  }
  return validate_povm(std::move(effects));
}

Povm load_povm_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return povm_from_json_text(buffer.str());
}

std::string povm_to_json_text(const Povm& povm) {
  json doc;
  doc["dim"] = povm.dim();
  json effects = json::array();
  for (std::size_t k = 0; k < povm.size(); ++k) {
    json flat = json::array();
    const ComplexMatrix& e = povm.effect(k);
    for (int i = 0; i < povm.dim(); ++i) {
      for (int j = 0; j < povm.dim(); ++j) {
        flat.push_back({e(i, j).real(), e(i, j).imag()});
      }
    }
    effects.push_back(std::move(flat));
  }
  doc["effects"] = std::move(effects);
  return doc.dump(2) + "\n";
}

void save_povm_json(const Povm& povm, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << povm_to_json_text(povm);
}

PovmValidationReport inspect_povm(const Povm& povm) {
  PovmValidationReport report;
  report.dim = povm.dim();
  report.n_effects = povm.size();

  ComplexMatrix sum = ComplexMatrix::Zero(povm.dim(), povm.dim());
  for (std::size_t i = 0; i < povm.size(); ++i) {
    sum += povm.effect(i);
    report.min_eigenvalues.push_back(herm_eig(povm.effect(i)).eigenvalues[0]);
    report.raw_quantumness.push_back(povm.raw_quantumness(i));
  }
  report.completeness_deviation = max_abs_diff(sum, identity(povm.dim()));
  report.free_measurement = is_free_measurement(povm);
  report.cnm = is_cnm(povm);
  return report;
}

}  // namespace cforge
