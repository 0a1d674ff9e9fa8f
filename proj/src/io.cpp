#include "qutrit/io.hpp"

#include <json.hpp>

namespace qutrit {

namespace {

using nlohmann::json;

Complex parse_entry(const json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
    return {e[0].get<double>(), e[1].get<double>()};
  throw ParseError("matrix entry must be a number or an [re, im] pair");
}

ComplexMatrix3 parse_matrix(const json& m) {
  if (!m.is_array() || m.size() != 3) throw ParseError("matrix must have 3 rows");
  ComplexMatrix3 out;
  for (int i = 0; i < 3; ++i) {
    const json& row = m[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) throw ParseError("each matrix row must have 3 entries");
    for (int j = 0; j < 3; ++j) out(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
  }
  return out;
}

}  // namespace

StateDocument parse_state_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const json* list = &root;
  if (root.is_object()) {
    if (!root.contains("states")) throw ParseError("document has no \"states\" array");
    list = &root["states"];
  }
  if (!list->is_array()) throw ParseError("\"states\" must be an array");
  StateDocument doc;
  std::size_t index = 0;
  for (const json& item : *list) {
    if (!item.is_object() || !item.contains("matrix"))
      throw ParseError("state " + std::to_string(index) + " has no \"matrix\"");
    LabeledMatrix lm;
    if (item.contains("label")) {
      if (!item["label"].is_string()) throw ParseError("state label must be a string");
      lm.label = item["label"].get<std::string>();
    } else {
      lm.label = "state" + std::to_string(index);
    }
    try {
      lm.matrix = parse_matrix(item["matrix"]);
    } catch (const ParseError& e) {
      throw ParseError("state '" + lm.label + "': " + e.what());
    }
    doc.entries.push_back(std::move(lm));
    ++index;
  }
  return doc;
}

std::string serialize_state_document(const StateDocument& doc) {
  json states = json::array();
  for (const auto& e : doc.entries) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) {
      json row = json::array();
      for (int j = 0; j < 3; ++j) row.push_back({e.matrix(i, j).real(), e.matrix(i, j).imag()});
      rows.push_back(row);
    }
    states.push_back({{"label", e.label}, {"matrix", rows}});
  }
  return json{{"states", states}}.dump(2) + "\n";
}

LoadedStates validate_document(const StateDocument& doc) {
  LoadedStates out;
  for (const auto& e : doc.entries) {
    const ValidationReport r = validate_state(e.matrix);
    if (r.ok())
      out.states.emplace_back(e.label, assume_state(e.matrix));
    else
      out.failures.push_back({e.label, r.describe()});
  }
  return out;
}

std::optional<DensityMatrix> preset_state(std::string_view name) {
  if (name == "plus3") return DensityMatrix::pure({1.0, 1.0, 1.0});
  if (name == "plus2") return DensityMatrix::pure({1.0, 1.0, 0.0});
  if (name == "basis0") return DensityMatrix::basis(0);
  if (name == "basis1") return DensityMatrix::basis(1);
  if (name == "basis2") return DensityMatrix::basis(2);
  if (name == "mixed") return DensityMatrix::maximally_mixed();
  if (name == "rho0") return DensityMatrix(ComplexMatrix3::diagonal(0.6, 0.3, 0.1));
  if (name == "tetra0") return DensityMatrix::pure({1.0, 1.0, 1.0});
  if (name == "tetra1") return DensityMatrix::pure({1.0, 1.0, -1.0});
  if (name == "tetra2") return DensityMatrix::pure({1.0, -1.0, 1.0});
  if (name == "tetra3") return DensityMatrix::pure({1.0, -1.0, -1.0});
  return std::nullopt;
}

std::vector<std::string> preset_names() {
  return {"plus3", "plus2", "basis0", "basis1", "basis2", "mixed",
          "rho0",  "tetra0", "tetra1", "tetra2", "tetra3"};
}

}  // namespace qutrit
