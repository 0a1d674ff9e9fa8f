#pragma once

// State documents (JSON) and named states for the command line.
//
// A document is either {"states": [...]} or a bare array of entries
//   {"label": "name", "matrix": [[[re, im], [re, im], [re, im]], ...]}
// with three rows of three [re, im] pairs. A bare number is accepted for a
// real entry.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qutrit/bloch.hpp"

namespace qutrit {

/// Malformed JSON or a document that does not have the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LabeledMatrix {
  std::string label;
  ComplexMatrix3 matrix;
};

struct StateDocument {
  std::vector<LabeledMatrix> entries;
};

/// Throws ParseError. Matrices are not validated here.
StateDocument parse_state_document(std::string_view text);
std::string serialize_state_document(const StateDocument& doc);

struct StateFailure {
  std::string label;
  std::string reason;
};

struct LoadedStates {
  std::vector<std::pair<std::string, DensityMatrix>> states;
  std::vector<StateFailure> failures;
};

/// Validates every entry as a density matrix.
LoadedStates validate_document(const StateDocument& doc);

/// plus3, plus2, basis0..basis2, mixed, rho0, tetra0..tetra3.
std::optional<DensityMatrix> preset_state(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace qutrit
