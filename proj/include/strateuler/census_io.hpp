/// @file census_io.hpp
/// @brief JSON loading and saving for census documents, simplicial complexes
///        and Fubini bundles.
///
/// A census document is one JSON object:
///
///     {
///       "name": "node-linear",
///       "equidimensional": true,
///       "strata": [{"id": "V1", "dim": 0, "chi": 1},
///                  {"id": "V2", "dim": 1, "chi": 0, "regular_part": true}],
///       "order": [["V1", "V2"]],
///       "links": [{"at": "V1", "in_closure": "V2", "chi": 2}],
///       "fibration": {...},            // optional
///       "polar": {"gamma": {...}, "alpha": [...]},   // optional
///       "hyperplane_section": {...},   // optional, a census document
///       "expected": {"eu_global": 2},  // optional
///       "derivation_note": "..."
///     }
///
/// Schema violations raise SchemaError carrying a JSON pointer to the
/// offending value.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strateuler/euler_calculus.hpp"
#include "strateuler/fibered.hpp"
#include "strateuler/polar.hpp"
#include "strateuler/strata.hpp"

namespace strateuler {

/// An expected invariant: an integer, or a list of value labels.
using ExpectedValue = std::variant<Int, std::vector<std::string>>;

struct CensusDocument {
  StratifiedCensus base;
  std::optional<FiberedCensus> fibered;
  std::optional<PolarData> polar;
  std::shared_ptr<CensusDocument> hyperplane_section;
  std::map<std::string, ExpectedValue> expected;
  std::string derivation_note;

  const std::string& name() const { return base.name(); }
};

CensusDocument parse_document(const std::string& text);
/// Reads a file; throws SchemaError with path "" if it cannot be read.
CensusDocument load_document(const std::string& path);
/// Pretty-printed JSON that parse_document reads back to an equal document.
std::string dump_document(const CensusDocument& doc);

/// {"simplices": [[0], [1], [0, 1]]}; vertex lists must be sorted.
SimplicialComplex parse_complex(const std::string& text);

struct FubiniBundle {
  SimplicialMap map;
  SimplicialConstructibleFunction alpha;
};

/// {"complex_src": {...}, "complex_dst": {...}, "vertex_map": [[s, d], ...],
///  "weights": [{"simplex": [...], "weight": n}, ...]}
FubiniBundle parse_fubini(const std::string& text);
FubiniBundle load_fubini(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace strateuler
