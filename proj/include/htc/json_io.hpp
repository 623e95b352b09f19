#pragma once

// JSON documents for every library type.  Readers throw InputError on any
// schema violation; writers produce the same schema, keys in sorted order.

#include <string>

#include <nlohmann/json.hpp>

#include "htc/classifying.hpp"
#include "htc/gerbe.hpp"

namespace htc::io {

using Json = nlohmann::json;

/// {"maximal": [["a","b"], ...], "vertices": [...]}; "vertices" is optional
/// and fixes the vertex order (labels sorted otherwise).
SimplicialComplex read_complex(const Json& j);
Json write_complex(const SimplicialComplex& x);

/// {"source": complex, "target": complex, "vertexMap": {"a": "x"}}.
/// `target` may be omitted when a default is supplied.
SimplicialMap read_map(const Json& j);
SimplicialMap read_map(const Json& j, const SimplicialComplex& defaultTarget);
Json write_map(const SimplicialMap& f);

/// {"order": n, "table": [[...]]}.
FiniteGroup read_group(const Json& j);
Json write_group(const FiniteGroup& g);

/// {"base": group, "fiber": group, "boundary": [...], "action": [[...]]}.
CrossedModule read_crossed_module(const Json& j);
Json write_crossed_module(const CrossedModule& m);

/// {"base": complex, "parts": {"U0": complex, ...}}; index order is lexicographic.
Cover read_cover(const Json& j);
Json write_cover(const Cover& u);

/// Keys "a|b" name two cover indices; a reversed key stores the inverse.
PairValues read_pair_values(const Json& j, const Cover& u, const FiniteGroup& g);
Json write_pair_values(const PairValues& v, const Cover& u);
/// Keys "a|b|c" in index order.
TripleValues read_triple_values(const Json& j, const Cover& u);
Json write_triple_values(const TripleValues& v, const Cover& u);

struct CocycleDocument {
  std::shared_ptr<const CoverAnalysis> analysis;
  FiniteGroup group;
  PairValues values;
  /// Optional "action": {"fiber": [labels], "table": [[...]]}; regular otherwise.
  GroupAction action;
};
/// {"cover", "group", "values", "action"?}; values are not validated.
CocycleDocument read_cocycle(const Json& j);
Json write_cocycle(const Cocycle1& c);

/// {"cover", "crossedModule", "values", "witnesses"}; laws are not checked.
GerbeData read_gerbe(const Json& j);
Json write_gerbe(const GerbeData& d);

/// {"total", "base", "projection": {"e": "b"}, "group", "fiber": [labels], "action": [[...]]}.
Bundle read_bundle(const Json& j);
Json write_bundle(const Bundle& b);

/// {"group", "t": ["1/2", 0, ...], "g": {"0|1": n}}.
MilnorPoint read_milnor_point(const Json& j);
FiniteGroup read_milnor_group(const Json& j);

/// {"betti": [...], "torsion": [[...], ...]}.
Json write_homology(const HomologyResult& h);

}  // namespace htc::io
