#include "htc/json_io.hpp"

#include <algorithm>
#include <charconv>

namespace htc::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError(std::string("expected an object with \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& object_field(const Json& j, const char* key) {
  const auto& f = field(j, key);
  if (!f.is_object()) throw InputError(std::string("field \"") + key + "\" must be an object");
  return f;
}

const Json& array_field(const Json& j, const char* key) {
  const auto& f = field(j, key);
  if (!f.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return f;
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

long long as_integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<long long>();
}

Element as_element(const Json& j, int order, const char* what) {
  const auto v = as_integer(j, what);
  if (v < 0 || v >= order) throw InputError(std::string(what) + " " + std::to_string(v) + " is not an element");
  return static_cast<Element>(v);
}

std::vector<std::string> as_strings(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

std::vector<std::vector<int>> as_table(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  for (const auto& row : j) {
    if (!row.is_array()) throw InputError(std::string(what) + " rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) r.push_back(static_cast<int>(as_integer(x, what)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = key.find('|', start);
    out.push_back(key.substr(start, bar - start));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string join_key(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? "|" : "") + names[i];
  return out;
}

int cover_index(const Cover& u, const std::string& name) {
  const auto& idx = u.indices();
  const auto it = std::find(idx.begin(), idx.end(), name);
  if (it == idx.end()) throw InputError("unknown cover index \"" + name + "\"");
  return static_cast<int>(it - idx.begin());
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  const auto s = as_string(j, "Milnor coordinate");
  const auto slash = s.find('/');
  auto parse = [&](std::string_view part) {
    long long v = 0;
    const auto* end = part.data() + part.size();
    const auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc() || ptr != end || part.empty()) throw InputError("malformed rational \"" + s + "\"");
    return v;
  };
  const std::string_view view(s);
  if (slash == std::string::npos) return Rational(parse(view));
  const auto den = parse(view.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
  return Rational(parse(view.substr(0, slash)), den);
}

}  // namespace

SimplicialComplex read_complex(const Json& j) {
  const auto& maximal = array_field(j, "maximal");
  std::vector<LabelSimplex> simplices;
  for (const auto& s : maximal) simplices.push_back(as_strings(s, "simplex"));
  for (const auto& s : simplices) {
    if (s.empty()) throw InputError("empty simplex");
  }
  if (j.contains("vertices")) return SimplicialComplex::from_labels(as_strings(j["vertices"], "vertices"), simplices);
  return build_complex(simplices);
}

Json write_complex(const SimplicialComplex& x) {
  Json maximal = Json::array();
  for (const auto& s : x.maximal_label_simplices()) maximal.push_back(s);
  return {{"maximal", maximal}, {"vertices", x.vertex_labels()}};
}

SimplicialMap read_map(const Json& j) { return read_map(j, read_complex(field(j, "target"))); }

SimplicialMap read_map(const Json& j, const SimplicialComplex& defaultTarget) {
  auto source = read_complex(field(j, "source"));
  auto target = j.contains("target") ? read_complex(j["target"]) : defaultTarget;
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : object_field(j, "vertexMap").items()) m[k] = as_string(v, "vertexMap value");
  return SimplicialMap::from_labels(std::move(source), std::move(target), m);
}

Json write_map(const SimplicialMap& f) {
  return {{"source", write_complex(f.source())}, {"target", write_complex(f.target())}, {"vertexMap", f.label_map()}};
}

FiniteGroup read_group(const Json& j) {
  const auto order = as_integer(field(j, "order"), "order");
  auto table = as_table(field(j, "table"), "table");
  if (order < 1 || static_cast<std::size_t>(order) != table.size()) throw InputError("group order does not match the table");
  for (const auto& row : table) {
    if (row.size() != table.size()) throw InputError("group table is not square");
  }
  return validate_group(std::move(table));
}

Json write_group(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

CrossedModule read_crossed_module(const Json& j) {
  auto base = read_group(field(j, "base"));
  auto fiber = read_group(field(j, "fiber"));
  std::vector<Element> boundary;
  for (const auto& x : array_field(j, "boundary")) boundary.push_back(as_element(x, base.order(), "boundary value"));
  auto action = as_table(field(j, "action"), "action");
  if (boundary.size() != static_cast<std::size_t>(fiber.order())) throw InputError("boundary must list one value per fiber element");
  if (action.size() != static_cast<std::size_t>(base.order())) throw InputError("action needs one row per base element");
  for (const auto& row : action) {
    if (row.size() != static_cast<std::size_t>(fiber.order())) throw InputError("action rows need one entry per fiber element");
    for (int x : row) {
      if (!fiber.contains(x)) throw InputError("action value is not a fiber element");
    }
  }
  return validate_crossed_module(std::move(base), std::move(fiber), std::move(boundary), std::move(action));
}

Json write_crossed_module(const CrossedModule& m) {
  return {{"base", write_group(m.base())},
          {"fiber", write_group(m.fiber())},
          {"boundary", m.boundary_map()},
          {"action", m.action_table()}};
}

Cover read_cover(const Json& j) {
  auto base = read_complex(field(j, "base"));
  std::map<std::string, SimplicialComplex> parts;
  for (const auto& [name, part] : object_field(j, "parts").items()) {
    if (name.empty() || name.find('|') != std::string::npos) throw InputError("cover index names must be nonempty without '|'");
    parts.emplace(name, read_complex(part));
  }
  if (parts.empty()) throw InputError("cover has no parts");
  return Cover::from_named_parts(std::move(base), parts);
}

Json write_cover(const Cover& u) {
  Json parts = Json::object();
  for (int i = 0; i < u.size(); ++i) parts[u.index(i)] = write_complex(u.part(i));
  return {{"base", write_complex(u.base())}, {"parts", parts}};
}

PairValues read_pair_values(const Json& j, const Cover& u, const FiniteGroup& g) {
  if (!j.is_object()) throw InputError("values must be an object");
  PairValues out;
  for (const auto& [key, value] : j.items()) {
    const auto names = split_key(key);
    if (names.size() != 2) throw InputError("value key \"" + key + "\" must name two indices");
    int a = cover_index(u, names[0]);
    int b = cover_index(u, names[1]);
    Element e = as_element(value, g.order(), "value");
    if (a == b) throw InputError("value key \"" + key + "\" repeats an index");
    if (a > b) {
      std::swap(a, b);
      e = g.inverse(e);
    }
    if (!out.emplace(IndexPair{a, b}, e).second) throw InputError("pair " + key + " given twice");
  }
  return out;
}

Json write_pair_values(const PairValues& v, const Cover& u) {
  Json out = Json::object();
  for (const auto& [p, e] : v) out[join_key({u.index(p.first), u.index(p.second)})] = e;
  return out;
}

TripleValues read_triple_values(const Json& j, const Cover& u) {
  if (!j.is_object()) throw InputError("witnesses must be an object");
  TripleValues out;
  for (const auto& [key, value] : j.items()) {
    const auto names = split_key(key);
    if (names.size() != 3) throw InputError("witness key \"" + key + "\" must name three indices");
    IndexTuple t;
    for (const auto& n : names) t.push_back(cover_index(u, n));
    if (!(t[0] < t[1] && t[1] < t[2])) throw InputError("witness key \"" + key + "\" must list indices in order");
    out[t] = static_cast<Element>(as_integer(value, "witness"));
  }
  return out;
}

Json write_triple_values(const TripleValues& v, const Cover& u) {
  Json out = Json::object();
  for (const auto& [t, e] : v) out[join_key(index_names(u, t))] = e;
  return out;
}

CocycleDocument read_cocycle(const Json& j) {
  auto analysis = analyze_cover(read_cover(field(j, "cover")));
  auto group = read_group(field(j, "group"));
  auto values = read_pair_values(field(j, "values"), analysis->cover, group);
  auto action = regular_action(group);
  if (j.contains("action")) {
    const auto& a = j["action"];
    action = GroupAction(group, as_strings(field(a, "fiber"), "fiber"), as_table(field(a, "table"), "action table"));
  }
  return {std::move(analysis), std::move(group), std::move(values), std::move(action)};
}

Json write_cocycle(const Cocycle1& c) {
  return {{"cover", write_cover(c.cover())},
          {"group", write_group(c.group())},
          {"values", write_pair_values(c.values(), c.cover())}};
}

GerbeData read_gerbe(const Json& j) {
  GerbeData d{analyze_cover(read_cover(field(j, "cover"))), read_crossed_module(field(j, "crossedModule")), {}, {}};
  d.edges = read_pair_values(field(j, "values"), d.analysis->cover, d.module.base());
  d.witnesses = read_triple_values(field(j, "witnesses"), d.analysis->cover);
  return d;
}

Json write_gerbe(const GerbeData& d) {
  return {{"cover", write_cover(d.analysis->cover)},
          {"crossedModule", write_crossed_module(d.module)},
          {"values", write_pair_values(d.edges, d.analysis->cover)},
          {"witnesses", write_triple_values(d.witnesses, d.analysis->cover)}};
}

Bundle read_bundle(const Json& j) {
  auto total = read_complex(field(j, "total"));
  auto base = read_complex(field(j, "base"));
  std::map<std::string, std::string> projection;
  for (const auto& [k, v] : object_field(j, "projection").items()) projection[k] = as_string(v, "projection value");
  auto group = read_group(field(j, "group"));
  GroupAction action(std::move(group), as_strings(field(j, "fiber"), "fiber"), as_table(field(j, "action"), "action"));
  return Bundle(SimplicialMap::from_labels(std::move(total), std::move(base), projection), std::move(action));
}

Json write_bundle(const Bundle& b) {
  return {{"total", write_complex(b.total())},
          {"base", write_complex(b.base())},
          {"projection", b.projection().label_map()},
          {"group", write_group(b.action().group())},
          {"fiber", b.action().fiber()},
          {"action", b.action().table()}};
}

FiniteGroup read_milnor_group(const Json& j) { return read_group(field(j, "group")); }

MilnorPoint read_milnor_point(const Json& j) {
  MilnorPoint p;
  for (const auto& x : array_field(j, "t")) p.t.push_back(parse_rational(x));
  for (const auto& [key, value] : object_field(j, "g").items()) {
    const auto parts = split_key(key);
    if (parts.size() != 2) throw InputError("Milnor key \"" + key + "\" must be \"i|j\"");
    std::pair<int, int> ij;
    int* slots[2] = {&ij.first, &ij.second};
    for (int s = 0; s < 2; ++s) {
      const auto& part = parts[static_cast<std::size_t>(s)];
      const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), *slots[s]);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty() || *slots[s] < 0) {
        throw InputError("Milnor key \"" + key + "\" must be \"i|j\"");
      }
    }
    p.g[ij] = static_cast<Element>(as_integer(value, "Milnor value"));
  }
  return p;
}

Json write_homology(const HomologyResult& h) {
  Json torsion = Json::array();
  for (const auto& d : h.degrees) torsion.push_back(d.torsion);
  return {{"betti", h.betti()}, {"torsion", torsion}};
}

}  // namespace htc::io
