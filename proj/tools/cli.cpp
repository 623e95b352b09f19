#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace htc::cli {

namespace {

using io::Json;

struct Verdict {
  bool value;
  Json details;
};

using Handler = std::function<Verdict(const std::vector<Json>&, const Job&)>;

SearchBudget budget_of(const Job& job) {
  SearchBudget b;
  if (job.budget) b.limit = *job.budget;
  return b;
}

void expect_inputs(const std::vector<Json>& docs, std::size_t lo, std::size_t hi) {
  if (docs.size() < lo || docs.size() > hi) {
    throw InputError(lo == hi ? "expected " + std::to_string(lo) + " input document(s)"
                              : "expected " + std::to_string(lo) + " to " + std::to_string(hi) + " input documents");
  }
}

Json failure(const ValidationError& e) { return {{"error", e.what()}, {"witness", e.witness()}}; }

Json label_simplices(const SimplicialComplex& x, const std::vector<std::size_t>& flatIds) {
  Json out = Json::array();
  for (auto id : flatIds) out.push_back(x.labels_of(x.flat_simplex(id)));
  return out;
}

Json complex_summary(const SimplicialComplex& x) {
  std::vector<std::size_t> f;
  for (int k = 0; k <= x.dimension(); ++k) f.push_back(x.count(k));
  return {{"dimension", x.dimension()},
          {"fVector", f},
          {"eulerCharacteristic", euler_characteristic(x)},
          {"components", connected_components(x).size()}};
}

Verdict validate_complex(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 1, 1);
  try {
    const auto x = io::read_complex(docs[0]);
    auto details = complex_summary(x);
    details["complex"] = io::write_complex(x);
    return {true, details};
  } catch (const ValidationError& e) {
    return {false, failure(e)};
  }
}

Verdict homology_verb(const std::vector<Json>& docs, const Job& job) {
  expect_inputs(docs, 1, 1);
  const auto x = io::read_complex(docs[0]);
  const int degree = job.maxDegree.value_or(std::max(x.dimension(), 0));
  return {true, io::write_homology(homology(x, degree))};
}

Verdict nerve_verb(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 1, 1);
  const auto a = analyze_cover(io::read_cover(docs[0]));
  Json cells = Json::array();
  for (const auto& [t, cell] : a->nerve.cells) {
    cells.push_back({{"indices", index_names(a->cover, t)},
                     {"openSimplices", label_simplices(a->cover.base(), cell.openSimplices)}});
  }
  return {true, {{"nerve", io::write_complex(a->nerve.complex)}, {"cells", cells}, {"good", a->goodness.good}}};
}

Verdict cover_check(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 1, 1);
  const auto a = analyze_cover(io::read_cover(docs[0]));
  const auto uncovered = uncovered_simplices(a->cover);
  const bool carrier = carrier_check(a->cover);
  Json failures = Json::array();
  for (const auto& f : a->goodness.failures) {
    failures.push_back({{"indices", index_names(a->cover, f.tuple)}, {"reason", f.reason}});
  }
  return {uncovered.empty() && carrier && a->goodness.good,
          {{"uncovered", label_simplices(a->cover.base(), uncovered)},
           {"carrier", carrier},
           {"good", a->goodness.good},
           {"failures", failures}}};
}

Verdict cocycle_check(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 1, 1);
  auto doc = io::read_cocycle(docs[0]);
  try {
    const auto c = validate_cocycle(doc.analysis, doc.group, doc.values);
    const auto h = holonomy(c);
    return {true, {{"holonomy", h.images}, {"generators", h.presentation.generatorCount}}};
  } catch (const ValidationError& e) {
    return {false, failure(e)};
  }
}

Cocycle1 load_cocycle(const Json& j) {
  auto doc = io::read_cocycle(j);
  try {
    return validate_cocycle(doc.analysis, doc.group, doc.values);
  } catch (const ValidationError& e) {
    throw InputError(std::string("invalid cocycle: ") + e.what());
  }
}

Json bridges(const std::vector<Bridge>& list, const Cocycle1& c1, const Cocycle1& c2, bool withValues) {
  Json out = Json::array();
  for (const auto& b : list) {
    Json entry = {{"first", c1.cover().index(b.first)}, {"second", c2.cover().index(b.second)}};
    if (withValues) entry["value"] = b.value;
    out.push_back(std::move(entry));
  }
  return out;
}

Verdict cocycle_equiv(const std::vector<Json>& docs, const Job& job) {
  expect_inputs(docs, 2, 2);
  const auto c1 = load_cocycle(docs[0]);
  const auto c2 = load_cocycle(docs[1]);
  const auto r = are_equivalent(c1, c2, budget_of(job));
  return {r.equivalent, {{"equivalent", r.equivalent}, {"bridge", bridges(r.bridge, c1, c2, true)}, {"conflict", bridges(r.conflict, c1, c2, false)}}};
}

Verdict bundle_build(const std::vector<Json>& docs, const Job& job) {
  expect_inputs(docs, 1, 1);
  auto doc = io::read_cocycle(docs[0]);
  Cocycle1 c = [&] {
    try {
      return validate_cocycle(doc.analysis, doc.group, doc.values);
    } catch (const ValidationError& e) {
      throw InputError(std::string("invalid cocycle: ") + e.what());
    }
  }();
  if (job.mode != "direct" && job.mode != "skeletal") throw InputError("mode must be direct or skeletal");
  const auto b = job.mode == "direct" ? total_space(c, doc.action) : skeletal_construction(c, doc.action);
  auto details = complex_summary(b.total());
  details["mode"] = job.mode;
  details["bundle"] = io::write_bundle(b);
  return {true, details};
}

Verdict pullback_verb(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 2, 2);
  const auto b = io::read_bundle(docs[0]);
  const auto f = io::read_map(docs[1], b.base());
  const auto p = pullback(b, f);
  auto details = complex_summary(p.total());
  details["bundle"] = io::write_bundle(p);
  return {true, details};
}

Verdict classify(const std::vector<Json>& docs, const Job& job) {
  expect_inputs(docs, 2, 2);
  const auto a = analyze_cover(io::read_cover(docs[0]));
  const auto g = io::read_group(docs[1]);
  if (!a->goodness.good) throw InputError("classify needs a good cover");
  if (connected_components(a->nerve.complex).size() != 1) throw InputError("classify needs a connected nerve");
  const auto r = classification_check(a, g, budget_of(job));
  Json reps = Json::array();
  for (const auto& c : r.representatives) reps.push_back(io::write_pair_values(c.values(), c.cover()));
  return {r.passed(),
          {{"classes", r.cocycleClasses},
           {"cocycles", r.cocycleCount},
           {"homomorphismClasses", r.homClasses},
           {"homomorphisms", r.homCount},
           {"pullbackMatches", r.pullbackMatches},
           {"representatives", reps}}};
}

Verdict gerbe_check(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 1, 1);
  const auto d = io::read_gerbe(docs[0]);
  const auto r = check_gerbe(d);
  const auto coherence = check_coherence_faces(d);
  Json violations = Json::array();
  for (const auto& v : r.violations) violations.push_back({{"law", v.law}, {"indices", index_names(d.analysis->cover, v.tuple)}});
  auto names = [&](const std::vector<IndexTuple>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) out.push_back(index_names(d.analysis->cover, t));
    return out;
  };
  return {r.valid(),
          {{"triangle", r.triangleHolds},
           {"tetrahedron", r.tetrahedronHolds},
           {"violations", violations},
           {"coherent", coherence.coherent},
           {"coherenceFailures", names(coherence.failures)},
           {"illTyped", names(coherence.illTyped)}}};
}

GerbeCocycle load_gerbe(const Json& j) {
  try {
    return validate_gerbe_cocycle(io::read_gerbe(j));
  } catch (const ValidationError& e) {
    throw InputError(std::string("invalid gerbe: ") + e.what());
  }
}

Verdict gerbe_class(const std::vector<Json>& docs, const Job& job) {
  expect_inputs(docs, 1, 2);
  const auto d1 = load_gerbe(docs[0]);
  if (docs.size() == 2) {
    const auto d2 = load_gerbe(docs[1]);
    const auto r = gerbes_equivalent(d1, d2, budget_of(job));
    Json details = {{"equivalent", r.equivalent}};
    if (r.equivalent) {
      Json lambda = Json::object();
      for (int i = 0; i < d1.cover().size(); ++i) lambda[d1.cover().index(i)] = r.lambda[static_cast<std::size_t>(i)];
      details["lambda"] = lambda;
      details["m"] = io::write_pair_values(r.m, d1.cover());
    }
    return {r.equivalent, details};
  }
  const auto c = abelian_class(d1);
  return {true, {{"factors", c.factors}, {"coordinates", c.coordinates}, {"moduli", c.moduli}, {"zero", c.zero()}}};
}

Verdict bar_homology_verb(const std::vector<Json>& docs, const Job& job) {
  expect_inputs(docs, 1, 1);
  const auto g = io::read_group(docs[0]);
  const int degree = job.maxDegree.value_or(3);
  if (degree < 0) throw InputError("max degree must be nonnegative");
  auto details = io::write_homology(bar_homology(g, degree));
  const auto bar = bar_construction(g, degree + 1);
  std::vector<std::size_t> ranks(bar.complex.ranks.begin(), bar.complex.ranks.end());
  details["chainRanks"] = ranks;
  return {true, details};
}

Verdict milnor_check(const std::vector<Json>& docs, const Job&) {
  expect_inputs(docs, 1, 1);
  const auto g = io::read_milnor_group(docs[0]);
  const auto v = check_milnor_point(io::read_milnor_point(docs[0]), g);
  Json list = Json::array();
  for (const auto& x : v) list.push_back({{"condition", x.condition}, {"message", x.message}, {"indices", x.indices}});
  return {v.empty(), {{"violations", list}}};
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"validate-complex", validate_complex}, {"homology", homology_verb},     {"nerve", nerve_verb},
      {"cover-check", cover_check},           {"cocycle-check", cocycle_check}, {"cocycle-equiv", cocycle_equiv},
      {"bundle-build", bundle_build},         {"pullback", pullback_verb},     {"classify", classify},
      {"gerbe-check", gerbe_check},           {"gerbe-class", gerbe_class},     {"bar-homology", bar_homology_verb},
      {"milnor-check", milnor_check}};
  return table;
}

void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  auto temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + temp.string());
    out << text;
    out.close();
    if (!out) {
      std::filesystem::remove(temp);
      throw InputError("cannot write " + temp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(temp, target, ec);
  if (ec) {
    std::filesystem::remove(temp);
    throw InputError("cannot write " + path + ": " + ec.message());
  }
}

}  // namespace

const std::vector<std::string>& verbs() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return list;
}

Outcome run(const std::string& command, const std::vector<Json>& documents, const Job& options) {
  const auto it = handlers().find(command);
  if (it == handlers().end()) return {kInputError, {}, "unknown command \"" + command + "\""};
  try {
    auto v = it->second(documents, options);
    Json report = {{"verdict", v.value}, {"details", std::move(v.details)}, {"toolVersion", kToolVersion}, {"command", command}};
    return {v.value ? kSuccess : kFalse, std::move(report), {}};
  } catch (const BudgetExceeded& e) {
    return {kBudgetExceeded, {}, e.what()};
  } catch (const Error& e) {
    return {kInputError, {}, e.what()};
  } catch (const Json::exception& e) {
    return {kInputError, {}, e.what()};
  }
}

Outcome run(const Job& job) {
  std::vector<Json> docs;
  for (const auto& path : job.inputs) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {kInputError, {}, "cannot read " + path};
    try {
      docs.push_back(Json::parse(in));
    } catch (const Json::exception& e) {
      return {kInputError, {}, path + ": " + e.what()};
    }
  }
  auto outcome = run(job.command, docs, job);
  if (job.output && (outcome.exitCode == kSuccess || outcome.exitCode == kFalse)) {
    try {
      write_atomically(*job.output, render(outcome.report));
    } catch (const Error& e) {
      return {kInputError, {}, e.what()};
    }
  }
  return outcome;
}

std::string render(const Json& report) { return report.dump(2) + "\n"; }

}  // namespace htc::cli
