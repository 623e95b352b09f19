#include "htc/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace htc {

namespace {

std::string element_name(Element e) { return std::to_string(e); }

}  // namespace

FiniteGroup::FiniteGroup() : table_{{0}}, inverse_{0} {}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order(); ++a) {
    for (Element b = a + 1; b < order(); ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

FiniteGroup validate_group(std::vector<std::vector<Element>> table) {
  const auto n = static_cast<int>(table.size());
  if (n == 0) throw ValidationError("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) throw InputError("group table is not square");
    for (Element x : row) {
      if (x < 0 || x >= n) throw ValidationError("group table entry out of range", {element_name(x)});
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (table[0][static_cast<std::size_t>(a)] != a || table[static_cast<std::size_t>(a)][0] != a) {
      throw ValidationError("0 is not a two-sided identity", {element_name(a)});
    }
  }
  std::vector<Element> inverse(static_cast<std::size_t>(n), -1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == 0 &&
          table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == 0) {
        inverse[static_cast<std::size_t>(a)] = b;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(a)] < 0) throw ValidationError("element has no inverse", {element_name(a)});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element ab = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      for (Element c = 0; c < n; ++c) {
        const Element bc = table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)];
        if (table[static_cast<std::size_t>(ab)][static_cast<std::size_t>(c)] !=
            table[static_cast<std::size_t>(a)][static_cast<std::size_t>(bc)]) {
          throw ValidationError("associativity fails", {element_name(a), element_name(b), element_name(c)});
        }
      }
    }
  }
  FiniteGroup g;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  return g;
}

FiniteGroup trivial_group() { return FiniteGroup(); }

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return validate_group(std::move(t));
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) throw InputError("symmetric group degree must be between 1 and 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Element>(i));
  std::vector<std::vector<Element>> t(perms.size(), std::vector<Element>(perms.size()));
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) {
        c[static_cast<std::size_t>(x)] = perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      }
      t[a][b] = index.at(c);
    }
  }
  return validate_group(std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.order() * b.order();
  std::vector<std::vector<Element>> t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  // (x, y) is encoded as x * |b| + y.
  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const Element x = a.mul(p / b.order(), q / b.order());
      const Element y = b.mul(p % b.order(), q % b.order());
      t[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = x * b.order() + y;
    }
  }
  return validate_group(std::move(t));
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    std::set<Element> cls;
    for (Element h = 0; h < g.order(); ++h) cls.insert(g.conjugate(h, x));
    for (Element y : cls) seen[static_cast<std::size_t>(y)] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<Element> generated_subgroup(const FiniteGroup& g, const std::vector<Element>& generators) {
  std::set<Element> members{FiniteGroup::identity()};
  std::deque<Element> frontier{FiniteGroup::identity()};
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (Element s : generators) {
      const Element y = g.mul(x, s);
      if (members.insert(y).second) frontier.push_back(y);
    }
  }
  return {members.begin(), members.end()};
}

GroupAction::GroupAction(FiniteGroup group, std::vector<std::string> fiber, std::vector<std::vector<int>> table)
    : group_(std::move(group)), fiber_(std::move(fiber)), table_(std::move(table)) {
  const int n = fiber_size();
  if (n == 0) throw InputError("fiber is empty");
  if (std::set<std::string>(fiber_.begin(), fiber_.end()).size() != fiber_.size()) {
    throw InputError("fiber labels are not distinct");
  }
  if (static_cast<int>(table_.size()) != group_.order()) throw InputError("action table has wrong row count");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("action table has wrong column count");
    for (int f : row) {
      if (f < 0 || f >= n) throw ValidationError("action table entry out of range", {std::to_string(f)});
    }
  }
  for (int f = 0; f < n; ++f) {
    if (act(FiniteGroup::identity(), f) != f) throw ValidationError("identity does not act trivially", {fiber_[static_cast<std::size_t>(f)]});
  }
  for (Element a = 0; a < group_.order(); ++a) {
    for (Element b = 0; b < group_.order(); ++b) {
      for (int f = 0; f < n; ++f) {
        if (act(group_.mul(a, b), f) != act(a, act(b, f))) {
          throw ValidationError("action is not compatible with multiplication",
                                {std::to_string(a), std::to_string(b), fiber_[static_cast<std::size_t>(f)]});
        }
      }
    }
  }
}

GroupAction regular_action(const FiniteGroup& g) {
  std::vector<std::string> labels;
  for (Element x = 0; x < g.order(); ++x) labels.push_back(std::to_string(x));
  return GroupAction(g, std::move(labels), g.table());
}

GroupAction trivial_action(const FiniteGroup& g, int fiberSize) {
  std::vector<std::string> labels;
  std::vector<int> row;
  for (int f = 0; f < fiberSize; ++f) {
    labels.push_back(std::to_string(f));
    row.push_back(f);
  }
  return GroupAction(g, std::move(labels), std::vector<std::vector<int>>(static_cast<std::size_t>(g.order()), row));
}

std::vector<std::vector<int>> orbits(const GroupAction& action, const std::vector<Element>& generators) {
  const auto subgroup = generated_subgroup(action.group(), generators);
  std::vector<bool> seen(static_cast<std::size_t>(action.fiber_size()), false);
  std::vector<std::vector<int>> out;
  for (int f = 0; f < action.fiber_size(); ++f) {
    if (seen[static_cast<std::size_t>(f)]) continue;
    std::set<int> orbit;
    for (Element g : subgroup) orbit.insert(action.act(g, f));
    for (int x : orbit) seen[static_cast<std::size_t>(x)] = true;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

std::vector<std::vector<int>> orbits(const GroupAction& action) {
  std::vector<Element> all(static_cast<std::size_t>(action.group().order()));
  std::iota(all.begin(), all.end(), 0);
  return orbits(action, all);
}

std::vector<Element> stabilizer(const GroupAction& action, int point) {
  std::vector<Element> out;
  for (Element g = 0; g < action.group().order(); ++g) {
    if (action.act(g, point) == point) out.push_back(g);
  }
  return out;
}

CrossedModule validate_crossed_module(FiniteGroup base, FiniteGroup fiber, std::vector<Element> boundary,
                                      std::vector<std::vector<Element>> action) {
  const int nG = base.order();
  const int nH = fiber.order();
  if (static_cast<int>(boundary.size()) != nH) throw InputError("boundary map has wrong length");
  if (static_cast<int>(action.size()) != nG) throw InputError("crossed module action has wrong row count");
  for (const auto& row : action) {
    if (static_cast<int>(row.size()) != nH) throw InputError("crossed module action has wrong column count");
    for (Element h : row) {
      if (!fiber.contains(h)) throw ValidationError("action entry out of range", {std::to_string(h)});
    }
  }
  for (Element g : boundary) {
    if (!base.contains(g)) throw ValidationError("boundary entry out of range", {std::to_string(g)});
  }
  auto d = [&](Element h) { return boundary[static_cast<std::size_t>(h)]; };
  auto act = [&](Element g, Element h) { return action[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]; };
  auto s = [](Element x) { return std::to_string(x); };

  for (Element h = 0; h < nH; ++h) {
    for (Element k = 0; k < nH; ++k) {
      if (d(fiber.mul(h, k)) != base.mul(d(h), d(k))) {
        throw ValidationError("boundary is not a homomorphism", {s(h), s(k)});
      }
    }
  }
  for (Element g = 0; g < nG; ++g) {
    std::set<Element> image;
    for (Element h = 0; h < nH; ++h) {
      image.insert(act(g, h));
      for (Element k = 0; k < nH; ++k) {
        if (act(g, fiber.mul(h, k)) != fiber.mul(act(g, h), act(g, k))) {
          throw ValidationError("action is not by automorphisms", {s(g), s(h), s(k)});
        }
      }
    }
    if (static_cast<int>(image.size()) != nH) throw ValidationError("action is not by automorphisms", {s(g)});
  }
  for (Element h = 0; h < nH; ++h) {
    if (act(FiniteGroup::identity(), h) != h) throw ValidationError("action is not a group action", {"0", s(h)});
    for (Element a = 0; a < nG; ++a) {
      for (Element b = 0; b < nG; ++b) {
        if (act(base.mul(a, b), h) != act(a, act(b, h))) {
          throw ValidationError("action is not a group action", {s(a), s(b), s(h)});
        }
      }
    }
  }
  for (Element g = 0; g < nG; ++g) {
    for (Element h = 0; h < nH; ++h) {
      if (d(act(g, h)) != base.conjugate(g, d(h))) throw ValidationError("equivariance fails", {s(g), s(h)});
    }
  }
  for (Element h = 0; h < nH; ++h) {
    for (Element k = 0; k < nH; ++k) {
      if (act(d(h), k) != fiber.conjugate(h, k)) throw ValidationError("Peiffer identity fails", {s(h), s(k)});
    }
  }
  CrossedModule x;
  x.base_ = std::move(base);
  x.fiber_ = std::move(fiber);
  x.boundary_ = std::move(boundary);
  x.action_ = std::move(action);
  return x;
}

CrossedModule adjoint_crossed_module(const FiniteGroup& g) {
  std::vector<Element> id(static_cast<std::size_t>(g.order()));
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<Element>> conj(static_cast<std::size_t>(g.order()), std::vector<Element>(id.size()));
  for (Element a = 0; a < g.order(); ++a) {
    for (Element h = 0; h < g.order(); ++h) conj[static_cast<std::size_t>(a)][static_cast<std::size_t>(h)] = g.conjugate(a, h);
  }
  return validate_crossed_module(g, g, std::move(id), std::move(conj));
}

CrossedModule abelian_crossed_module(const FiniteGroup& h) {
  std::vector<Element> id(static_cast<std::size_t>(h.order()));
  std::iota(id.begin(), id.end(), 0);
  return validate_crossed_module(trivial_group(), h, std::vector<Element>(id.size(), 0), {id});
}

Element evaluate_word(const FiniteGroup& g, const std::vector<int>& word, const Hom& images) {
  Element x = FiniteGroup::identity();
  for (int letter : word) {
    const auto gen = static_cast<std::size_t>(std::abs(letter) - 1);
    const Element y = images.at(gen);
    x = g.mul(x, letter > 0 ? y : g.inverse(y));
  }
  return x;
}

std::vector<Hom> enumerate_homs(const Pi1Presentation& p, const FiniteGroup& g, SearchBudget budget) {
  for (const auto& rel : p.relations) {
    for (int letter : rel) {
      if (letter == 0 || std::abs(letter) > p.generatorCount) throw InputError("relation letter out of range");
    }
  }
  // A relation is checked as soon as its largest generator is assigned.
  std::vector<std::vector<const std::vector<int>*>> due(static_cast<std::size_t>(p.generatorCount));
  std::vector<const std::vector<int>*> constant;
  for (const auto& rel : p.relations) {
    int top = 0;
    for (int letter : rel) top = std::max(top, std::abs(letter));
    if (top == 0) {
      constant.push_back(&rel);
    } else {
      due[static_cast<std::size_t>(top - 1)].push_back(&rel);
    }
  }
  std::vector<Hom> out;
  Hom images(static_cast<std::size_t>(p.generatorCount), 0);
  BudgetMeter meter(budget, "enumerate_homs");
  auto search = [&](auto&& self, int k) -> void {
    meter.charge();
    if (k == p.generatorCount) {
      out.push_back(images);
      return;
    }
    for (Element x = 0; x < g.order(); ++x) {
      images[static_cast<std::size_t>(k)] = x;
      const auto& checks = due[static_cast<std::size_t>(k)];
      bool ok = std::all_of(checks.begin(), checks.end(), [&](const std::vector<int>* rel) {
        return evaluate_word(g, *rel, images) == FiniteGroup::identity();
      });
      if (ok) self(self, k + 1);
    }
  };
  search(search, 0);
  return out;
}

std::vector<std::vector<std::size_t>> hom_conjugacy_classes(const std::vector<Hom>& homs, const FiniteGroup& g) {
  std::map<Hom, std::size_t> index;
  for (std::size_t i = 0; i < homs.size(); ++i) index.emplace(homs[i], i);
  std::vector<bool> seen(homs.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < homs.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> cls;
    for (Element c = 0; c < g.order(); ++c) {
      Hom conj = homs[i];
      for (auto& x : conj) x = g.conjugate(c, x);
      auto it = index.find(conj);
      if (it != index.end()) cls.insert(it->second);
    }
    for (auto j : cls) seen[j] = true;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

}  // namespace htc
