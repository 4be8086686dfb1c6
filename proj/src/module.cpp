#include "bcktop/module.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace bcktop {

namespace {

void check_shape(const Table& t, std::size_t rows, std::size_t cols, std::size_t range,
                 const char* what) {
  if (t.size() != rows)
    throw MalformedTable(std::string(what) + " table has " + std::to_string(t.size()) +
                         " rows, expected " + std::to_string(rows));
  for (std::size_t r = 0; r < rows; ++r) {
    if (t[r].size() != cols)
      throw MalformedTable(std::string(what) + " row " + std::to_string(r) + " has " +
                           std::to_string(t[r].size()) + " entries, expected " +
                           std::to_string(cols));
    for (Index v : t[r])
      if (v >= range)
        throw MalformedTable(std::string(what) + " row " + std::to_string(r) + " entry " +
                             std::to_string(v) + " out of range");
  }
}

ElementSet closure(const BckModule& module, ElementSet seed) {
  seed.insert(0);
  std::vector<Index> members = seed.elements();
  for (std::size_t i = 0; i < members.size(); ++i) {
    auto push = [&](Index v) {
      if (!seed.contains(v)) {
        seed.insert(v);
        members.push_back(v);
      }
    };
    const Index m = members[i];
    push(module.neg(m));
    for (Index x = 0; x < module.algebra().size(); ++x) push(module.act(x, m));
    for (std::size_t j = 0; j <= i; ++j) push(module.add(m, members[j]));
  }
  return seed;
}

}  // namespace

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup AbelianGroup::from_table(Table add) {
  const std::size_t n = add.size();
  if (n == 0) throw MalformedTable("add table is empty");
  check_shape(add, n, n, n, "add");
  for (Index a = 0; a < n; ++a)
    if (add[0][a] != a || add[a][0] != a) throw ModuleAxiomViolation("identity", {a});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (add[add[a][b]][c] != add[a][add[b][c]])
          throw ModuleAxiomViolation("associativity", {a, b, c});
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (add[a][b] != add[b][a]) throw ModuleAxiomViolation("commutativity", {a, b});

  AbelianGroup g;
  g.neg_.resize(n);
  for (Index a = 0; a < n; ++a) {
    auto it = std::find(add[a].begin(), add[a].end(), Index{0});
    if (it == add[a].end()) throw ModuleAxiomViolation("inverse", {a});
    g.neg_[a] = static_cast<Index>(it - add[a].begin());
  }
  g.add_ = std::move(add);
  return g;
}

AbelianGroup AbelianGroup::cyclic(std::size_t n) {
  if (n == 0) throw MalformedTable("cyclic group needs order at least 1");
  Table add(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) add[a][b] = (a + b) % n;
  return from_table(std::move(add));
}

AbelianGroup AbelianGroup::klein() {
  Table add(4, std::vector<Index>(4));
  for (Index a = 0; a < 4; ++a)
    for (Index b = 0; b < 4; ++b) add[a][b] = a ^ b;
  return from_table(std::move(add));
}

// ---------------------------------------------------------------------------
// BckModule

std::optional<ModuleAxiomViolation> find_module_violation(const BckAlgebra& algebra,
                                                          const AbelianGroup& group,
                                                          const Table& action) {
  const std::size_t nx = algebra.size();
  const std::size_t nm = group.size();
  auto act = [&](Index x, Index m) { return action[x][m]; };

  // M1: (a ^ b)m = a(bm)
  for (Index a = 0; a < nx; ++a)
    for (Index b = 0; b < nx; ++b)
      for (Index m = 0; m < nm; ++m)
        if (act(algebra.meet(a, b), m) != act(a, act(b, m)))
          return ModuleAxiomViolation("M1", {a, b, m});
  // M2: a(m1 + m2) = am1 + am2
  for (Index a = 0; a < nx; ++a)
    for (Index m1 = 0; m1 < nm; ++m1)
      for (Index m2 = 0; m2 < nm; ++m2)
        if (act(a, group.add(m1, m2)) != group.add(act(a, m1), act(a, m2)))
          return ModuleAxiomViolation("M2", {a, m1, m2});
  // M3: 0m = 0
  for (Index m = 0; m < nm; ++m)
    if (act(0, m) != 0) return ModuleAxiomViolation("M3", {m});
  // M4: 1m = m, bounded algebras only
  if (auto one = algebra.one())
    for (Index m = 0; m < nm; ++m)
      if (act(*one, m) != m) return ModuleAxiomViolation("M4", {m});
  return std::nullopt;
}

BckModule BckModule::from_tables(BckAlgebra algebra, AbelianGroup group, Table action) {
  check_shape(action, algebra.size(), group.size(), group.size(), "action");
  if (auto violation = find_module_violation(algebra, group, action)) throw *violation;
  return BckModule(std::move(algebra), std::move(group), std::move(action));
}

BckModule scalar_module_over_c2(const AbelianGroup& group) {
  const std::size_t n = group.size();
  Table action(2, std::vector<Index>(n, 0));
  for (Index m = 0; m < n; ++m) action[1][m] = m;
  return BckModule::from_tables(chain_algebra(2), group, std::move(action));
}

BckModule self_module(const BckAlgebra& alg) {
  if (!is_bounded(alg) || !is_implicative(alg))
    throw NotBoundedImplicative("self module needs a bounded implicative algebra");
  const std::size_t n = alg.size();
  const Index one = *alg.one();
  auto join = [&](Index u, Index w) { return alg.star(one, alg.meet(alg.star(one, u), alg.star(one, w))); };

  Table add(n, std::vector<Index>(n));
  Table action(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      add[a][b] = join(alg.star(a, b), alg.star(b, a));
      action[a][b] = alg.meet(a, b);
    }
  try {
    return BckModule::from_tables(alg, AbelianGroup::from_table(std::move(add)), std::move(action));
  } catch (const Error& e) {
    throw ConstructionFailed(std::string("self module tables rejected: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Submodules

bool is_submodule(const BckModule& module, const ElementSet& s) {
  if (s.universe() != module.size() || !s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Index a) {
    if (!ok) return;
    if (!s.contains(module.neg(a))) ok = false;
    for (Index x = 0; ok && x < module.algebra().size(); ++x)
      if (!s.contains(module.act(x, a))) ok = false;
    s.for_each([&](Index b) {
      if (ok && !s.contains(module.add(a, b))) ok = false;
    });
  });
  return ok;
}

Submodule Submodule::of(const BckModule& module, ElementSet elements) {
  if (!is_submodule(module, elements)) throw NotASubmodule(elements.str() + " is not a submodule");
  return Submodule(std::move(elements));
}

Submodule Submodule::zero(const BckModule& module) {
  return Submodule(ElementSet(module.size(), {0}));
}

Submodule Submodule::whole(const BckModule& module) {
  return Submodule(ElementSet::full(module.size()));
}

void require_submodule(const BckModule& module, const Submodule& sub) {
  if (!is_submodule(module, sub.elements()))
    throw NotASubmodule(sub.str() + " is not a submodule of this module");
}

std::vector<Submodule> enumerate_submodules(const BckModule& module) {
  // Every submodule is reached from {0} by adjoining one element at a time.
  std::set<ElementSet> found{closure(module, ElementSet(module.size()))};
  std::vector<ElementSet> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<ElementSet> next;
    for (const auto& s : frontier)
      for (Index m = 0; m < module.size(); ++m) {
        if (s.contains(m)) continue;
        ElementSet grown = s;
        grown.insert(m);
        grown = closure(module, std::move(grown));
        if (found.insert(grown).second) next.push_back(std::move(grown));
      }
    frontier = std::move(next);
  }
  std::vector<Submodule> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(Submodule::of(module, s));
  return out;
}

Submodule intersection(const BckModule& module, const Submodule& a, const Submodule& b) {
  return Submodule::of(module, a.elements() & b.elements());
}

Submodule sum(const BckModule& module, const Submodule& a, const Submodule& b) {
  return Submodule::of(module, set_sum(module, a.elements(), b.elements()));
}

ElementSet coset(const BckModule& module, Index m, const ElementSet& k) {
  ElementSet out(module.size());
  k.for_each([&](Index x) { out.insert(module.add(m, x)); });
  return out;
}

ElementSet set_sum(const BckModule& module, const ElementSet& a, const ElementSet& b) {
  ElementSet out(module.size());
  a.for_each([&](Index x) { b.for_each([&](Index y) { out.insert(module.add(x, y)); }); });
  return out;
}

BckModule restrict_module(const BckModule& module, const Submodule& sub) {
  require_submodule(module, sub);
  const auto labels = sub.elements().elements();
  std::vector<Index> local(module.size(), 0);
  for (Index i = 0; i < labels.size(); ++i) local[labels[i]] = i;

  const std::size_t k = labels.size();
  Table add(k, std::vector<Index>(k));
  Table action(module.algebra().size(), std::vector<Index>(k));
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) add[i][j] = local[module.add(labels[i], labels[j])];
    for (Index x = 0; x < module.algebra().size(); ++x) action[x][i] = local[module.act(x, labels[i])];
  }
  return BckModule::from_tables(module.algebra(), AbelianGroup::from_table(std::move(add)),
                                std::move(action));
}

// ---------------------------------------------------------------------------
// Homomorphisms

std::optional<ModuleAxiomViolation> find_hom_violation(const BckModule& source,
                                                       const BckModule& target,
                                                       const std::vector<Index>& f) {
  for (Index a = 0; a < source.size(); ++a)
    for (Index b = 0; b < source.size(); ++b)
      if (f[source.add(a, b)] != target.add(f[a], f[b])) return ModuleAxiomViolation("additive", {a, b});
  for (Index x = 0; x < source.algebra().size(); ++x)
    for (Index m = 0; m < source.size(); ++m)
      if (f[source.act(x, m)] != target.act(x, f[m])) return ModuleAxiomViolation("action", {x, m});
  return std::nullopt;
}

ModuleHom ModuleHom::from_map(BckModule source, BckModule target, std::vector<Index> map) {
  if (!(source.algebra() == target.algebra()))
    throw Error("homomorphism between modules over different algebras");
  if (map.size() != source.size())
    throw MalformedTable("map has " + std::to_string(map.size()) + " entries, expected " +
                         std::to_string(source.size()));
  for (Index v : map)
    if (v >= target.size()) throw MalformedTable("map entry " + std::to_string(v) + " out of range");
  if (auto violation = find_hom_violation(source, target, map)) throw *violation;
  return ModuleHom(std::move(source), std::move(target), std::move(map));
}

ElementSet ModuleHom::image_of(const ElementSet& s) const {
  ElementSet out(target_.size());
  s.for_each([&](Index m) { out.insert(map_[m]); });
  return out;
}

ElementSet ModuleHom::preimage_of(const ElementSet& s) const {
  ElementSet out(source_.size());
  for (Index m = 0; m < source_.size(); ++m)
    if (s.contains(map_[m])) out.insert(m);
  return out;
}

bool ModuleHom::is_injective() const { return image_of(ElementSet::full(source_.size())).count() == source_.size(); }

bool ModuleHom::is_surjective() const { return image_of(ElementSet::full(source_.size())).count() == target_.size(); }

Submodule kernel(const ModuleHom& f) {
  return Submodule::of(f.source(), f.preimage_of(ElementSet(f.target().size(), {0})));
}

Submodule image(const ModuleHom& f) {
  return Submodule::of(f.target(), f.image_of(ElementSet::full(f.source().size())));
}

std::vector<ModuleHom> enumerate_homs(const BckModule& source, const BckModule& target) {
  if (!(source.algebra() == target.algebra()))
    throw Error("homomorphism between modules over different algebras");
  const std::size_t n = source.size();
  const std::size_t k = target.size();

  // Each law instance is checked as soon as every index it mentions is
  // assigned, i.e. when its largest index is. The search still visits maps in
  // lexicographic order, so the result matches filtering all k^n tables.
  struct AddLaw { Index p, q, r; };
  struct ActLaw { Index x, m, r; };
  std::vector<std::vector<AddLaw>> add_laws(n);
  std::vector<std::vector<ActLaw>> act_laws(n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q) {
      const Index r = source.add(p, q);
      add_laws[std::max({p, q, r})].push_back({p, q, r});
    }
  for (Index x = 0; x < source.algebra().size(); ++x)
    for (Index m = 0; m < n; ++m) {
      const Index r = source.act(x, m);
      act_laws[std::max(m, r)].push_back({x, m, r});
    }

  std::vector<ModuleHom> out;
  std::vector<Index> f(n, 0);
  auto consistent = [&](Index i) {
    for (const auto& l : add_laws[i])
      if (f[l.r] != target.add(f[l.p], f[l.q])) return false;
    for (const auto& l : act_laws[i])
      if (f[l.r] != target.act(l.x, f[l.m])) return false;
    return true;
  };
  auto search = [&](auto&& self, Index i) -> void {
    if (i == n) {
      out.push_back(ModuleHom::from_map(source, target, f));
      return;
    }
    for (Index v = 0; v < k; ++v) {
      f[i] = v;
      if (consistent(i)) self(self, i + 1);
    }
  };
  search(search, 0);
  return out;
}

ElementSet hom_coset_image(const ModuleHom& f, const Submodule& k, Index m) {
  require_submodule(f.source(), k);
  const ElementSet lhs = f.image_of(coset(f.source(), m, k.elements()));
  const ElementSet rhs = coset(f.target(), f(m), f.image_of(k.elements()));
  if (lhs != rhs)
    throw InvariantViolation("f(K+m) = " + lhs.str() + " differs from f(K)+f(m) = " + rhs.str());
  return lhs;
}

// ---------------------------------------------------------------------------
// Quotients

QuotientModule QuotientModule::of(const BckModule& base, const Submodule& divisor) {
  require_submodule(base, divisor);
  const std::size_t n = base.size();
  constexpr Index unassigned = static_cast<Index>(-1);

  std::vector<Index> class_of(n, unassigned);
  std::vector<Index> reps;
  for (Index m = 0; m < n; ++m) {
    if (class_of[m] != unassigned) continue;
    coset(base, m, divisor.elements()).for_each([&](Index x) { class_of[x] = reps.size(); });
    reps.push_back(m);
  }

  const std::size_t q = reps.size();
  const std::size_t nx = base.algebra().size();
  Table add(q, std::vector<Index>(q));
  Table action(nx, std::vector<Index>(q));
  for (Index i = 0; i < q; ++i) {
    for (Index j = 0; j < q; ++j) add[i][j] = class_of[base.add(reps[i], reps[j])];
    for (Index x = 0; x < nx; ++x) action[x][i] = class_of[base.act(x, reps[i])];
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b)
      if (class_of[base.add(a, b)] != add[class_of[a]][class_of[b]])
        throw InvariantViolation("coset addition not well defined at (" + std::to_string(a) + "," +
                                 std::to_string(b) + ")");
    for (Index x = 0; x < nx; ++x)
      if (class_of[base.act(x, a)] != action[x][class_of[a]])
        throw InvariantViolation("coset action not well defined at (" + std::to_string(x) + "," +
                                 std::to_string(a) + ")");
  }

  BckModule module = BckModule::from_tables(base.algebra(), AbelianGroup::from_table(std::move(add)),
                                            std::move(action));
  return QuotientModule(base, divisor, std::move(module), std::move(class_of), std::move(reps));
}

ElementSet QuotientModule::coset_elements(Index c) const {
  return coset(base_, representatives_[c], divisor_.elements());
}

ElementSet QuotientModule::project(const ElementSet& s) const {
  ElementSet out(size());
  s.for_each([&](Index m) { out.insert(class_of_[m]); });
  return out;
}

ModuleHom QuotientModule::projection() const { return ModuleHom::from_map(base_, module_, class_of_); }

}  // namespace bcktop
