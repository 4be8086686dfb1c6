#include "bcktop/topology.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace bcktop {

namespace {

constexpr std::size_t kDefaultBound = 16;
constexpr std::size_t kHardBound = 32;

using Mask = std::uint64_t;

// Canonical order on masks: cardinality, then lexicographic on the ascending
// element list. Matches ElementSet's ordering.
bool canonical_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const Mask diff = a ^ b;
  if (diff == 0) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

std::vector<ElementSet> to_sorted_sets(std::size_t universe, std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<ElementSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(ElementSet::from_mask(universe, m));
  return out;
}

bool mask_open(const std::vector<Mask>& neighbourhoods, Mask v) {
  for (Mask rest = v; rest; rest &= rest - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(rest));
    if ((neighbourhoods[x] & ~v) != 0) return false;
  }
  return true;
}

std::shared_ptr<const std::vector<ElementSet>> enumerate_opens(
    const std::vector<ElementSet>& neighbourhoods) {
  const std::size_t n = neighbourhoods.size();
  if (n > enumeration_bound()) return nullptr;
  std::vector<Mask> nb;
  nb.reserve(n);
  for (const auto& s : neighbourhoods) nb.push_back(s.mask());
  std::vector<Mask> opens;
  for (Mask v = 0; v < (Mask{1} << n); ++v)
    if (mask_open(nb, v)) opens.push_back(v);
  return std::make_shared<const std::vector<ElementSet>>(to_sorted_sets(n, std::move(opens)));
}

std::vector<ElementSet> neighbourhoods_from(std::size_t size, const std::vector<ElementSet>& subbase) {
  std::vector<ElementSet> nb(size, ElementSet::full(size));
  for (const auto& s : subbase) s.for_each([&](Index x) { nb[x] &= s; });
  return nb;
}

ElementSet localize(const ElementSet& s, const ElementSet& k) {
  const auto labels = k.elements();
  ElementSet out(labels.size());
  for (Index i = 0; i < labels.size(); ++i)
    if (s.contains(labels[i])) out.insert(i);
  return out;
}

}  // namespace

std::size_t enumeration_bound() {
  if (const char* env = std::getenv("BCKTOP_MAX_CARRIER")) {
    try {
      std::size_t pos = 0;
      const unsigned long v = std::stoul(env, &pos);
      if (pos == std::string(env).size()) return std::min<std::size_t>(v, kHardBound);
    } catch (const std::exception&) {
    }
  }
  return kDefaultBound;
}

// ---------------------------------------------------------------------------
// FiniteTopology

FiniteTopology FiniteTopology::generated_by(std::size_t size, const std::vector<ElementSet>& subbase) {
  auto nb = neighbourhoods_from(size, subbase);
  auto opens = enumerate_opens(nb);
  return FiniteTopology(std::move(nb), std::move(opens));
}

FiniteTopology FiniteTopology::discrete(std::size_t size) {
  std::vector<ElementSet> points;
  for (Index x = 0; x < size; ++x) points.emplace_back(size, std::initializer_list<Index>{x});
  return generated_by(size, points);
}

FiniteTopology FiniteTopology::indiscrete(std::size_t size) {
  return generated_by(size, {ElementSet::full(size)});
}

bool FiniteTopology::is_open(const ElementSet& s) const {
  bool open = true;
  s.for_each([&](Index x) { open = open && neighbourhoods_[x].is_subset_of(s); });
  return open;
}

const std::vector<ElementSet>& FiniteTopology::opens() const {
  if (!opens_) throw CarrierTooLarge(size(), enumeration_bound());
  return *opens_;
}

bool is_connected(const FiniteTopology& t) {
  const auto full = ElementSet::full(t.size());
  for (const auto& o : t.opens())
    if (!o.empty() && o != full && t.is_open(o.complement())) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Dss and the Baig topology

Dss Dss::of(BckModule module, std::vector<Submodule> chain) {
  if (chain.empty()) throw Error("a decreasing sequence needs at least one submodule");
  for (const auto& s : chain) require_submodule(module, s);
  for (std::size_t i = 1; i < chain.size(); ++i)
    if (!chain[i].is_subset_of(chain[i - 1]))
      throw Error("chain is not decreasing: M_" + std::to_string(i + 1) + " = " + chain[i].str() +
                  " is not inside M_" + std::to_string(i) + " = " + chain[i - 1].str());
  return Dss(std::move(module), std::move(chain));
}

const Submodule& Dss::at(std::size_t n) const {
  if (n == 0) throw std::out_of_range("chain indices start at 1");
  return chain_[std::min(n, chain_.size()) - 1];
}

std::string Dss::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < chain_.size(); ++i) out += (i ? "," : "") + chain_[i].str();
  return out + "]";
}

BaigTopology build_baig(const Dss& dss) {
  const BckModule& module = dss.module();
  const std::size_t n = module.size();
  if (n > enumeration_bound()) throw CarrierTooLarge(n, enumeration_bound());

  // cosets[v][i] = v + M_{i+1}
  std::vector<std::vector<Mask>> cosets(n);
  std::vector<Mask> base_masks;
  for (Index v = 0; v < n; ++v)
    for (const auto& sub : dss.chain()) {
      const Mask c = coset(module, v, sub.elements()).mask();
      cosets[v].push_back(c);
      base_masks.push_back(c);
    }

  std::vector<Mask> opens;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    bool open = true;
    for (Mask rest = v; rest && open; rest &= rest - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(rest));
      open = std::any_of(cosets[x].begin(), cosets[x].end(), [&](Mask c) { return (c & ~v) == 0; });
    }
    if (open) opens.push_back(v);
  }

  std::unordered_set<Mask> unions{0};
  for (Mask b : base_masks) {
    std::vector<Mask> grown;
    for (Mask s : unions) grown.push_back(s | b);
    unions.insert(grown.begin(), grown.end());
  }
  const bool same = unions.size() == opens.size() &&
                    std::all_of(opens.begin(), opens.end(), [&](Mask o) { return unions.count(o) != 0; });
  if (!same)
    throw InvariantViolation("open family of " + dss.str() + " differs from the union closure of its base");

  auto base = to_sorted_sets(n, base_masks);
  auto nb = neighbourhoods_from(n, base);
  std::vector<Mask> nb_masks;
  for (const auto& s : nb) nb_masks.push_back(s.mask());
  for (Mask o : opens)
    if (!mask_open(nb_masks, o))
      throw InvariantViolation("minimal neighbourhoods of " + dss.str() + " disagree with the open family");

  auto family = std::make_shared<const std::vector<ElementSet>>(to_sorted_sets(n, std::move(opens)));
  return BaigTopology(dss, FiniteTopology(std::move(nb), std::move(family)), std::move(base));
}

// ---------------------------------------------------------------------------
// Maps

ElementSet FiniteMap::image_of(const ElementSet& s) const {
  ElementSet out(codomain.size());
  s.for_each([&](Index x) { out.insert(table[x]); });
  return out;
}

ElementSet FiniteMap::preimage_of(const ElementSet& s) const {
  ElementSet out(domain.size());
  for (Index x = 0; x < table.size(); ++x)
    if (s.contains(table[x])) out.insert(x);
  return out;
}

// Minimal neighbourhoods form a base and preimages commute with unions, so
// checking the basic opens decides continuity; likewise for images.
std::optional<ElementSet> find_discontinuity(const FiniteMap& f) {
  for (Index y = 0; y < f.codomain.size(); ++y) {
    const auto& u = f.codomain.neighbourhood(y);
    if (!f.domain.is_open(f.preimage_of(u))) return u;
  }
  return std::nullopt;
}

std::optional<ElementSet> find_non_open_image(const FiniteMap& f) {
  for (Index x = 0; x < f.domain.size(); ++x) {
    const auto& v = f.domain.neighbourhood(x);
    if (!f.codomain.is_open(f.image_of(v))) return v;
  }
  return std::nullopt;
}

bool is_continuous(const FiniteMap& f) { return !find_discontinuity(f).has_value(); }

bool is_continuous_at(const FiniteMap& f, Index m) {
  return f.image_of(f.domain.neighbourhood(m)).is_subset_of(f.codomain.neighbourhood(f(m)));
}

bool is_open_map(const FiniteMap& f) { return !find_non_open_image(f).has_value(); }

bool is_bijective(const FiniteMap& f) {
  return f.domain.size() == f.codomain.size() &&
         f.image_of(ElementSet::full(f.domain.size())).count() == f.codomain.size();
}

bool is_homeomorphism(const FiniteMap& f) {
  if (!is_bijective(f) || !is_continuous(f)) return false;
  FiniteMap inverse{f.codomain, f.domain, std::vector<Index>(f.table.size())};
  for (Index x = 0; x < f.table.size(); ++x) inverse.table[f.table[x]] = x;
  return is_continuous(inverse);
}

FiniteMap negation_map(const BaigTopology& t) {
  FiniteMap f{t.space(), t.space(), std::vector<Index>(t.size())};
  for (Index m = 0; m < t.size(); ++m) f.table[m] = t.module().neg(m);
  return f;
}

FiniteMap translation_map(const BaigTopology& t, Index a) {
  if (a >= t.size()) throw std::out_of_range("translation by an element outside the module");
  FiniteMap f{t.space(), t.space(), std::vector<Index>(t.size())};
  for (Index m = 0; m < t.size(); ++m) f.table[m] = t.module().add(a, m);
  return f;
}

FiniteMap scalar_map(const BaigTopology& t, Index x) {
  if (x >= t.module().algebra().size()) throw std::out_of_range("scalar outside the algebra");
  FiniteMap f{t.space(), t.space(), std::vector<Index>(t.size())};
  for (Index m = 0; m < t.size(); ++m) f.table[m] = t.module().act(x, m);
  return f;
}

FiniteMap characteristic_map(const BaigTopology& t, const Submodule& n) {
  require_submodule(t.module(), n);
  FiniteMap f{t.space(), FiniteTopology::discrete(2), std::vector<Index>(t.size())};
  for (Index m = 0; m < t.size(); ++m) f.table[m] = n.contains(m) ? 1 : 0;
  return f;
}

FiniteMap hom_map(const ModuleHom& f, const BaigTopology& source, const BaigTopology& target) {
  if (!(f.source() == source.module()) || !(f.target() == target.module()))
    throw Error("homomorphism does not match the topologized modules");
  return FiniteMap{source.space(), target.space(), f.map()};
}

// ---------------------------------------------------------------------------
// Derived topologies

namespace {

FiniteTopology rectangles(std::size_t na, std::size_t nb, const std::vector<ElementSet>& ua,
                          const std::vector<ElementSet>& ub) {
  const std::size_t bound = enumeration_bound();
  if (na > bound) throw CarrierTooLarge(na, bound);
  if (nb > bound) throw CarrierTooLarge(nb, bound);
  std::vector<ElementSet> base;
  base.reserve(ua.size() * ub.size());
  for (const auto& u : ua)
    for (const auto& v : ub) {
      ElementSet r(na * nb);
      u.for_each([&](Index a) { v.for_each([&](Index b) { r.insert(a * nb + b); }); });
      base.push_back(std::move(r));
    }
  return FiniteTopology::generated_by(na * nb, base);
}

}  // namespace

FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b) {
  std::vector<ElementSet> ua, ub;
  for (Index x = 0; x < a.size(); ++x) ua.push_back(a.neighbourhood(x));
  for (Index y = 0; y < b.size(); ++y) ub.push_back(b.neighbourhood(y));
  return rectangles(a.size(), b.size(), ua, ub);
}

FiniteTopology product_topology(const BaigTopology& a, const BaigTopology& b) {
  return rectangles(a.size(), b.size(), a.base(), b.base());
}

FiniteMap addition_map(const BaigTopology& t) {
  const std::size_t n = t.size();
  FiniteMap f{product_topology(t, t), t.space(), std::vector<Index>(n * n)};
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) f.table[a * n + b] = t.module().add(a, b);
  return f;
}

BaigTopology induced_topology(const BaigTopology& t, const Submodule& k) {
  require_submodule(t.module(), k);
  BckModule restricted = restrict_module(t.module(), k);
  std::vector<Submodule> chain;
  for (const auto& m : t.dss().chain())
    chain.push_back(Submodule::of(restricted, localize(k.elements() & m.elements(), k.elements())));
  return build_baig(Dss::of(std::move(restricted), std::move(chain)));
}

std::vector<ElementSet> relative_opens(const BaigTopology& t, const Submodule& k) {
  require_submodule(t.module(), k);
  std::vector<ElementSet> out;
  for (const auto& o : t.opens()) out.push_back(localize(o & k.elements(), k.elements()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BaigTopology factor_topology(const BaigTopology& t, const Submodule& k) {
  const QuotientModule q = QuotientModule::of(t.module(), k);
  std::vector<Submodule> chain;
  for (const auto& m : t.dss().chain()) chain.push_back(Submodule::of(q.module(), q.project(m.elements())));
  return build_baig(Dss::of(q.module(), std::move(chain)));
}

}  // namespace bcktop
