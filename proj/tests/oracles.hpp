#pragma once

// Brute-force reference implementations used as test oracles. They work on
// raw tables and bitmasks and share no code with the library beyond reading
// the tables of already constructed objects.

#include <bcktop/instance.hpp>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using bcktop::Index;
using bcktop::Table;
using Mask = std::uint64_t;

inline Mask bit(Index i) { return Mask{1} << i; }

inline Mask mask_of(const bcktop::ElementSet& s) {
  Mask m = 0;
  for (Index i : s.elements()) m |= bit(i);
  return m;
}

inline std::vector<Mask> masks_of(const std::vector<bcktop::ElementSet>& sets) {
  std::vector<Mask> out;
  for (const auto& s : sets) out.push_back(mask_of(s));
  return out;
}

inline std::set<Mask> mask_set(const std::vector<bcktop::ElementSet>& sets) {
  auto v = masks_of(sets);
  return {v.begin(), v.end()};
}

// BCK1..BCK5 written out directly.
inline bool is_bck(const Table& t) {
  const std::size_t n = t.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (t[t[t[a][b]][t[a][c]]][t[c][b]] != 0) return false;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (t[t[a][t[a][b]]][b] != 0) return false;
  for (Index a = 0; a < n; ++a)
    if (t[a][a] != 0) return false;
  for (Index a = 0; a < n; ++a)
    if (t[0][a] != 0) return false;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (t[a][b] == 0 && t[b][a] == 0 && a != b) return false;
  return true;
}

// Every n x n table with entries in 0..n-1, in odometer order.
template <typename Fn>
void for_each_table(std::size_t n, Fn&& fn) {
  const std::size_t cells = n * n;
  std::vector<Index> digits(cells, 0);
  while (true) {
    Table t(n, std::vector<Index>(n));
    for (std::size_t i = 0; i < cells; ++i) t[i / n][i % n] = digits[i];
    fn(t);
    std::size_t i = 0;
    while (i < cells && ++digits[i] == n) digits[i++] = 0;
    if (i == cells) return;
  }
}

inline bool is_subgroup_closed(const bcktop::BckModule& m, Mask s) {
  if (!(s & 1)) return false;
  for (Index a = 0; a < m.size(); ++a) {
    if (!(s & bit(a))) continue;
    if (!(s & bit(m.group().neg(a)))) return false;
    for (Index b = 0; b < m.size(); ++b)
      if ((s & bit(b)) && !(s & bit(m.group().table()[a][b]))) return false;
    for (Index x = 0; x < m.algebra().size(); ++x)
      if (!(s & bit(m.action_table()[x][a]))) return false;
  }
  return true;
}

inline std::set<Mask> submodules(const bcktop::BckModule& m) {
  std::set<Mask> out;
  for (Mask s = 0; s < bit(m.size()); ++s)
    if (is_subgroup_closed(m, s)) out.insert(s);
  return out;
}

inline Mask coset(const bcktop::BckModule& m, Index v, Mask sub) {
  Mask out = 0;
  for (Index k = 0; k < m.size(); ++k)
    if (sub & bit(k)) out |= bit(m.group().table()[v][k]);
  return out;
}

// V open iff every v in V has some chain index n with v + M_n inside V.
inline std::set<Mask> baig_opens(const bcktop::BckModule& m, const std::vector<Mask>& chain) {
  std::set<Mask> out;
  for (Mask v = 0; v < bit(m.size()); ++v) {
    bool open = true;
    for (Index x = 0; x < m.size() && open; ++x) {
      if (!(v & bit(x))) continue;
      bool some = false;
      for (Mask mn : chain) some = some || (coset(m, x, mn) & ~v) == 0;
      open = some;
    }
    if (open) out.insert(v);
  }
  return out;
}

inline std::vector<Mask> chain_masks(const bcktop::Dss& d) {
  std::vector<Mask> out;
  for (const auto& s : d.chain()) out.push_back(mask_of(s.elements()));
  return out;
}

// All |dst|^|src| maps, filtered by the two hom conditions.
inline std::vector<std::vector<Index>> homs(const bcktop::BckModule& src, const bcktop::BckModule& dst) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(src.size(), 0);
  while (true) {
    bool ok = true;
    for (Index a = 0; a < src.size() && ok; ++a)
      for (Index b = 0; b < src.size() && ok; ++b)
        ok = f[src.group().table()[a][b]] == dst.group().table()[f[a]][f[b]];
    for (Index x = 0; x < src.algebra().size() && ok; ++x)
      for (Index a = 0; a < src.size() && ok; ++a)
        ok = f[src.action_table()[x][a]] == dst.action_table()[x][f[a]];
    if (ok) out.push_back(f);
    std::size_t i = src.size();
    while (i > 0) {
      if (++f[i - 1] < dst.size()) break;
      f[--i] = 0;
    }
    if (i == 0) return out;
  }
}

inline Mask image(const std::vector<Index>& f, Mask s) {
  Mask out = 0;
  for (Index i = 0; i < f.size(); ++i)
    if (s & bit(i)) out |= bit(f[i]);
  return out;
}

inline Mask preimage(const std::vector<Index>& f, Mask s) {
  Mask out = 0;
  for (Index i = 0; i < f.size(); ++i)
    if (s & bit(f[i])) out |= bit(i);
  return out;
}

// ---------------------------------------------------------------------------
// Shared corpus

struct CorpusModule {
  std::string name;
  bcktop::BckModule module;
};

inline std::vector<CorpusModule> corpus_modules(bool with_z8 = true) {
  using bcktop::AbelianGroup;
  std::vector<CorpusModule> out = {
      {"Z1", bcktop::scalar_module_over_c2(AbelianGroup::cyclic(1))},
      {"Z2", bcktop::scalar_module_over_c2(AbelianGroup::cyclic(2))},
      {"Z4", bcktop::scalar_module_over_c2(AbelianGroup::cyclic(4))},
      {"K4", bcktop::scalar_module_over_c2(AbelianGroup::klein())},
      {"X2", bcktop::self_module(bcktop::chain_algebra(2))},
  };
  if (with_z8) out.push_back({"Z8", bcktop::scalar_module_over_c2(AbelianGroup::cyclic(8))});
  return out;
}

// Every weakly decreasing chain of 1..max_length submodules.
inline std::vector<bcktop::Dss> all_chains(const bcktop::BckModule& m, std::size_t max_length = 3) {
  const auto subs = bcktop::enumerate_submodules(m);
  std::vector<bcktop::Dss> out;
  std::vector<bcktop::Submodule> chain;
  auto extend = [&](auto&& self) -> void {
    if (!chain.empty()) out.push_back(bcktop::Dss::of(m, chain));
    if (chain.size() == max_length) return;
    for (const auto& s : subs) {
      if (!chain.empty() && !s.is_subset_of(chain.back())) continue;
      chain.push_back(s);
      self(self);
      chain.pop_back();
    }
  };
  extend(extend);
  return out;
}

inline bcktop::BckModule cyclic_module(std::size_t n) {
  return bcktop::scalar_module_over_c2(bcktop::AbelianGroup::cyclic(n));
}

inline bcktop::Dss dss(const bcktop::BckModule& m, std::vector<std::vector<Index>> chain) {
  std::vector<bcktop::Submodule> subs;
  for (auto& c : chain) subs.push_back(bcktop::Submodule::of(m, bcktop::ElementSet(m.size(), c)));
  return bcktop::Dss::of(m, std::move(subs));
}

inline bcktop::ElementSet set(std::size_t universe, std::vector<Index> elements) {
  return bcktop::ElementSet(universe, elements);
}

}  // namespace oracle
