#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bcktop/element_set.hpp"
#include "bcktop/module.hpp"

namespace bcktop {

class Dss;
class BaigTopology;
BaigTopology build_baig(const Dss& dss);

/// Largest carrier whose open family is enumerated (2^n subsets). 16 unless
/// the BCKTOP_MAX_CARRIER environment variable says otherwise; never above 32.
std::size_t enumeration_bound();

/// A topology on {0..n-1}. A finite topology is determined by the smallest
/// open set around each point, so that is what is stored; the explicit open
/// family is kept alongside when the carrier is within the enumeration bound.
class FiniteTopology {
 public:
  /// The topology generated by `subbase` (which must cover the carrier).
  static FiniteTopology generated_by(std::size_t size, const std::vector<ElementSet>& subbase);
  static FiniteTopology discrete(std::size_t size);
  static FiniteTopology indiscrete(std::size_t size);

  std::size_t size() const noexcept { return neighbourhoods_.size(); }
  const ElementSet& neighbourhood(Index x) const { return neighbourhoods_[x]; }

  bool is_open(const ElementSet& s) const;
  bool is_closed(const ElementSet& s) const { return is_open(s.complement()); }
  bool is_clopen(const ElementSet& s) const { return is_open(s) && is_closed(s); }

  bool has_open_family() const noexcept { return opens_ != nullptr; }
  /// Canonically sorted. Throws CarrierTooLarge above the enumeration bound.
  const std::vector<ElementSet>& opens() const;

  friend bool operator==(const FiniteTopology& a, const FiniteTopology& b) {
    return a.neighbourhoods_ == b.neighbourhoods_;
  }

 private:
  friend BaigTopology build_baig(const Dss& dss);

  FiniteTopology(std::vector<ElementSet> neighbourhoods,
                 std::shared_ptr<const std::vector<ElementSet>> opens)
      : neighbourhoods_(std::move(neighbourhoods)), opens_(std::move(opens)) {}

  std::vector<ElementSet> neighbourhoods_;
  std::shared_ptr<const std::vector<ElementSet>> opens_;
};

/// A decreasing sequence of submodules M_1 >= M_2 >= ... stored as its finite
/// prefix; M_n for n past the end is the last entry. Indexing is 1-based.
class Dss {
 public:
  /// Throws Error for an empty or non-decreasing chain, NotASubmodule for a
  /// bad entry.
  static Dss of(BckModule module, std::vector<Submodule> chain);

  const BckModule& module() const noexcept { return module_; }
  const std::vector<Submodule>& chain() const noexcept { return chain_; }
  std::size_t length() const noexcept { return chain_.size(); }
  const Submodule& at(std::size_t n) const;
  const Submodule& tail() const { return chain_.back(); }
  std::string str() const;

 private:
  Dss(BckModule module, std::vector<Submodule> chain)
      : module_(std::move(module)), chain_(std::move(chain)) {}

  BckModule module_;
  std::vector<Submodule> chain_;
};

/// V is open iff every v in V has some n with v + M_n inside V.
class BaigTopology {
 public:
  const Dss& dss() const noexcept { return dss_; }
  const BckModule& module() const noexcept { return dss_.module(); }
  const FiniteTopology& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_.size(); }
  /// The distinct cosets x + M_n, canonically sorted.
  const std::vector<ElementSet>& base() const noexcept { return base_; }
  const std::vector<ElementSet>& opens() const { return space_.opens(); }

 private:
  friend BaigTopology build_baig(const Dss& dss);

  BaigTopology(Dss dss, FiniteTopology space, std::vector<ElementSet> base)
      : dss_(std::move(dss)), space_(std::move(space)), base_(std::move(base)) {}

  Dss dss_;
  FiniteTopology space_;
  std::vector<ElementSet> base_;
};

/// Enumerates every subset against the membership criterion and asserts the
/// result equals the union closure of the coset base. Throws CarrierTooLarge.
BaigTopology build_baig(const Dss& dss);

inline bool is_open(const BaigTopology& t, const ElementSet& s) { return t.space().is_open(s); }
inline bool is_closed(const BaigTopology& t, const ElementSet& s) { return t.space().is_closed(s); }
inline bool is_clopen(const BaigTopology& t, const ElementSet& s) { return t.space().is_clopen(s); }

/// True iff the only clopen sets are the empty set and the carrier. Needs the
/// open family, so throws CarrierTooLarge above the bound.
bool is_connected(const FiniteTopology& t);
inline bool is_connected(const BaigTopology& t) { return is_connected(t.space()); }

struct FiniteMap {
  FiniteTopology domain;
  FiniteTopology codomain;
  std::vector<Index> table;

  Index operator()(Index x) const { return table[x]; }
  ElementSet image_of(const ElementSet& s) const;
  ElementSet preimage_of(const ElementSet& s) const;
};

/// A basic open set of the codomain whose preimage is not open, if any.
std::optional<ElementSet> find_discontinuity(const FiniteMap& f);
/// A basic open set of the domain whose image is not open, if any.
std::optional<ElementSet> find_non_open_image(const FiniteMap& f);

bool is_continuous(const FiniteMap& f);
bool is_continuous_at(const FiniteMap& f, Index m);
bool is_open_map(const FiniteMap& f);
bool is_bijective(const FiniteMap& f);
bool is_homeomorphism(const FiniteMap& f);

/// m -> -m
FiniteMap negation_map(const BaigTopology& t);
/// m -> a + m
FiniteMap translation_map(const BaigTopology& t, Index a);
/// m -> x.m for x in the algebra
FiniteMap scalar_map(const BaigTopology& t, Index x);
/// Indicator of N into the discrete two-point space {0, 1}.
FiniteMap characteristic_map(const BaigTopology& t, const Submodule& n);
FiniteMap hom_map(const ModuleHom& f, const BaigTopology& source, const BaigTopology& target);

/// Product topology with (a, b) stored at index a * |B| + b. Throws
/// CarrierTooLarge if a factor exceeds the enumeration bound; the open family
/// of the product is only materialized when the product is within it.
FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b);
FiniteTopology product_topology(const BaigTopology& a, const BaigTopology& b);

/// (m, m') -> m + m' on the product of t with itself.
FiniteMap addition_map(const BaigTopology& t);

/// Baig topology on K (index i = i-th smallest element of K) from K cap M_n.
BaigTopology induced_topology(const BaigTopology& t, const Submodule& k);
/// { O cap K : O open in t } in the same local indexing as induced_topology.
std::vector<ElementSet> relative_opens(const BaigTopology& t, const Submodule& k);
/// Baig topology on M/K (indexed as QuotientModule) from (M_n + K)/K.
BaigTopology factor_topology(const BaigTopology& t, const Submodule& k);

}  // namespace bcktop
