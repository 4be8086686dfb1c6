#pragma once

#include <optional>
#include <vector>

#include "bcktop/errors.hpp"

namespace bcktop {

using Table = std::vector<std::vector<Index>>;

/// A finite BCK-algebra (X, *, 0) stored as its operation table.
///
/// Elements are the dense indices 0..size()-1 and the zero is always index 0.
/// Instances only exist in validated form: `from_table` checks BCK1-BCK5 over
/// every element triple and rejects the table otherwise. BCK6 defines the
/// order (a <= b iff a*b = 0) and needs no check.
class BckAlgebra {
 public:
  /// Throws MalformedTable or AxiomViolation. When `one` is given it must be
  /// a greatest element.
  static BckAlgebra from_table(Table star, std::optional<Index> one = std::nullopt);

  std::size_t size() const noexcept { return star_.size(); }
  Index zero() const noexcept { return 0; }
  Index star(Index a, Index b) const { return star_[a][b]; }
  const Table& table() const noexcept { return star_; }

  /// The greatest element, if the algebra is bounded.
  std::optional<Index> one() const noexcept { return one_; }
  /// Whether `one` was given explicitly at construction (kept for serialization).
  bool one_declared() const noexcept { return one_declared_; }

  bool leq(Index a, Index b) const { return star(a, b) == 0; }
  /// a ^ b = b*(b*a)
  Index meet(Index a, Index b) const { return star(b, star(b, a)); }

  friend bool operator==(const BckAlgebra& a, const BckAlgebra& b) { return a.star_ == b.star_; }

 private:
  BckAlgebra() = default;

  Table star_;
  std::optional<Index> one_;
  bool one_declared_ = false;
};

/// Checks BCK1-BCK5 in that order, each scanned lexicographically; returns the
/// first violation or nothing. The table must already be well formed.
std::optional<AxiomViolation> find_axiom_violation(const Table& star);

/// {0..n-1} with a*b = max(a-b, 0) and one = n-1.
BckAlgebra chain_algebra(std::size_t n);

inline Index meet(const BckAlgebra& alg, Index a, Index b) { return alg.meet(a, b); }
inline bool leq(const BckAlgebra& alg, Index a, Index b) { return alg.leq(a, b); }

bool is_bounded(const BckAlgebra& alg);
/// Meet symmetry: b*(b*a) == a*(a*b) for all a, b.
bool is_commutative(const BckAlgebra& alg);
/// a*(b*a) == a for all a, b.
bool is_implicative(const BckAlgebra& alg);

}  // namespace bcktop
