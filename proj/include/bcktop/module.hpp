#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "bcktop/algebra.hpp"
#include "bcktop/element_set.hpp"

namespace bcktop {

/// Finite abelian group on {0..size-1} with identity 0, given by its
/// addition table. Validated exhaustively at construction.
class AbelianGroup {
 public:
  /// Throws MalformedTable or ModuleAxiomViolation (axioms "identity",
  /// "associativity", "commutativity", "inverse").
  static AbelianGroup from_table(Table add);
  static AbelianGroup cyclic(std::size_t n);
  /// Z2 x Z2 with 1+2 = 3.
  static AbelianGroup klein();

  std::size_t size() const noexcept { return add_.size(); }
  Index add(Index a, Index b) const { return add_[a][b]; }
  Index neg(Index a) const { return neg_[a]; }
  const Table& table() const noexcept { return add_; }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.add_ == b.add_; }

 private:
  AbelianGroup() = default;

  Table add_;
  std::vector<Index> neg_;
};

/// A left module over a BCK-algebra: an abelian group plus an action table
/// with entry [a][m] = a.m, validated against M1-M4.
class BckModule {
 public:
  /// Throws MalformedTable or ModuleAxiomViolation ("M1".."M4") with the
  /// lexicographically first witness.
  static BckModule from_tables(BckAlgebra algebra, AbelianGroup group, Table action);

  const BckAlgebra& algebra() const noexcept { return algebra_; }
  const AbelianGroup& group() const noexcept { return group_; }
  const Table& action_table() const noexcept { return action_; }

  std::size_t size() const noexcept { return group_.size(); }
  Index add(Index a, Index b) const { return group_.add(a, b); }
  Index neg(Index a) const { return group_.neg(a); }
  Index act(Index x, Index m) const { return action_[x][m]; }

  friend bool operator==(const BckModule& a, const BckModule& b) {
    return a.algebra_ == b.algebra_ && a.group_ == b.group_ && a.action_ == b.action_;
  }

 private:
  BckModule(BckAlgebra algebra, AbelianGroup group, Table action)
      : algebra_(std::move(algebra)), group_(std::move(group)), action_(std::move(action)) {}

  BckAlgebra algebra_;
  AbelianGroup group_;
  Table action_;
};

std::optional<ModuleAxiomViolation> find_module_violation(const BckAlgebra& algebra,
                                                          const AbelianGroup& group,
                                                          const Table& action);

inline BckModule module_from_tables(BckAlgebra algebra, AbelianGroup group, Table action) {
  return BckModule::from_tables(std::move(algebra), std::move(group), std::move(action));
}

/// Any abelian group is a module over the 2-chain via 0.m = 0, 1.m = m.
BckModule scalar_module_over_c2(const AbelianGroup& group);

/// A bounded implicative algebra acting on itself: a+b = (a*b) v (b*a) with
/// u v w = 1*((1*u) ^ (1*w)), and a.m = a ^ m. Throws NotBoundedImplicative,
/// or ConstructionFailed if the resulting tables fail validation.
BckModule self_module(const BckAlgebra& algebra);

/// Subgroup of a module that is closed under the action.
bool is_submodule(const BckModule& module, const ElementSet& elements);

class Submodule {
 public:
  /// Throws NotASubmodule.
  static Submodule of(const BckModule& module, ElementSet elements);
  static Submodule zero(const BckModule& module);
  static Submodule whole(const BckModule& module);

  const ElementSet& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.count(); }
  std::size_t universe() const noexcept { return elements_.universe(); }
  bool contains(Index m) const { return elements_.contains(m); }
  bool is_subset_of(const Submodule& other) const { return elements_.is_subset_of(other.elements_); }
  std::string str() const { return elements_.str(); }

  friend bool operator==(const Submodule&, const Submodule&) = default;
  friend auto operator<=>(const Submodule& a, const Submodule& b) { return a.elements_ <=> b.elements_; }

 private:
  explicit Submodule(ElementSet elements) : elements_(std::move(elements)) {}

  ElementSet elements_;
};

/// Throws NotASubmodule unless `sub` is a submodule of `module`.
void require_submodule(const BckModule& module, const Submodule& sub);

/// All submodules, canonically sorted (cardinality, then elements).
std::vector<Submodule> enumerate_submodules(const BckModule& module);

Submodule intersection(const BckModule& module, const Submodule& a, const Submodule& b);
/// K + L = {k + l}.
Submodule sum(const BckModule& module, const Submodule& a, const Submodule& b);
/// m + K as a subset of the carrier.
ElementSet coset(const BckModule& module, Index m, const ElementSet& k);
/// A + B = {a + b}.
ElementSet set_sum(const BckModule& module, const ElementSet& a, const ElementSet& b);

/// The submodule K viewed as a module in its own right. Index i of the result
/// is the i-th smallest element of K.
BckModule restrict_module(const BckModule& module, const Submodule& sub);

/// An X-homomorphism, stored as its element table.
class ModuleHom {
 public:
  /// Throws MalformedTable, Error (different algebras) or ModuleAxiomViolation
  /// ("additive" with witness (m1,m2), "action" with witness (x,m)).
  static ModuleHom from_map(BckModule source, BckModule target, std::vector<Index> map);

  const BckModule& source() const noexcept { return source_; }
  const BckModule& target() const noexcept { return target_; }
  const std::vector<Index>& map() const noexcept { return map_; }
  Index operator()(Index m) const { return map_[m]; }

  ElementSet image_of(const ElementSet& s) const;
  ElementSet preimage_of(const ElementSet& s) const;
  bool is_injective() const;
  bool is_surjective() const;

  friend bool operator==(const ModuleHom&, const ModuleHom&) = default;

 private:
  ModuleHom(BckModule source, BckModule target, std::vector<Index> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

  BckModule source_;
  BckModule target_;
  std::vector<Index> map_;
};

std::optional<ModuleAxiomViolation> find_hom_violation(const BckModule& source,
                                                       const BckModule& target,
                                                       const std::vector<Index>& map);

Submodule kernel(const ModuleHom& f);
Submodule image(const ModuleHom& f);

/// Every X-homomorphism source -> target, ordered lexicographically by table.
std::vector<ModuleHom> enumerate_homs(const BckModule& source, const BckModule& target);

/// f(K + m); throws InvariantViolation if it differs from f(K) + f(m).
ElementSet hom_coset_image(const ModuleHom& f, const Submodule& k, Index m);

/// M/N with cosets numbered by ascending minimum representative, so the
/// coset of 0 is always index 0.
class QuotientModule {
 public:
  /// Throws NotASubmodule; throws InvariantViolation if the induced tables are
  /// not well defined.
  static QuotientModule of(const BckModule& base, const Submodule& divisor);

  const BckModule& base() const noexcept { return base_; }
  const Submodule& divisor() const noexcept { return divisor_; }
  const BckModule& module() const noexcept { return module_; }
  std::size_t size() const noexcept { return representatives_.size(); }

  Index class_of(Index m) const { return class_of_[m]; }
  Index representative(Index c) const { return representatives_[c]; }
  ElementSet coset_elements(Index c) const;
  /// Image of a set of base elements in M/N.
  ElementSet project(const ElementSet& s) const;
  /// The natural projection m -> m + N.
  ModuleHom projection() const;

 private:
  QuotientModule(BckModule base, Submodule divisor, BckModule module, std::vector<Index> class_of,
                 std::vector<Index> representatives)
      : base_(std::move(base)),
        divisor_(std::move(divisor)),
        module_(std::move(module)),
        class_of_(std::move(class_of)),
        representatives_(std::move(representatives)) {}

  BckModule base_;
  Submodule divisor_;
  BckModule module_;
  std::vector<Index> class_of_;
  std::vector<Index> representatives_;
};

inline QuotientModule quotient(const BckModule& module, const Submodule& n) {
  return QuotientModule::of(module, n);
}

}  // namespace bcktop
