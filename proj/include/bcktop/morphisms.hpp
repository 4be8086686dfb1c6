#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "bcktop/module.hpp"
#include "bcktop/topology.hpp"

namespace bcktop {

/// An X-homomorphism together with a Baig topology on each side.
class TopologizedHom {
 public:
  /// Throws Error if the chains are not over the hom's source and target.
  static TopologizedHom make(ModuleHom hom, const Dss& source_dss, const Dss& target_dss);
  static TopologizedHom make(ModuleHom hom, BaigTopology source, BaigTopology target);

  const ModuleHom& hom() const noexcept { return hom_; }
  const Dss& source_dss() const noexcept { return source_.dss(); }
  const Dss& target_dss() const noexcept { return target_.dss(); }
  const BaigTopology& source_topology() const noexcept { return source_; }
  const BaigTopology& target_topology() const noexcept { return target_; }

  /// Past this index both chains are constant, so "for all n" reduces to
  /// n = 1..horizon().
  std::size_t horizon() const noexcept {
    return std::max(source_.dss().length(), target_.dss().length());
  }
  FiniteMap map() const { return hom_map(hom_, source_, target_); }

 private:
  TopologizedHom(ModuleHom hom, BaigTopology source, BaigTopology target)
      : hom_(std::move(hom)), source_(std::move(source)), target_(std::move(target)) {}

  ModuleHom hom_;
  BaigTopology source_;
  BaigTopology target_;
};

/// First chain index where a set condition fails, with both sides.
struct ChainWitness {
  std::size_t n;
  ElementSet lhs;
  ElementSet rhs;
};

/// First n with f(M_n) not inside M'_n; lhs = f(M_n), rhs = M'_n.
std::optional<ChainWitness> find_incompatibility(const TopologizedHom& th);
/// First n with f(M_n) != f(M) cap M'_n; lhs = f(M_n), rhs = f(M) cap M'_n.
std::optional<ChainWitness> find_non_strictness(const TopologizedHom& th);

inline bool is_compatible(const TopologizedHom& th) { return !find_incompatibility(th); }
inline bool is_strict(const TopologizedHom& th) { return !find_non_strictness(th); }

/// f_n : M/M_n -> M'/M'_n, m + M_n -> f(m) + M'_n. Throws NotCompatible, or
/// InvariantViolation if the square with the projections fails to commute.
ModuleHom induced_quotient_map(const TopologizedHom& th, std::size_t n);

/// Compares phi'_n o f against f_n o phi_n as element tables.
bool quotient_square_commutes(const TopologizedHom& th, std::size_t n);

/// alpha_n : Ker f -> Ker f_n, k -> k + M_n. Domain and codomain are the two
/// kernels as modules in their own right (see restrict_module). Throws
/// NotCompatible.
ModuleHom alpha_n(const TopologizedHom& th, std::size_t n);
bool is_alpha_epi(const TopologizedHom& th, std::size_t n);
bool is_alpha_epi_all_n(const TopologizedHom& th);

struct VerdictReport {
  std::string claim;
  std::string instance;
  bool holds = true;
  std::optional<std::string> witness;
  std::chrono::nanoseconds elapsed{0};
};

/// The sequence K -i-> M -f-> M/K, with K carrying the induced and M/K the
/// factor topology.
struct ExactPairResult {
  bool exact = false;    // Im i == Ker f
  bool i_strict = false;
  bool f_strict = false;
  bool i_open = false;
  bool f_open = false;
  std::optional<std::string> witness;  // first failing part

  bool holds() const { return exact && i_strict && f_strict && i_open && f_open; }
};

ExactPairResult exact_pair_details(const BaigTopology& t, const Submodule& k);
VerdictReport exact_pair_check(const BaigTopology& t, const Submodule& k, std::string instance = {});

struct NamedSpace {
  std::string id;
  BaigTopology topology;
};

struct NamedHom {
  std::string id;
  TopologizedHom hom;
};

/// Claim identifiers, in report order.
namespace claims {
inline constexpr const char* kTopologyAxioms = "topology-axioms";
inline constexpr const char* kBaseSound = "base-sound";
inline constexpr const char* kSubmoduleClopen = "submodule-clopen";
inline constexpr const char* kCharacteristicContinuous = "characteristic-continuous";
inline constexpr const char* kProperChainDisconnected = "proper-chain-disconnected";
inline constexpr const char* kNegationHomeomorphism = "negation-homeomorphism";
inline constexpr const char* kTranslationHomeomorphism = "translation-homeomorphism";
inline constexpr const char* kAdditionContinuous = "addition-continuous";
inline constexpr const char* kScalarContinuous = "scalar-continuous";
inline constexpr const char* kInducedIsRelative = "induced-is-relative";
inline constexpr const char* kExactSequence = "exact-sequence";

inline constexpr const char* kContinuityAtZero = "continuity-at-zero";
inline constexpr const char* kCosetImage = "coset-image";
inline constexpr const char* kStrictCompatible = "strict-implies-compatible";
inline constexpr const char* kStrictOpen = "strict-implies-open";
inline constexpr const char* kCompatibleContinuous = "compatible-implies-continuous";
inline constexpr const char* kStrictContinuous = "strict-implies-continuous";
inline constexpr const char* kStrictBijectionHomeo = "strict-bijection-homeomorphism";
inline constexpr const char* kQuotientSquare = "quotient-square-commutes";
inline constexpr const char* kStrictIffAlphaEpi = "strict-iff-alpha-epi";
inline constexpr const char* kAlphaEpiContinuousOpen = "alpha-epi-continuous-open";
}  // namespace claims

/// Module-level claims on each topologized module (including the exact
/// sequence for every submodule). Sorted by (claim, instance).
std::vector<VerdictReport> run_space_suite(const std::vector<NamedSpace>& spaces);

/// Homomorphism-level claims on each topologized hom. Implications with a
/// false hypothesis are reported as holding without a witness. Sorted by
/// (claim, instance).
std::vector<VerdictReport> run_theorem_suite(const std::vector<NamedHom>& homs);

/// Instances that are compatible but not strict, i.e. evidence that the
/// strict => compatible implication is not an equivalence.
std::vector<std::string> compatible_not_strict(const std::vector<NamedHom>& homs);

}  // namespace bcktop
