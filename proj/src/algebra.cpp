#include "bcktop/algebra.hpp"

#include <string>

namespace bcktop {

namespace {

void check_square(const Table& t, const char* what) {
  const std::size_t n = t.size();
  if (n == 0) throw MalformedTable(std::string(what) + " table is empty");
  for (std::size_t r = 0; r < n; ++r) {
    if (t[r].size() != n)
      throw MalformedTable(std::string(what) + " row " + std::to_string(r) + " has " +
                           std::to_string(t[r].size()) + " entries, expected " + std::to_string(n));
    for (Index v : t[r])
      if (v >= n)
        throw MalformedTable(std::string(what) + " row " + std::to_string(r) + " entry " +
                             std::to_string(v) + " out of range");
  }
}

std::optional<Index> greatest_element(const Table& star) {
  const std::size_t n = star.size();
  for (Index u = 0; u < n; ++u) {
    bool top = true;
    for (Index a = 0; a < n && top; ++a) top = star[a][u] == 0;
    if (top) return u;
  }
  return std::nullopt;
}

}  // namespace

std::optional<AxiomViolation> find_axiom_violation(const Table& star) {
  const std::size_t n = star.size();
  auto s = [&](Index a, Index b) { return star[a][b]; };

  // BCK1: ((a*b)*(a*c))*(c*b) = 0
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (s(s(s(a, b), s(a, c)), s(c, b)) != 0) return AxiomViolation("BCK1", {a, b, c});
  // BCK2: (a*(a*b))*b = 0
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (s(s(a, s(a, b)), b) != 0) return AxiomViolation("BCK2", {a, b});
  // BCK3: a*a = 0
  for (Index a = 0; a < n; ++a)
    if (s(a, a) != 0) return AxiomViolation("BCK3", {a});
  // BCK4: 0*a = 0
  for (Index a = 0; a < n; ++a)
    if (s(0, a) != 0) return AxiomViolation("BCK4", {a});
  // BCK5: a*b = 0 and b*a = 0 imply a = b
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b && s(a, b) == 0 && s(b, a) == 0) return AxiomViolation("BCK5", {a, b});
  return std::nullopt;
}

BckAlgebra BckAlgebra::from_table(Table star, std::optional<Index> one) {
  check_square(star, "star");
  if (auto violation = find_axiom_violation(star)) throw *violation;

  BckAlgebra alg;
  alg.star_ = std::move(star);
  alg.one_ = greatest_element(alg.star_);
  if (one) {
    if (*one >= alg.size()) throw MalformedTable("one = " + std::to_string(*one) + " out of range");
    for (Index a = 0; a < alg.size(); ++a)
      if (alg.star(a, *one) != 0) throw AxiomViolation("bounded", {a, *one});
    alg.one_declared_ = true;
  }
  return alg;
}

BckAlgebra chain_algebra(std::size_t n) {
  if (n == 0) throw MalformedTable("chain algebra needs at least one element");
  Table star(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) star[a][b] = a > b ? a - b : 0;
  return BckAlgebra::from_table(std::move(star), n - 1);
}

bool is_bounded(const BckAlgebra& alg) { return alg.one().has_value(); }

bool is_commutative(const BckAlgebra& alg) {
  for (Index a = 0; a < alg.size(); ++a)
    for (Index b = 0; b < alg.size(); ++b)
      if (alg.meet(a, b) != alg.meet(b, a)) return false;
  return true;
}

bool is_implicative(const BckAlgebra& alg) {
  for (Index a = 0; a < alg.size(); ++a)
    for (Index b = 0; b < alg.size(); ++b)
      if (alg.star(a, alg.star(b, a)) != a) return false;
  return true;
}

}  // namespace bcktop
