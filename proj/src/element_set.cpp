#include "bcktop/element_set.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace bcktop {

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Index> witnesses)
    : Error([&] {
        std::ostringstream msg;
        msg << axiom << " fails at (";
        for (std::size_t i = 0; i < witnesses.size(); ++i) msg << (i ? "," : "") << witnesses[i];
        msg << ")";
        return msg.str();
      }()),
      axiom_(std::move(axiom)),
      witnesses_(std::move(witnesses)) {}

CarrierTooLarge::CarrierTooLarge(std::size_t size, std::size_t bound)
    : Error("carrier of " + std::to_string(size) + " points exceeds the enumeration bound " +
            std::to_string(bound)),
      size_(size),
      bound_(bound) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<Index> elements)
    : bits_(universe) {
  for (Index i : elements) insert(i);
}

ElementSet::ElementSet(std::size_t universe, const std::vector<Index>& elements)
    : bits_(universe) {
  for (Index i : elements) insert(i);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  s.bits_.set();
  return s;
}

ElementSet ElementSet::from_mask(std::size_t universe, std::uint64_t mask) {
  ElementSet s(universe);
  for (std::size_t i = 0; i < universe && i < 64; ++i)
    if (mask >> i & 1u) s.bits_.set(i);
  return s;
}

void ElementSet::insert(Index i) {
  if (i >= bits_.size()) throw std::out_of_range("element " + std::to_string(i) + " outside carrier");
  bits_.set(i);
}

void ElementSet::erase(Index i) {
  if (i < bits_.size()) bits_.reset(i);
}

std::vector<Index> ElementSet::elements() const {
  std::vector<Index> out;
  out.reserve(count());
  for_each([&](Index i) { out.push_back(i); });
  return out;
}

std::uint64_t ElementSet::mask() const {
  std::uint64_t m = 0;
  for_each([&](Index i) {
    if (i >= 64) throw std::out_of_range("mask() needs a universe of at most 64 points");
    m |= std::uint64_t{1} << i;
  });
  return m;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (other.universe() == universe()) return bits_.is_subset_of(other.bits_);
  bool inside = true;
  for_each([&](Index i) { inside = inside && other.contains(i); });
  return inside;
}

ElementSet ElementSet::complement() const {
  ElementSet s(*this);
  s.bits_.flip();
  return s;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  bits_ &= other.bits_;
  return *this;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  bits_ |= other.bits_;
  return *this;
}

std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
  if (auto c = a.count() <=> b.count(); c != 0) return c;
  auto ea = a.elements();
  auto eb = b.elements();
  if (auto c = std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
      c != 0)
    return c;
  return a.universe() <=> b.universe();
}

std::string ElementSet::str() const {
  std::string out = "{";
  bool first = true;
  for_each([&](Index i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) { return os << s.str(); }

std::string format_family(const std::vector<ElementSet>& family, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i) out += sep;
    out += family[i].str();
  }
  return out;
}

}  // namespace bcktop
