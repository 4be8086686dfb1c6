#pragma once

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "bcktop/errors.hpp"

namespace bcktop {

/// A subset of a finite carrier {0, ..., universe-1}.
///
/// Ordering is canonical: smaller cardinality first, then lexicographic on
/// the ascending element list. Every sorted family of sets in the library
/// uses this order.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : bits_(universe) {}
  ElementSet(std::size_t universe, std::initializer_list<Index> elements);
  ElementSet(std::size_t universe, const std::vector<Index>& elements);

  static ElementSet full(std::size_t universe);
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t count() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool contains(Index i) const { return i < bits_.size() && bits_.test(i); }

  void insert(Index i);
  void erase(Index i);

  std::vector<Index> elements() const;
  /// Only valid for universes of at most 64 points.
  std::uint64_t mask() const;

  bool is_subset_of(const ElementSet& other) const;
  ElementSet complement() const;

  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator|=(const ElementSet& other);
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.bits_ == b.bits_;
  }
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b);

  /// "{0,2}" style, ascending, no spaces; the empty set prints as "{}".
  std::string str() const;

  template <typename F>
  void for_each(F&& fn) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) fn(Index{i});
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  Bits bits_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);

/// Formats a whole family, one "{...}" per element, separated by `sep`.
std::string format_family(const std::vector<ElementSet>& family, const std::string& sep = " ");

}  // namespace bcktop
