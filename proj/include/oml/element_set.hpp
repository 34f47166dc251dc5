#pragma once

#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace oml {

/// Index of a lattice element, as given by the user.
using Element = std::uint32_t;

/// A subset of lattice elements; bit i set means element i is a member.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Calls fn(i) for every member, ascending.
template <typename Fn>
void for_each_member(const ElementSet& s, Fn&& fn) {
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) {
    fn(static_cast<Element>(i));
  }
}

inline std::vector<Element> members_of(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for_each_member(s, [&](Element e) { out.push_back(e); });
  return out;
}

inline ElementSet make_set(std::size_t n, const std::vector<Element>& elems) {
  ElementSet s(n);
  for (Element e : elems) s.set(e);
  return s;
}

/// Orders equally sized sets by their value as binary numbers (bit i has
/// weight 2^i). This is the "ascending by membership bitset" order used by
/// every enumeration.
inline bool bitset_less(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a.test(i) != b.test(i)) return b.test(i);
  }
  return false;
}

}  // namespace oml
