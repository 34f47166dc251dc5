#pragma once

#include <vector>

#include "oml/catalog.hpp"
#include "oml/lattice.hpp"

namespace oml::test {

// Hexagon O6: 0 < a < b < 1 and 0 < b' < a' < 1.
// Indices: 0 = 0, 1 = a, 2 = b, 3 = b', 4 = a', 5 = 1.
inline LatticeSpec o6_spec() {
  LatticeSpec s;
  s.name = "O6";
  s.n = 6;
  s.covers = std::vector<std::pair<Element, Element>>{{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}};
  s.ortho = {5, 4, 3, 2, 1, 0};
  s.labels = {"0", "a", "b", "b'", "a'", "1"};
  return s;
}

// MO2 written out by hand: 0, a, a', b, b', 1.
inline LatticeSpec mo2_spec() {
  LatticeSpec s;
  s.name = "MO2";
  s.n = 6;
  s.covers = std::vector<std::pair<Element, Element>>{{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                                      {1, 5}, {2, 5}, {3, 5}, {4, 5}};
  s.ortho = {5, 2, 1, 4, 3, 0};
  s.labels = {"0", "a", "a'", "b", "b'", "1"};
  return s;
}

inline LatticeSpec chain2_spec() {
  LatticeSpec s;
  s.name = "C2";
  s.n = 2;
  s.covers = std::vector<std::pair<Element, Element>>{{0, 1}};
  s.ortho = {1, 0};
  return s;
}

/// Every lattice the acceptance criteria range over.
inline std::vector<OmlTable> catalog_lattices() {
  std::vector<OmlTable> out;
  for (unsigned k = 0; k <= 4; ++k) out.push_back(boolean_algebra(k));
  for (unsigned n = 1; n <= 4; ++n) out.push_back(mo(n));
  out.push_back(product(mo(2), boolean_algebra(1)));
  out.push_back(product(mo(2), mo(2)));
  out.push_back(g12());
  return out;
}

/// Lattices small enough for the Moore-family scan (n <= 16).
inline std::vector<OmlTable> small_catalog_lattices() {
  std::vector<OmlTable> out;
  for (auto& l : catalog_lattices()) {
    if (l.size() <= 16) out.push_back(std::move(l));
  }
  return out;
}

inline std::vector<OmlTable> boolean_catalog_lattices() {
  std::vector<OmlTable> out;
  for (unsigned k = 0; k <= 4; ++k) out.push_back(boolean_algebra(k));
  return out;
}

}  // namespace oml::test
