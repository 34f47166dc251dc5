#pragma once

#include <vector>

#include "oml/element_set.hpp"

namespace oml {

/// A total self-map on the elements of one lattice, stored as its image
/// array. Range is not enforced here; check_bvb reports out-of-range values.
struct Endomap {
  std::vector<Element> image;

  Element operator()(Element a) const { return image[a]; }
  std::size_t size() const noexcept { return image.size(); }

  static Endomap identity(std::size_t n) {
    Endomap j;
    j.image.resize(n);
    for (std::size_t a = 0; a < n; ++a) j.image[a] = static_cast<Element>(a);
    return j;
  }

  friend bool operator==(const Endomap&, const Endomap&) = default;
};

}  // namespace oml
