#pragma once

#include <string>

#include "oml/lattice.hpp"

namespace oml {

/// Power set of k atoms, element index = atom bitmask, ortho = complement.
/// Throws SizeLimitExceeded when 2^k exceeds kMaxElements.
OmlTable boolean_algebra(unsigned k);

/// Horizontal sum of n four-element blocks. Index 0 is bottom, then
/// a_1, a_1', ..., a_n, a_n', and top last.
OmlTable mo(unsigned n);

/// Componentwise product; pair (i, j) has index i * |b| + j.
OmlTable product(const OmlTable& a, const OmlTable& b);

/// A 12-element orthomodular lattice with a four-element center, realized as
/// mo(2) x boolean_algebra(1). Its name records that construction.
OmlTable g12();

/// Parses names like "B3", "MO2", "G12" and products joined by 'x'
/// ("MO2xB1"). Throws MalformedInput on anything else.
OmlTable catalog_lattice(const std::string& name);

}  // namespace oml
