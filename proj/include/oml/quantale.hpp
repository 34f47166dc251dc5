#pragma once

#include <vector>

#include "oml/endomap.hpp"
#include "oml/lattice.hpp"

namespace oml {

/// The product a & b = a ^ j(b) tabulated over a lattice.
struct QuantaleTable {
  std::size_t n = 0;
  std::vector<Element> amp;  // row-major n x n
  Endomap source_endo;

  Element operator()(Element a, Element b) const { return amp[a * n + b]; }
};

/// Tabulates a & b = a ^ j(b). No axioms are checked. Throws
/// PreconditionViolated if j is not a total map into [0, n).
QuantaleTable quantale_from_endo(const OmlTable& l, const Endomap& j);

/// Axiom ids: associativity (a, b, c); left-distributive, a & (b1 v b2),
/// witness (a, b1, b2) or (a) for the empty join; right-distributive,
/// (a1 v a2) & b, witness (a1, a2, b) or (b); right-sided (a); idempotent (a).
/// Works on arbitrary tables so that failures carry counterexamples.
ValidationReport check_quantale_axioms(const OmlTable& l, const QuantaleTable& q);

/// Checks that the fixed points of a B.-V.B. map form a locale inside l:
/// they contain both bounds, are closed under l's meet and join, and binary
/// meet distributes over binary join. Axiom ids: locale-bounds,
/// locale-meet-closed, locale-join-closed, locale-distributive.
/// Throws PreconditionViolated if j is not B.-V.B.
ValidationReport fixed_point_locale_check(const OmlTable& l, const Endomap& j);

}  // namespace oml
