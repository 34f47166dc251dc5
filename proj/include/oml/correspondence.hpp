#pragma once

#include <cstdint>
#include <vector>

#include "oml/endomap.hpp"
#include "oml/lattice.hpp"
#include "oml/logic_ops.hpp"

namespace oml {

/// Bounds on the two exhaustive scans. Exceeding one is an error, never a
/// silent truncation.
struct SizeLimits {
  std::size_t moore_scan_max_n = 20;
  std::uint64_t center_scan_max_subsets = std::uint64_t{1} << 20;
};

/// Closure-operator laws plus the four Borceux-Van den Bossche conditions.
/// Family conditions are checked for the empty family and all pairs, which
/// covers every finite family by induction. Axiom ids: bvb-range,
/// bvb-1-inflationary, closure-monotone, closure-idempotent, bvb-2, bvb-3,
/// bvb-4. Witnesses: bvb-2 (a, b); bvb-3 (a, b1, b2) or (a) for the empty
/// family; bvb-4 (a1, a2, b) or (b).
ValidationReport check_bvb(const OmlTable& l, const Endomap& j);

/// Same checks, stopping at the first failure.
bool is_bvb(const OmlTable& l, const Endomap& j);

/// { x | j(x) = x } with all closure flags computed. Throws
/// PreconditionViolated unless j is B.-V.B.
Sublattice fixed_points(const OmlTable& l, const Endomap& j);

/// j_M(a) = meet { x in M | a <= x }. The closure flags of M are recomputed,
/// not trusted; throws NotCentralSubalgebra naming the first failed flag.
Endomap endo_from_subalgebra(const OmlTable& l, const Sublattice& m);

/// Every subset of the center containing the bounds and closed under meet,
/// join and ortho, ascending by membership bitset.
std::vector<Sublattice> enumerate_central_boolean_subalgebras(const OmlTable& l,
                                                              const SizeLimits& limits = {});

/// Every B.-V.B. endomorphism, found without reference to the center: each
/// meet-closed subset S containing top defines j_S(a) = meet of S above a,
/// and those passing check_bvb are kept. A closure operator is determined by
/// its fixed points, so nothing is missed. Ascending by fixed-point bitset.
std::vector<Endomap> enumerate_bvb_endos(const OmlTable& l, const SizeLimits& limits = {});

struct CorrespondenceReport {
  std::vector<Sublattice> subalgebras;
  std::vector<Endomap> endos;
  std::vector<bool> forward_roundtrips;   // fixed_points(j_M) == M
  std::vector<bool> backward_roundtrips;  // j_{fixed_points(j)} == j
  bool counts_equal = false;
  bool passed = false;
};

/// Enumerates both sides independently and checks both round trips.
CorrespondenceReport verify_correspondence(const OmlTable& l, const SizeLimits& limits = {});

}  // namespace oml
