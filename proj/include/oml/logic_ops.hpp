#pragma once

#include "oml/endomap.hpp"
#include "oml/lattice.hpp"

namespace oml {

/// Closure properties of a subset, each verified exhaustively.
struct ClosureFlags {
  bool contains_bounds = false;
  bool meet_closed = false;
  bool join_closed = false;
  bool complement_closed = false;
  bool distributive = false;
  bool within_center = false;

  bool central_boolean_subalgebra() const {
    return contains_bounds && meet_closed && join_closed && complement_closed &&
           distributive && within_center;
  }
  friend bool operator==(const ClosureFlags&, const ClosureFlags&) = default;
};

/// A subset of a lattice together with its closure properties. The members
/// bitset is sized to the parent lattice.
struct Sublattice {
  ElementSet members;
  ClosureFlags flags;

  std::size_t size() const { return members.count(); }
  bool contains(Element e) const { return members.test(e); }
  friend bool operator==(const Sublattice&, const Sublattice&) = default;
};

/// Sasaki hook a -> b = (a ^ b) v a'.
inline Element sasaki_hook(const OmlTable& l, Element a, Element b) {
  return l.join(l.meet(a, b), l.ortho(a));
}

/// Finch product a &F b = (a v b') ^ b. Not commutative: the right operand
/// is the one projected onto.
inline Element finch_and(const OmlTable& l, Element a, Element b) {
  return l.meet(l.join(a, l.ortho(b)), b);
}

/// b C a, i.e. b &F a = a ^ b. Note the argument order: compatible(l, a, b)
/// tests whether b &F a collapses to the meet.
inline bool compatible(const OmlTable& l, Element a, Element b) {
  return finch_and(l, b, a) == l.meet(a, b);
}

/// Computes every closure flag of `members`; within_center is computed
/// against `center_members` when given.
Sublattice analyze_subset(const OmlTable& l, const ElementSet& members,
                          const ElementSet* center_members = nullptr);

/// Elements a with a &F b = b &F a = a ^ b for every b.
Sublattice center(const OmlTable& l);

/// Meet of the central elements above a.
Element central_cover(const OmlTable& l, Element a);

/// a -> central_cover(a), computed with one center scan.
Endomap central_cover_endo(const OmlTable& l);

}  // namespace oml
