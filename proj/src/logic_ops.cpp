#include "oml/logic_ops.hpp"

namespace oml {

namespace {

ElementSet center_members(const OmlTable& l) {
  const std::size_t n = l.size();
  ElementSet z(n);
  for (Element a = 0; a < n; ++a) {
    bool central = true;
    for (Element b = 0; b < n && central; ++b) {
      const Element m = l.meet(a, b);
      central = finch_and(l, a, b) == m && finch_and(l, b, a) == m;
    }
    if (central) z.set(a);
  }
  return z;
}

}  // namespace

Sublattice analyze_subset(const OmlTable& l, const ElementSet& members,
                          const ElementSet* center) {
  Sublattice s{members, {}};
  ClosureFlags& f = s.flags;
  f.contains_bounds = members.test(l.bottom()) && members.test(l.top());
  f.meet_closed = f.join_closed = f.complement_closed = f.distributive = true;
  const auto elems = members_of(members);
  for (Element a : elems) {
    if (!members.test(l.ortho(a))) f.complement_closed = false;
    for (Element b : elems) {
      if (!members.test(l.meet(a, b))) f.meet_closed = false;
      if (!members.test(l.join(a, b))) f.join_closed = false;
      if (!f.distributive) continue;
      for (Element c : elems) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          f.distributive = false;
          break;
        }
      }
    }
  }
  f.within_center = members.is_subset_of(center ? *center : center_members(l));
  return s;
}

Sublattice center(const OmlTable& l) {
  const ElementSet z = center_members(l);
  return analyze_subset(l, z, &z);
}

Element central_cover(const OmlTable& l, Element a) {
  return bound_of(l, center_members(l) & l.up_set(a), Bound::Meet);
}

Endomap central_cover_endo(const OmlTable& l) {
  const ElementSet z = center_members(l);
  Endomap e;
  e.image.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) e.image[a] = bound_of(l, z & l.up_set(a), Bound::Meet);
  return e;
}

}  // namespace oml
