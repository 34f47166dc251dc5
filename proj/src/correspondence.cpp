#include "oml/correspondence.hpp"

#include <algorithm>
#include <future>
#include <thread>

#include "axiom_scan.hpp"
#include "oml/errors.hpp"

namespace oml {

namespace {

ValidationReport scan_bvb(const OmlTable& l, const Endomap& j, bool stop_at_first) {
  const Element n = static_cast<Element>(l.size());
  detail::AxiomScan scan(stop_at_first);

  scan.run("bvb-range", [&]() -> detail::Witness {
    if (j.size() != n) return std::vector<Element>{};
    for (Element a = 0; a < n; ++a) {
      if (j(a) >= n) return std::vector{a};
    }
    return std::nullopt;
  });
  if (!scan.passed()) return scan.take();

  scan.run("bvb-1-inflationary", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      if (!l.leq(a, j(a))) return std::vector{a};
    }
    return std::nullopt;
  });
  scan.run("closure-monotone", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (l.leq(a, b) && !l.leq(j(a), j(b))) return std::vector{a, b};
      }
    }
    return std::nullopt;
  });
  scan.run("closure-idempotent", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      if (j(j(a)) != j(a)) return std::vector{a};
    }
    return std::nullopt;
  });
  scan.run("bvb-2", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (j(l.meet(a, j(b))) != l.meet(j(a), j(b))) return std::vector{a, b};
      }
    }
    return std::nullopt;
  });
  scan.run("bvb-3", [&]() -> detail::Witness {
    // Empty family: a ^ j(0) = 0.
    for (Element a = 0; a < n; ++a) {
      if (l.meet(a, j(l.bottom())) != l.bottom()) return std::vector{a};
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b1 = 0; b1 < n; ++b1) {
        for (Element b2 = b1 + 1; b2 < n; ++b2) {
          const Element lhs = l.meet(a, j(l.join(b1, b2)));
          const Element rhs = l.join(l.meet(a, j(b1)), l.meet(a, j(b2)));
          if (lhs != rhs) return std::vector{a, b1, b2};
        }
      }
    }
    return std::nullopt;
  });
  scan.run("bvb-4", [&]() -> detail::Witness {
    // Empty family: 0 ^ j(b) = 0.
    for (Element b = 0; b < n; ++b) {
      if (l.meet(l.bottom(), j(b)) != l.bottom()) return std::vector{b};
    }
    for (Element b = 0; b < n; ++b) {
      const Element jb = j(b);
      for (Element a1 = 0; a1 < n; ++a1) {
        for (Element a2 = a1 + 1; a2 < n; ++a2) {
          const Element lhs = l.meet(l.join(a1, a2), jb);
          const Element rhs = l.join(l.meet(a1, jb), l.meet(a2, jb));
          if (lhs != rhs) return std::vector{a1, a2, b};
        }
      }
    }
    return std::nullopt;
  });
  return scan.take();
}

Endomap closure_from(const OmlTable& l, const ElementSet& fixed) {
  Endomap j;
  j.image.resize(l.size());
  for (Element a = 0; a < l.size(); ++a) j.image[a] = bound_of(l, fixed & l.up_set(a), Bound::Meet);
  return j;
}

ElementSet center_set(const OmlTable& l) { return center(l).members; }

// Runs work(begin, end) over [0, total) in contiguous chunks on the available
// cores and concatenates the results in chunk order.
template <typename T, typename Work>
std::vector<T> chunked(std::uint64_t total, Work work) {
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(std::thread::hardware_concurrency(), 16));
  const std::uint64_t chunk = (total + workers - 1) / workers;
  if (workers == 1 || total < 4096) return work(0, total);
  std::vector<std::future<std::vector<T>>> parts;
  for (std::uint64_t begin = 0; begin < total; begin += chunk) {
    parts.push_back(std::async(std::launch::async, work, begin, std::min(total, begin + chunk)));
  }
  std::vector<T> out;
  for (auto& p : parts) {
    auto part = p.get();
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace

ValidationReport check_bvb(const OmlTable& l, const Endomap& j) { return scan_bvb(l, j, false); }

bool is_bvb(const OmlTable& l, const Endomap& j) { return scan_bvb(l, j, true).passed(); }

Sublattice fixed_points(const OmlTable& l, const Endomap& j) {
  if (!is_bvb(l, j)) throw PreconditionViolated("fixed_points: map does not satisfy the B.-V.B. conditions");
  ElementSet fixed(l.size());
  for (Element a = 0; a < l.size(); ++a) {
    if (j(a) == a) fixed.set(a);
  }
  const ElementSet z = center_set(l);
  return analyze_subset(l, fixed, &z);
}

Endomap endo_from_subalgebra(const OmlTable& l, const Sublattice& m) {
  if (m.members.size() != l.size()) {
    throw NotCentralSubalgebra("member set sized for a different lattice");
  }
  const ElementSet z = center_set(l);
  const ClosureFlags f = analyze_subset(l, m.members, &z).flags;
  const std::pair<bool, const char*> required[] = {
      {f.within_center, "within_center"},         {f.contains_bounds, "contains_bounds"},
      {f.meet_closed, "meet_closed"},             {f.join_closed, "join_closed"},
      {f.complement_closed, "complement_closed"}, {f.distributive, "distributive"},
  };
  for (const auto& [ok, name] : required) {
    if (!ok) throw NotCentralSubalgebra(std::string("not a central boolean subalgebra: ") + name + " fails");
  }
  return closure_from(l, m.members);
}

std::vector<Sublattice> enumerate_central_boolean_subalgebras(const OmlTable& l,
                                                              const SizeLimits& limits) {
  const ElementSet z = center_set(l);
  const std::vector<Element> zs = members_of(z);
  if (zs.size() >= 63 || (std::uint64_t{1} << zs.size()) > limits.center_scan_max_subsets) {
    throw SizeLimitExceeded("center has " + std::to_string(zs.size()) +
                            " elements; subset scan exceeds " +
                            std::to_string(limits.center_scan_max_subsets));
  }
  const std::size_t c = zs.size();
  std::vector<std::size_t> pos(l.size(), c);
  for (std::size_t i = 0; i < c; ++i) pos[zs[i]] = i;
  const std::uint64_t required = (std::uint64_t{1} << pos[l.bottom()]) | (std::uint64_t{1} << pos[l.top()]);
  auto in = [&](std::uint64_t mask, Element e) { return pos[e] < c && ((mask >> pos[e]) & 1u); };

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Sublattice> found;
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      if ((mask & required) != required) continue;
      bool closed = true;
      for (std::size_t i = 0; i < c && closed; ++i) {
        if (!((mask >> i) & 1u)) continue;
        closed = in(mask, l.ortho(zs[i]));
        for (std::size_t k = i + 1; k < c && closed; ++k) {
          if (!((mask >> k) & 1u)) continue;
          closed = in(mask, l.meet(zs[i], zs[k])) && in(mask, l.join(zs[i], zs[k]));
        }
      }
      if (!closed) continue;
      ElementSet members(l.size());
      for (std::size_t i = 0; i < c; ++i) {
        if ((mask >> i) & 1u) members.set(zs[i]);
      }
      found.push_back(analyze_subset(l, members, &z));
    }
    return found;
  };
  return chunked<Sublattice>(std::uint64_t{1} << c, work);
}

std::vector<Endomap> enumerate_bvb_endos(const OmlTable& l, const SizeLimits& limits) {
  const std::size_t n = l.size();
  const std::size_t max_n = std::min<std::size_t>(limits.moore_scan_max_n, 32);
  if (n > max_n) {
    throw SizeLimitExceeded("Moore-family scan needs n <= " + std::to_string(max_n) + ", lattice has " +
                            std::to_string(n));
  }
  // Every element except top is a free bit; top is always in S.
  std::vector<Element> free_elems;
  for (Element a = 0; a < n; ++a) {
    if (a != l.top()) free_elems.push_back(a);
  }
  const std::uint64_t total = std::uint64_t{1} << free_elems.size();

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Endomap> found;
    std::vector<Element> members;
    ElementSet fixed(n);
    for (std::uint64_t mask = begin; mask < end; ++mask) {
      fixed.reset();
      fixed.set(l.top());
      for (std::size_t i = 0; i < free_elems.size(); ++i) {
        if ((mask >> i) & 1u) fixed.set(free_elems[i]);
      }
      members = members_of(fixed);
      bool meet_closed = true;
      for (std::size_t i = 0; i < members.size() && meet_closed; ++i) {
        for (std::size_t k = i + 1; k < members.size() && meet_closed; ++k) {
          meet_closed = fixed.test(l.meet(members[i], members[k]));
        }
      }
      if (!meet_closed) continue;
      Endomap j = closure_from(l, fixed);
      if (is_bvb(l, j)) found.push_back(std::move(j));
    }
    return found;
  };
  // free_elems is ascending and top is a constant bit, so mask order is the
  // fixed-point bitset order.
  return chunked<Endomap>(total, work);
}

CorrespondenceReport verify_correspondence(const OmlTable& l, const SizeLimits& limits) {
  CorrespondenceReport r;
  r.subalgebras = enumerate_central_boolean_subalgebras(l, limits);
  r.endos = enumerate_bvb_endos(l, limits);

  for (const Sublattice& m : r.subalgebras) {
    bool ok = false;
    try {
      ok = fixed_points(l, endo_from_subalgebra(l, m)).members == m.members;
    } catch (const LatticeError&) {
    }
    r.forward_roundtrips.push_back(ok);
  }
  for (const Endomap& j : r.endos) {
    bool ok = false;
    try {
      ok = endo_from_subalgebra(l, fixed_points(l, j)) == j;
    } catch (const LatticeError&) {
    }
    r.backward_roundtrips.push_back(ok);
  }
  r.counts_equal = r.subalgebras.size() == r.endos.size();
  auto all_true = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  r.passed = r.counts_equal && all_true(r.forward_roundtrips) && all_true(r.backward_roundtrips);
  return r;
}

}  // namespace oml
