#include "oml/quantale.hpp"

#include <algorithm>

#include "axiom_scan.hpp"
#include "oml/correspondence.hpp"
#include "oml/errors.hpp"

namespace oml {

QuantaleTable quantale_from_endo(const OmlTable& l, const Endomap& j) {
  const std::size_t n = l.size();
  if (j.size() != n ||
      std::any_of(j.image.begin(), j.image.end(), [&](Element e) { return e >= n; })) {
    throw PreconditionViolated("endomap is not a total map on the lattice");
  }
  QuantaleTable q{n, std::vector<Element>(n * n), j};
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) q.amp[a * n + b] = l.meet(a, j(b));
  }
  return q;
}

ValidationReport check_quantale_axioms(const OmlTable& l, const QuantaleTable& q) {
  const Element n = static_cast<Element>(l.size());
  detail::AxiomScan scan;
  if (q.n != n || q.amp.size() != std::size_t{n} * n ||
      std::any_of(q.amp.begin(), q.amp.end(), [&](Element e) { return e >= n; })) {
    scan.run("table-shape", [] { return detail::Witness{std::vector<Element>{}}; });
    return scan.take();
  }

  scan.run("associativity", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        for (Element c = 0; c < n; ++c) {
          if (q(q(a, b), c) != q(a, q(b, c))) return std::vector{a, b, c};
        }
      }
    }
    return std::nullopt;
  });
  scan.run("left-distributive", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      if (q(a, l.bottom()) != l.bottom()) return std::vector{a};
    }
    for (Element a = 0; a < n; ++a) {
      for (Element b1 = 0; b1 < n; ++b1) {
        for (Element b2 = b1 + 1; b2 < n; ++b2) {
          if (q(a, l.join(b1, b2)) != l.join(q(a, b1), q(a, b2))) return std::vector{a, b1, b2};
        }
      }
    }
    return std::nullopt;
  });
  scan.run("right-distributive", [&]() -> detail::Witness {
    for (Element b = 0; b < n; ++b) {
      if (q(l.bottom(), b) != l.bottom()) return std::vector{b};
    }
    for (Element b = 0; b < n; ++b) {
      for (Element a1 = 0; a1 < n; ++a1) {
        for (Element a2 = a1 + 1; a2 < n; ++a2) {
          if (q(l.join(a1, a2), b) != l.join(q(a1, b), q(a2, b))) return std::vector{a1, a2, b};
        }
      }
    }
    return std::nullopt;
  });
  scan.run("right-sided", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      if (q(a, l.top()) != a) return std::vector{a};
    }
    return std::nullopt;
  });
  scan.run("idempotent", [&]() -> detail::Witness {
    for (Element a = 0; a < n; ++a) {
      if (q(a, a) != a) return std::vector{a};
    }
    return std::nullopt;
  });
  return scan.take();
}

ValidationReport fixed_point_locale_check(const OmlTable& l, const Endomap& j) {
  if (!is_bvb(l, j)) {
    throw PreconditionViolated("fixed_point_locale_check: map does not satisfy the B.-V.B. conditions");
  }
  std::vector<Element> fixed;
  ElementSet in(l.size());
  for (Element a = 0; a < l.size(); ++a) {
    if (j(a) == a) {
      fixed.push_back(a);
      in.set(a);
    }
  }

  detail::AxiomScan scan;
  scan.run("locale-bounds", [&]() -> detail::Witness {
    if (!in.test(l.bottom())) return std::vector{l.bottom()};
    if (!in.test(l.top())) return std::vector{l.top()};
    return std::nullopt;
  });
  scan.run("locale-meet-closed", [&]() -> detail::Witness {
    for (Element a : fixed) {
      for (Element b : fixed) {
        if (!in.test(l.meet(a, b))) return std::vector{a, b};
      }
    }
    return std::nullopt;
  });
  scan.run("locale-join-closed", [&]() -> detail::Witness {
    for (Element a : fixed) {
      for (Element b : fixed) {
        if (!in.test(l.join(a, b))) return std::vector{a, b};
      }
    }
    return std::nullopt;
  });
  scan.run("locale-distributive", [&]() -> detail::Witness {
    for (Element a : fixed) {
      for (Element b : fixed) {
        for (Element c : fixed) {
          if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return std::vector{a, b, c};
        }
      }
    }
    return std::nullopt;
  });
  return scan.take();
}

}  // namespace oml
