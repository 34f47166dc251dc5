#include "oml/catalog.hpp"

#include <charconv>
#include <sstream>

#include "oml/errors.hpp"

namespace oml {

namespace {

std::string subset_label(unsigned mask, unsigned k) {
  if (mask == 0) return "0";
  if (mask == (1u << k) - 1) return "1";
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (unsigned i = 0; i < k; ++i) {
    if (mask & (1u << i)) {
      os << (first ? "" : ",") << (i + 1);
      first = false;
    }
  }
  os << '}';
  return os.str();
}

unsigned parse_count(const std::string& digits, const std::string& whole) {
  unsigned value = 0;
  const char* end = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(digits.data(), end, value);
  if (digits.empty() || ec != std::errc{} || ptr != end) {
    throw MalformedInput("unknown catalog lattice '" + whole + "'");
  }
  return value;
}

OmlTable catalog_factor(const std::string& factor, const std::string& whole) {
  if (factor == "G12") return g12();
  if (factor.starts_with("MO")) return mo(parse_count(factor.substr(2), whole));
  if (factor.starts_with("B")) return boolean_algebra(parse_count(factor.substr(1), whole));
  throw MalformedInput("unknown catalog lattice '" + whole + "'");
}

}  // namespace

OmlTable boolean_algebra(unsigned k) {
  if (k >= 31 || (std::size_t{1} << k) > kMaxElements) {
    throw SizeLimitExceeded("boolean_algebra(" + std::to_string(k) + ") exceeds " +
                            std::to_string(kMaxElements) + " elements");
  }
  const unsigned n = 1u << k;
  LatticeSpec spec;
  spec.name = "B" + std::to_string(k);
  spec.n = n;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (unsigned a = 0; a < n; ++a) {
    for (unsigned b = 0; b < n; ++b) leq[a][b] = (a & ~b) == 0;
    spec.ortho.push_back(~a & (n - 1));
    spec.labels.push_back(subset_label(a, k));
  }
  spec.leq = std::move(leq);
  return build_lattice(spec);
}

OmlTable mo(unsigned n) {
  if (n < 1) throw PreconditionViolated("mo(n) requires n >= 1");
  if (2 * std::size_t{n} + 2 > kMaxElements) {
    throw SizeLimitExceeded("mo(" + std::to_string(n) + ") exceeds " +
                            std::to_string(kMaxElements) + " elements");
  }
  const Element top = 2 * n + 1;
  LatticeSpec spec;
  spec.name = "MO" + std::to_string(n);
  spec.n = 2 * n + 2;
  spec.covers.emplace();
  spec.ortho.assign(spec.n, 0);
  spec.labels.assign(spec.n, "");
  spec.ortho[0] = top;
  spec.ortho[top] = 0;
  spec.labels[0] = "0";
  spec.labels[top] = "1";
  for (unsigned i = 1; i <= n; ++i) {
    const Element a = 2 * i - 1;
    const Element a_perp = 2 * i;
    for (Element atom : {a, a_perp}) {
      spec.covers->emplace_back(0, atom);
      spec.covers->emplace_back(atom, top);
    }
    spec.ortho[a] = a_perp;
    spec.ortho[a_perp] = a;
    spec.labels[a] = "a" + std::to_string(i);
    spec.labels[a_perp] = "a" + std::to_string(i) + "'";
  }
  return build_lattice(spec);
}

OmlTable product(const OmlTable& a, const OmlTable& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  if (na * nb > kMaxElements) {
    throw SizeLimitExceeded("product of " + std::to_string(na) + " x " + std::to_string(nb) +
                            " elements exceeds " + std::to_string(kMaxElements));
  }
  const std::size_t n = na * nb;
  LatticeSpec spec;
  spec.name = a.name() + "x" + b.name();
  spec.n = n;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (Element x = 0; x < n; ++x) {
    const Element xa = x / nb, xb = x % nb;
    for (Element y = 0; y < n; ++y) {
      leq[x][y] = a.leq(xa, y / nb) && b.leq(xb, y % nb);
    }
    spec.ortho.push_back(static_cast<Element>(a.ortho(xa) * nb + b.ortho(xb)));
    spec.labels.push_back("(" + a.label(xa) + "," + b.label(xb) + ")");
  }
  spec.leq = std::move(leq);
  return build_lattice(spec);
}

OmlTable g12() {
  LatticeSpec spec = to_spec(product(mo(2), boolean_algebra(1)));
  spec.name = "G12[MO2xB1]";
  return build_lattice(spec);
}

OmlTable catalog_lattice(const std::string& name) {
  std::vector<std::string> factors;
  std::size_t start = 0;
  for (std::size_t pos; (pos = name.find('x', start)) != std::string::npos; start = pos + 1) {
    factors.push_back(name.substr(start, pos - start));
  }
  factors.push_back(name.substr(start));
  OmlTable result = catalog_factor(factors.front(), name);
  for (std::size_t i = 1; i < factors.size(); ++i) {
    result = product(result, catalog_factor(factors[i], name));
  }
  return result;
}

}  // namespace oml
