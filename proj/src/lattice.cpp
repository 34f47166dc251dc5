#include "oml/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "oml/errors.hpp"

namespace oml {

namespace {

std::string witness_text(const std::vector<Element>& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? ", " : "") << w[i];
  os << ')';
  return os.str();
}

void check_index(std::size_t n, Element e, const char* field) {
  if (e >= n) {
    throw IndexOutOfRange(std::string(field) + ": index " + std::to_string(e) +
                              " outside [0, " + std::to_string(n) + ")",
                          {e});
  }
}

std::vector<ElementSet> up_sets_from_leq(const LatticeSpec& spec) {
  const std::size_t n = spec.n;
  const auto& leq = *spec.leq;
  if (leq.size() != n) throw MalformedInput("leq: expected " + std::to_string(n) + " rows");
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) {
      throw MalformedInput("leq: row " + std::to_string(a) + " has wrong length");
    }
    for (std::size_t b = 0; b < n; ++b) up[a][b] = leq[a][b];
  }
  for (Element a = 0; a < n; ++a) {
    if (!up[a].test(a)) throw NotAPoset("leq is not reflexive at " + std::to_string(a), {a});
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!up[a].test(b)) continue;
      if (a != b && up[b].test(a)) {
        throw NotAPoset("leq is not antisymmetric at " + witness_text({a, b}), {a, b});
      }
      if (!up[b].is_subset_of(up[a])) {
        const auto diff = up[b] - up[a];
        const auto c = static_cast<Element>(diff.find_first());
        throw NotAPoset("leq is not transitive at " + witness_text({a, b, c}), {a, b, c});
      }
    }
  }
  return up;
}

std::vector<ElementSet> up_sets_from_covers(const LatticeSpec& spec) {
  const std::size_t n = spec.n;
  std::vector<ElementSet> up(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) up[a].set(a);
  for (const auto& [lo, hi] : *spec.covers) {
    check_index(n, lo, "covers");
    check_index(n, hi, "covers");
    if (lo == hi) throw NotAPoset("cover from an element to itself", {lo});
    up[lo].set(hi);
  }
  // Warshall closure, one bit row at a time.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (up[i].test(k)) up[i] |= up[k];
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (up[a].test(b) && up[b].test(a)) {
        throw NotAPoset("covers contain a cycle through " + witness_text({a, b}), {a, b});
      }
    }
  }
  return up;
}

// Greatest element of `bounds`, a down-closed set, w.r.t. the order whose
// principal ideals have sizes `ideal_count`; npos if there is none. Every
// member's ideal lies inside `bounds`, so only a member whose ideal has the
// full size can be greatest.
std::size_t greatest_in(const ElementSet& bounds, const std::vector<std::size_t>& ideal_count) {
  std::size_t best = ElementSet::npos;
  for_each_member(bounds, [&](Element g) {
    if (best == ElementSet::npos || ideal_count[g] > ideal_count[best]) best = g;
  });
  if (best == ElementSet::npos || ideal_count[best] != bounds.count()) return ElementSet::npos;
  return best;
}

}  // namespace

bool ValidationReport::has(const std::string& axiom_id) const { return find(axiom_id) != nullptr; }

const Violation* ValidationReport::find(const std::string& axiom_id) const {
  auto it = std::find_if(violations.begin(), violations.end(),
                         [&](const Violation& v) { return v.axiom_id == axiom_id; });
  return it == violations.end() ? nullptr : &*it;
}

LatticeTables derive_tables(const LatticeSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw MalformedInput("n must be positive");
  if (n > kMaxElements) {
    throw SizeLimitExceeded("lattice has " + std::to_string(n) + " elements; limit is " +
                            std::to_string(kMaxElements));
  }
  if (spec.leq.has_value() == spec.covers.has_value()) {
    throw MalformedInput("exactly one of leq / covers must be given");
  }
  if (spec.ortho.size() != n) throw MalformedInput("ortho: expected " + std::to_string(n) + " entries");
  for (Element e : spec.ortho) check_index(n, e, "ortho");
  if (!spec.labels.empty() && spec.labels.size() != n) {
    throw MalformedInput("labels: expected " + std::to_string(n) + " entries");
  }

  LatticeTables t;
  t.name = spec.name;
  t.n = n;
  t.up = spec.leq ? up_sets_from_leq(spec) : up_sets_from_covers(spec);
  t.down.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for_each_member(t.up[a], [&](Element b) { t.down[b].set(a); });
  }

  std::vector<std::size_t> down_count(n), up_count(n);
  for (std::size_t a = 0; a < n; ++a) {
    down_count[a] = t.down[a].count();
    up_count[a] = t.up[a].count();
  }

  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const auto glb = greatest_in(t.down[a] & t.down[b], down_count);
      if (glb == ElementSet::npos) {
        throw NotALattice("no greatest lower bound for " + witness_text({a, b}), {a, b});
      }
      // Least upper bound = greatest element in the dual order.
      const auto lub = greatest_in(t.up[a] & t.up[b], up_count);
      if (lub == ElementSet::npos) {
        throw NotALattice("no least upper bound for " + witness_text({a, b}), {a, b});
      }
      t.meet[a * n + b] = t.meet[b * n + a] = static_cast<Element>(glb);
      t.join[a * n + b] = t.join[b * n + a] = static_cast<Element>(lub);
    }
  }

  for (Element a = 0; a < n; ++a) {
    if (up_count[a] == n) t.bottom = a;
    if (down_count[a] == n) t.top = a;
  }
  t.ortho = spec.ortho;
  t.labels = spec.labels;
  if (t.labels.empty()) {
    for (std::size_t a = 0; a < n; ++a) t.labels.push_back(std::to_string(a));
  }
  return t;
}

ValidationReport validate_oml(const LatticeTables& t) {
  ValidationReport report;
  const std::size_t n = t.n;
  auto flag = [&](const char* id, std::vector<Element> w) {
    if (!report.has(id)) report.violations.push_back({id, std::move(w)});
  };

  const bool shape_ok = n > 0 && t.up.size() == n && t.down.size() == n &&
                        t.meet.size() == n * n && t.join.size() == n * n &&
                        t.ortho.size() == n && t.bottom < n && t.top < n &&
                        std::all_of(t.up.begin(), t.up.end(), [&](const auto& r) { return r.size() == n; }) &&
                        std::all_of(t.down.begin(), t.down.end(), [&](const auto& r) { return r.size() == n; });
  if (!shape_ok) {
    flag("table-shape", {});
    return report;
  }
  for (Element i = 0; i < n * n; ++i) {
    if (t.meet[i] >= n || t.join[i] >= n) {
      flag("table-range", {static_cast<Element>(i / n), static_cast<Element>(i % n)});
      return report;
    }
  }

  // Partial order.
  for (Element a = 0; a < n; ++a) {
    if (!t.leq(a, a)) flag("leq-reflexive", {a});
    for (Element b = 0; b < n; ++b) {
      if (t.up[a].test(b) != t.down[b].test(a)) flag("leq-transpose", {a, b});
      if (!t.leq(a, b)) continue;
      if (a != b && t.leq(b, a)) flag("leq-antisymmetric", {a, b});
      if (!t.up[b].is_subset_of(t.up[a])) {
        flag("leq-transitive", {a, b, static_cast<Element>((t.up[b] - t.up[a]).find_first())});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!t.leq(t.bottom, x) || !t.leq(x, t.top)) flag("bounds", {x});
  }

  // Lattice tables against the order.
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      const Element m = t.meet_of(a, b);
      const auto lower = t.down[a] & t.down[b];
      if (!lower.test(m) || !lower.is_subset_of(t.down[m])) flag("meet-glb", {a, b});
      const Element j = t.join_of(a, b);
      const auto upper = t.up[a] & t.up[b];
      if (!upper.test(j) || !upper.is_subset_of(t.up[j])) flag("join-lub", {a, b});
    }
  }

  // Orthocomplement.
  for (Element a = 0; a < n; ++a) {
    if (t.ortho[a] >= n) {
      flag("ortho-range", {a});
      return report;
    }
  }
  for (Element a = 0; a < n; ++a) {
    const Element oa = t.ortho[a];
    if (t.ortho[oa] != a) flag("ortho-involution", {a});
    if (t.join_of(a, oa) != t.top) flag("complement-join", {a});
    if (t.meet_of(a, oa) != t.bottom) flag("complement-meet", {a});
    for (Element b = 0; b < n; ++b) {
      const Element ob = t.ortho[b];
      if (t.leq(a, b) && !t.leq(ob, oa)) flag("ortho-antitone", {a, b});
      if (t.ortho[t.join_of(a, b)] != t.meet_of(oa, ob)) flag("de-morgan", {a, b});
    }
  }

  // Weak modularity: a <= b implies b = a v (a' ^ b).
  for (Element a = 0; a < n; ++a) {
    for_each_member(t.up[a], [&](Element b) {
      if (t.join_of(a, t.meet_of(t.ortho[a], b)) != b) flag("orthomodular", {a, b});
    });
  }
  return report;
}

OmlTable build_lattice(const LatticeSpec& spec) {
  LatticeTables tables = derive_tables(spec);
  const auto report = validate_oml(tables);
  if (!report.passed()) {
    const Violation& v = report.violations.front();
    const std::string msg = v.axiom_id + " violated at " + witness_text(v.witnesses);
    if (v.axiom_id == "orthomodular") throw NotOrthomodular(msg, v.witnesses);
    if (v.axiom_id.starts_with("ortho") || v.axiom_id.starts_with("complement") ||
        v.axiom_id == "de-morgan") {
      throw NotOrtholattice(msg, v.witnesses);
    }
    throw NotALattice(msg, v.witnesses);
  }
  return OmlTable(std::move(tables));
}

Element bound_of(const OmlTable& table, const ElementSet& elems, Bound direction) {
  Element acc = direction == Bound::Meet ? table.top() : table.bottom();
  for_each_member(elems, [&](Element e) {
    acc = direction == Bound::Meet ? table.meet(acc, e) : table.join(acc, e);
  });
  return acc;
}

LatticeSpec to_spec(const OmlTable& table) {
  LatticeSpec spec;
  spec.name = table.name();
  spec.n = table.size();
  std::vector<std::vector<bool>> leq(spec.n, std::vector<bool>(spec.n));
  for (Element a = 0; a < spec.n; ++a) {
    for (Element b = 0; b < spec.n; ++b) leq[a][b] = table.leq(a, b);
  }
  spec.leq = std::move(leq);
  for (Element a = 0; a < spec.n; ++a) spec.ortho.push_back(table.ortho(a));
  spec.labels = table.labels();
  return spec;
}

}  // namespace oml
