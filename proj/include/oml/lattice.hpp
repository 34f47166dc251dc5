#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oml/element_set.hpp"

namespace oml {

/// Largest lattice the table representation accepts. Meet and join are
/// stored as dense n x n tables, so this bounds memory at a few MiB.
inline constexpr std::size_t kMaxElements = 1024;

/// Input description of a finite orthocomplemented poset. Exactly one of
/// `leq` / `covers` is set.
struct LatticeSpec {
  std::string name;
  std::size_t n = 0;
  std::optional<std::vector<std::vector<bool>>> leq;
  std::optional<std::vector<std::pair<Element, Element>>> covers;
  std::vector<Element> ortho;
  std::vector<std::string> labels;
};

/// Raw, unvalidated lattice tables. Produced by derive_tables and checked by
/// validate_oml; hand-built instances are allowed so that defects can be
/// reported rather than thrown.
struct LatticeTables {
  std::string name;
  std::size_t n = 0;
  std::vector<ElementSet> up;    // up[a]   = { x | a <= x }
  std::vector<ElementSet> down;  // down[a] = { x | x <= a }
  std::vector<Element> meet;     // row-major n x n
  std::vector<Element> join;     // row-major n x n
  std::vector<Element> ortho;
  Element bottom = 0;
  Element top = 0;
  std::vector<std::string> labels;

  bool leq(Element a, Element b) const { return up[a].test(b); }
  Element meet_of(Element a, Element b) const { return meet[a * n + b]; }
  Element join_of(Element a, Element b) const { return join[a * n + b]; }

  friend bool operator==(const LatticeTables&, const LatticeTables&) = default;
};

/// A validated finite orthomodular lattice. Immutable; only obtainable from
/// build_lattice (or the catalog constructors, which go through it).
class OmlTable {
 public:
  std::size_t size() const noexcept { return t_.n; }
  const std::string& name() const noexcept { return t_.name; }

  bool leq(Element a, Element b) const { return t_.up[a].test(b); }
  Element meet(Element a, Element b) const { return t_.meet[a * t_.n + b]; }
  Element join(Element a, Element b) const { return t_.join[a * t_.n + b]; }
  Element ortho(Element a) const { return t_.ortho[a]; }
  Element bottom() const noexcept { return t_.bottom; }
  Element top() const noexcept { return t_.top; }

  const ElementSet& up_set(Element a) const { return t_.up[a]; }
  const ElementSet& down_set(Element a) const { return t_.down[a]; }

  const std::string& label(Element a) const { return t_.labels[a]; }
  const std::vector<std::string>& labels() const noexcept { return t_.labels; }

  const LatticeTables& tables() const noexcept { return t_; }

  ElementSet empty_set() const { return ElementSet(t_.n); }
  ElementSet full_set() const { return ElementSet(t_.n).set(); }

  friend bool operator==(const OmlTable&, const OmlTable&) = default;

 private:
  explicit OmlTable(LatticeTables t) : t_(std::move(t)) {}
  friend OmlTable build_lattice(const LatticeSpec& spec);

  LatticeTables t_;
};

struct Violation {
  std::string axiom_id;
  std::vector<Element> witnesses;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// One entry per violated axiom, each with the first witness found in
/// lexicographic index order.
struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool has(const std::string& axiom_id) const;
  const Violation* find(const std::string& axiom_id) const;
};

/// Computes order closure, bounds, and the meet/join tables. Throws
/// NotAPoset / NotALattice / IndexOutOfRange / SizeLimitExceeded /
/// MalformedInput; ortholattice axioms are not checked here.
LatticeTables derive_tables(const LatticeSpec& spec);

/// Derives tables and checks every orthomodular lattice axiom, throwing the
/// matching error (NotOrtholattice, NotOrthomodular) with a witness.
OmlTable build_lattice(const LatticeSpec& spec);

/// Checks poset, lattice, ortholattice and orthomodular axioms on raw tables.
ValidationReport validate_oml(const LatticeTables& tables);
inline ValidationReport validate_oml(const OmlTable& table) {
  return validate_oml(table.tables());
}

enum class Bound { Meet, Join };

/// Meet or join of a finite set; the empty meet is top, the empty join bottom.
Element bound_of(const OmlTable& table, const ElementSet& elems, Bound direction);

/// Recovers a cover-free spec (full `leq` matrix) from a table.
LatticeSpec to_spec(const OmlTable& table);

}  // namespace oml
