#include <doctest.h>

#include "fixtures.hpp"
#include "oml/catalog.hpp"
#include "oml/errors.hpp"
#include "oml/lattice.hpp"
#include "oracles.hpp"

using namespace oml;

TEST_CASE("two-element chain") {
  const OmlTable l = build_lattice(test::chain2_spec());
  CHECK(l.size() == 2);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 1);
  CHECK(l.meet(0, 1) == 0);
  CHECK(l.join(0, 1) == 1);
  CHECK(validate_oml(l).passed());
}

TEST_CASE("bounds are discovered, indices are kept") {
  LatticeSpec s = test::chain2_spec();
  s.covers = std::vector<std::pair<Element, Element>>{{1, 0}};
  const OmlTable l = build_lattice(s);
  CHECK(l.bottom() == 1);
  CHECK(l.top() == 0);
  CHECK(l.label(0) == "0");  // default labels are the indices
}

TEST_CASE("single-element lattice is accepted") {
  LatticeSpec s;
  s.n = 1;
  s.leq = std::vector<std::vector<bool>>{{true}};
  s.ortho = {0};
  const OmlTable l = build_lattice(s);
  CHECK(l.bottom() == l.top());
  CHECK(validate_oml(l).passed());
  CHECK(bound_of(l, l.empty_set(), Bound::Join) == 0);
  CHECK(bound_of(l, l.empty_set(), Bound::Meet) == 0);
}

TEST_CASE("MO2 from hand-written covers") {
  const OmlTable l = build_lattice(test::mo2_spec());
  CHECK(l.size() == 6);
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 5);
  CHECK(l.join(1, 3) == 5);
  CHECK(l.meet(1, 3) == 0);
}

TEST_CASE("hexagon is rejected as not orthomodular") {
  try {
    build_lattice(test::o6_spec());
    FAIL("expected NotOrthomodular");
  } catch (const NotOrthomodular& e) {
    CHECK(e.witnesses() == std::vector<Element>{1, 2});
  }

  const auto report = validate_oml(derive_tables(test::o6_spec()));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].axiom_id == "orthomodular");
  CHECK(report.violations[0].witnesses == std::vector<Element>{1, 2});
}

TEST_CASE("weak modularity witness in the hexagon, checked by hand") {
  // a <= b but a v (a' ^ b) = a v 0 = a.
  const LatticeTables t = derive_tables(test::o6_spec());
  CHECK(t.leq(1, 2));
  CHECK(t.meet_of(t.ortho[1], 2) == 0);
  CHECK(t.join_of(1, t.meet_of(t.ortho[1], 2)) == 1);
}

TEST_CASE("poset errors") {
  SUBCASE("cycle in covers") {
    LatticeSpec s = test::chain2_spec();
    s.covers = std::vector<std::pair<Element, Element>>{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(build_lattice(s), NotAPoset);
  }
  SUBCASE("leq not reflexive") {
    LatticeSpec s = test::chain2_spec();
    s.covers.reset();
    s.leq = std::vector<std::vector<bool>>{{false, true}, {false, true}};
    CHECK_THROWS_AS(build_lattice(s), NotAPoset);
  }
  SUBCASE("leq not antisymmetric") {
    LatticeSpec s = test::chain2_spec();
    s.covers.reset();
    s.leq = std::vector<std::vector<bool>>{{true, true}, {true, true}};
    CHECK_THROWS_AS(build_lattice(s), NotAPoset);
  }
  SUBCASE("leq not transitive") {
    LatticeSpec s;
    s.n = 3;
    s.leq = std::vector<std::vector<bool>>{{true, true, false}, {false, true, true}, {false, false, true}};
    s.ortho = {2, 1, 0};
    try {
      build_lattice(s);
      FAIL("expected NotAPoset");
    } catch (const NotAPoset& e) {
      CHECK(e.witnesses() == std::vector<Element>{0, 1, 2});
    }
  }
}

TEST_CASE("bowtie is not a lattice") {
  LatticeSpec s;
  s.n = 4;
  s.covers = std::vector<std::pair<Element, Element>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}};
  s.ortho = {3, 2, 1, 0};
  try {
    build_lattice(s);
    FAIL("expected NotALattice");
  } catch (const NotALattice& e) {
    CHECK(e.witnesses() == std::vector<Element>{0, 1});
  }
}

TEST_CASE("ortholattice defects") {
  SUBCASE("identity ortho on a chain breaks the complement law") {
    LatticeSpec s = test::chain2_spec();
    s.ortho = {0, 1};
    CHECK_THROWS_AS(build_lattice(s), NotOrtholattice);
  }
  SUBCASE("non-involutive ortho is reported") {
    LatticeSpec s = to_spec(boolean_algebra(2));
    s.ortho = {3, 2, 2, 0};
    CHECK_THROWS_AS(build_lattice(s), NotOrtholattice);
    const auto report = validate_oml(derive_tables(s));
    REQUIRE(report.has("ortho-involution"));
    CHECK(report.find("ortho-involution")->witnesses == std::vector<Element>{1});
    CHECK_FALSE(report.passed());
  }
}

TEST_CASE("malformed specs") {
  LatticeSpec s = test::chain2_spec();
  SUBCASE("both leq and covers") {
    s.leq = std::vector<std::vector<bool>>{{true, true}, {false, true}};
    CHECK_THROWS_AS(derive_tables(s), MalformedInput);
  }
  SUBCASE("neither") {
    s.covers.reset();
    CHECK_THROWS_AS(derive_tables(s), MalformedInput);
  }
  SUBCASE("ortho length") {
    s.ortho = {1};
    CHECK_THROWS_AS(derive_tables(s), MalformedInput);
  }
  SUBCASE("ortho index") {
    s.ortho = {1, 7};
    CHECK_THROWS_AS(derive_tables(s), IndexOutOfRange);
  }
  SUBCASE("cover index") {
    s.covers = std::vector<std::pair<Element, Element>>{{0, 2}};
    CHECK_THROWS_AS(derive_tables(s), IndexOutOfRange);
  }
  SUBCASE("n = 0") {
    s.n = 0;
    CHECK_THROWS_AS(derive_tables(s), MalformedInput);
  }
  SUBCASE("too large") {
    s.n = kMaxElements + 1;
    CHECK_THROWS_AS(derive_tables(s), SizeLimitExceeded);
  }
}

TEST_CASE("corrupted tables are reported, not thrown") {
  LatticeTables t = boolean_algebra(2).tables();
  t.meet[1 * 4 + 2] = 3;
  const auto report = validate_oml(t);
  CHECK(report.has("meet-glb"));
  CHECK(report.find("meet-glb")->witnesses == std::vector<Element>{1, 2});

  LatticeTables shape = boolean_algebra(2).tables();
  shape.ortho.pop_back();
  CHECK(validate_oml(shape).has("table-shape"));
}

TEST_CASE("bound_of") {
  const OmlTable l = build_lattice(test::mo2_spec());
  CHECK(bound_of(l, l.empty_set(), Bound::Join) == l.bottom());
  CHECK(bound_of(l, l.empty_set(), Bound::Meet) == l.top());
  CHECK(bound_of(l, make_set(6, {1, 2}), Bound::Join) == 5);
  CHECK(bound_of(l, make_set(6, {1, 3}), Bound::Meet) == 0);
  CHECK(bound_of(l, make_set(6, {1}), Bound::Meet) == 1);
  CHECK(bound_of(l, l.full_set(), Bound::Meet) == 0);
}

TEST_CASE("meet and join tables agree with the order on every catalog lattice") {
  for (const auto& l : test::catalog_lattices()) {
    CAPTURE(l.name());
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        REQUIRE(oracle::glb_from_order(l, a, b) == l.meet(a, b));
        REQUIRE(oracle::lub_from_order(l, a, b) == l.join(a, b));
        REQUIRE(l.ortho(l.join(a, b)) == l.meet(l.ortho(a), l.ortho(b)));
      }
    }
  }
}

TEST_CASE("build_lattice is deterministic and round-trips through to_spec") {
  const OmlTable a = build_lattice(test::mo2_spec());
  const OmlTable b = build_lattice(test::mo2_spec());
  CHECK(a == b);
  CHECK(build_lattice(to_spec(a)) == a);
}
