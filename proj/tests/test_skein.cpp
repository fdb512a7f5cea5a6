#include <doctest.h>

#include "oracles.hpp"
#include "stuckknot/catalog.hpp"
#include "stuckknot/error.hpp"
#include "stuckknot/skein.hpp"

using namespace stuckknot;

TEST_SUITE("skein") {
  TEST_CASE("normalization") {
    CHECK(rigid_homflypt(StuckDiagram::unknot()).to_string() == "1");
    CHECK(rigid_homflypt(StuckDiagram::unlink(2)) == unlink_factor());
    CHECK(rigid_homflypt(StuckDiagram::unlink(3)) == unlink_factor() * unlink_factor());
    CHECK(rigid_homflypt(parse("X[1,2,2,1]")).to_string() == "1");
    CHECK(rigid_homflypt(parse("X[1,1,2,2]")).to_string() == "1");
    CHECK_THROWS_AS(rigid_homflypt(StuckDiagram()), Error);
  }

  TEST_CASE("rigid curls") {
    CHECK(rigid_homflypt(parse("S[1,2,2,1]")).to_string() == "t*a*z^-1 - t*a^-1*z^-1 + r");
    CHECK(rigid_homflypt(parse("S[1,1,2,2]")).to_string() == "t*a*z^-1 - t*a^-1*z^-1 + r^-1");
  }

  TEST_CASE("eliminate stuck crossing") {
    const auto terms = eliminate_stuck(parse("S[1,2,2,1]"), 0);
    REQUIRE(terms.size() == 2);
    CHECK(terms[0].coeff.to_string() == "t");
    CHECK(serialize(terms[0].child) == "O O");
    CHECK(terms[1].coeff.to_string() == "r");
    CHECK(serialize(terms[1].child) == "X[1,2,2,1]");
    const auto neg = eliminate_stuck(parse("S[1,1,2,2]"), 0);
    CHECK(neg[1].coeff.to_string() == "r^-1");
    CHECK_THROWS_AS(eliminate_stuck(parse("X[1,2,2,1]"), 0), Error);

    const auto st = catalog_diagram("stuck-trefoil");
    int c = 0;
    while (!st.crossing(c).is_stuck())
      ++c;
    const auto tt = eliminate_stuck(st, c);
    CHECK(component_count(tt[0].child) == 2);
    CHECK(canonical_code(tt[1].child) == canonical_code(catalog_diagram("trefoil")));
  }

  TEST_CASE("descending resolution") {
    const auto unl = descending_resolution(StuckDiagram::unlink(3));
    CHECK(unl.descending);
    CHECK(unl.unlink_value == unlink_factor() * unlink_factor());
    const auto tr = descending_resolution(catalog_diagram("trefoil"));
    CHECK_FALSE(tr.descending);
    CHECK(tr.children.size() == 2);
    CHECK_THROWS_AS(descending_resolution(parse("S[1,2,2,1]")), Error);
  }

  TEST_CASE("classical values") {
    CHECK(rigid_homflypt(catalog_diagram("trefoil")).to_string() == "a^-2*z^2 + 2*a^-2 - a^-4");
    CHECK(rigid_homflypt(catalog_diagram("hopf")).to_string() == "a^-1*z + a^-1*z^-1 - a^-3*z^-1");
    // Amphichiral: symmetric under a -> a^-1.
    const auto f8 = rigid_homflypt(catalog_diagram("figure-eight"));
    CHECK(f8 == substitute(f8, Var::a, LaurentPoly::variable(Var::a, -1)));
  }

  TEST_CASE("memoized engine agrees with the naive skein tree") {
    for (const auto &e : catalog()) {
      const auto d = parse(e.text);
      if (d.crossing_count() > 8)
        continue;
      CHECK_MESSAGE(rigid_homflypt(d) == oracle::naive_homflypt(d), e.name);
    }
  }

  TEST_CASE("rigid relation at every stuck crossing") {
    for (const auto &e : catalog()) {
      const auto d = parse(e.text);
      for (int c = 0; c < d.crossing_count(); ++c) {
        if (!d.crossing(c).is_stuck())
          continue;
        const auto r = LaurentPoly::variable(Var::r, d.crossing(c).sign());
        CHECK_MESSAGE(rigid_homflypt(d) == LaurentPoly::variable(Var::t) * rigid_homflypt(smooth_oriented(d, c)) +
                                               r * rigid_homflypt(unstick(d, c)),
                      e.name);
      }
    }
  }

  TEST_CASE("split unknot multiplies by the unlink factor") {
    for (const auto &e : catalog()) {
      const auto d = parse(e.text);
      CHECK(rigid_homflypt(disjoint_union(d, StuckDiagram::unknot())) == unlink_factor() * rigid_homflypt(d));
    }
  }

  TEST_CASE("budget") {
    try {
      rigid_homflypt(catalog_diagram("torus-3-4"), 5);
      FAIL("no budget error");
    } catch (const Error &e) {
      CHECK(e.kind() == ErrorKind::BudgetExceeded);
    }
    SkeinEngine engine;
    engine.evaluate(catalog_diagram("trefoil"));
    CHECK(engine.nodes_used() > 0);
    CHECK(engine.memo_size() > 0);
  }
}
