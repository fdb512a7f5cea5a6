#include <doctest.h>

#include <algorithm>
#include <random>

#include "stuckknot/catalog.hpp"
#include "stuckknot/diagram.hpp"
#include "stuckknot/error.hpp"

using namespace stuckknot;

namespace {

ErrorKind parse_error(const std::string &text) {
  try {
    parse(text);
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("parsed: " << text);
  return ErrorKind::SyntaxError;
}

// Same diagram with arc ids permuted and crossings shuffled.
StuckDiagram relabel(const StuckDiagram &d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(d.arc_count()));
  for (std::size_t i = 0; i < perm.size(); ++i)
    perm[i] = static_cast<int>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  auto xs = d.crossings();
  for (auto &x : xs)
    for (int &a : x.arcs)
      a = perm[static_cast<std::size_t>(a)];
  std::shuffle(xs.begin(), xs.end(), rng);
  return StuckDiagram::build(xs, d.free_loops());
}

} // namespace

TEST_SUITE("diagram") {
  TEST_CASE("parse tokens and comments") {
    const auto d = parse("# rigid curl\nS[1,2,2,1]\n");
    CHECK(d.crossing_count() == 1);
    CHECK(d.stuck_count() == 1);
    CHECK(parse("O, O").free_loops() == 2);
    CHECK(parse("X[1,2,2,1] O").free_loops() == 1);
  }

  TEST_CASE("parse errors") {
    CHECK(parse_error("X[1,2,2]") == ErrorKind::SyntaxError);
    CHECK(parse_error("Y[1,2,2,1]") == ErrorKind::SyntaxError);
    CHECK(parse_error("X[0,1,1,0]") == ErrorKind::SyntaxError);
    CHECK(parse_error("X[1,2,2,3]") == ErrorKind::ArcMultiplicityError);
    CHECK(parse_error("X[1,1,1,2]") == ErrorKind::ArcMultiplicityError);
    CHECK(parse("# nothing\n").empty());
  }

  TEST_CASE("inconsistent orientation is rejected") {
    CHECK(parse_error("X[1,1,2,3] X[3,2,4,4]") == ErrorKind::OrientationError);
  }

  TEST_CASE("non-planar wiring is rejected") {
    // A single crossing whose strands swap ends: one face instead of three.
    CHECK(parse_error("X[1,2,1,2]") == ErrorKind::NonPlanarError);
  }

  TEST_CASE("writhe and signs") {
    CHECK(writhe(parse("X[1,2,2,1]")) == 1);
    CHECK(writhe(parse("X[1,1,2,2]")) == -1);
    CHECK(writhe(parse("S[1,2,2,1]")) == 0);
    CHECK(writhe(catalog_diagram("trefoil")) == 3);
    CHECK(writhe(catalog_diagram("trefoil-left")) == -3);
    CHECK(writhe(catalog_diagram("figure-eight")) == 0);
  }

  TEST_CASE("component counts") {
    CHECK(component_count(StuckDiagram::unknot()) == 1);
    CHECK(component_count(StuckDiagram::unlink(2)) == 2);
    CHECK(component_count(catalog_diagram("hopf")) == 2);
    CHECK(component_count(catalog_diagram("borromean")) == 3);
    CHECK(component_count(catalog_diagram("trefoil")) == 1);
  }

  TEST_CASE("round trip through the canonical text") {
    for (const auto &e : catalog()) {
      const auto d = parse(e.text);
      const auto back = parse(serialize(d));
      CHECK(serialize(back) == serialize(d));
      CHECK(back == canonical_form(d).diagram);
    }
  }

  TEST_CASE("canonical code ignores labels") {
    for (const auto &e : catalog()) {
      const auto d = parse(e.text);
      for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK_MESSAGE(canonical_code(relabel(d, seed)) == canonical_code(d), e.name);
    }
    CHECK(canonical_code(parse("O")) == "O");
    CHECK(canonical_code(parse("S[1,2,2,1]")) != canonical_code(parse("X[1,2,2,1]")));
  }

  TEST_CASE("forget rigidity and inclusion") {
    CHECK(serialize(forget_rigidity(parse("S[1,2,2,1]"))) == "X[1,2,2,1]");
    const auto st = catalog_diagram("stuck-trefoil");
    CHECK(forget_rigidity(st).stuck_count() == 0);
    CHECK(canonical_code(forget_rigidity(st)) == canonical_code(catalog_diagram("trefoil")));
    const auto tr = catalog_diagram("trefoil");
    CHECK(forget_rigidity(include_classical(tr)) == tr);
    CHECK_THROWS_AS(include_classical(st), Error);
  }

  TEST_CASE("unstick") {
    const auto d = catalog_diagram("stuck-trefoil-2");
    for (int c = 0; c < d.crossing_count(); ++c) {
      if (!d.crossing(c).is_stuck()) {
        CHECK_THROWS_AS(unstick(d, c), Error);
        continue;
      }
      const auto u = unstick(d, c);
      CHECK(u.stuck_count() == 1);
      CHECK(writhe(u) == writhe(d) + crossing_sign(d, c));
      CHECK(forget_rigidity(u) == forget_rigidity(d));
      CHECK(stuck_to_classical_crossing(d, c) == u);
    }
  }

  TEST_CASE("oriented smoothing") {
    CHECK(serialize(smooth_oriented(parse("X[1,2,2,1]"), 0)) == "O O");
    CHECK(serialize(smooth_oriented(parse("S[1,2,2,1]"), 0)) == "O O");
    const auto hopf = catalog_diagram("hopf");
    for (int c = 0; c < 2; ++c) {
      const auto s = smooth_oriented(hopf, c);
      CHECK(component_count(s) == 1);
      CHECK(s.crossing_count() == 1);
    }
  }

  TEST_CASE("switching") {
    const auto curl = parse("X[1,2,2,1]");
    CHECK(writhe(switch_crossing(curl, 0)) == -1);
    CHECK(canonical_code(switch_crossing(curl, 0)) == canonical_code(parse("X[1,1,2,2]")));
    const auto tr = catalog_diagram("trefoil");
    for (int c = 0; c < 3; ++c)
      CHECK(switch_crossing(switch_crossing(tr, c), c) == tr);
    CHECK_THROWS_AS(switch_crossing(parse("S[1,2,2,1]"), 0), Error);
  }

  TEST_CASE("disjoint union") {
    const auto tr = catalog_diagram("trefoil");
    const auto u = disjoint_union(tr, StuckDiagram::unknot());
    CHECK(u.crossing_count() == 3);
    CHECK(component_count(u) == 2);
    CHECK(disjoint_union(tr, StuckDiagram()) == tr);
    CHECK(disjoint_union(StuckDiagram::unknot(), StuckDiagram::unknot()).free_loops() == 2);
    CHECK(projection_blocks(disjoint_union(tr, tr)).size() == 2);
  }

  TEST_CASE("faces satisfy Euler's formula") {
    for (const auto &e : catalog()) {
      const auto d = parse(e.text);
      if (d.crossing_count() == 0 || projection_blocks(d).size() != 1)
        continue;
      CHECK(static_cast<int>(faces(d).size()) == d.crossing_count() + 2);
    }
  }

  TEST_CASE("braid closures match the frozen catalog") {
    auto code = [](int strands, std::vector<int> word) { return serialize(braid_closure(strands, word)); };
    CHECK(code(2, {1, 1, 1}) == catalog_entry("trefoil").text);
    CHECK(code(2, {-1, -1, -1}) == catalog_entry("trefoil-left").text);
    CHECK(code(2, {1, 1}) == catalog_entry("hopf").text);
    CHECK(code(3, {1, -2, 1, -2}) == catalog_entry("figure-eight").text);
    CHECK(code(2, {1, 1, 1, 1, 1}) == catalog_entry("cinquefoil").text);
    CHECK(code(2, {1, 1, 1, 1, 1, 1, 1}) == catalog_entry("torus-2-7").text);
    CHECK(code(3, {1, -2, 1, -2, 1, -2}) == catalog_entry("borromean").text);
    CHECK(code(3, {1, 2, 1, 2, 1, 2, 1, 2}) == catalog_entry("torus-3-4").text);
    CHECK(code(3, {1, -2, 1, -2, 1, -2, 1, -2, 1, -2}) == catalog_entry("ten-crossing").text);
    CHECK(serialize(braid_closure(3, std::vector<int>{1})) == "X[1,2,2,1] O");
  }

  TEST_CASE("every catalog entry is stored canonically") {
    for (const auto &e : catalog())
      CHECK_MESSAGE(serialize(parse(e.text)) == e.text, e.name);
  }
}
