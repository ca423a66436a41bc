#include <catch_amalgamated.hpp>

#include "isord/convex.hpp"
#include "towers.hpp"

using namespace isord;
using isord::test::w;

namespace {
  Element m1() {
    return test::X2()->embed(Side::Left, w(*test::T(), "y^-2*x"));
  }
}  // namespace

TEST_CASE("ladders need a positive seed", "[convex]") {
  CHECK_THROWS_AS(ConvexLadder(test::Zx(), Element::power(-2), 4),
                  PreconditionError);
  CHECK_THROWS_AS(ConvexLadder(test::Zx(), Element::power(0), 4),
                  PreconditionError);
}

TEST_CASE("membership on the integers", "[convex]") {
  ConvexLadder const B(test::Zx(), Element::power(2), 5);
  CHECK(conv_member(Element::power(0), B) == ConvexVerdict::in(0));
  CHECK(conv_member(Element::power(3), B) == ConvexVerdict::in(2));
  CHECK(conv_member(Element::power(-10), B) == ConvexVerdict::in(5));
  CHECK(conv_member(Element::power(11), B) == ConvexVerdict::unknown());
  auto const r = strongly_convex_check(B, 3);
  CHECK(r.closure_witnessed());
  CHECK(r.status() == "witnessed closure");
}

TEST_CASE("membership in the second level tower", "[convex]") {
  auto const&        X = *test::X2();
  ConvexLadder const B(test::X2(), X.a_min(), 8);
  CHECK(conv_member(X.identity(), B) == ConvexVerdict::in(0));
  CHECK(conv_member(m1(), B) == ConvexVerdict::in(1));
  CHECK(conv_member(pow(X, X.a_min(), -3), B) == ConvexVerdict::in(3));
  CHECK(conv_member_via_floor(m1(), B) == ConvexVerdict::in(0));
  CHECK(conv_member_via_floor(X.identity(), B) == ConvexVerdict::in(0));
}

TEST_CASE("floor based membership checks its preconditions", "[convex]") {
  auto const&        X = *test::X2();
  ConvexLadder const outside(test::X2(), *X.min_positive(), 4);
  CHECK_THROWS_AS(conv_member_via_floor(m1(), outside), PreconditionError);
  ConvexLadder const not_amalgam(test::Zx(), Element::power(1), 4);
  CHECK_THROWS_AS(conv_member_via_floor(Element::power(1), not_amalgam),
                  PreconditionError);
}

TEST_CASE("verdicts are monotone in the search limit", "[convex]") {
  auto const& X    = *test::X2();
  auto const  ball = generator_ball(X, 2);
  for (auto const& z : ball) {
    bool was_in = false;
    for (std::size_t limit = 1; limit <= 8; ++limit) {
      bool const now = conv_member(z, ConvexLadder(test::X2(), X.a_min(), limit)).is_in();
      CHECK((!was_in || now));
      was_in = now;
    }
  }
}

TEST_CASE("closure sampling in the second level tower", "[convex]") {
  ConvexLadder const B(test::X2(), test::X2()->a_min(), 4);
  auto const         r = strongly_convex_check(B, 2, 2000);
  CHECK(r.violations.empty());
  CHECK(r.witnessed > 0);
}
