#include <catch_amalgamated.hpp>

#include "isord/ordered_group.hpp"
#include "towers.hpp"

using namespace isord;
using isord::test::f;
using isord::test::w;

TEST_CASE("infinite cyclic group arithmetic", "[core]") {
  auto const& Z = *test::Zx();
  auto        x = [](std::int64_t k) { return Element::power(k); };
  CHECK(Z.mul(x(2), x(-2)) == Z.identity());
  CHECK(Z.inv(x(5)) == x(-5));
  CHECK(pow(Z, x(3), -2) == x(-6));
  CHECK(f(Z, x(1)) == "x");
  CHECK(f(Z, x(-3)) == "x^-3");
  CHECK(f(Z, x(0)) == "1");
  CHECK_THROWS_AS(Z.mul(x(std::numeric_limits<std::int64_t>::max()), x(1)),
                  Error);
}

TEST_CASE("infinite cyclic group ordering", "[core]") {
  auto const& Z = *test::Zx();
  CHECK(Z.compare(Element::power(-1), Z.identity()) == Ordering3::Less);
  CHECK(Z.compare(Element::power(2), Element::power(3)) == Ordering3::Less);
  CHECK(Z.compare(Element::power(3), Element::power(3)) == Ordering3::Equal);
  CHECK(*Z.min_positive() == Element::power(1));
  CHECK(successor(Z, Element::power(5)) == Element::power(6));
  CHECK(predecessor(Z, Element::power(5)) == Element::power(4));
  CHECK(sign(Z, Element::power(-7)) == Ordering3::Less);
}

TEST_CASE("elements of one group are rejected by another", "[core]") {
  auto const& T = *test::T();
  CHECK_THROWS_AS(T.mul(Element::power(1), T.identity()), DomainError);
  CHECK_THROWS_AS(test::Zx()->compare(T.identity(), Element::power(0)),
                  DomainError);
}

TEST_CASE("generator balls", "[core]") {
  CHECK(generator_ball(*test::Zx(), 3).size() == 7);
  auto const& T  = *test::T();
  auto const  b1 = generator_ball(T, 1);
  CHECK(b1.size() == 5);
  auto const b2 = generator_ball(T, 2);
  CHECK(!T.eq(w(T, "x^2"), w(T, "y^2")));
  auto contains = [&](Element const& z) {
    for (auto const& u : b2) {
      if (T.eq(u, z)) {
        return true;
      }
    }
    return false;
  };
  CHECK(contains(w(T, "x^2")));
  CHECK(contains(w(T, "y^2")));
  for (auto const& u : b2) {
    CHECK(contains(T.inv(u)));
  }
  CHECK_THROWS_AS(generator_ball(T, 12, 100), OverflowError);
}

TEST_CASE("filtration level rendering", "[core]") {
  CHECK(FiltrationLevel{-1}.to_string() == "-0.5");
  CHECK(FiltrationLevel{0}.to_string() == "0");
  CHECK(FiltrationLevel{1}.to_string() == "0.5");
  CHECK(FiltrationLevel{4}.to_string() == "2");
}
