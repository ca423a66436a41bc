#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "isord/amalgam.hpp"
#include "towers.hpp"

using namespace isord;
using isord::test::f;
using isord::test::w;

namespace {
  Element raw(AmalgamGroup const&                            X,
              std::vector<std::pair<Side, std::int64_t>> const& parts) {
    Element::Word word;
    for (auto const& [s, k] : parts) {
      word.push_back(Syllable{s, Element::power(k)});
    }
    return X.reduce(word);
  }

  constexpr Side G = Side::Left;
  constexpr Side H = Side::Right;
}  // namespace

TEST_CASE("syllable reduction", "[amalgam]") {
  auto const& T = *test::T();
  auto const  xx = raw(T, {{G, 1}, {G, 1}});
  CHECK(T.eq(xx, w(T, "x^2")));
  CHECK(T.level(xx).to_string() == "-0.5");
  CHECK(xx.syllables().size() == 1);
  CHECK(T.eq(raw(T, {{G, 1}, {H, 3}}), w(T, "x^3")));
  CHECK(T.eq(raw(T, {{H, 1}, {G, 2}, {H, 1}}), w(T, "y^5")));
  CHECK(T.eq(T.mul(w(T, "x"), w(T, "y^3")), w(T, "x^3")));
  CHECK(T.eq(T.inv(w(T, "x*y")), w(T, "y^-1*x^-1")));
  CHECK(T.eq(w(T, "x^2*y^-3"), T.identity()));
  CHECK(T.identity().syllables().empty());
}

TEST_CASE("normal forms are canonical", "[amalgam]") {
  auto const& T = *test::T();
  // Different spellings of one element share a single representation.
  CHECK(w(T, "y^3*x") == w(T, "x^3"));
  CHECK(w(T, "x*y*x^2") == w(T, "x*y^4"));
  CHECK(f(T, w(T, "y^4*x")) == f(T, w(T, "y*x^3")));
}

TEST_CASE("filtration levels", "[amalgam]") {
  auto const& T = *test::T();
  auto        L = [&](std::string const& s) {
    return T.level(w(T, s)).to_string();
  };
  CHECK(L("1") == "-0.5");
  CHECK(L("y") == "0");
  CHECK(L("x") == "0.5");
  CHECK(L("x*y") == "1");
  CHECK(L("y*x") == "2");
  CHECK(L("x*y*x") == "3");
  CHECK(L("y^-2*x") == "2");
}

TEST_CASE("base ordering blocks", "[amalgam]") {
  auto const& T = *test::T();
  CHECK(T.base_compare(w(T, "y"), w(T, "x")) == Ordering3::Less);
  CHECK(T.base_compare(w(T, "x"), w(T, "y^4")) == Ordering3::Less);
  CHECK(T.base_compare(w(T, "x^3"), w(T, "y^4")) == Ordering3::Greater);
  CHECK_THROWS_AS(T.base_compare(w(T, "x*y"), w(T, "x")), PreconditionError);
}

TEST_CASE("c-map values", "[amalgam]") {
  auto const& T = *test::T();
  CHECK(T.eq(T.c_map(w(T, "x")), w(T, "y^2")));
  CHECK(T.eq(T.c_map(w(T, "y^-2*x")), T.identity()));
  CHECK(T.eq(T.c_map(w(T, "x*y*x")), w(T, "x^3")));
  CHECK_THROWS_AS(T.c_map(w(T, "y")), PreconditionError);
}

TEST_CASE("comparison", "[amalgam]") {
  auto const& T = *test::T();
  auto        cmp = [&](std::string const& a, std::string const& b) {
    return T.compare(w(T, a), w(T, b));
  };
  CHECK(cmp("y", "x") == Ordering3::Less);
  CHECK(cmp("x", "y") == Ordering3::Greater);
  CHECK(cmp("1", "y^-2*x") == Ordering3::Less);
  CHECK(cmp("y^-2*x", "y") == Ordering3::Less);
  CHECK(cmp("x^2", "y^3") == Ordering3::Equal);

  std::vector<std::string> const chain
      = {"1", "y", "y^2", "x", "x^2", "y^4", "y^5", "x^3"};
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (std::size_t j = 0; j < chain.size(); ++j) {
      INFO(chain[i] << " vs " << chain[j]);
      CHECK(cmp(chain[i], chain[j]) == compare_values(i, j));
    }
  }
}

TEST_CASE("minimal positive element and successors", "[amalgam]") {
  auto const& T = *test::T();
  CHECK(f(T, *T.min_positive()) == "y^-2*x");
  CHECK(T.eq(successor(T, T.identity()), w(T, "y^-2*x")));
  CHECK(T.eq(successor(T, w(T, "y^-2*x")), w(T, "y^-2*x*y^-2*x")));
  auto const T2 = test::trefoil(Variant::Two);
  CHECK(T2->eq(*T2->min_positive(), w(*T2, "x*y^-2")));
  CHECK(f(*T2, *T2->min_positive()) == "x^-1*y");
}

TEST_CASE("A-floors on the amalgam", "[amalgam]") {
  auto const& T = *test::T();
  CHECK(T.eq(T.a_floor(w(T, "y^-2*x")), T.identity()));
  CHECK(T.eq(T.a_floor(w(T, "x*y")), T.identity()));
  CHECK(T.eq(T.a_floor(w(T, "y^4")), w(T, "y^3")));
  CHECK(T.eq(T.a_ceil(w(T, "y^4")), w(T, "y^6")));
  CHECK(T.eq(T.a_floor(w(T, "y^-1")), w(T, "y^-3")));
}

TEST_CASE("characteristic sets", "[amalgam]") {
  auto to_strings = [](AmalgamGroup const& X) {
    std::vector<std::string> out;
    for (auto const& c : X.characteristic_set()) {
      out.push_back(format(X, c));
    }
    return out;
  };
  CHECK(to_strings(*test::T())
        == std::vector<std::string>{"x", "y", "y^-2*x"});
  CHECK(to_strings(*test::trefoil(Variant::Two))
        == std::vector<std::string>{"x", "y", "x^-1*y"});
  auto const s = to_strings(*test::X2());
  REQUIRE(s.size() == 7);
  CHECK(s.back() == f(*test::X2(), *test::X2()->min_positive()));
  for (auto const& c : test::X2()->characteristic_set()) {
    CHECK(is_positive(*test::X2(), c));
  }
}

TEST_CASE("variant two swaps the factor roles", "[amalgam]") {
  auto const T2 = test::trefoil(Variant::Two);
  CHECK(T2->g_side() == Side::Right);
  CHECK(T2->compare(w(*T2, "x"), w(*T2, "y")) == Ordering3::Less);
  CHECK(T2->level(w(*T2, "y")).to_string() == "0.5");
}

TEST_CASE("construction rejects invalid data", "[amalgam]") {
  auto const Zx = test::Zx();
  auto const Zy = test::Zy();
  SECTION("mismatched signs") {
    auto A = cyclic_stepping(Zx, 2, Zy, -3);
    CHECK_THROWS_AS(build_amalgam("bad", Zx, Zy, A, Variant::One),
                    ConstructionError);
  }
  SECTION("degenerate exponents") {
    CHECK_THROWS_AS(cyclic_stepping(Zx, 1, Zy, 3), ConstructionError);
  }
  SECTION("the second tower also builds with the roles exchanged") {
    CHECK_NOTHROW(build_amalgam(
        "X2b", test::T(), test::T(), test::A2(), Variant::Two));
  }
  SECTION("wrong factor groups") {
    auto A = cyclic_stepping(Zx, 2, Zy, 3);
    CHECK_THROWS_AS(build_amalgam("bad", Zy, Zx, A, Variant::One),
                    ConstructionError);
  }
}

TEST_CASE("the second level tower", "[amalgam]") {
  auto const& X = *test::X2();
  CHECK(X.depth() == 2);
  CHECK(f(X, *X.min_positive()) == "R.x^-1*R.y^2*L.y^-2*L.x");
  // m2 (m^2)^-1 m1, with m the minimal positive element of T.
  auto const m1 = X.embed(Side::Left, w(*test::T(), "y^-2*x"));
  auto const m2 = X.embed(Side::Right, w(*test::T(), "y^-2*x"));
  auto const a  = X.a_min();
  CHECK(X.eq(*X.min_positive(), X.mul(X.mul(m2, X.inv(a)), m1)));
  CHECK(X.eq(a, X.mul(m1, m1)));
  CHECK(X.compare(X.identity(), *X.min_positive()) == Ordering3::Less);
  CHECK(X.compare(*X.min_positive(), m1) == Ordering3::Less);
}

TEST_CASE("engine guards its own invariants", "[amalgam]") {
  auto const& T = *test::T();
  BuildOptions o;
  o.mutation    = Mutation::InvertTieBreak;
  auto const Tm = test::trefoil(Variant::One, o);
  CHECK(Tm->mutation() == Mutation::InvertTieBreak);
  CHECK(T.mutation() == Mutation::None);
}
