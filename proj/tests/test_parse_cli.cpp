#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "isord/cli.hpp"
#include "isord/parse.hpp"
#include "isord/tower.hpp"
#include "towers.hpp"

using namespace isord;

namespace {
  std::string const trefoil_text = R"(# trefoil
group Zx = Z(x)
group Zy = Z(y)
subgroup A = cyclic(Zx: x^2, Zy: y^3)
group T = amalgam(Zx, Zy, A, variant=1)
)";

  std::string const tower_text = trefoil_text + R"(
map e = exponents(T: x=3, y=2)
subgroup A2 = modkernel(T, e, p=2)
group X2 = amalgam(T, T, A2, variant=1)
)";

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(ISORD_TEST_DATA) + "/" + name;
  }

  void expect_error_at(std::string const& text,
                       std::size_t        line,
                       std::size_t        column) {
    try {
      Tower::parse(text);
      FAIL("no error for: " << text);
    } catch (ParseError const& e) {
      INFO(e.what());
      CHECK(e.line() == line);
      CHECK(e.column() == column);
    }
  }
}  // namespace

TEST_CASE("tower declarations parse", "[parse]") {
  auto const file = parse_tower("group Zx = Z(x)\n");
  REQUIRE(file.declarations.size() == 1);
  auto const& d = std::get<CyclicDecl>(file.declarations[0]);
  CHECK(d.id.name == "Zx");
  CHECK(d.generator.name == "x");

  auto const full = parse_tower(tower_text);
  CHECK(full.declarations.size() == 7);
  auto const& mk = std::get<ModKernelDecl>(full.declarations[5]);
  CHECK(mk.p == 2);
  auto const& ex = std::get<ExponentsDecl>(full.declarations[4]);
  REQUIRE(ex.entries.size() == 2);
  CHECK(ex.entries[1].value == 2);
}

TEST_CASE("towers build", "[parse]") {
  auto const t = Tower::parse(trefoil_text);
  CHECK(t.last_group() == "T");
  CHECK(format(*t.group(), *t.group()->min_positive()) == "y^-2*x");

  auto const t2 = Tower::parse(tower_text);
  CHECK(t2.last_group() == "X2");
  REQUIRE(t2.notices().size() == 1);
  CHECK(t2.group("X2")->depth() == 2);
  CHECK_THROWS_AS(t2.group("A2"), PreconditionError);
}

TEST_CASE("diagnostics carry locations", "[parse]") {
  expect_error_at("group Zx = Z(x)\ngroup Zx = Z(y)\n", 2, 7);
  expect_error_at("group T = amalgam(Zx, Zy, A, variant=1)\n", 1, 19);
  expect_error_at("group Zx = Z(x)\ngroup Zy = Z(y)\n"
                  "subgroup A = cyclic(Zx: x^2, Zy: y^3)\n"
                  "group T = amalgam(Zx, Zy, A, variant=3)\n",
                  4,
                  38);
  expect_error_at("group Zx = Z(x)\ngroup Zy = Z(y)\n"
                  "subgroup A = cyclic(Zx: x^2, Zy: z^3)\n",
                  3,
                  34);
  expect_error_at("group Zx = Z(x)\nsubgroup A = cyclic(Zx: x^2 Zx: x^3)\n",
                  2,
                  29);
  expect_error_at("grope Zx = Z(x)\n", 1, 1);
  expect_error_at("# nothing here\n", 1, 1);
  expect_error_at(trefoil_text + "map e = exponents(T: x=1, y=1)\n", 6, 5);
  expect_error_at(trefoil_text + "map e = exponents(T: x=3, x=2)\n", 6, 27);
  expect_error_at("group Zx = Z(x)\ngroup Zy = Z(y)\n"
                  "subgroup A = cyclic(Zx: x^1, Zy: y^3)\n",
                  3,
                  10);
  expect_error_at("group Zx = Z(x)\ngroup Zy = Z(y)\n"
                  "subgroup A = cyclic(Zx: x^99999999999999999999, Zy: y^3)\n",
                  3,
                  27);
  expect_error_at(trefoil_text + "group U = amalgam(Zy, Zx, A, variant=1)\n",
                  6,
                  27);
}

TEST_CASE("words", "[parse]") {
  auto const& T = *test::T();
  CHECK(T.eq(parse_word("x^2*y^-3", T), T.identity()));
  CHECK(T.eq(parse_word("1", T), T.identity()));
  CHECK(T.eq(parse_word("x * y", T), parse_word("x*y", T)));
  CHECK_THROWS_AS(parse_word("X", T), ParseError);
  CHECK_THROWS_AS(parse_word("x ^2", T), ParseError);
  CHECK_THROWS_AS(parse_word("x^", T), ParseError);
  CHECK_THROWS_AS(parse_word("", T), ParseError);
  CHECK_THROWS_AS(parse_word("x**y", T), ParseError);
  CHECK_THROWS_AS(parse_word("12", T), ParseError);
  try {
    parse_word("x*z", T);
  } catch (ParseError const& e) {
    CHECK(e.column() == 3);
  }
  auto const& X = *test::X2();
  CHECK(X.eq(parse_word("L.y^-2*L.x*L.y^-2*L.x", X), X.a_min()));
  CHECK_THROWS_AS(parse_word("x", X), ParseError);
}

TEST_CASE("normal forms re-parse to the same element", "[parse]") {
  for (auto const& G : {GroupPtr(test::T()), GroupPtr(test::X2())}) {
    for (auto const& z : generator_ball(*G, 3)) {
      CHECK(G->eq(parse_word(format(*G, z), *G), z));
    }
  }
}

TEST_CASE("parsing is total on arbitrary input", "[parse][fuzz]") {
  std::mt19937_64                 rng(7);
  std::string const               alphabet = "groupZamlgcyiexk()=,:^*#-+0123456789 \n\tTAxy.\x01\xff";
  std::uniform_int_distribution<> len(0, 80);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> cut(0, tower_text.size());
  auto const&                     T = *test::T();
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    if (i % 2 == 0) {
      for (int n = len(rng); n > 0; --n) {
        s.push_back(alphabet[pick(rng)]);
      }
    } else {
      // Mutate a valid file so that the parser gets deep.
      s = tower_text;
      s.insert(cut(rng), 1, alphabet[pick(rng)]);
      s.erase(std::min(s.size() - 1, cut(rng)), 1);
    }
    try {
      (void) Tower::parse(s);
    } catch (Error const&) {
    }
    try {
      (void) parse_word(s, T);
    } catch (Error const&) {
    }
  }
  SUCCEED();
}

TEST_CASE("command line", "[cli]") {
  auto const t = data("trefoil.twr");
  auto const x = data("tower2.twr");

  auto r = invoke({"compare", "--tower", t, "--group", "T", "1", "y^-2*x"});
  CHECK(r.code == 0);
  CHECK(r.out == "LT\n");

  r = invoke({"sort", "--tower", t, "y^4", "x", "y^2", "x^3", "1"});
  CHECK(r.out == "1 y^2 x y^4 x^3\n");

  r = invoke({"sort", "--tower", t, "y^5", "x^2", "x", "y", "1", "x^3", "y^2", "y^4"});
  CHECK(r.out == "1 y y^2 x x^2 y^4 y^5 x^3\n");

  r = invoke({"minpos", "--tower", x});
  CHECK(r.code == 0);
  CHECK(r.out == "R.x^-1*R.y^2*L.y^-2*L.x\n");
  CHECK(r.err.find("note: A2: modkernel: exponent map negated") == 0);

  r = invoke({"minpos", "--tower", x, "--group", "T"});
  CHECK(r.out == "y^-2*x\n");

  r = invoke({"normal-form", "--tower", t, "x*y^3"});
  CHECK(r.out == "x^3\n");

  r = invoke({"ball-check", "--tower", t, "--radius", "3", "--suite", "discreteness"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PROP discreteness pass", 0) == 0);

  r = invoke({"convex", "--tower", x, "--via-floor", "L.y^-2*L.x*L.y^-2*L.x", "L.y^-2*L.x"});
  CHECK(r.out == "IN 0\n");
}

TEST_CASE("command line failures", "[cli]") {
  auto const t = data("trefoil.twr");
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"frobnicate", "--tower", t}).code == 2);
  CHECK(invoke({"minpos"}).code == 2);
  CHECK(invoke({"minpos", "--tower", data("missing.twr")}).code == 2);
  CHECK(invoke({"minpos", "--tower", t, "--variant-override", "2"}).code == 2);
  CHECK(invoke({"compare", "--tower", t, "x"}).code == 2);
  CHECK(invoke({"level", "--tower", t, "--group", "Zx", "x"}).code == 2);
  CHECK(invoke({"minpos", "--tower", t, "--group", "A"}).code == 2);
  auto r = invoke({"sign", "--tower", t, "x^"});
  CHECK(r.code == 2);
  CHECK(r.err.find("column 3") != std::string::npos);
  r = invoke({"minpos", "--tower", data("bad_syntax.twr")});
  CHECK(r.code == 2);
  CHECK(r.err.find("bad_syntax.twr:3:29:") != std::string::npos);
  r = invoke({"ball-check", "--tower", t, "--suite", "bogus"});
  CHECK(r.code == 2);
  r = invoke({"--help"});
  CHECK(r.code == 0);
}

TEST_CASE("ball-check reports failures through the exit code", "[cli]") {
  BuildOptions o;
  o.mutation = Mutation::InvertBaseGap;
  std::ostringstream out, err;
  int const          code = run_cli(
      {"ball-check", "--tower", data("trefoil.twr"), "--radius", "3", "--suite", "base-order"},
      out,
      err,
      o);
  CHECK(code == 1);
  CHECK(out.str().find("PROP base-order fail") == 0);
  CHECK(out.str().find("WITNESS ") != std::string::npos);
}
