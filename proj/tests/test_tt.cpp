#include <doctest.h>

#include <random>

#include "catsem/errors.hpp"
#include "catsem/tt_semantics.hpp"
#include "catsem/tt_syntax.hpp"
#include "support.hpp"
#include "tt_oracle.hpp"

using namespace catsem;
using namespace testing_support;

namespace {

const char* kNames[] = {"x", "y", "z", "w"};

TermPtr random_term(std::mt19937_64& rng, std::size_t depth) {
  switch (depth == 0 ? uniform(rng, 0, 1) : uniform(rng, 0, 4)) {
    case 0:
      return Term::make_num(uniform(rng, 0, 12));
    case 1:
      return Term::make_var(kNames[uniform(rng, 0, 3)]);
    case 2:
      return Term::make_pair(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 3:
      return Term::make_lam(kNames[uniform(rng, 0, 3)], random_term(rng, depth - 1));
    default:
      return Term::make_app(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

TypePtr random_syntax(std::mt19937_64& rng, std::size_t depth) {
  switch (depth <= 1 ? uniform(rng, 0, 1) : uniform(rng, 0, 4)) {
    case 0:
      return Type::make_unit();
    case 1:
      return Type::make_fin(random_term(rng, 2));
    case 2:
      return Type::make_sigma(kNames[uniform(rng, 0, 3)], random_syntax(rng, depth - 1), random_syntax(rng, depth - 1));
    case 3:
      return Type::make_pi(kNames[uniform(rng, 0, 3)], random_syntax(rng, depth - 1), random_syntax(rng, depth - 1));
    default:
      return Type::make_id(random_syntax(rng, depth - 1), random_term(rng, 2), random_term(rng, 2));
  }
}

// Mostly well-typed expressions in the numeric fragment.
TermPtr small_numeric(std::mt19937_64& rng) {
  if (uniform(rng, 0, 2) == 0) return Term::make_var(kNames[uniform(rng, 0, 3)]);
  return Term::make_num(uniform(rng, 0, 3));
}

TypePtr random_semantic(std::mt19937_64& rng, std::size_t depth) {
  const std::size_t pick = depth <= 1 ? uniform(rng, 0, 2) : uniform(rng, 0, 5);
  switch (pick) {
    case 0:
      return Type::make_unit();
    case 1:
    case 2:
      return Type::make_fin(small_numeric(rng));
    case 3:
      return Type::make_sigma(kNames[uniform(rng, 0, 3)], random_semantic(rng, depth - 1),
                              random_semantic(rng, depth - 1));
    case 4:
      return Type::make_pi(kNames[uniform(rng, 0, 3)], random_semantic(rng, 2), random_semantic(rng, depth - 1));
    default:
      return Type::make_id(uniform(rng, 0, 3) == 0 ? Type::make_unit() : Type::make_fin(small_numeric(rng)),
                           small_numeric(rng), small_numeric(rng));
  }
}

}  // namespace

TEST_SUITE("ttcheck") {
  TEST_CASE("parser") {
    CHECK(parse_type("Pi (x : Fin 3) . Fin 2")->kind == Type::Kind::pi);
    const TypePtr s = parse_type("Sigma (x : Fin 3) . Fin x");
    CHECK(s->kind == Type::Kind::sigma);
    CHECK(s->body->size->kind == Term::Kind::var);
    CHECK(equal(parse_type("Id(Fin 2, 0, 1)"), parse_type("Id (Fin 2) 0 1")));
    CHECK(equal(parse_type("((Unit))"), Type::make_unit()));
    CHECK(parse_context("").entries.empty());
    CHECK(parse_context("x : Fin 3, y : Fin x").entries.size() == 2);
    try {
      parse_type("Pi (x : Fin");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 1);
      CHECK(e.column() == 12);
    }
    try {
      parse_type("Sigma (x : Fin 3)\n  . Fin )");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 9);
    }
    CHECK_THROWS_AS(parse_type("Fin 3 extra"), ParseError);
    CHECK_THROWS_AS(parse_type("Fin 12345678901"), ParseError);
    CHECK(equal(parse_term("\\x . f x y"),
                Term::make_lam("x", Term::make_app(Term::make_app(Term::make_var("f"), Term::make_var("x")),
                                                   Term::make_var("y")))));
    CHECK(equal(parse_term("λx . x"), Term::make_lam("x", Term::make_var("x"))));
  }

  TEST_CASE("print then parse is the identity") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; ++trial) {
      const TypePtr t = random_syntax(rng, 4);
      const std::string text = print(t);
      const TypePtr back = parse_type(text);
      REQUIRE_MESSAGE(equal(back, t), text);
      const TermPtr m = random_term(rng, 3);
      REQUIRE_MESSAGE(equal(parse_term(print(m)), m), print(m));
    }
  }

  TEST_CASE("golden cardinalities") {
    const Elaborator el;
    CHECK(el.cardinality(parse_type("Pi (x : Fin 3) . Fin 2")) == 8);
    CHECK(el.cardinality(parse_type("Sigma (x : Fin 3) . Fin x")) == 3);
    CHECK(el.cardinality(parse_type("Id(Fin 2, 0, 1)")) == 0);
    CHECK(el.cardinality(parse_type("Id(Fin 2, 0, 0)")) == 1);
    CHECK(el.cardinality(parse_type("Unit")) == 1);
    CHECK(el.cardinality(parse_type("Pi (x : Fin 0) . Fin 7")) == 1);
    CHECK(el.cardinality(parse_type("Sigma (x : Fin 2) . Pi (y : Fin x) . Fin 3")) == 4);
    CHECK(el.cardinality(parse_type("Pi (f : Pi (x : Fin 2) . Fin 2) . Id (Fin 2) (f 0) (f 1)")) == 0);
    CHECK(el.cardinality(parse_type("Sigma (f : Pi (x : Fin 2) . Fin 2) . Id (Fin 2) (f 0) (f 1)")) == 2);
    CHECK_THROWS_AS(el.cardinality(parse_type("Fin x")), TypeError);
    CHECK_THROWS_AS(el.cardinality(parse_type("Id(Fin 2, 0, 2)")), TypeError);
    CHECK_THROWS_AS(el.cardinality(parse_type("Sigma (p : Sigma (x : Fin 2) . Fin 2) . Fin p")), TypeError);
    CHECK_THROWS_AS(el.cardinality(parse_type("Pi (x : Fin 9) . Fin 9")), OutOfBoundError);
  }

  TEST_CASE("terms check against their types") {
    const Elaborator el;
    const Context empty;
    const Label unit_env = Label(Label::Tuple{});
    CHECK(el.check(empty, parse_term("(2, 1)"), parse_type("Sigma (x : Fin 3) . Fin x"), unit_env) ==
          Label::tuple({2, 1}));
    CHECK_THROWS_AS(el.check(empty, parse_term("(1, 1)"), parse_type("Sigma (x : Fin 3) . Fin x"), unit_env),
                    TypeError);
    CHECK(el.check(empty, parse_term("\\x . x"), parse_type("Pi (x : Fin 3) . Fin 3"), unit_env) ==
          Label::tuple({0, 1, 2}));
    CHECK_THROWS_AS(el.check(empty, parse_term("\\x . x"), parse_type("Pi (x : Fin 3) . Fin 2"), unit_env),
                    TypeError);
    const Context g = parse_context("f : Pi (x : Fin 2) . Fin 3");
    const FinSet ext = el.extent(g);
    CHECK(ext.size() == 9);
    CHECK(el.check(g, parse_term("f 1"), parse_type("Fin 3"), ext[5]) == Label(2));
    CHECK(el.elements(empty, parse_type("Pi (x : Fin 2) . Fin 2"), unit_env).size() == 4);
  }

  TEST_CASE("cardinality agrees with the direct recursive evaluator") {
    std::mt19937_64 rng(62);
    const Elaborator el;
    std::size_t agreed_ok = 0, agreed_err = 0;
    for (int trial = 0; trial < 3000; ++trial) {
      const TypePtr t = random_semantic(rng, 3);
      const tt_oracle::Result want = tt_oracle::card(t, {});
      std::optional<std::size_t> got;
      try {
        got = el.cardinality(t);
      } catch (const TypeError&) {
      } catch (const OutOfBoundError&) {
      }
      REQUIRE_MESSAGE(got.has_value() == want.ok(), print(t));
      if (got) {
        CHECK_MESSAGE(*got == want.card, print(t));
        ++agreed_ok;
      } else {
        ++agreed_err;
      }
    }
    CHECK(agreed_ok > 1000);
    CHECK(agreed_err > 50);
  }

  TEST_CASE("context tables agree with the evaluator per environment") {
    const Elaborator el;
    const Context g = parse_context("x : Fin 3, y : Fin x");
    const TypePtr e = parse_type("Sigma (z : Fin y) . Pi (w : Fin x) . Fin 2");
    const TypeTable table = el.elaborate(g, e);
    REQUIRE(table.extent.size() == 3);  // (1,0), (2,0), (2,1)
    for (std::size_t i = 0; i < table.extent.size(); ++i) {
      const Label& env = table.extent[i];
      tt_oracle::Env oenv;
      oenv["x"] = {tt_oracle::Binding::Shape::fin, 3, static_cast<std::size_t>(env[0].as_int())};
      oenv["y"] = {tt_oracle::Binding::Shape::fin, oenv["x"].value, static_cast<std::size_t>(env[1].as_int())};
      CHECK(table.card[i] == tt_oracle::card(e, oenv).card);
    }
    CHECK(table.as_map().cod().size() > 0);
  }

  TEST_CASE("substitution is strictly coherent") {
    const Elaborator el;
    // e[id] = e.
    {
      const Context g = parse_context("x : Fin 3");
      const auto r = el.check_substitution(g, g, {parse_term("x")}, parse_type("Pi (y : Fin x) . Fin 2"));
      CHECK(r.equal);
      CHECK(equal(r.substituted, parse_type("Pi (y : Fin x) . Fin 2")));
    }
    {
      const auto r = el.check_substitution(Context{}, parse_context("x : Fin 3"), {parse_term("2")}, parse_type("Fin x"));
      CHECK(r.equal);
      CHECK(print(r.substituted) == "Fin 2");
      CHECK(r.direct.card == std::vector<std::size_t>{2});
    }
    {
      const auto r = el.check_substitution(Context{}, parse_context("x : Fin 4"), {parse_term("3")},
                                           parse_type("Sigma (y : Fin x) . Fin y"));
      CHECK(r.equal);
      CHECK(r.direct.card == std::vector<std::size_t>{3});
    }
    // Capture avoidance: substituting y for x under a y binder.
    {
      const auto r = el.check_substitution(parse_context("y : Fin 3"), parse_context("x : Fin 3"), {parse_term("y")},
                                           parse_type("Sigma (y : Fin 3) . Id (Fin 3) x y"));
      CHECK(r.equal);
      CHECK(print(r.substituted) == "Sigma (y' : Fin 3) . Id (Fin 3) y y'");
    }
    CHECK_THROWS_AS(el.check_substitution(Context{}, parse_context("x : Fin 2"), {parse_term("5")}, parse_type("Fin x")),
                    TypeError);
    CHECK_THROWS_AS(el.substitution_map(Context{}, parse_context("x : Fin 2"), {}), TypeError);
  }
}
