#include <doctest.h>

#include "nbe/oracle.hpp"
#include "nbe/syntax.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace nbe;
using nbe::testing::random_cxt;
using nbe::testing::random_tm;
using nbe::testing::random_ty;
using nbe::testing::Rng;

TEST_CASE("types are finite trees with structural equality") {
  const Ty star = Ty::star();
  const Ty fn = Ty::arrow(star, star);
  CHECK_FALSE(star.is_arrow());
  CHECK(fn.is_arrow());
  CHECK(fn.dom() == star);
  CHECK(fn.cod() == star);
  CHECK(fn == Ty::arrow(Ty::star(), Ty::star()));
  CHECK_FALSE(fn == star);
  CHECK_FALSE(Ty::arrow(fn, star) == Ty::arrow(star, fn));
}

TEST_CASE("type printing parenthesizes domains only") {
  const Ty star = Ty::star();
  const Ty fn = Ty::arrow(star, star);
  CHECK(to_string(star) == "*");
  CHECK(to_string(fn) == "* -> *");
  CHECK(to_string(Ty::arrow(star, fn)) == "* -> * -> *");
  CHECK(to_string(Ty::arrow(fn, star)) == "(* -> *) -> *");
}

TEST_CASE("contexts index from the innermost binding") {
  const Ty star = Ty::star();
  const Ty fn = Ty::arrow(star, star);
  const Cxt ctx = Cxt().extend(fn).extend(star);
  CHECK(ctx.size() == 2);
  CHECK(ctx.var_type(Var{0}) == star);
  CHECK(ctx.var_type(Var{1}) == fn);
  CHECK_THROWS_AS(ctx.var_type(Var{2}), std::logic_error);
}

TEST_CASE("type synthesis on the easy cases") {
  const Ty star = Ty::star();
  const Tm id_star = Tm::abs(star, Tm::var(0u));
  const CheckedTm checked = infer_type(Cxt(), id_star);
  CHECK(checked.type() == Ty::arrow(star, star));
  CHECK(checked.ctx() == Cxt());
  CHECK(checked.term() == id_star);
}

TEST_CASE("self-application is an argument mismatch") {
  const Ty star = Ty::star();
  const Tm id_star = Tm::abs(star, Tm::var(0u));
  try {
    infer_type(Cxt(), Tm::app(id_star, id_star));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeError::Kind::ArgumentMismatch);
    CHECK(e.expected() == star);
    CHECK(e.actual() == Ty::arrow(star, star));
  }
}

TEST_CASE("out-of-range variables are reported with their index") {
  try {
    infer_type(Cxt().extend(Ty::star()), Tm::var(1u));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeError::Kind::UnboundVariable);
    CHECK(e.index() == 1);
  }
}

TEST_CASE("applying a base-type value is rejected") {
  const Cxt ctx = Cxt().extend(Ty::star());
  try {
    infer_type(ctx, Tm::app(Tm::var(0u), Tm::var(0u)));
    FAIL("expected a type error");
  } catch (const TypeError& e) {
    CHECK(e.kind() == TypeError::Kind::ExpectedFunction);
    CHECK(e.actual() == Ty::star());
  }
}

TEST_CASE("normal forms embed into the evident terms") {
  const Ty star = Ty::star();
  const Ty fn = Ty::arrow(star, star);
  CHECK(embed_nf(Cxt(), fn, Nf::lam(Nf::neutral(Ne<Nf>{Var{0}, {}}))) ==
        Tm::abs(star, Tm::var(0u)));
  CHECK(embed_nf(Cxt().extend(star), star, Nf::neutral(Ne<Nf>{Var{0}, {}})) ==
        Tm::var(0u));
  const Nf eta_long_var =
      Nf::lam(Nf::neutral(Ne<Nf>{Var{1}, {Nf::neutral(Ne<Nf>{Var{0}, {}})}}));
  CHECK(embed_nf(Cxt().extend(fn), fn, eta_long_var) ==
        Tm::abs(star, Tm::app(Tm::var(1u), Tm::var(0u))));
}

TEST_CASE("embedding a normal form typechecks at its type") {
  Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const Cxt ctx = random_cxt(rng, 3, 2);
    const Ty goal = random_ty(rng, 2);
    const Tm t = random_tm(rng, ctx, goal, rng.range(1, 20));
    const CheckedTm checked = infer_type(ctx, t);
    REQUIRE(checked.type() == goal);
    const Nf n = oracle::normal_form(checked);
    const CheckedTm rechecked = infer_type(ctx, embed_nf(ctx, goal, n));
    CHECK(rechecked.type() == goal);
  }
}

TEST_CASE("synthesis is deterministic") {
  Rng rng(22);
  for (int i = 0; i < 50; ++i) {
    const Cxt ctx = random_cxt(rng, 3, 2);
    const Ty goal = random_ty(rng, 2);
    const Tm t = random_tm(rng, ctx, goal, rng.range(1, 25));
    CHECK(infer_type(ctx, t).type() == infer_type(ctx, t).type());
  }
}

TEST_CASE("terms compare structurally") {
  const Tm a = Tm::abs(Ty::star(), Tm::app(Tm::var(0u), Tm::var(1u)));
  const Tm b = Tm::abs(Ty::star(), Tm::app(Tm::var(0u), Tm::var(1u)));
  CHECK(a == b);
  CHECK_FALSE(a == Tm::abs(Ty::star(), Tm::app(Tm::var(1u), Tm::var(0u))));
  CHECK_FALSE(a == Tm::abs(Ty::arrow(Ty::star(), Ty::star()),
                           Tm::app(Tm::var(0u), Tm::var(1u))));
}
