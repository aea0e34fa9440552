#include <doctest.h>

#include "nbe/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace nbe;
using namespace nbe::oracle;
using nbe::testing::church;
using nbe::testing::church_add;
using nbe::testing::church_nf;
using nbe::testing::is_eta_long;
using nbe::testing::random_cxt;
using nbe::testing::random_tm;
using nbe::testing::random_ty;
using nbe::testing::Rng;
using nbe::testing::skk;

namespace {

const Ty star = Ty::star();
const Ty fn = Ty::arrow(Ty::star(), Ty::star());

Nf nf_var(std::uint32_t i) { return Nf::neutral(Ne<Nf>{Var{i}, {}}); }

}  // namespace

TEST_CASE("shifting renames free variables and skips bound ones") {
  CHECK(shift(1, 0, Tm::var(0u)) == Tm::var(1u));
  CHECK(shift(1, 0, Tm::abs(star, Tm::var(0u))) == Tm::abs(star, Tm::var(0u)));
  CHECK(shift(2, 0, Tm::abs(star, Tm::var(1u))) == Tm::abs(star, Tm::var(3u)));
  CHECK(shift(-1, 0, Tm::var(3u)) == Tm::var(2u));
}

TEST_CASE("shifting a variable below zero is a hard error") {
  CHECK_THROWS_AS(shift(-1, 0, Tm::var(0u)), NegativeIndex);
}

TEST_CASE("substitution replaces, decrements, and shifts under binders") {
  const Tm s = Tm::abs(star, Tm::var(0u));
  CHECK(subst(Tm::var(0u), 0, s) == s);
  CHECK(subst(Tm::abs(star, Tm::var(1u)), 0, Tm::var(5u)) ==
        Tm::abs(star, Tm::var(6u)));
  CHECK(subst(Tm::var(1u), 0, s) == Tm::var(0u));
}

TEST_CASE("beta steps contract the leftmost outermost redex") {
  const Tm id = Tm::abs(star, Tm::var(0u));
  const Tm redex = Tm::app(id, Tm::var(0u));

  const auto stepped = beta_step(redex);
  REQUIRE(stepped.has_value());
  CHECK(*stepped == Tm::var(0u));

  CHECK_FALSE(beta_step(Tm::var(0u)).has_value());
  CHECK_FALSE(beta_step(id).has_value());

  // redex in head position fires before one in argument position
  const Tm both = Tm::app(Tm::app(id, id), redex);
  const auto head_first = beta_step(both);
  REQUIRE(head_first.has_value());
  CHECK(*head_first == Tm::app(id, redex));
}

TEST_CASE("beta normalization reaches the normal form") {
  const Tm id = Tm::abs(star, Tm::var(0u));
  CHECK(beta_normalize(Tm::app(id, Tm::var(0u))) == Tm::var(0u));
  CHECK(beta_normalize(id) == id);
  CHECK(beta_normalize(skk()) == id);
}

TEST_CASE("beta normalization stops at the reduction limit") {
  const Tm redex = Tm::app(Tm::abs(star, Tm::var(0u)), Tm::var(0u));
  CHECK_THROWS_AS(beta_normalize(redex, 0), LimitExceeded);
  try {
    beta_normalize(redex, 0);
  } catch (const LimitExceeded& e) {
    CHECK(e.limit() == 0);
  }
}

TEST_CASE("beta steps preserve the inferred type") {
  Rng rng(51);
  for (int i = 0; i < 100; ++i) {
    const Cxt ctx = random_cxt(rng, 3, 2);
    const Ty goal = random_ty(rng, 2);
    Tm t = random_tm(rng, ctx, goal, rng.range(1, 25));
    REQUIRE(infer_type(ctx, t).type() == goal);
    int guard = 0;
    while (auto next = beta_step(t)) {
      t = *next;
      CHECK(infer_type(ctx, t).type() == goal);
      REQUIRE(++guard < 10000);
    }
  }
}

TEST_CASE("eta expansion produces the long form") {
  CHECK(eta_expand(Cxt().extend(star), star, Tm::var(0u)) == nf_var(0));

  const Nf expanded = Nf::lam(Nf::neutral(Ne<Nf>{Var{1}, {nf_var(0)}}));
  CHECK(eta_expand(Cxt().extend(fn), fn, Tm::var(0u)) == expanded);

  CHECK(eta_expand(Cxt(), fn, Tm::abs(star, Tm::var(0u))) == Nf::lam(nf_var(0)));
}

TEST_CASE("the oracle normal form on the reference terms") {
  CHECK(normal_form(infer_type(Cxt(), Tm::abs(star, Tm::var(0u)))) ==
        Nf::lam(nf_var(0)));
  CHECK(normal_form(infer_type(Cxt(), skk())) == Nf::lam(nf_var(0)));

  const Tm sum = Tm::app(Tm::app(church_add(), church(2)), church(3));
  CHECK(normal_form(infer_type(Cxt(), sum)) == church_nf(5));
}

TEST_CASE("the oracle is idempotent through embedding") {
  Rng rng(52);
  for (int i = 0; i < 150; ++i) {
    const Cxt ctx = random_cxt(rng, 3, 3);
    const Ty goal = random_ty(rng, 3);
    const Tm t = random_tm(rng, ctx, goal, rng.range(1, 30));
    const Nf n = normal_form(infer_type(ctx, t));
    const Tm embedded = embed_nf(ctx, goal, n);
    CHECK(normal_form(infer_type(ctx, embedded)) == n);
  }
}

TEST_CASE("oracle output is eta-long and well-typed") {
  Rng rng(53);
  for (int i = 0; i < 150; ++i) {
    const Cxt ctx = random_cxt(rng, 3, 3);
    const Ty goal = random_ty(rng, 3);
    const Tm t = random_tm(rng, ctx, goal, rng.range(1, 30));
    const Nf n = normal_form(infer_type(ctx, t));
    CHECK(is_eta_long(ctx, goal, n));
    CHECK(infer_type(ctx, embed_nf(ctx, goal, n)).type() == goal);
  }
}
