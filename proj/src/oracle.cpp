#include "nbe/oracle.hpp"

#include <algorithm>
#include <vector>

namespace nbe::oracle {

Tm shift(std::int64_t d, std::uint32_t cutoff, const Tm& t) {
  switch (t.kind()) {
    case Tm::Kind::Var: {
      const std::uint32_t k = t.var_index().index;
      if (k < cutoff) return t;
      const std::int64_t moved = static_cast<std::int64_t>(k) + d;
      if (moved < 0) throw NegativeIndex();
      return Tm::var(static_cast<std::uint32_t>(moved));
    }
    case Tm::Kind::Abs:
      return Tm::abs(t.abs_dom(), shift(d, cutoff + 1, t.abs_body()));
    case Tm::Kind::App:
      return Tm::app(shift(d, cutoff, t.app_fun()), shift(d, cutoff, t.app_arg()));
  }
  detail::fail("shift: bad kind");
}

Tm subst(const Tm& t, std::uint32_t j, const Tm& s) {
  switch (t.kind()) {
    case Tm::Kind::Var: {
      const std::uint32_t k = t.var_index().index;
      if (k == j) return s;
      if (k > j) return Tm::var(k - 1);
      return t;
    }
    case Tm::Kind::Abs:
      return Tm::abs(t.abs_dom(), subst(t.abs_body(), j + 1, shift(1, 0, s)));
    case Tm::Kind::App:
      return Tm::app(subst(t.app_fun(), j, s), subst(t.app_arg(), j, s));
  }
  detail::fail("subst: bad kind");
}

std::optional<Tm> beta_step(const Tm& t) {
  switch (t.kind()) {
    case Tm::Kind::Var:
      return std::nullopt;
    case Tm::Kind::Abs:
      if (std::optional<Tm> body = beta_step(t.abs_body())) {
        return Tm::abs(t.abs_dom(), std::move(*body));
      }
      return std::nullopt;
    case Tm::Kind::App: {
      const Tm& f = t.app_fun();
      if (f.kind() == Tm::Kind::Abs) return subst(f.abs_body(), 0, t.app_arg());
      if (std::optional<Tm> fun = beta_step(f)) {
        return Tm::app(std::move(*fun), t.app_arg());
      }
      if (std::optional<Tm> arg = beta_step(t.app_arg())) {
        return Tm::app(f, std::move(*arg));
      }
      return std::nullopt;
    }
  }
  detail::fail("beta_step: bad kind");
}

Tm beta_normalize(const Tm& t, std::uint64_t max_reductions) {
  Tm current = t;
  for (std::uint64_t n = 0; n < max_reductions; ++n) {
    std::optional<Tm> next = beta_step(current);
    if (!next) return current;
    current = std::move(*next);
  }
  if (!beta_step(current)) return current;
  throw LimitExceeded(max_reductions);
}

Nf eta_expand(const Cxt& ctx, const Ty& a, const Tm& t) {
  if (a.is_arrow()) {
    if (t.kind() == Tm::Kind::Abs) {
      return Nf::lam(eta_expand(ctx.extend(t.abs_dom()), a.cod(), t.abs_body()));
    }
    const Tm applied = Tm::app(shift(1, 0, t), Tm::var(Var{0}));
    return Nf::lam(eta_expand(ctx.extend(a.dom()), a.cod(), applied));
  }
  detail::check(t.kind() != Tm::Kind::Abs, "eta_expand: lambda at base type");
  std::vector<Tm> args;
  Tm head = t;
  while (head.kind() == Tm::Kind::App) {
    args.push_back(head.app_arg());
    head = head.app_fun();
  }
  detail::check(head.kind() == Tm::Kind::Var, "eta_expand: redex in beta-normal term");
  std::reverse(args.begin(), args.end());
  const Var x = head.var_index();
  Ty head_ty = ctx.var_type(x);
  Ne<Nf> ne{x, {}};
  ne.spine.reserve(args.size());
  for (const Tm& arg : args) {
    detail::check(head_ty.is_arrow(), "eta_expand: over-applied head");
    ne.spine.push_back(eta_expand(ctx, head_ty.dom(), arg));
    head_ty = head_ty.cod();
  }
  return Nf::neutral(std::move(ne));
}

Nf normal_form(const CheckedTm& t, std::uint64_t max_reductions) {
  return eta_expand(t.ctx(), t.type(), beta_normalize(t.term(), max_reductions));
}

}  // namespace nbe::oracle
