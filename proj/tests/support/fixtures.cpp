#include "support/fixtures.hpp"

namespace nbe::testing {

Ty church_ty() {
  const Ty fn = Ty::arrow(Ty::star(), Ty::star());
  return Ty::arrow(fn, Ty::arrow(Ty::star(), Ty::star()));
}

Tm church(unsigned n) {
  Tm body = Tm::var(0u);
  for (unsigned i = 0; i < n; ++i) body = Tm::app(Tm::var(1u), std::move(body));
  return Tm::abs(Ty::arrow(Ty::star(), Ty::star()), Tm::abs(Ty::star(), std::move(body)));
}

Tm church_add() {
  const Ty num = church_ty();
  const Ty fn = Ty::arrow(Ty::star(), Ty::star());
  // \m. \n. \f. \x. m f (n f x)
  Tm body = Tm::app(Tm::app(Tm::var(3u), Tm::var(1u)),
                    Tm::app(Tm::app(Tm::var(2u), Tm::var(1u)), Tm::var(0u)));
  return Tm::abs(num, Tm::abs(num, Tm::abs(fn, Tm::abs(Ty::star(), std::move(body)))));
}

Nf church_nf(unsigned n) {
  Nf body = Nf::neutral(Ne<Nf>{Var{0}, {}});
  for (unsigned i = 0; i < n; ++i) {
    body = Nf::neutral(Ne<Nf>{Var{1}, {std::move(body)}});
  }
  return Nf::lam(Nf::lam(std::move(body)));
}

Ty skk_ty() { return Ty::arrow(Ty::star(), Ty::star()); }

Tm skk() {
  const Ty fn = Ty::arrow(Ty::star(), Ty::star());
  const Ty f_ty = Ty::arrow(Ty::star(), Ty::arrow(fn, Ty::star()));
  const Ty g_ty = Ty::arrow(Ty::star(), Ty::arrow(Ty::star(), Ty::star()));
  // S = \f. \g. \x. f x (g x)
  const Tm s = Tm::abs(
      f_ty, Tm::abs(g_ty, Tm::abs(Ty::star(),
                                  Tm::app(Tm::app(Tm::var(2u), Tm::var(0u)),
                                          Tm::app(Tm::var(1u), Tm::var(0u))))));
  const Tm k_fn = Tm::abs(Ty::star(), Tm::abs(fn, Tm::var(1u)));
  const Tm k_star = Tm::abs(Ty::star(), Tm::abs(Ty::star(), Tm::var(1u)));
  return Tm::app(Tm::app(s, k_fn), k_star);
}

bool is_eta_long(const Cxt& ctx, const Ty& a, const Nf& n) {
  if (a.is_arrow()) {
    return n.is_lam() && is_eta_long(ctx.extend(a.dom()), a.cod(), n.lam_body());
  }
  if (n.is_lam()) return false;
  const Ne<Nf>& ne = n.ne();
  if (ne.head.index >= ctx.size()) return false;
  Ty head_ty = ctx.var_type(ne.head);
  for (const Nf& arg : ne.spine) {
    if (!head_ty.is_arrow()) return false;
    if (!is_eta_long(ctx, head_ty.dom(), arg)) return false;
    head_ty = head_ty.cod();
  }
  return head_ty == Ty::star();
}

}  // namespace nbe::testing
