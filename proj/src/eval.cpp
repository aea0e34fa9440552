#include "nbe/eval.hpp"

namespace nbe {

Delay<Val> eval(const Tm& t, const Env& env) {
  switch (t.kind()) {
    case Tm::Kind::Var:
      return Delay<Val>::now(env.lookup(t.var_index()));
    case Tm::Kind::Abs:
      return Delay<Val>::now(Val::closure(t.abs_dom(), t.abs_body(), env));
    case Tm::Kind::App:
      return bind(eval(t.app_fun(), env), [t, env](const Val& f) {
        return bind(eval(t.app_arg(), env),
                    [f](const Val& v) { return apply(f, v); });
      });
  }
  detail::fail("eval: bad kind");
}

Delay<Val> apply(const Val& f, const Val& v) {
  if (f.is_neutral()) {
    Ne<Val> n = f.ne();
    n.spine.push_back(v);
    return Delay<Val>::now(Val::neutral(std::move(n)));
  }
  return Delay<Val>::later(beta(f.clo_body(), f.clo_env(), v));
}

Suspension<Val> beta(const Tm& body, const Env& env, const Val& v) {
  return [body, env, v] { return eval(body, env.extend(v)); };
}

Delay<Nf> readback(const Cxt& ctx, const Ty& a, const Val& v) {
  if (a.is_arrow()) {
    return map([](const Nf& body) { return Nf::lam(body); },
               Delay<Nf>::later(eta(ctx, a, v)));
  }
  detail::check(v.is_neutral(), "readback: closure at base type");
  return map([](const Ne<Nf>& n) { return Nf::neutral(n); },
             readback_neutral(ctx, v.ne()));
}

Delay<Ne<Nf>> readback_neutral(const Cxt& ctx, const Ne<Val>& n) {
  Delay<Ne<Nf>> acc = Delay<Ne<Nf>>::now(Ne<Nf>{n.head, {}});
  Ty a = ctx.var_type(n.head);
  for (const Val& arg : n.spine) {
    detail::check(a.is_arrow(), "readback_neutral: over-applied head");
    const Ty dom = a.dom();
    acc = bind(acc, [ctx, dom, arg](const Ne<Nf>& m) {
      return map(
          [m](const Nf& payload) {
            Ne<Nf> grown = m;
            grown.spine.push_back(payload);
            return grown;
          },
          readback(ctx, dom, arg));
    });
    a = a.cod();
  }
  return acc;
}

Suspension<Nf> eta(const Cxt& ctx, const Ty& a, const Val& v) {
  detail::check(a.is_arrow(), "eta: value of base type");
  return [ctx, a, v] {
    const Cxt inner = ctx.extend(a.dom());
    const Val fresh = Val::neutral(Ne<Val>{Var{0}, {}});
    return bind(apply(weaken_val(Ope::weak(Ope::id()), v), fresh),
                [inner, cod = a.cod()](const Val& r) { return readback(inner, cod, r); });
  };
}

Delay<Nf> nf(const CheckedTm& t) {
  return bind(eval(t.term(), identity_env(t.ctx())),
              [ctx = t.ctx(), a = t.type()](const Val& v) { return readback(ctx, a, v); });
}

NormalizeOutcome normalize(const CheckedTm& t, std::uint64_t fuel) {
  const Convergence<Val> ev = converge(eval(t.term(), identity_env(t.ctx())), fuel);
  if (!ev.converged()) return FuelExhausted{fuel};
  const Convergence<Nf> rb =
      converge(readback(t.ctx(), t.type(), *ev.value), fuel - ev.steps);
  if (!rb.converged()) return FuelExhausted{fuel};
  return NormalizeReport{*rb.value, ev.steps, rb.steps, ev.steps + rb.steps};
}

}  // namespace nbe
