#include "nbe/semantics.hpp"

namespace nbe {

Val Val::neutral(Ne<Val> ne) {
  return Val(std::make_shared<const Node>(Node{std::variant<Ne<Val>, Node::Closure>(
      std::in_place_index<0>, std::move(ne))}));
}

Val Val::closure(Ty dom, Tm body, Env env) {
  return Val(std::make_shared<const Node>(Node{std::variant<Ne<Val>, Node::Closure>(
      std::in_place_index<1>,
      Node::Closure{std::move(dom), std::move(body), std::move(env)})}));
}

bool Val::is_neutral() const { return node_->repr.index() == 0; }

const Ne<Val>& Val::ne() const {
  detail::check(is_neutral(), "Val::ne on closure");
  return std::get<0>(node_->repr);
}

const Ty& Val::clo_dom() const {
  detail::check(!is_neutral(), "Val::clo_dom on neutral");
  return std::get<1>(node_->repr).dom;
}

const Tm& Val::clo_body() const {
  detail::check(!is_neutral(), "Val::clo_body on neutral");
  return std::get<1>(node_->repr).body;
}

const Env& Val::clo_env() const {
  detail::check(!is_neutral(), "Val::clo_env on neutral");
  return std::get<1>(node_->repr).env;
}

bool operator==(const Val& x, const Val& y) {
  if (x.node_ == y.node_) return true;
  if (x.is_neutral() != y.is_neutral()) return false;
  if (x.is_neutral()) return x.ne() == y.ne();
  return x.clo_dom() == y.clo_dom() && x.clo_body() == y.clo_body() &&
         x.clo_env() == y.clo_env();
}

const Val& Env::lookup(Var x) const {
  detail::check(x.index < entries_.size(), "Env::lookup: index out of range");
  return entries_[entries_.size() - 1 - x.index];
}

Ope Ope::weak(Ope rest) {
  return Ope(std::make_shared<const Node>(Node{Kind::Weak, std::move(rest)}));
}

Ope Ope::lift(Ope rest) {
  return Ope(std::make_shared<const Node>(Node{Kind::Lift, std::move(rest)}));
}

const Ope& Ope::rest() const {
  detail::check(node_ != nullptr, "Ope::rest on identity");
  return node_->rest;
}

bool operator==(const Ope& x, const Ope& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.node_->kind != y.node_->kind) return false;
  return x.node_->rest == y.node_->rest;
}

Ope compose(const Ope& a, const Ope& b) {
  switch (a.kind()) {
    case Ope::Kind::Id:
      return b;
    case Ope::Kind::Weak:
      return Ope::weak(compose(a.rest(), b));
    case Ope::Kind::Lift:
      switch (b.kind()) {
        case Ope::Kind::Id: return a;
        case Ope::Kind::Weak: return Ope::weak(compose(a.rest(), b.rest()));
        case Ope::Kind::Lift: return Ope::lift(compose(a.rest(), b.rest()));
      }
  }
  detail::fail("compose: bad kind");
}

Var weaken_var(const Ope& o, Var x) {
  switch (o.kind()) {
    case Ope::Kind::Id:
      return x;
    case Ope::Kind::Weak:
      return Var{weaken_var(o.rest(), x).index + 1};
    case Ope::Kind::Lift:
      if (x.index == 0) return x;
      return Var{weaken_var(o.rest(), Var{x.index - 1}).index + 1};
  }
  detail::fail("weaken_var: bad kind");
}

Val weaken_val(const Ope& o, const Val& v) {
  if (v.is_neutral()) return Val::neutral(weaken_neval(o, v.ne()));
  return Val::closure(v.clo_dom(), v.clo_body(), weaken_env(o, v.clo_env()));
}

Env weaken_env(const Ope& o, const Env& env) {
  Env out;
  for (const Val& v : env.entries()) out = out.extend(weaken_val(o, v));
  return out;
}

Ne<Val> weaken_neval(const Ope& o, const Ne<Val>& n) {
  Ne<Val> out{weaken_var(o, n.head), {}};
  out.spine.reserve(n.spine.size());
  for (const Val& v : n.spine) out.spine.push_back(weaken_val(o, v));
  return out;
}

Nf weaken_nf(const Ope& o, const Nf& n) {
  if (n.is_lam()) return Nf::lam(weaken_nf(Ope::lift(o), n.lam_body()));
  return Nf::neutral(weaken_nenf(o, n.ne()));
}

Ne<Nf> weaken_nenf(const Ope& o, const Ne<Nf>& n) {
  Ne<Nf> out{weaken_var(o, n.head), {}};
  out.spine.reserve(n.spine.size());
  for (const Nf& m : n.spine) out.spine.push_back(weaken_nf(o, m));
  return out;
}

Env identity_env(const Cxt& ctx) {
  Env env;
  const Ope wk = Ope::weak(Ope::id());
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    env = weaken_env(wk, env).extend(Val::neutral(Ne<Val>{Var{0}, {}}));
  }
  return env;
}

std::ostream& operator<<(std::ostream& os, const Val& v) {
  if (v.is_neutral()) return os << "ne " << v.ne();
  return os << "(clo \\" << v.clo_dom() << ". " << v.clo_body() << " | " << v.clo_env() << ")";
}

std::ostream& operator<<(std::ostream& os, const Env& env) {
  os << "[";
  bool first = true;
  for (const Val& v : env.entries()) {
    if (!first) os << ", ";
    first = false;
    os << v;
  }
  return os << "]";
}

std::ostream& operator<<(std::ostream& os, const Ope& o) {
  switch (o.kind()) {
    case Ope::Kind::Id: return os << "id";
    case Ope::Kind::Weak: return os << "weak(" << o.rest() << ")";
    case Ope::Kind::Lift: return os << "lift(" << o.rest() << ")";
  }
  return os;
}

}  // namespace nbe
