#include "nbe/syntax.hpp"

#include <sstream>

namespace nbe {

namespace detail {

void fail(const char* what) { throw std::logic_error(what); }

}  // namespace detail

std::string to_string(const Ty& a) {
  if (!a.is_arrow()) return "*";
  std::string dom = to_string(a.dom());
  if (a.dom().is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + to_string(a.cod());
}

Cxt Cxt::extend(Ty a) const {
  std::vector<Ty> entries = entries_;
  entries.push_back(std::move(a));
  return Cxt(std::move(entries));
}

const Ty& Cxt::var_type(Var x) const {
  detail::check(x.index < entries_.size(), "Cxt::var_type: index out of range");
  return entries_[entries_.size() - 1 - x.index];
}

Tm Tm::var(Var x) {
  return Tm(std::make_shared<const Node>(Node{x}));
}

Tm Tm::abs(Ty dom, Tm body) {
  return Tm(std::make_shared<const Node>(Node{Node::Abs{std::move(dom), std::move(body)}}));
}

Tm Tm::app(Tm fun, Tm arg) {
  return Tm(std::make_shared<const Node>(Node{Node::App{std::move(fun), std::move(arg)}}));
}

Tm::Kind Tm::kind() const {
  switch (node_->repr.index()) {
    case 0: return Kind::Var;
    case 1: return Kind::Abs;
    default: return Kind::App;
  }
}

Var Tm::var_index() const {
  detail::check(kind() == Kind::Var, "Tm::var_index on non-variable");
  return std::get<Var>(node_->repr);
}

const Ty& Tm::abs_dom() const {
  detail::check(kind() == Kind::Abs, "Tm::abs_dom on non-abstraction");
  return std::get<Node::Abs>(node_->repr).dom;
}

const Tm& Tm::abs_body() const {
  detail::check(kind() == Kind::Abs, "Tm::abs_body on non-abstraction");
  return std::get<Node::Abs>(node_->repr).body;
}

const Tm& Tm::app_fun() const {
  detail::check(kind() == Kind::App, "Tm::app_fun on non-application");
  return std::get<Node::App>(node_->repr).fun;
}

const Tm& Tm::app_arg() const {
  detail::check(kind() == Kind::App, "Tm::app_arg on non-application");
  return std::get<Node::App>(node_->repr).arg;
}

bool operator==(const Tm& x, const Tm& y) {
  if (x.node_ == y.node_) return true;
  if (x.kind() != y.kind()) return false;
  switch (x.kind()) {
    case Tm::Kind::Var: return x.var_index() == y.var_index();
    case Tm::Kind::Abs: return x.abs_dom() == y.abs_dom() && x.abs_body() == y.abs_body();
    case Tm::Kind::App: return x.app_fun() == y.app_fun() && x.app_arg() == y.app_arg();
  }
  detail::fail("Tm::operator==: bad kind");
}

Nf Nf::lam(Nf body) {
  return Nf(std::make_shared<const Node>(Node{std::variant<Nf, Ne<Nf>>(
      std::in_place_index<0>, std::move(body))}));
}

Nf Nf::neutral(Ne<Nf> ne) {
  return Nf(std::make_shared<const Node>(Node{std::variant<Nf, Ne<Nf>>(
      std::in_place_index<1>, std::move(ne))}));
}

bool Nf::is_lam() const { return node_->repr.index() == 0; }

const Nf& Nf::lam_body() const {
  detail::check(is_lam(), "Nf::lam_body on neutral");
  return std::get<0>(node_->repr);
}

const Ne<Nf>& Nf::ne() const {
  detail::check(!is_lam(), "Nf::ne on lambda");
  return std::get<1>(node_->repr);
}

bool operator==(const Nf& x, const Nf& y) {
  if (x.node_ == y.node_) return true;
  if (x.is_lam() != y.is_lam()) return false;
  if (x.is_lam()) return x.lam_body() == y.lam_body();
  return x.ne() == y.ne();
}

TypeError TypeError::unbound_variable(std::uint32_t index) {
  TypeError e(Kind::UnboundVariable, "unbound variable " + std::to_string(index));
  e.index_ = index;
  return e;
}

TypeError TypeError::expected_function(Ty actual) {
  TypeError e(Kind::ExpectedFunction, "expected a function, got " + to_string(actual));
  e.actual_ = std::move(actual);
  return e;
}

TypeError TypeError::argument_mismatch(Ty expected, Ty actual) {
  TypeError e(Kind::ArgumentMismatch, "argument mismatch: expected " + to_string(expected) +
                                          ", got " + to_string(actual));
  e.expected_ = std::move(expected);
  e.actual_ = std::move(actual);
  return e;
}

namespace {

Ty synthesize(const Cxt& ctx, const Tm& t) {
  switch (t.kind()) {
    case Tm::Kind::Var: {
      const Var x = t.var_index();
      if (x.index >= ctx.size()) throw TypeError::unbound_variable(x.index);
      return ctx.var_type(x);
    }
    case Tm::Kind::Abs: {
      Ty body_ty = synthesize(ctx.extend(t.abs_dom()), t.abs_body());
      return Ty::arrow(t.abs_dom(), std::move(body_ty));
    }
    case Tm::Kind::App: {
      Ty fun_ty = synthesize(ctx, t.app_fun());
      if (!fun_ty.is_arrow()) throw TypeError::expected_function(fun_ty);
      Ty arg_ty = synthesize(ctx, t.app_arg());
      if (!(arg_ty == fun_ty.dom())) throw TypeError::argument_mismatch(fun_ty.dom(), arg_ty);
      return fun_ty.cod();
    }
  }
  detail::fail("synthesize: bad kind");
}

}  // namespace

CheckedTm infer_type(const Cxt& ctx, const Tm& t) {
  Ty type = synthesize(ctx, t);
  return CheckedTm(t, ctx, std::move(type));
}

Tm embed_nf(const Cxt& ctx, const Ty& a, const Nf& n) {
  if (n.is_lam()) {
    detail::check(a.is_arrow(), "embed_nf: lambda at base type");
    return Tm::abs(a.dom(), embed_nf(ctx.extend(a.dom()), a.cod(), n.lam_body()));
  }
  const Ne<Nf>& ne = n.ne();
  Ty head_ty = ctx.var_type(ne.head);
  Tm t = Tm::var(ne.head);
  for (const Nf& arg : ne.spine) {
    detail::check(head_ty.is_arrow(), "embed_nf: over-applied neutral head");
    t = Tm::app(std::move(t), embed_nf(ctx, head_ty.dom(), arg));
    head_ty = head_ty.cod();
  }
  detail::check(head_ty == a, "embed_nf: neutral type mismatch");
  return t;
}

std::ostream& operator<<(std::ostream& os, const Ty& a) { return os << to_string(a); }

std::ostream& operator<<(std::ostream& os, const Var& x) { return os << x.index; }

std::ostream& operator<<(std::ostream& os, const Tm& t) {
  switch (t.kind()) {
    case Tm::Kind::Var: return os << t.var_index();
    case Tm::Kind::Abs: return os << "(\\" << t.abs_dom() << ". " << t.abs_body() << ")";
    case Tm::Kind::App: return os << "(" << t.app_fun() << " " << t.app_arg() << ")";
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const Nf& n) {
  if (n.is_lam()) return os << "(lam " << n.lam_body() << ")";
  return os << n.ne();
}

}  // namespace nbe
