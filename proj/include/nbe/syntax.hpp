#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace nbe {

namespace detail {
// Internal invariant check. Violations signal a bug in a caller that was
// supposed to pass checked data; they fail hard in every build mode.
[[noreturn]] void fail(const char* what);
inline void check(bool ok, const char* what) {
  if (!ok) fail(what);
}
}  // namespace detail

/// Simple types: one base type and function types.
class Ty {
 public:
  static Ty star() { return Ty(); }
  static Ty arrow(Ty dom, Ty cod);

  bool is_arrow() const { return node_ != nullptr; }
  const Ty& dom() const;
  const Ty& cod() const;

  friend bool operator==(const Ty& x, const Ty& y);

 private:
  Ty() = default;
  struct Node;
  std::shared_ptr<const Node> node_;  // null means the base type
};

struct Ty::Node {
  Ty dom;
  Ty cod;
};

inline Ty Ty::arrow(Ty dom, Ty cod) {
  Ty t;
  t.node_ = std::make_shared<const Node>(Node{std::move(dom), std::move(cod)});
  return t;
}

inline const Ty& Ty::dom() const {
  detail::check(is_arrow(), "Ty::dom on base type");
  return node_->dom;
}

inline const Ty& Ty::cod() const {
  detail::check(is_arrow(), "Ty::cod on base type");
  return node_->cod;
}

inline bool operator==(const Ty& x, const Ty& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  return x.node_->dom == y.node_->dom && x.node_->cod == y.node_->cod;
}

std::string to_string(const Ty& a);

/// De Bruijn index; 0 is the innermost binder.
struct Var {
  std::uint32_t index = 0;
  friend bool operator==(const Var&, const Var&) = default;
};

/// Typing context. Entries are stored outermost first, so the innermost
/// binding (variable 0) is the last entry.
class Cxt {
 public:
  Cxt() = default;
  explicit Cxt(std::vector<Ty> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  Cxt extend(Ty a) const;
  const Ty& var_type(Var x) const;
  const std::vector<Ty>& entries() const { return entries_; }

  friend bool operator==(const Cxt&, const Cxt&) = default;

 private:
  std::vector<Ty> entries_;
};

/// Raw de Bruijn terms. Binders carry their domain type so that type
/// synthesis is total.
class Tm {
 public:
  enum class Kind { Var, Abs, App };

  static Tm var(Var x);
  static Tm var(std::uint32_t index) { return var(Var{index}); }
  static Tm abs(Ty dom, Tm body);
  static Tm app(Tm fun, Tm arg);

  Kind kind() const;
  Var var_index() const;
  const Ty& abs_dom() const;
  const Tm& abs_body() const;
  const Tm& app_fun() const;
  const Tm& app_arg() const;

  friend bool operator==(const Tm& x, const Tm& y);

 private:
  struct Node;
  explicit Tm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Tm::Node {
  struct Abs {
    Ty dom;
    Tm body;
  };
  struct App {
    Tm fun;
    Tm arg;
  };
  std::variant<Var, Abs, App> repr;
};

/// Neutral spine: a head variable applied to arguments, outermost
/// application last. Parametric in the argument payload (values during
/// evaluation, normal forms after readback).
template <typename X>
struct Ne {
  Var head;
  std::vector<X> spine;

  friend bool operator==(const Ne&, const Ne&) = default;
};

/// Beta-eta-long normal forms: a lambda at function type, a neutral spine at
/// base type.
class Nf {
 public:
  static Nf lam(Nf body);
  static Nf neutral(Ne<Nf> ne);

  bool is_lam() const;
  const Nf& lam_body() const;
  const Ne<Nf>& ne() const;

  friend bool operator==(const Nf& x, const Nf& y);

 private:
  struct Node;
  explicit Nf(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Nf::Node {
  std::variant<Nf, Ne<Nf>> repr;  // index 0 = lambda body
};

class TypeError : public std::runtime_error {
 public:
  enum class Kind { UnboundVariable, ExpectedFunction, ArgumentMismatch };

  static TypeError unbound_variable(std::uint32_t index);
  static TypeError expected_function(Ty actual);
  static TypeError argument_mismatch(Ty expected, Ty actual);

  Kind kind() const { return kind_; }
  std::uint32_t index() const { return index_; }
  const Ty& expected() const { return *expected_; }
  const Ty& actual() const { return *actual_; }

 private:
  TypeError(Kind kind, std::string message) : std::runtime_error(std::move(message)), kind_(kind) {}
  Kind kind_;
  std::uint32_t index_ = 0;
  std::optional<Ty> expected_;
  std::optional<Ty> actual_;
};

/// A term together with the context and type established for it by
/// infer_type. The metadata is trustworthy by construction.
class CheckedTm {
 public:
  const Tm& term() const { return term_; }
  const Cxt& ctx() const { return ctx_; }
  const Ty& type() const { return type_; }

 private:
  friend CheckedTm infer_type(const Cxt& ctx, const Tm& t);
  CheckedTm(Tm term, Cxt ctx, Ty type)
      : term_(std::move(term)), ctx_(std::move(ctx)), type_(std::move(type)) {}
  Tm term_;
  Cxt ctx_;
  Ty type_;
};

/// Synthesizes the type of a raw term, or throws TypeError.
CheckedTm infer_type(const Cxt& ctx, const Tm& t);

/// The evident term of a well-typed normal form in `ctx` at type `a`.
/// infer_type succeeds on the result with the same type.
Tm embed_nf(const Cxt& ctx, const Ty& a, const Nf& n);

// Debug printers (de Bruijn form).
std::ostream& operator<<(std::ostream& os, const Ty& a);
std::ostream& operator<<(std::ostream& os, const Var& x);
std::ostream& operator<<(std::ostream& os, const Tm& t);
std::ostream& operator<<(std::ostream& os, const Nf& n);

template <typename X>
std::ostream& operator<<(std::ostream& os, const Ne<X>& ne) {
  if (ne.spine.empty()) return os << ne.head;
  os << "(" << ne.head;
  for (const X& x : ne.spine) os << " " << x;
  return os << ")";
}

}  // namespace nbe
