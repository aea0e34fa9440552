#pragma once

#include <memory>
#include <ostream>
#include <variant>
#include <vector>

#include "nbe/syntax.hpp"

namespace nbe {

class Env;

/// Weak-head values: a neutral spine, or a closure pairing an unevaluated
/// body with an environment for every free variable except the bound one.
class Val {
 public:
  static Val neutral(Ne<Val> ne);
  static Val closure(Ty dom, Tm body, Env env);

  bool is_neutral() const;
  const Ne<Val>& ne() const;
  const Ty& clo_dom() const;
  const Tm& clo_body() const;
  const Env& clo_env() const;

  friend bool operator==(const Val& x, const Val& y);

 private:
  struct Node;
  explicit Val(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Value environment, one entry per context binding. Entries are stored
/// outermost first, matching Cxt, so variable 0 looks up the last entry.
class Env {
 public:
  Env() = default;

  std::size_t size() const { return entries_.size(); }
  Env extend(Val v) const;
  const Val& lookup(Var x) const;
  const std::vector<Val>& entries() const { return entries_; }

  friend bool operator==(const Env& x, const Env& y) { return x.entries_ == y.entries_; }

 private:
  explicit Env(std::vector<Val> entries) : entries_(std::move(entries)) {}
  std::vector<Val> entries_;
};

struct Val::Node {
  struct Closure {
    Ty dom;
    Tm body;
    Env env;
  };
  std::variant<Ne<Val>, Closure> repr;
};

inline Env Env::extend(Val v) const {
  std::vector<Val> entries = entries_;
  entries.push_back(std::move(v));
  return Env(std::move(entries));
}

/// Order-preserving embedding between contexts: a first-order witness that
/// one context extends another by inserting entries. Weak inserts a fresh
/// innermost entry; Lift keeps the innermost binding and embeds the rest.
class Ope {
 public:
  enum class Kind { Id, Weak, Lift };

  static Ope id() { return Ope(nullptr); }
  static Ope weak(Ope rest);
  static Ope lift(Ope rest);

  Kind kind() const;
  const Ope& rest() const;

  friend bool operator==(const Ope& x, const Ope& y);

 private:
  struct Node;
  explicit Ope(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Ope::Node {
  Kind kind;
  Ope rest;
};

inline Ope::Kind Ope::kind() const { return node_ ? node_->kind : Kind::Id; }

/// Composition of embeddings: `a` embeds the result context into the middle
/// one, `b` embeds the middle context into the innermost one. Follows the
/// five defining clauses; the right unit law holds by computation, not by a
/// dedicated clause.
Ope compose(const Ope& a, const Ope& b);

Var weaken_var(const Ope& o, Var x);
Val weaken_val(const Ope& o, const Val& v);
Env weaken_env(const Ope& o, const Env& env);
Ne<Val> weaken_neval(const Ope& o, const Ne<Val>& n);
Nf weaken_nf(const Ope& o, const Nf& n);
Ne<Nf> weaken_nenf(const Ope& o, const Ne<Nf>& n);

/// The environment mapping each variable of `ctx` to itself as a neutral
/// value; the starting point for normalizing open terms.
Env identity_env(const Cxt& ctx);

std::ostream& operator<<(std::ostream& os, const Val& v);
std::ostream& operator<<(std::ostream& os, const Env& env);
std::ostream& operator<<(std::ostream& os, const Ope& o);

}  // namespace nbe
