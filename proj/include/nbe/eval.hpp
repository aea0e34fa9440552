#pragma once

#include <cstdint>
#include <variant>

#include "nbe/delay.hpp"
#include "nbe/semantics.hpp"
#include "nbe/syntax.hpp"

namespace nbe {

/// Evaluation into the delay monad. Constructing the returned Delay always
/// terminates; firing a beta redex surfaces as a delay layer rather than an
/// unguarded recursive call, so only converge/bisim do unbounded work.
Delay<Val> eval(const Tm& t, const Env& env);

/// Application of values. A neutral head grows its spine with no delay; a
/// closure contributes exactly one delay layer wrapping the suspended body
/// evaluation.
Delay<Val> apply(const Val& f, const Val& v);

/// The suspension that evaluates `body` in `env` extended with `v`. apply on
/// a closure is later(beta(...)) structurally.
Suspension<Val> beta(const Tm& body, const Env& env, const Val& v);

/// Type-directed readback into eta-long normal form: a lambda at every arrow
/// type (one delay layer per eta-expansion), a neutral spine at the base
/// type. `ctx` types the value's free variables.
Delay<Nf> readback(const Cxt& ctx, const Ty& a, const Val& v);

/// Reads back a neutral spine. The head variable is preserved; each spine
/// value is read back at the type the head demands for that position.
Delay<Ne<Nf>> readback_neutral(const Cxt& ctx, const Ne<Val>& n);

/// The suspended eta-expansion of a value `v` of arrow type `a`: weakens `v`
/// into the context extended by the domain, applies it to variable 0, and
/// reads the result back at the codomain.
Suspension<Nf> eta(const Cxt& ctx, const Ty& a, const Val& v);

/// Evaluation in the identity environment followed by readback: the whole
/// normalizer as one delayed computation.
Delay<Nf> nf(const CheckedTm& t);

struct NormalizeReport {
  Nf normal;
  std::uint64_t eval_steps = 0;
  std::uint64_t readback_steps = 0;
  std::uint64_t total_steps = 0;

  friend bool operator==(const NormalizeReport&, const NormalizeReport&) = default;
};

struct FuelExhausted {
  std::uint64_t fuel_spent = 0;

  friend bool operator==(const FuelExhausted&, const FuelExhausted&) = default;
};

using NormalizeOutcome = std::variant<NormalizeReport, FuelExhausted>;

/// Runs converge over the evaluation phase and then the readback phase so the
/// report can attribute delay steps to each; the step counts add, exactly as
/// they would under one converge of the composed computation.
NormalizeOutcome normalize(const CheckedTm& t, std::uint64_t fuel = default_fuel);

}  // namespace nbe
