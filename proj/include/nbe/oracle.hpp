#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "nbe/syntax.hpp"

namespace nbe::oracle {

inline constexpr std::uint64_t default_max_reductions = 1'000'000;

/// The reduction-count ceiling was hit before a normal form appeared. Cannot
/// happen for well-typed terms under a generous limit; reaching it means the
/// input or the reducer is wrong, so it is loud.
class LimitExceeded : public std::runtime_error {
 public:
  explicit LimitExceeded(std::uint64_t limit)
      : std::runtime_error("beta reduction limit exceeded: " + std::to_string(limit)),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// A shift would have produced a negative de Bruijn index.
class NegativeIndex : public std::logic_error {
 public:
  NegativeIndex() : std::logic_error("shift: negative de Bruijn index") {}
};

/// Adds `d` to every index that is free relative to `cutoff` (bound
/// variables below the cutoff are untouched).
Tm shift(std::int64_t d, std::uint32_t cutoff, const Tm& t);

/// Capture-avoiding substitution of `s` for index `j` in `t`. Indices above
/// `j` decrement, as when the binder that owned `j` has just been consumed.
Tm subst(const Tm& t, std::uint32_t j, const Tm& s);

/// One leftmost-outermost beta step, or nothing if `t` is beta-normal.
std::optional<Tm> beta_step(const Tm& t);

/// Leftmost-outermost reduction to beta-normal form. Deterministic; throws
/// LimitExceeded past `max_reductions` steps.
Tm beta_normalize(const Tm& t, std::uint64_t max_reductions = default_max_reductions);

/// Type-directed eta-expansion of a beta-normal term into the unique
/// eta-long form: a lambda at every arrow type, a fully expanded neutral
/// spine at the base type.
Nf eta_expand(const Cxt& ctx, const Ty& a, const Tm& t);

/// The eta-long beta-eta-normal form by plain substitution-based rewriting.
/// Independent of the closure-based engine, so agreement between the two is
/// meaningful evidence.
Nf normal_form(const CheckedTm& t, std::uint64_t max_reductions = default_max_reductions);

}  // namespace nbe::oracle
