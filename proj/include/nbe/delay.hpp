#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <type_traits>
#include <utility>
#include <variant>

namespace nbe {

/// A computation of type A that yields its result after zero or more
/// observable delay steps, or never. `now` wraps a finished result; `later`
/// wraps a pure suspension producing the rest of the computation.
///
/// Construction never runs a suspension; only `converge` and `bisim` unwrap
/// layers. Values are immutable and cheap to copy, and safe to share across
/// threads as long as suspensions are pure.
template <typename A>
class Delay {
 public:
  using Suspension = std::function<Delay<A>()>;

  static Delay now(A value) {
    return Delay(std::make_shared<const Node>(
        Node{Repr(std::in_place_index<0>, std::move(value))}));
  }

  static Delay later(Suspension pending) {
    return Delay(std::make_shared<const Node>(
        Node{Repr(std::in_place_index<1>, std::move(pending))}));
  }

  /// The computation that is one more delay away from itself, forever.
  static Delay never() {
    return later([] { return never(); });
  }

  bool is_now() const { return node_->repr.index() == 0; }

  /// Precondition: is_now().
  const A& value() const { return std::get<0>(node_->repr); }

  /// Runs the suspension one layer. Precondition: !is_now().
  Delay force() const { return std::get<1>(node_->repr)(); }

 private:
  using Repr = std::variant<A, Suspension>;
  struct Node {
    Repr repr;
  };

  explicit Delay(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

template <typename A>
using Suspension = typename Delay<A>::Suspension;

inline constexpr std::uint64_t default_fuel = 1'000'000;

/// Outcome of observing a Delay under a fuel bound: the value together with
/// the number of delay layers unwrapped, or the fuel spent without reaching
/// a value. Divergence is a result, not an error.
template <typename A>
struct Convergence {
  std::optional<A> value;   // engaged iff the computation converged
  std::uint64_t steps = 0;  // layers unwrapped; equals the fuel when diverged

  bool converged() const { return value.has_value(); }

  friend bool operator==(const Convergence&, const Convergence&) = default;
};

template <typename A>
Convergence<std::decay_t<A>> converged(A&& value, std::uint64_t steps) {
  return {std::optional<std::decay_t<A>>(std::forward<A>(value)), steps};
}

template <typename A>
Convergence<A> diverged(std::uint64_t fuel_spent) {
  return {std::nullopt, fuel_spent};
}

/// now a >>= f  is  f a;  later layers are preserved and the bind is deferred
/// under the suspension, so delay steps add when both sides converge.
template <typename A, typename F>
std::invoke_result_t<F, const A&> bind(const Delay<A>& a, F f) {
  using DB = std::invoke_result_t<F, const A&>;
  if (a.is_now()) return f(a.value());
  return DB::later([a, f]() { return nbe::bind(a.force(), f); });
}

/// map adds no delay of its own.
template <typename F, typename A>
auto map(F f, const Delay<A>& a) -> Delay<std::decay_t<std::invoke_result_t<F, const A&>>> {
  using B = std::decay_t<std::invoke_result_t<F, const A&>>;
  return bind(a, [f](const A& x) { return Delay<B>::now(f(x)); });
}

/// Unwraps at most `fuel` later layers. Deterministic; the suspension of each
/// layer is run exactly once.
template <typename A>
Convergence<A> converge(Delay<A> a, std::uint64_t fuel) {
  std::uint64_t steps = 0;
  for (;;) {
    if (a.is_now()) return converged(a.value(), steps);
    if (steps == fuel) return diverged<A>(fuel);
    a = a.force();
    ++steps;
  }
}

/// Strong bisimilarity observed at most `depth` layers deep: equal values at
/// matching delay counts, or both computations still pending at the bound.
/// For computations that converge within `depth` this is exact.
template <typename A, typename Eq = std::equal_to<A>>
bool bisim(Delay<A> a, Delay<A> b, std::uint64_t depth, Eq eq = Eq{}) {
  for (std::uint64_t d = 0;; ++d) {
    const bool an = a.is_now();
    const bool bn = b.is_now();
    if (an && bn) return eq(a.value(), b.value());
    if (an != bn) return false;
    if (d == depth) return true;
    a = a.force();
    b = b.force();
  }
}

template <typename A>
std::ostream& operator<<(std::ostream& os, const Convergence<A>& c) {
  if (c.converged()) return os << "converged(" << *c.value << ", " << c.steps << ")";
  return os << "diverged(" << c.steps << ")";
}

}  // namespace nbe
