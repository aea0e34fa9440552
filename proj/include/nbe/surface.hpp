#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nbe/syntax.hpp"

namespace nbe {

/// 1-based source position.
struct Pos {
  std::uint32_t line = 1;
  std::uint32_t col = 1;

  friend bool operator==(const Pos&, const Pos&) = default;
};

std::ostream& operator<<(std::ostream& os, const Pos& p);

class ParseError : public std::runtime_error {
 public:
  ParseError(Pos pos, std::vector<std::string> expected, const std::string& got);

  const Pos& pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  Pos pos_;
  std::vector<std::string> expected_;
};

class ScopeError : public std::runtime_error {
 public:
  ScopeError(std::string name, Pos pos);

  const std::string& name() const { return name_; }
  const Pos& pos() const { return pos_; }

 private:
  std::string name_;
  Pos pos_;
};

/// Named lambda terms as parsed. Shadowing is permitted; every node carries
/// the position it started at.
class SurfaceTm {
 public:
  enum class Kind { Var, Abs, App };

  static SurfaceTm var(std::string name, Pos pos);
  static SurfaceTm abs(std::string name, Ty dom, SurfaceTm body, Pos pos);
  static SurfaceTm app(SurfaceTm fun, SurfaceTm arg);

  Kind kind() const;
  Pos pos() const;
  const std::string& var_name() const;
  const std::string& abs_name() const;
  const Ty& abs_dom() const;
  const SurfaceTm& abs_body() const;
  const SurfaceTm& app_fun() const;
  const SurfaceTm& app_arg() const;

 private:
  struct Node;
  explicit SurfaceTm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar:
///   type ::= '*' | type '->' type (right associative) | '(' type ')'
///   term ::= ident | '\' ident ':' type '.' term
///          | term term (left associative) | '(' term ')'
/// Whitespace is insignificant; `--` starts a comment running to end of
/// line. Application binds tighter than a lambda body, and a lambda in
/// function or argument position needs parentheses.
SurfaceTm parse(const std::string& input);

/// Parses a single type, e.g. the annotation of a free-variable declaration.
Ty parse_type(const std::string& input);

/// A free-variable declaration; a list of these, outermost first, forms the
/// ambient context.
struct FreeVar {
  std::string name;
  Ty type;
};

/// Innermost-binding-wins resolution of names to de Bruijn indices. Free
/// names resolve against `free`, declared outermost first.
Tm resolve(const std::vector<FreeVar>& free, const SurfaceTm& t);

/// Named form of a term. Binders get fresh names x0, x1, ... chosen to avoid
/// `free_names`; free variables print under their declared names. The output
/// re-parses and re-resolves to exactly `t`.
std::string print_tm(const std::vector<std::string>& free_names, const Tm& t);

/// Named form of a normal form (embeds it as a term first, so the naming
/// discipline matches print_tm).
std::string print_nf(const std::vector<std::string>& free_names, const Cxt& ctx,
                     const Ty& a, const Nf& n);

/// Index form, e.g. "\:*. 0". Stable under any choice of names.
std::string print_tm_de_bruijn(const Tm& t);

}  // namespace nbe
