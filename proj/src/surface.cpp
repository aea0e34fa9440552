#include "nbe/surface.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <variant>

namespace nbe {

std::ostream& operator<<(std::ostream& os, const Pos& p) {
  return os << p.line << ":" << p.col;
}

namespace {

std::string describe_pos(const Pos& p) {
  return std::to_string(p.line) + ":" + std::to_string(p.col);
}

std::string parse_error_message(const Pos& pos, const std::vector<std::string>& expected,
                                const std::string& got) {
  std::string msg = describe_pos(pos) + ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
    msg += expected[i];
  }
  msg += ", got " + got;
  return msg;
}

}  // namespace

ParseError::ParseError(Pos pos, std::vector<std::string> expected, const std::string& got)
    : std::runtime_error(parse_error_message(pos, expected, got)),
      pos_(pos),
      expected_(std::move(expected)) {}

ScopeError::ScopeError(std::string name, Pos pos)
    : std::runtime_error(describe_pos(pos) + ": unbound name '" + name + "'"),
      name_(std::move(name)),
      pos_(pos) {}

struct SurfaceTm::Node {
  struct VarN {
    std::string name;
  };
  struct AbsN {
    std::string name;
    Ty dom;
    SurfaceTm body;
  };
  struct AppN {
    SurfaceTm fun;
    SurfaceTm arg;
  };
  std::variant<VarN, AbsN, AppN> repr;
  Pos pos;
};

SurfaceTm SurfaceTm::var(std::string name, Pos pos) {
  return SurfaceTm(std::make_shared<const Node>(
      Node{Node::VarN{std::move(name)}, pos}));
}

SurfaceTm SurfaceTm::abs(std::string name, Ty dom, SurfaceTm body, Pos pos) {
  return SurfaceTm(std::make_shared<const Node>(
      Node{Node::AbsN{std::move(name), std::move(dom), std::move(body)}, pos}));
}

SurfaceTm SurfaceTm::app(SurfaceTm fun, SurfaceTm arg) {
  const Pos pos = fun.pos();
  return SurfaceTm(std::make_shared<const Node>(
      Node{Node::AppN{std::move(fun), std::move(arg)}, pos}));
}

SurfaceTm::Kind SurfaceTm::kind() const {
  switch (node_->repr.index()) {
    case 0: return Kind::Var;
    case 1: return Kind::Abs;
    default: return Kind::App;
  }
}

Pos SurfaceTm::pos() const { return node_->pos; }

const std::string& SurfaceTm::var_name() const {
  detail::check(kind() == Kind::Var, "SurfaceTm::var_name on non-variable");
  return std::get<Node::VarN>(node_->repr).name;
}

const std::string& SurfaceTm::abs_name() const {
  detail::check(kind() == Kind::Abs, "SurfaceTm::abs_name on non-abstraction");
  return std::get<Node::AbsN>(node_->repr).name;
}

const Ty& SurfaceTm::abs_dom() const {
  detail::check(kind() == Kind::Abs, "SurfaceTm::abs_dom on non-abstraction");
  return std::get<Node::AbsN>(node_->repr).dom;
}

const SurfaceTm& SurfaceTm::abs_body() const {
  detail::check(kind() == Kind::Abs, "SurfaceTm::abs_body on non-abstraction");
  return std::get<Node::AbsN>(node_->repr).body;
}

const SurfaceTm& SurfaceTm::app_fun() const {
  detail::check(kind() == Kind::App, "SurfaceTm::app_fun on non-application");
  return std::get<Node::AppN>(node_->repr).fun;
}

const SurfaceTm& SurfaceTm::app_arg() const {
  detail::check(kind() == Kind::App, "SurfaceTm::app_arg on non-application");
  return std::get<Node::AppN>(node_->repr).arg;
}

namespace {

struct Token {
  enum class Kind { Lambda, Dot, Colon, LParen, RParen, Star, Arrow, Ident, End };
  Kind kind;
  std::string text;
  Pos pos;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  Pos at{1, 1};
  const auto bump = [&](char c) {
    if (c == '\n') {
      ++at.line;
      at.col = 1;
    } else {
      ++at.col;
    }
  };
  const auto simple = [&](Token::Kind kind, const char* text) {
    out.push_back(Token{kind, text, at});
    bump(src[i]);
    ++i;
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      bump(c);
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') {
        bump(src[i]);
        ++i;
      }
      continue;
    }
    switch (c) {
      case '\\': simple(Token::Kind::Lambda, "\\"); continue;
      case '.': simple(Token::Kind::Dot, "."); continue;
      case ':': simple(Token::Kind::Colon, ":"); continue;
      case '(': simple(Token::Kind::LParen, "("); continue;
      case ')': simple(Token::Kind::RParen, ")"); continue;
      case '*': simple(Token::Kind::Star, "*"); continue;
      default: break;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      out.push_back(Token{Token::Kind::Arrow, "->", at});
      bump(src[i]);
      bump(src[i + 1]);
      i += 2;
      continue;
    }
    if (ident_start(c)) {
      const Pos start = at;
      std::string name;
      while (i < src.size() && ident_char(src[i])) {
        name += src[i];
        bump(src[i]);
        ++i;
      }
      out.push_back(Token{Token::Kind::Ident, std::move(name), start});
      continue;
    }
    throw ParseError(at, {"a token"}, std::string("'") + c + "'");
  }
  out.push_back(Token{Token::Kind::End, "", at});
  return out;
}

std::string describe(const Token& t) {
  if (t.kind == Token::Kind::End) return "end of input";
  return "'" + t.text + "'";
}

struct Parser {
  std::vector<Token> toks;
  std::size_t i = 0;

  const Token& peek() const { return toks[i]; }
  Token eat() { return toks[i++]; }

  [[noreturn]] void fail_expecting(std::vector<std::string> expected) const {
    throw ParseError(peek().pos, std::move(expected), describe(peek()));
  }

  Token expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail_expecting({what});
    return eat();
  }

  Ty type() {
    Ty lhs = type_atom();
    if (peek().kind == Token::Kind::Arrow) {
      eat();
      return Ty::arrow(std::move(lhs), type());
    }
    return lhs;
  }

  Ty type_atom() {
    switch (peek().kind) {
      case Token::Kind::Star:
        eat();
        return Ty::star();
      case Token::Kind::LParen: {
        eat();
        Ty inner = type();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      default:
        fail_expecting({"'*'", "'('"});
    }
  }

  SurfaceTm term() {
    if (peek().kind == Token::Kind::Lambda) {
      const Pos pos = eat().pos;
      const Token name = expect(Token::Kind::Ident, "a binder name");
      expect(Token::Kind::Colon, "':'");
      Ty dom = type();
      expect(Token::Kind::Dot, "'.'");
      SurfaceTm body = term();
      return SurfaceTm::abs(name.text, std::move(dom), std::move(body), pos);
    }
    return application();
  }

  static bool starts_atom(Token::Kind kind) {
    return kind == Token::Kind::Ident || kind == Token::Kind::LParen;
  }

  SurfaceTm application() {
    SurfaceTm t = atom();
    while (starts_atom(peek().kind)) t = SurfaceTm::app(std::move(t), atom());
    return t;
  }

  SurfaceTm atom() {
    switch (peek().kind) {
      case Token::Kind::Ident: {
        Token t = eat();
        return SurfaceTm::var(std::move(t.text), t.pos);
      }
      case Token::Kind::LParen: {
        eat();
        SurfaceTm inner = term();
        expect(Token::Kind::RParen, "')'");
        return inner;
      }
      default:
        fail_expecting({"a term"});
    }
  }
};

}  // namespace

SurfaceTm parse(const std::string& input) {
  Parser p{lex(input)};
  SurfaceTm t = p.term();
  if (p.peek().kind != Token::Kind::End) p.fail_expecting({"end of input"});
  return t;
}

Ty parse_type(const std::string& input) {
  Parser p{lex(input)};
  Ty a = p.type();
  if (p.peek().kind != Token::Kind::End) p.fail_expecting({"end of input"});
  return a;
}

namespace {

Tm resolve_rec(const std::vector<FreeVar>& free, std::vector<std::string>& binders,
               const SurfaceTm& t) {
  switch (t.kind()) {
    case SurfaceTm::Kind::Var: {
      const std::string& name = t.var_name();
      for (std::size_t k = 0; k < binders.size(); ++k) {
        if (binders[binders.size() - 1 - k] == name) {
          return Tm::var(static_cast<std::uint32_t>(k));
        }
      }
      for (std::size_t j = free.size(); j-- > 0;) {
        if (free[j].name == name) {
          return Tm::var(
              static_cast<std::uint32_t>(binders.size() + (free.size() - 1 - j)));
        }
      }
      throw ScopeError(name, t.pos());
    }
    case SurfaceTm::Kind::Abs: {
      binders.push_back(t.abs_name());
      Tm body = resolve_rec(free, binders, t.abs_body());
      binders.pop_back();
      return Tm::abs(t.abs_dom(), std::move(body));
    }
    case SurfaceTm::Kind::App:
      return Tm::app(resolve_rec(free, binders, t.app_fun()),
                     resolve_rec(free, binders, t.app_arg()));
  }
  detail::fail("resolve: bad kind");
}

}  // namespace

Tm resolve(const std::vector<FreeVar>& free, const SurfaceTm& t) {
  std::vector<std::string> binders;
  return resolve_rec(free, binders, t);
}

namespace {

bool name_taken(const std::vector<std::string>& free_names,
                const std::vector<std::string>& binders, const std::string& name) {
  return std::find(free_names.begin(), free_names.end(), name) != free_names.end() ||
         std::find(binders.begin(), binders.end(), name) != binders.end();
}

std::string fresh_name(const std::vector<std::string>& free_names,
                       const std::vector<std::string>& binders) {
  for (std::size_t k = binders.size();; ++k) {
    std::string candidate = "x" + std::to_string(k);
    if (!name_taken(free_names, binders, candidate)) return candidate;
  }
}

// prec 0: lambda may appear bare. prec 1: function position. prec 2:
// argument position.
void print_rec(std::ostream& os, const std::vector<std::string>& free_names,
               std::vector<std::string>& binders, const Tm& t, int prec) {
  switch (t.kind()) {
    case Tm::Kind::Var: {
      const std::size_t k = t.var_index().index;
      if (k < binders.size()) {
        os << binders[binders.size() - 1 - k];
        return;
      }
      const std::size_t beyond = k - binders.size();
      detail::check(beyond < free_names.size(), "print_tm: index out of range");
      os << free_names[free_names.size() - 1 - beyond];
      return;
    }
    case Tm::Kind::Abs: {
      const bool parens = prec > 0;
      if (parens) os << "(";
      std::string name = fresh_name(free_names, binders);
      os << "\\" << name << ":" << to_string(t.abs_dom()) << ". ";
      binders.push_back(std::move(name));
      print_rec(os, free_names, binders, t.abs_body(), 0);
      binders.pop_back();
      if (parens) os << ")";
      return;
    }
    case Tm::Kind::App: {
      const bool parens = prec > 1;
      if (parens) os << "(";
      print_rec(os, free_names, binders, t.app_fun(), 1);
      os << " ";
      print_rec(os, free_names, binders, t.app_arg(), 2);
      if (parens) os << ")";
      return;
    }
  }
  detail::fail("print_tm: bad kind");
}

void print_db_rec(std::ostream& os, const Tm& t, int prec) {
  switch (t.kind()) {
    case Tm::Kind::Var:
      os << t.var_index().index;
      return;
    case Tm::Kind::Abs: {
      const bool parens = prec > 0;
      if (parens) os << "(";
      os << "\\:" << to_string(t.abs_dom()) << ". ";
      print_db_rec(os, t.abs_body(), 0);
      if (parens) os << ")";
      return;
    }
    case Tm::Kind::App: {
      const bool parens = prec > 1;
      if (parens) os << "(";
      print_db_rec(os, t.app_fun(), 1);
      os << " ";
      print_db_rec(os, t.app_arg(), 2);
      if (parens) os << ")";
      return;
    }
  }
  detail::fail("print_tm_de_bruijn: bad kind");
}

}  // namespace

std::string print_tm(const std::vector<std::string>& free_names, const Tm& t) {
  std::ostringstream os;
  std::vector<std::string> binders;
  print_rec(os, free_names, binders, t, 0);
  return os.str();
}

std::string print_nf(const std::vector<std::string>& free_names, const Cxt& ctx,
                     const Ty& a, const Nf& n) {
  return print_tm(free_names, embed_nf(ctx, a, n));
}

std::string print_tm_de_bruijn(const Tm& t) {
  std::ostringstream os;
  print_db_rec(os, t, 0);
  return os.str();
}

}  // namespace nbe
