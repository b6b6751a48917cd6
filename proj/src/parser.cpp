#include "robmon/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "robmon/errors.hpp"

namespace robmon {

namespace {

enum class Tok {
  Ident,
  Number,
  LBrack,
  RBrack,
  LParen,
  RParen,
  Comma,
  Arrow,
  OrSym,
  AndSym,
  Bang,
  Diamond,
  Box,
  DiamondDot,
  BoxDot,
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return src.substr(i, lit.size()) == lit; };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto push = [&](Tok k, std::size_t len) {
      out.push_back({k, src.substr(i, len), i});
      i += len;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      push(Tok::Ident, j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && (std::isdigit(static_cast<unsigned char>(src[j])) || src[j] == '.')) {
        ++j;
      }
      push(Tok::Number, j - i);
    } else if (starts("[*]")) {
      push(Tok::BoxDot, 3);
    } else if (starts("[]")) {
      push(Tok::Box, 2);
    } else if (starts("<*>")) {
      push(Tok::DiamondDot, 3);
    } else if (starts("<>")) {
      push(Tok::Diamond, 2);
    } else if (starts("->")) {
      push(Tok::Arrow, 2);
    } else if (starts("\\/")) {
      push(Tok::OrSym, 2);
    } else if (starts("/\\")) {
      push(Tok::AndSym, 2);
    } else if (c == '[') {
      push(Tok::LBrack, 1);
    } else if (c == ']') {
      push(Tok::RBrack, 1);
    } else if (c == '(') {
      push(Tok::LParen, 1);
    } else if (c == ')') {
      push(Tok::RParen, 1);
    } else if (c == ',') {
      push(Tok::Comma, 1);
    } else if (c == '!') {
      push(Tok::Bang, 1);
    } else {
      throw FormulaError(std::string("syntax error: unexpected character '") + c + "'", i);
    }
  }
  out.push_back({Tok::End, {}, src.size()});
  return out;
}

bool is_keyword(std::string_view w) {
  static constexpr std::string_view kKeywords[] = {
      "not",  "and",    "or",    "U",     "S",    "until",        "since", "eventually",
      "always", "once", "historically", "next", "prev", "true", "false", "inf"};
  for (auto k : kKeywords) {
    if (k == w) return true;
  }
  return false;
}

class Parser {
 public:
  Parser(std::string_view src, const ParseOptions& opts) : tokens_(lex(src)), opts_(opts) {}

  Expr parse_all() {
    Expr e = implies();
    if (peek().kind != Tok::End) fail("expected end of formula");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token advance() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }

  bool word(std::string_view w) const { return peek().kind == Tok::Ident && peek().text == w; }

  [[noreturn]] void fail(const std::string& what) const {
    std::string near = peek().kind == Tok::End ? "end of input" : "'" + std::string(peek().text) + "'";
    throw FormulaError("syntax error: " + what + ", found " + near, peek().pos);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    advance();
  }

  Expr implies() {
    Expr lhs = disjunction();
    if (peek().kind == Tok::Arrow) {
      advance();
      return expr::implies(std::move(lhs), implies());
    }
    return lhs;
  }

  Expr disjunction() {
    Expr lhs = conjunction();
    while (word("or") || peek().kind == Tok::OrSym) {
      advance();
      lhs = expr::disj(std::move(lhs), conjunction());
    }
    return lhs;
  }

  Expr conjunction() {
    Expr lhs = binary();
    while (word("and") || peek().kind == Tok::AndSym) {
      advance();
      lhs = expr::conj(std::move(lhs), binary());
    }
    return lhs;
  }

  Expr binary() {
    Expr lhs = unary();
    if (word("U") || word("until")) {
      advance();
      auto i = interval(true);
      return expr::until(std::move(lhs), i, unary());
    }
    if (word("S") || word("since")) {
      advance();
      auto i = interval(false);
      return expr::since(std::move(lhs), i, unary());
    }
    return lhs;
  }

  Expr unary() {
    const auto& t = peek();
    if (word("not") || t.kind == Tok::Bang) {
      advance();
      return expr::negation(unary());
    }
    if (word("eventually") || t.kind == Tok::Diamond) {
      advance();
      auto i = interval(true);
      return expr::eventually(i, unary());
    }
    if (word("always") || t.kind == Tok::Box) {
      advance();
      auto i = interval(true);
      return expr::always(i, unary());
    }
    if (word("once") || t.kind == Tok::DiamondDot) {
      advance();
      auto i = interval(false);
      return expr::once(i, unary());
    }
    if (word("historically") || t.kind == Tok::BoxDot) {
      advance();
      auto i = interval(false);
      return expr::historically(i, unary());
    }
    if (word("next")) {
      advance();
      return expr::next(unary());
    }
    if (word("prev")) {
      advance();
      return expr::prev(unary());
    }
    return primary();
  }

  Expr primary() {
    const auto& t = peek();
    if (t.kind == Tok::LParen) {
      advance();
      Expr e = implies();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (word("true")) {
      advance();
      return expr::truth();
    }
    if (word("false")) {
      advance();
      return expr::falsity();
    }
    if (t.kind == Tok::Ident && !is_keyword(t.text)) {
      return expr::atom(std::string(advance().text));
    }
    fail("expected a formula");
  }

  std::size_t bound() {
    const auto& t = peek();
    if (t.kind != Tok::Number) fail("expected an interval bound");
    double value = 0;
    auto [end, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc{} || end != t.text.data() + t.text.size()) fail("malformed number");
    std::size_t at = t.pos;
    advance();
    if (!opts_.seconds_per_sample) {
      if (t.text.find('.') != std::string_view::npos) {
        throw FormulaError("interval bound must be a whole number of samples", at);
      }
      return static_cast<std::size_t>(value);
    }
    double dt = *opts_.seconds_per_sample;
    double samples = value / dt;
    double rounded = std::round(samples);
    if (std::abs(samples - rounded) > 1e-6 * std::max(1.0, rounded)) {
      throw FormulaError("interval bound " + std::string(t.text) +
                             " s is not a multiple of the sampling period",
                         at);
    }
    return static_cast<std::size_t>(rounded);
  }

  Interval interval(bool future) {
    std::size_t at = peek().pos;
    expect(Tok::LBrack, "'['");
    std::size_t lo = bound();
    expect(Tok::Comma, "','");
    if (word("inf")) {
      advance();
      expect(Tok::RParen, "')' after inf");
      if (future) throw FormulaError("unbounded future interval", at);
      return Interval::from(lo);
    }
    std::size_t hi = bound();
    expect(Tok::RBrack, "']'");
    if (lo > hi) throw FormulaError("empty interval", at);
    return Interval::closed(lo, hi);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseOptions opts_;
};

std::string interval_text(const Interval& i) {
  return "[" + std::to_string(i.lower) + "," +
         (i.unbounded() ? std::string("inf)") : std::to_string(*i.upper) + "]");
}

bool is_leaf(const Expr& e) {
  return e.kind == ExprKind::True || e.kind == ExprKind::False || e.kind == ExprKind::Atom;
}

std::string wrapped(const Expr& e) { return is_leaf(e) ? to_string(e) : "(" + to_string(e) + ")"; }

}  // namespace

Expr parse(std::string_view text, const ParseOptions& options) {
  return Parser(text, options).parse_all();
}

Formula parse_formula(std::string_view text, const ParseOptions& options) {
  return Formula::from_expr(parse(text, options));
}

std::string to_string(const Expr& e) {
  auto unary = [&](const char* op) {
    return std::string(op) + (e.interval ? interval_text(*e.interval) : "") + " " +
           wrapped(e.args.at(0));
  };
  auto binary = [&](const std::string& op) {
    return wrapped(e.args.at(0)) + " " + op + " " + wrapped(e.args.at(1));
  };
  switch (e.kind) {
    case ExprKind::True:
      return "true";
    case ExprKind::False:
      return "false";
    case ExprKind::Atom:
      return e.name;
    case ExprKind::Not:
      return unary("not");
    case ExprKind::And:
      return binary("and");
    case ExprKind::Or:
      return binary("or");
    case ExprKind::Implies:
      return binary("->");
    case ExprKind::Until:
      return binary("U" + interval_text(*e.interval));
    case ExprKind::Since:
      return binary("S" + interval_text(*e.interval));
    case ExprKind::Eventually:
      return unary("eventually");
    case ExprKind::Always:
      return unary("always");
    case ExprKind::Once:
      return unary("once");
    case ExprKind::Historically:
      return unary("historically");
    case ExprKind::Next:
      return unary("next");
    case ExprKind::Prev:
      return unary("prev");
  }
  return {};
}

}  // namespace robmon
