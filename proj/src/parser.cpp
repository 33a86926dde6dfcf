#include "jetsym/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace jetsym {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

constexpr std::size_t kMaxOrder = 10000;
constexpr std::size_t kMaxPower = 1000;

enum class Tok { Ident, Number, Underscore, Plus, Minus, Star, Slash, Caret, LParen, RParen, LBracket, RBracket,
                 Equals, Newline, End, Bad };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto push = [&](Tok k, std::string text) { out.push_back({k, std::move(text), line, col}); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i, ++col;
      continue;
    }
    if (c == '\n') {
      push(Tok::Newline, "newline");
      ++i, ++line, col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i, ++col;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isalnum(static_cast<unsigned char>(src[i]))) ++i;
      push(Tok::Ident, std::string(src.substr(start, i - start)));
      col += i - start;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      push(Tok::Number, std::string(src.substr(start, i - start)));
      col += i - start;
      continue;
    }
    Tok k = Tok::Bad;
    switch (c) {
      case '_': k = Tok::Underscore; break;
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '[': k = Tok::LBracket; break;
      case ']': k = Tok::RBracket; break;
      case '=': k = Tok::Equals; break;
      default: break;
    }
    push(k, std::string(1, c));
    ++i, ++col;
  }
  push(Tok::End, "end of input");
  return out;
}

class Parser {
 public:
  Parser(std::string_view src) : toks_(lex(src)) {}

  EvolutionSystem system() {
    skip_newlines();
    expect_keyword("system");
    EvolutionSystem s;
    s.name = expect(Tok::Ident, "system name").text;
    end_of_statement();
    names_.param = "alpha";
    std::vector<std::optional<DiffPoly>> rhs;
    bool have_vars = false;
    for (skip_newlines(); peek().kind != Tok::End; skip_newlines()) {
      const Token& t = peek();
      if (t.kind == Tok::Ident && t.text == "param" && !param_ && !have_vars) {
        next();
        const Token& p = expect(Tok::Ident, "parameter name");
        check_fresh(p);
        param_ = p.text;
        names_.param = p.text;
      } else if (t.kind == Tok::Ident && t.text == "vars" && !have_vars) {
        next();
        do {
          const Token& v = expect(Tok::Ident, "variable name");
          check_fresh(v);
          names_.depvars.push_back(v.text);
        } while (peek().kind == Tok::Ident);
        have_vars = true;
        rhs.resize(names_.depvars.size());
      } else if (t.kind == Tok::Ident && t.text == "eq" && have_vars) {
        next();
        const Token& v = expect(Tok::Ident, "variable name");
        auto d = depvar(v.text);
        if (!d) throw UnknownIdentifier(v.line, v.col, v.text);
        expect(Tok::Underscore, "_t");
        const Token& tt = peek();
        if (tt.kind != Tok::Ident || tt.text != "t") fail({"_t"});
        next();
        expect(Tok::Equals, "=");
        if (rhs[*d]) throw DuplicateEquation(v.line, v.text);
        rhs[*d] = expr();
      } else {
        std::vector<std::string> want;
        if (!param_ && !have_vars) want.push_back("param");
        if (!have_vars) want.push_back("vars");
        else want.push_back("eq");
        fail(want);
      }
      end_of_statement();
    }
    if (!have_vars) throw MissingEquation("(no vars declared)");
    std::vector<DiffPoly> comps;
    for (std::size_t d = 0; d < rhs.size(); ++d) {
      if (!rhs[d]) throw MissingEquation(names_.depvars[d]);
      comps.push_back(std::move(*rhs[d]));
    }
    s.names = names_;
    s.parameter = param_;
    s.rhs = EvoField(std::move(comps));
    return s;
  }

  OpEntry operator_entry(const VarNames& names) {
    names_ = names;
    param_ = names.param;
    skip_newlines();
    std::vector<OpTerm> terms;
    if (peek().kind == Tok::Number && peek().text == "0") {
      next();
    } else {
      do {
        expect(Tok::LParen, "(");
        DiffPoly c = expr();
        expect(Tok::RParen, ")");
        int power = 0;
        if (peek().kind == Tok::Star) {
          next();
          const Token& d = expect(Tok::Ident, "D or Dinv");
          if (d.text == "Dinv") {
            power = -1;
          } else if (d.text == "D") {
            power = 1;
            if (peek().kind == Tok::Caret) {
              next();
              power = static_cast<int>(natural(kMaxPower));
            }
          } else {
            throw ParseError(d.line, d.col, {"D", "Dinv"}, d.text);
          }
        }
        terms.push_back({std::move(c), power});
      } while (peek().kind == Tok::Plus && (next(), true));
    }
    skip_newlines();
    if (peek().kind != Tok::End) fail({"+", "end of input"});
    return OpEntry(std::move(terms));
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.line, t.col, std::move(expected), t.text);
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail({what});
    return next();
  }

  void expect_keyword(const std::string& kw) {
    if (peek().kind != Tok::Ident || peek().text != kw) fail({kw});
    next();
  }

  void skip_newlines() {
    while (peek().kind == Tok::Newline) next();
  }

  void end_of_statement() {
    if (peek().kind != Tok::Newline && peek().kind != Tok::End) fail({"end of line"});
  }

  std::optional<std::size_t> depvar(const std::string& id) const {
    auto it = std::find(names_.depvars.begin(), names_.depvars.end(), id);
    if (it == names_.depvars.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.depvars.begin());
  }

  void check_fresh(const Token& t) const {
    static const char* reserved[] = {"x", "t", "D", "Dinv", "system", "param", "vars", "eq"};
    bool clash = std::any_of(std::begin(reserved), std::end(reserved), [&](const char* r) { return t.text == r; }) ||
                 depvar(t.text) || (param_ && *param_ == t.text);
    if (clash) throw ParseError(t.line, t.col, {"fresh identifier"}, t.text);
  }

  std::size_t natural(std::size_t cap) {
    const Token& n = expect(Tok::Number, "natural number");
    if (n.text.size() > 6 || std::stoul(n.text) > cap)
      throw ParseError(n.line, n.col, {"number <= " + std::to_string(cap)}, n.text);
    return std::stoul(n.text);
  }

  DiffPoly expr() {
    DiffPoly acc = term();
    for (;;) {
      if (peek().kind == Tok::Plus) {
        next();
        acc += term();
      } else if (peek().kind == Tok::Minus) {
        next();
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  DiffPoly term() {
    DiffPoly acc = factor();
    for (;;) {
      if (peek().kind == Tok::Star) {
        next();
        acc = acc * factor();
      } else if (peek().kind == Tok::Slash) {
        next();
        const Token at = peek();
        DiffPoly d = factor();
        bool constant = d.size() == 1 && d.terms()[0].first.is_one();
        if (!constant) throw ParseError(at.line, at.col, {"nonzero constant divisor"}, at.text);
        acc *= d.terms()[0].second.inverse();
      } else {
        return acc;
      }
    }
  }

  DiffPoly factor() {
    DiffPoly b = base();
    if (peek().kind == Tok::Caret) {
      next();
      b = b.pow(static_cast<unsigned>(natural(kMaxPower)));
    }
    return b;
  }

  DiffPoly base() {
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return DiffPoly(RationalFunction(parse_rational(t.text)));
      case Tok::LParen: {
        next();
        DiffPoly e = expr();
        expect(Tok::RParen, ")");
        return e;
      }
      case Tok::Minus:
        next();
        return -factor();
      case Tok::Ident:
        next();
        return identifier(t);
      default:
        fail({"number", "identifier", "(", "-"});
    }
  }

  DiffPoly identifier(const Token& t) {
    if (param_ && t.text == *param_) return DiffPoly(RationalFunction::alpha());
    if (t.text == "x") return DiffPoly::x();
    auto d = depvar(t.text);
    if (!d) throw UnknownIdentifier(t.line, t.col, t.text);
    std::size_t order = 0;
    if (peek().kind == Tok::Underscore) {
      next();
      const Token s = next();
      bool all_x = s.kind == Tok::Ident && std::all_of(s.text.begin(), s.text.end(), [](char c) { return c == 'x'; });
      if (all_x && s.text.size() <= kMaxOrder) {
        order = s.text.size();
      } else if (s.kind == Tok::Number) {
        if (s.text.size() > 6 || std::stoul(s.text) > kMaxOrder)
          throw ParseError(s.line, s.col, {"order <= " + std::to_string(kMaxOrder)}, s.text);
        order = std::stoul(s.text);
      } else {
        throw UnknownIdentifier(t.line, t.col, t.text + "_" + s.text);
      }
    } else if (peek().kind == Tok::LBracket) {
      next();
      order = natural(kMaxOrder);
      expect(Tok::RBracket, "]");
    }
    return DiffPoly::jet(*d, order);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  VarNames names_;
  std::optional<std::string> param_;
};

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected, std::string found)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": expected " +
                         join(expected) + ", found '" + found + "'"),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

UnknownIdentifier::UnknownIdentifier(std::size_t line, std::size_t column, std::string name)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": unknown identifier '" + name + "'"),
      name_(std::move(name)),
      line_(line),
      column_(column) {}

DuplicateEquation::DuplicateEquation(std::size_t line, std::string var)
    : std::runtime_error("line " + std::to_string(line) + ": second equation for " + var) {}

MissingEquation::MissingEquation(std::string var) : std::runtime_error("no equation for " + var) {}

EvolutionSystem parse_system(std::string_view src) { return Parser(src).system(); }

std::string render_system(const EvolutionSystem& s) {
  std::ostringstream os;
  os << "system " << s.name << "\n";
  if (s.parameter) os << "param " << *s.parameter << "\n";
  os << "vars";
  for (const auto& v : s.names.depvars) os << " " << v;
  os << "\n";
  for (std::size_t d = 0; d < s.rhs.size(); ++d) os << "eq " << s.names.depvars[d] << "_t = " << s.rhs[d].to_string(s.names) << "\n";
  return os.str();
}

OpEntry parse_operator_entry(std::string_view src, const VarNames& names) { return Parser(src).operator_entry(names); }

}  // namespace jetsym
