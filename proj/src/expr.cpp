#include "suq2/expr.hpp"

#include <cctype>
#include <optional>

#include "suq2/braided.hpp"
#include "suq2/catalog.hpp"

namespace suq2 {

namespace {

enum class Tok { ident, number, plus, minus, star, slash, caret, lparen, rparen, prime, end };

struct Token {
  Tok kind;
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    const int col = static_cast<int>(i) + 1;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::ident, s.substr(i, j - i), col});
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j < s.size() && s[j] == '.') {
        ++j;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
          throw ParseError("malformed number", col);
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      }
      out.push_back({Tok::number, s.substr(i, j - i), col});
      i = j;
    } else {
      Tok k;
      switch (ch) {
        case '+': k = Tok::plus; break;
        case '-': k = Tok::minus; break;
        case '*': k = Tok::star; break;
        case '/': k = Tok::slash; break;
        case '^': k = Tok::caret; break;
        case '(': k = Tok::lparen; break;
        case ')': k = Tok::rparen; break;
        case '\'': k = Tok::prime; break;
        default: throw ParseError(std::string("unexpected character '") + ch + "'", col);
      }
      out.push_back({k, std::string(1, ch), col});
      ++i;
    }
  }
  out.push_back({Tok::end, "", static_cast<int>(s.size()) + 1});
  return out;
}

Scalar decimal_scalar(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return Scalar(GaussRat(mpq_class(mpz_class(text, 10))));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  mpz_class den = 1;
  for (std::size_t k = dot + 1; k < text.size(); ++k) den *= 10;
  mpq_class v(mpz_class(digits, 10), den);
  v.canonicalize();
  return Scalar(GaussRat(v));
}

std::optional<Scalar> scalar_of(const LinComb& x) {
  if (x.empty()) return Scalar(0);
  if (x.size() == 1 && x.begin()->first.empty()) return x.begin()->second;
  return std::nullopt;
}

LinComb constant(const Scalar& c) {
  LinComb r;
  add_term(r, Word{}, c);
  return r;
}

LinComb raw_product(const LinComb& a, const LinComb& b) {
  LinComb r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) add_term(r, concat(wa, wb), ca * cb);
  return r;
}

class Parser {
 public:
  Parser(const std::string& text, PresentationPtr p) : toks_(tokenize(text)), pres_(std::move(p)) {}

  LinComb parse_all() {
    LinComb v = expr(pres_);
    if (peek().kind != Tok::end) fail("unexpected '" + peek().text + "'");
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    if (t.kind == Tok::end && !open_.empty()) throw ParseError("unclosed '('", open_.back());
    throw ParseError(t.kind == Tok::end ? msg + " (unexpected end of input)" : msg, t.column);
  }

  LinComb expr(const PresentationPtr& p) {
    LinComb acc;
    bool negate = false;
    if (peek().kind == Tok::plus || peek().kind == Tok::minus) negate = take().kind == Tok::minus;
    add_scaled(acc, term(p), Scalar(negate ? -1 : 1));
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      negate = take().kind == Tok::minus;
      add_scaled(acc, term(p), Scalar(negate ? -1 : 1));
    }
    return acc;
  }

  static bool starts_atom(Tok k) { return k == Tok::ident || k == Tok::number || k == Tok::lparen; }

  LinComb term(const PresentationPtr& p) {
    LinComb acc = unary(p);
    for (;;) {
      const Tok k = peek().kind;
      if (k == Tok::star) {
        take();
        acc = raw_product(acc, unary(p));
      } else if (k == Tok::slash) {
        const int col = take().column;
        LinComb d = unary(p);
        auto s = scalar_of(d);
        if (!s) throw ParseError("division by a non-scalar", col);
        if (s->is_zero()) throw ParseError("division by zero", col);
        LinComb q;
        add_scaled(q, acc, s->inverse());
        acc = std::move(q);
      } else if (starts_atom(k)) {
        acc = raw_product(acc, unary(p));
      } else {
        return acc;
      }
    }
  }

  LinComb unary(const PresentationPtr& p) {
    if (peek().kind == Tok::minus) {
      take();
      LinComb r;
      add_scaled(r, unary(p), Scalar(-1));
      return r;
    }
    return factor(p);
  }

  LinComb factor(const PresentationPtr& p) {
    LinComb base = atom(p);
    while (peek().kind == Tok::prime) {
      take();
      base = raw_adjoint(*p, base);
    }
    if (peek().kind != Tok::caret) return base;
    const int col = take().column;
    bool neg = false;
    if (peek().kind == Tok::minus) {
      take();
      neg = true;
    }
    if (peek().kind != Tok::number || peek().text.find('.') != std::string::npos) fail("expected an integer exponent");
    const std::string digits = take().text;
    if (digits.size() > 4) throw ParseError("exponent too large", col);
    const int n = std::stoi(digits);
    if (neg) {
      auto s = scalar_of(base);
      if (!s) throw ParseError("negative power of a non-scalar", col);
      if (s->is_zero()) throw ParseError("negative power of zero", col);
      return constant(s->pow(-n));
    }
    LinComb r = constant(Scalar(1));
    for (int k = 0; k < n; ++k) r = raw_product(r, base);
    return r;
  }

  LinComb atom(const PresentationPtr& p) {
    const Token t = peek();
    switch (t.kind) {
      case Tok::number:
        take();
        return constant(decimal_scalar(t.text));
      case Tok::lparen: {
        take();
        open_.push_back(t.column);
        LinComb v = expr(p);
        if (peek().kind != Tok::rparen) fail("expected ')'");
        take();
        open_.pop_back();
        return v;
      }
      case Tok::ident:
        return identifier(p);
      default:
        fail("expected a factor");
    }
  }

  LinComb identifier(const PresentationPtr& p) {
    const Token t = take();
    const std::string& id = t.text;
    if (id == "q") return constant(Scalar::q());
    if (id == "qb") return constant(Scalar::qbar());
    if (id == "zeta") return constant(Scalar::zeta());
    if (id == "i") return constant(Scalar::i());
    if (id.size() == 2 && id[0] == 'j' && std::isdigit(static_cast<unsigned char>(id[1])) &&
        peek().kind == Tok::lparen) {
      const int leg = id[1] - '0';
      if (!p || !p->is_product()) throw ParseError("leg embedding needs a product algebra", t.column);
      if (leg < 1 || leg > p->leg_count()) throw ParseError("invalid leg " + std::to_string(leg), t.column);
      const Token lp = take();
      open_.push_back(lp.column);
      LinComb inner = expr(p->factor(leg));
      if (peek().kind != Tok::rparen) fail("expected ')'");
      take();
      open_.pop_back();
      const int off = p->leg_offset(leg);
      LinComb out;
      for (const auto& [w, c] : inner) {
        Word nw;
        for (Letter l : w) nw.push_back(static_cast<Letter>(l + off));
        out.emplace(std::move(nw), c);
      }
      return out;
    }
    if (!p) throw ParseError("generator '" + id + "' in a scalar expression", t.column);
    if (p->is_product())
      throw ParseError("generator '" + id + "' needs a leg embedding j1(...), j2(...) here", t.column);
    const int g = p->find_generator(id);
    if (g < 0) throw ParseError("unknown generator '" + id + "' for " + p->name(), t.column);
    LinComb r;
    r.emplace(Word{static_cast<Letter>(g)}, Scalar(1));
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  PresentationPtr pres_;
  std::vector<int> open_;
};

}  // namespace

LinComb parse_raw(const std::string& text, const PresentationPtr& p) { return Parser(text, p).parse_all(); }

Element parse_element(const std::string& text, const PresentationPtr& p) { return Element(p, parse_raw(text, p)); }

Scalar parse_scalar(const std::string& text) {
  LinComb v = Parser(text, nullptr).parse_all();
  auto s = scalar_of(v);
  if (!s) throw ParseError("expected a scalar expression", 1);
  return *s;
}

const std::vector<std::string>& algebra_selectors() {
  static const std::vector<std::string> s = {"suq2", "torus", "uq2", "suq2-tensor2", "suq2-tensor3", "suq2-flip"};
  return s;
}

PresentationPtr algebra_by_selector(const std::string& selector) {
  if (selector == "suq2") return suq2_presentation();
  if (selector == "torus") return torus_presentation();
  if (selector == "uq2") return uq2_presentation();
  if (selector == "suq2-tensor2") return suq2_tensor2();
  if (selector == "suq2-tensor3") return suq2_tensor3();
  if (selector == "suq2-flip") return grading_flip(suq2_presentation());
  throw std::invalid_argument("unknown algebra '" + selector + "'");
}

}  // namespace suq2
