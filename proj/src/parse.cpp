#include "cevian/parse.hpp"

#include <cctype>
#include <map>

#include "cevian/median.hpp"

namespace cevian {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  std::size_t position() const { return pos_; }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  /// Letters, digits, apostrophes: keys such as eta'.
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '\'')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Raw text up to the next `stop` character.
  std::string until(char stop) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != stop) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (digits == pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stol(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  Cyc12 expr() {
    Cyc12 v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

 private:
  Cyc12 term() {
    Cyc12 v = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * unary();
      } else if (c == '/') {
        ++pos_;
        const std::size_t at = pos_;
        const Cyc12 d = unary();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v = v / d;
      } else if (starts_primary(c)) {
        // "2 3" is almost certainly a typo, not 6
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') fail("expected an operator between numbers");
        v = v * power();
      } else {
        return v;
      }
    }
  }

  static bool starts_primary(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'z' || c == 'w' ||
           c == 'r' || c == 'i';
  }

  Cyc12 unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Cyc12 power() {
    const Cyc12 base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const long e = integer();
    if (e < 0 && base.is_zero()) throw ParseError("zero to a negative power", at);
    Cyc12 out(1);
    Cyc12 b = e < 0 ? base.inverse() : base;
    for (long k = 0; k < (e < 0 ? -e : e); ++k) out = out * b;
    return out;
  }

  Cyc12 primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const Cyc12 v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    switch (c) {
      case 'z':
        ++pos_;
        return Cyc12::zeta();
      case 'w':
        ++pos_;
        return Cyc12::omega();
      case 'r':
        ++pos_;
        return Cyc12::rho();
      case 'i':
        ++pos_;
        return Cyc12::imag_unit();
      default:
        break;
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  Cyc12 number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    // exponent only when digits follow, so "2e" is not swallowed
    if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t k = pos_ + 1;
      if (k < text_.size() && (text_[k] == '+' || text_[k] == '-')) ++k;
      if (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
        pos_ = k;
        digits();
      }
    }
    try {
      return Cyc12(Rational::parse(text_.substr(start, pos_ - start)));
    } catch (const Error& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

Cyc12 real_component(Parser& p) {
  const std::size_t at = p.position();
  const Cyc12 v = p.expr();
  if (!v.is_rational()) throw ParseError("JSON coordinates must be real numbers", at);
  return v;
}

/// key=value pairs up to the closing bracket.
std::map<std::string, Cyc12> arguments(Parser& p) {
  std::map<std::string, Cyc12> out;
  p.expect('[');
  if (p.accept(']')) return out;
  do {
    const std::string key = p.word();
    p.expect('=');
    if (!out.emplace(key, p.expr()).second) p.fail("duplicate argument '" + key + "'");
  } while (p.accept(','));
  p.expect(']');
  return out;
}

bool has_keys(const std::map<std::string, Cyc12>& args, std::initializer_list<const char*> keys) {
  if (args.size() != keys.size()) return false;
  for (const char* k : keys) {
    if (!args.count(k)) return false;
  }
  return true;
}

/// (eta, eta') from either a (p, q) or an (eta, eta') argument list.
EtaPair<Cyc12> eta_arguments(const std::map<std::string, Cyc12>& args, Parser& p, std::string& desc) {
  if (has_keys(args, {"p", "q"})) {
    desc = "p=" + args.at("p").to_pretty_string() + ",q=" + args.at("q").to_pretty_string();
    return eta_from_pq(PQPair<Cyc12>{args.at("p"), args.at("q")});
  }
  if (has_keys(args, {"eta", "eta'"})) {
    desc = "eta=" + args.at("eta").to_pretty_string() + ",eta'=" + args.at("eta'").to_pretty_string();
    return {args.at("eta"), args.at("eta'")};
  }
  p.fail("expected arguments p,q or eta,eta'");
}

}  // namespace

Cyc12 parse_cyc12(std::string_view text) {
  Parser p(text);
  const Cyc12 v = p.expr();
  p.expect_end();
  return v;
}

Triple<Cyc12> parse_triple(std::string_view text) {
  Parser p(text);
  Triple<Cyc12> d;
  if (p.peek() == '[') {
    p.expect('[');
    for (std::size_t k = 0; k < 3; ++k) {
      if (k > 0) p.expect(',');
      p.expect('[');
      const Cyc12 re = real_component(p);
      p.expect(',');
      const Cyc12 im = real_component(p);
      p.expect(']');
      d[k] = re + im * Cyc12::imag_unit();
    }
    p.expect(']');
  } else {
    p.expect('(');
    for (std::size_t k = 0; k < 3; ++k) {
      if (k > 0) p.expect(',');
      d[k] = p.expr();
    }
    p.expect(')');
  }
  p.expect_end();
  return d;
}

OperatorLiteral parse_operator(std::string_view text) {
  Parser p(text);
  const std::string head = p.word();
  OperatorLiteral out;
  std::string desc;
  if (head == "S") {
    const auto args = arguments(p);
    if (has_keys(args, {"a", "b", "g"})) {
      out.op = extend(CircOp<Cyc12>(args.at("a"), args.at("b"), args.at("g")));
      desc = "a=" + args.at("a").to_pretty_string() + ",b=" + args.at("b").to_pretty_string() +
             ",g=" + args.at("g").to_pretty_string();
    } else {
      out.op = extend(from_eta(eta_arguments(args, p, desc)));
    }
    out.description = "S[" + desc + "]";
  } else if (head == "M") {
    p.expect('[');
    const std::size_t at = p.position();
    const std::string label_text = p.until(']');
    p.expect(']');
    MedianLabel label(0, 0, 0, 1);
    try {
      label = MedianLabel::parse(label_text);
    } catch (const InvalidLabel& e) {
      throw ParseError(e.what(), at);
    }
    const auto args = arguments(p);
    out.op = extend(median_op(label, eta_arguments(args, p, desc)));
    out.description = "M[" + label.to_string() + "][" + desc + "]";
  } else if (head == "H" || head == "C") {
    const auto args = arguments(p);
    if (!has_keys(args, {"s"})) p.fail("expected argument s");
    const Cyc12& s = args.at("s");
    out.op = head == "H" ? extend(hajja(s)) : ceva(s);
    out.description = head + "[s=" + s.to_pretty_string() + "]";
  } else {
    throw ParseError("unknown operator '" + head + "' (expected S, M, H or C)", 0);
  }
  p.expect_end();
  return out;
}

TrigPoly parse_trig_poly(std::string_view text) {
  Parser p(text);
  TrigPoly::Coeffs coeffs;
  do {
    const std::size_t at = p.position();
    const long k = p.integer();
    p.expect(':');
    const std::complex<double> c = p.expr().to_complex();
    if (!coeffs.emplace(static_cast<int>(k), c).second) throw ParseError("repeated frequency", at);
  } while (p.accept(','));
  p.expect_end();
  return TrigPoly(coeffs);
}

ExtOp<Approx> downcast(const ExtOp<Cyc12>& op) {
  return {op.pre_swap, CircOp<Approx>(downcast(op.circ.alpha()), downcast(op.circ.beta()), downcast(op.circ.gamma()))};
}

}  // namespace cevian
