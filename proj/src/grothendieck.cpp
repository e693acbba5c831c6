#include "dcx/grothendieck.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

using Terms = std::map<Shape, long>;

void accumulate(Terms& terms, const Shape& s, long c) {
  if (c == 0) return;
  const long v = (terms[s] += c);
  if (v == 0) terms.erase(s);
}

// Zigzag part of [a]·[b] for zigzags a, b.
Terms zigzag_product(const Shape& a, const Shape& b) {
  Terms out;
  if (a.is_odd() && b.is_odd()) {
    const Odd &x = a.odd(), &y = b.odd();
    accumulate(out, Odd{x.d + y.d, x.p + y.p, x.q + y.q}, 1);
  } else if (a.is_even() && b.is_even()) {
    const Even &x = a.even(), &y = b.even();
    if (x.i != y.i) return out;
    const int lo = std::min(x.r, y.r), hi = std::max(x.r, y.r);
    const int p = x.p + y.p, q = x.q + y.q;
    accumulate(out, Even{x.i, lo, p, q}, 1);
    if (x.i == 1) accumulate(out, Even{1, lo, p + hi, q - hi + 1}, 1);
    else accumulate(out, Even{2, lo, p - hi + 1, q + hi}, 1);
  } else {
    const Odd& o = a.is_odd() ? a.odd() : b.odd();
    const Even& e = a.is_even() ? a.even() : b.even();
    if (e.i == 1) accumulate(out, Even{1, e.r, o.p + e.p, e.q + o.d - o.p}, 1);
    else accumulate(out, Even{2, e.r, e.p + o.d - o.q, o.q + e.q}, 1);
  }
  return out;
}

// Squares filling the part of points(a) * points(b) not covered by `zigzags`.
Terms square_completion(const Shape& a, const Shape& b, const Terms& zigzags) {
  std::map<Bidegree, long> residual;
  for (const auto& [p, q] : a.points())
    for (const auto& [r, s] : b.points()) residual[{p + r, q + s}] += 1;
  for (const auto& [z, c] : zigzags)
    for (const auto& pt : z.points()) residual[pt] -= c;
  Terms out;
  if (residual.empty()) return out;
  int pmin = residual.begin()->first.first, pmax = pmin, qmin = residual.begin()->first.second, qmax = qmin;
  for (const auto& [pt, v] : residual) {
    pmin = std::min(pmin, pt.first), pmax = std::max(pmax, pt.first);
    qmin = std::min(qmin, pt.second), qmax = std::max(qmax, pt.second);
  }
  // c(p,q) squares with top-right corner (p,q); peel from the top right.
  std::map<Bidegree, long> count;
  const auto at = [](const std::map<Bidegree, long>& m, int p, int q) {
    const auto it = m.find({p, q});
    return it == m.end() ? 0L : it->second;
  };
  for (int p = pmax; p >= pmin; --p) {
    for (int q = qmax; q >= qmin; --q) {
      const long c = at(residual, p, q) - at(count, p + 1, q) - at(count, p, q + 1) - at(count, p + 1, q + 1);
      if (c != 0) count[{p, q}] = c;
    }
  }
  for (const auto& [pt, c] : count) accumulate(out, Square{pt.first, pt.second}, c);
  return out;
}

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, Level level) : text_(text), level_(level) {}

  RingClass parse() {
    RingClass v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad ring expression '" + std::string(text_) + "': " + why);
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'S' || c == 'R' || c == 'U' ||
           c == 'L' || c == 'X' || c == 'Y';
  }

  RingClass expr() {
    RingClass v = term();
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v += term();
      } else if (c == '-') {
        ++pos_;
        v -= term();
      } else {
        return v;
      }
    }
  }

  RingClass term() {
    RingClass v = unary();
    while (true) {
      if (peek() == '*') {
        ++pos_;
        v = ring_mul(v, unary());
      } else if (starts_factor()) {
        v = ring_mul(v, unary());
      } else {
        return v;
      }
    }
  }

  RingClass unary() {
    if (peek() == '-') {
      ++pos_;
      return unary() * -1;
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return factor();
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  // Exponent after '^': an integer, optionally in braces.
  long exponent() {
    if (peek() != '^') return 1;
    ++pos_;
    if (peek() == '{') {
      ++pos_;
      const long e = integer();
      if (peek() != '}') fail("expected '}'");
      ++pos_;
      return e;
    }
    return integer();
  }

  // Index right after X or Y: "_l", "_{l}" or plain digits.
  int generator_index() {
    if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '{') {
      ++pos_;
      const long l = integer();
      if (peek() != '}') fail("expected '}'");
      ++pos_;
      return static_cast<int>(l);
    }
    return static_cast<int>(integer());
  }

  RingClass power(const RingClass& base, long e) {
    if (e < 0) fail("negative exponent of a non-invertible factor");
    RingClass v = RingClass::one(level_);
    for (long k = 0; k < e; ++k) v = ring_mul(v, base);
    return v;
  }

  // Extent of a shape label starting at pos_.
  std::string_view shape_label() {
    const std::size_t start = pos_;
    ++pos_;  // 'S'
    const auto group = [this] {
      skip();
      if (pos_ < text_.size() && text_[pos_] == '{') {
        const std::size_t close = text_.find('}', pos_);
        if (close == std::string_view::npos) fail("unterminated brace");
        pos_ = close + 1;
      } else if (pos_ < text_.size()) {
        ++pos_;
      }
    };
    skip();
    if (pos_ < text_.size() && text_[pos_] == '_') {
      ++pos_;
      group();
    }
    skip();
    if (pos_ >= text_.size() || text_[pos_] != '^') fail("shape label needs a superscript");
    ++pos_;
    group();
    return text_.substr(start, pos_ - start);
  }

  RingClass factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RingClass v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return power(v, exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return RingClass::one(level_) * integer();
    if (c == 'S') return RingClass(level_, Shape::parse(shape_label()));
    if (c == 'R' || c == 'U' || c == 'L') {
      ++pos_;
      const long e = exponent();
      const int a = c == 'R' ? static_cast<int>(e) : 0;
      const int b = c == 'U' ? static_cast<int>(e) : 0;
      const int l = c == 'L' ? static_cast<int>(e) : 0;
      return RingClass(level_, monomial_shape(a, b, l));
    }
    if (c == 'X' || c == 'Y') {
      ++pos_;
      const int l = generator_index();
      if (l < 1) fail("X_l and Y_l need l >= 1");
      const RingClass g(level_, Even{c == 'X' ? 1 : 2, l, 0, 0});
      return power(g, exponent());
    }
    fail(c == '\0' ? "unexpected end" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Level level_;
  std::size_t pos_ = 0;
};

std::string monomial(const char* name, int e) {
  if (e == 0) return "";
  if (e == 1) return name;
  return std::string(name) + "^" + (e < 0 ? "{" + std::to_string(e) + "}" : std::to_string(e));
}

void append_term(std::string& out, long c, const std::string& body) {
  if (out.empty()) {
    if (c < 0) out += "-";
  } else {
    out += c < 0 ? " - " : " + ";
  }
  const long a = c < 0 ? -c : c;
  if (body.empty()) {
    out += std::to_string(a);
  } else {
    if (a != 1) out += std::to_string(a) + "*";
    out += body;
  }
}

}  // namespace

std::string to_string(Level level) {
  switch (level) {
    case Level::R0: return "R0";
    case Level::R1: return "R1";
    case Level::Rinf: return "Rinf";
  }
  return "?";
}

Level parse_level(std::string_view text) {
  if (text == "R0" || text == "0") return Level::R0;
  if (text == "R1" || text == "1") return Level::R1;
  if (text == "Rinf" || text == "inf" || text == "R_inf") return Level::Rinf;
  throw ParseError("unknown ring level '" + std::string(text) + "'");
}

bool visible_at(const Shape& s, Level level) {
  if (s.is_square()) return level == Level::R0;
  if (s.is_even()) return level != Level::Rinf;
  return true;
}

RingClass::RingClass(Level level, const Shape& s, long coefficient) : level_(level) { add(s, coefficient); }

long RingClass::operator[](const Shape& s) const {
  const auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

void RingClass::add(const Shape& s, long c) {
  if (visible_at(s, level_)) accumulate(terms_, s, c);
}

RingClass RingClass::projected(Level level) const {
  RingClass out(level);
  for (const auto& [s, c] : terms_) out.add(s, c);
  return out;
}

RingClass& RingClass::operator+=(const RingClass& other) {
  if (other.level_ != level_) throw std::invalid_argument("ring classes of different levels");
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

RingClass& RingClass::operator-=(const RingClass& other) {
  if (other.level_ != level_) throw std::invalid_argument("ring classes of different levels");
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

RingClass& RingClass::operator*=(long c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, v] : terms_) v *= c;
  return *this;
}

RingClass shape_product(const Shape& a, const Shape& b, Level level) {
  RingClass out(level);
  if (a.is_square() || b.is_square()) {
    if (level != Level::R0) return out;
    const Square& sq = a.is_square() ? a.square() : b.square();
    const Shape& other = a.is_square() ? b : a;
    for (const auto& [r, s] : other.points()) out.add(Square{sq.p + r, sq.q + s}, 1);
    return out;
  }
  const Terms zigzags = zigzag_product(a, b);
  for (const auto& [s, c] : zigzags) out.add(s, c);
  if (level == Level::R0) {
    for (const auto& [s, c] : square_completion(a, b, zigzags)) out.add(s, c);
  }
  return out;
}

RingClass ring_mul(const RingClass& x, const RingClass& y) {
  if (x.level() != y.level()) throw std::invalid_argument("ring_mul: classes of different levels");
  RingClass out(x.level());
  for (const auto& [s, c] : x.terms())
    for (const auto& [t, e] : y.terms()) out += shape_product(s, t, x.level()) * (c * e);
  return out;
}

RingClass class_of(const MultiplicityVector& m, Level level) {
  RingClass out(level);
  for (const auto& [s, c] : m.entries()) out.add(s, c);
  return out;
}

ProductCheck check_product(const DoubleComplex& a, const DoubleComplex& b) {
  ProductCheck out;
  const MultiplicityVector ma = multiplicities(a);
  const MultiplicityVector mb = multiplicities(b);
  out.tensor_class = class_of(multiplicities(tensor(a, b)), Level::R0);
  out.predicted = ring_mul(class_of(ma, Level::R0), class_of(mb, Level::R0));
  const RingClass predicted1 = ring_mul(class_of(ma, Level::R1), class_of(mb, Level::R1));
  out.holds = out.tensor_class == out.predicted && out.tensor_class.projected(Level::R1) == predicted1;
  return out;
}

bool verify_product(const DoubleComplex& a, const DoubleComplex& b) { return check_product(a, b).holds; }

Shape monomial_shape(int a, int b, int c) { return Odd{a + b + c, b + c, a + c}; }

NormalForm normal_form(const RingClass& x) {
  if (x.level() == Level::R0) throw std::invalid_argument("normal forms are defined on R1 and Rinf");
  NormalForm nf;
  for (const auto& [s, c] : x.terms()) {
    if (s.is_odd()) {
      const Odd& o = s.odd();
      nf.laurent[{o.d - o.p, o.d - o.q, o.p + o.q - o.d}] += c;
    } else if (s.is_even()) {
      const Even& e = s.even();
      (e.i == 1 ? nf.x_part : nf.y_part)[{e.r, e.q, e.p}] += c;
    }
  }
  return nf;
}

RingClass from_normal_form(const NormalForm& nf, Level level) {
  if (level == Level::R0) throw std::invalid_argument("normal forms are defined on R1 and Rinf");
  RingClass out(level);
  for (const auto& [k, c] : nf.laurent) out.add(monomial_shape(k[0], k[1], k[2]), c);
  for (const auto& [k, c] : nf.x_part) out.add(Even{1, k[0], k[2], k[1]}, c);
  for (const auto& [k, c] : nf.y_part) out.add(Even{2, k[0], k[2], k[1]}, c);
  return out;
}

std::string NormalForm::to_string() const {
  std::string out;
  for (const auto& [k, c] : laurent) {
    if (c != 0) append_term(out, c, monomial("R", k[0]) + monomial("U", k[1]) + monomial("L", k[2]));
  }
  for (const auto* part : {&x_part, &y_part}) {
    const char* name = part == &x_part ? "X_" : "Y_";
    for (const auto& [k, c] : *part) {
      if (c == 0) continue;
      const std::string prefix = monomial("R", k[1]) + monomial("U", k[2]);
      append_term(out, c, prefix + (prefix.empty() ? "" : "*") + name + std::to_string(k[0]));
    }
  }
  return out.empty() ? "0" : out;
}

bool is_first_quadrant(const RingClass& x) {
  for (const auto& [s, c] : x.terms())
    for (const auto& [p, q] : s.points())
      if (p < 0 || q < 0) return false;
  return true;
}

RingClass evaluate_expression(std::string_view text, Level level) { return ExpressionParser(text, level).parse(); }

std::string to_string(const RingClass& x) {
  std::string out;
  for (const auto& [s, c] : x.terms()) append_term(out, c, s.label());
  return out.empty() ? "0" : out;
}

}  // namespace dcx
