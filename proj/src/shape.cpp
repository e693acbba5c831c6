#include "dcx/shape.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string index(int v) {
  const std::string s = std::to_string(v);
  return (v < 0 || v > 9) ? "{" + s + "}" : s;
}

int variant_rank(const Shape& s) { return static_cast<int>(s.variant().index()); }

class LabelParser {
 public:
  explicit LabelParser(std::string_view text) : text_(text) {}

  Shape parse() {
    skip();
    expect('S');
    std::vector<int> lower;
    skip();
    if (peek() == '_') {
      ++pos_;
      lower = group();
    }
    skip();
    expect('^');
    std::vector<int> upper = group();
    skip();
    if (pos_ != text_.size()) fail("trailing characters");
    if (upper.size() != 2) fail("expected two superscripts");
    const int p = upper[0], q = upper[1];
    if (lower.empty()) return Square{p, q};
    if (lower.size() == 1) return Odd{lower[0], p, q};
    if (lower.size() == 2) {
      try {
        return Even{lower[0], lower[1], p, q};
      } catch (const std::invalid_argument& e) {
        fail(e.what());
      }
    }
    fail("too many subscripts");
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("bad shape label '" + std::string(text_) + "': " + why);
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip();
    const std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    const std::size_t digits = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected an integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  // Either a single digit or a brace-enclosed comma list.
  std::vector<int> group() {
    skip();
    if (peek() != '{') {
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an index");
      return {text_[pos_++] - '0'};
    }
    ++pos_;
    std::vector<int> out{integer()};
    skip();
    while (peek() == ',') {
      ++pos_;
      out.push_back(integer());
      skip();
    }
    expect('}');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Shape::Shape(Even e) : v_(e) {
  if (e.i != 1 && e.i != 2) throw std::invalid_argument("even zigzag type must be 1 or 2");
  if (e.r < 1) throw std::invalid_argument("even zigzag length parameter must be at least 1");
}

bool Shape::is_dot() const {
  const Odd* o = std::get_if<Odd>(&v_);
  return o != nullptr && o->p + o->q == o->d;
}

std::vector<Bidegree> Shape::points() const {
  std::vector<Bidegree> pts = std::visit(
      overloaded{
          [](const Square& s) {
            return std::vector<Bidegree>{{s.p, s.q}, {s.p - 1, s.q}, {s.p, s.q - 1}, {s.p - 1, s.q - 1}};
          },
          [](const Even& e) {
            std::vector<Bidegree> v;
            for (int j = 0; j < e.r; ++j) {
              if (e.i == 1) {
                v.emplace_back(e.p + j, e.q - j);
                v.emplace_back(e.p + j + 1, e.q - j);
              } else {
                v.emplace_back(e.p - j, e.q + j);
                v.emplace_back(e.p - j, e.q + j + 1);
              }
            }
            return v;
          },
          [](const Odd& o) {
            std::vector<Bidegree> v;
            const int m = o.p + o.q - o.d;
            if (m >= 0) {
              for (int j = 0; j <= m; ++j) v.emplace_back(o.p - j, o.d - o.p + j);
              for (int j = 0; j < m; ++j) v.emplace_back(o.p - j - 1, o.d - o.p + j);
            } else {
              for (int j = 0; j <= -m; ++j) v.emplace_back(o.p + j, o.d - o.p - j);
              for (int j = 0; j < -m; ++j) v.emplace_back(o.p + j + 1, o.d - o.p - j);
            }
            return v;
          }},
      v_);
  std::sort(pts.begin(), pts.end());
  return pts;
}

int Shape::length() const {
  return std::visit(overloaded{[](const Square&) { return 4; }, [](const Even& e) { return 2 * e.r; },
                               [](const Odd& o) { return 2 * std::abs(o.p + o.q - o.d) + 1; }},
                    v_);
}

bool Shape::contains(int p, int q) const {
  const auto pts = points();
  return std::binary_search(pts.begin(), pts.end(), Bidegree{p, q});
}

int Shape::min_total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [p, q] : points()) {
    if (first || p + q < best) best = p + q;
    first = false;
  }
  return best;
}

Shape Shape::transposed() const {
  return std::visit(overloaded{[](const Square& s) { return Shape(Square{s.q, s.p}); },
                               [](const Even& e) { return Shape(Even{3 - e.i, e.r, e.q, e.p}); },
                               [](const Odd& o) { return Shape(Odd{o.d, o.q, o.p}); }},
                    v_);
}

Shape Shape::reflected(int n) const {
  return std::visit(overloaded{[n](const Square& s) { return Shape(Square{n - s.p + 1, n - s.q + 1}); },
                               [n](const Even& e) {
                                 if (e.i == 1) return Shape(Even{1, e.r, n - e.p - e.r, n - e.q + e.r - 1});
                                 return Shape(Even{2, e.r, n - e.p + e.r - 1, n - e.q - e.r});
                               },
                               [n](const Odd& o) { return Shape(Odd{2 * n - o.d, n - o.p, n - o.q}); }},
                    v_);
}

Shape Shape::shifted(int k) const {
  return std::visit(overloaded{[k](const Square& s) { return Shape(Square{s.p + k, s.q + k}); },
                               [k](const Even& e) { return Shape(Even{e.i, e.r, e.p + k, e.q + k}); },
                               [k](const Odd& o) { return Shape(Odd{o.d + 2 * k, o.p + k, o.q + k}); }},
                    v_);
}

std::string Shape::label() const {
  return std::visit(
      overloaded{[](const Square& s) { return "S^{" + std::to_string(s.p) + "," + std::to_string(s.q) + "}"; },
                 [](const Even& e) {
                   return "S_{" + std::to_string(e.i) + "," + std::to_string(e.r) + "}^{" + std::to_string(e.p) + "," +
                          std::to_string(e.q) + "}";
                 },
                 [](const Odd& o) {
                   return "S_" + index(o.d) + "^{" + std::to_string(o.p) + "," + std::to_string(o.q) + "}";
                 }},
      v_);
}

Shape Shape::parse(std::string_view label) { return LabelParser(label).parse(); }

std::strong_ordering operator<=>(const Shape& a, const Shape& b) {
  const auto key = [](const Shape& s) {
    int extra = 0;
    int p = 0, q = 0;
    std::visit(overloaded{[&](const Square& x) { p = x.p, q = x.q; },
                          [&](const Even& x) { p = x.p, q = x.q, extra = x.i; },
                          [&](const Odd& x) { p = x.p, q = x.q, extra = x.d; }},
               s.variant());
    return std::make_tuple(s.min_total_degree(), variant_rank(s), s.length(), p, q, extra);
  };
  return key(a) <=> key(b);
}

std::ostream& operator<<(std::ostream& os, const Shape& s) { return os << s.label(); }

}  // namespace dcx
