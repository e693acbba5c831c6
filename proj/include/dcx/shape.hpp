#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace dcx {

using Bidegree = std::pair<int, int>;

/// Square with top-right corner (p,q).
struct Square {
  int p = 0, q = 0;
  friend bool operator==(const Square&, const Square&) = default;
};

/// Even-length zigzag of length 2r starting at (p,q); i = 1 runs along d1 first, i = 2 along d2.
struct Even {
  int i = 1, r = 1, p = 0, q = 0;
  friend bool operator==(const Even&, const Even&) = default;
};

/// Odd-length zigzag with most components in total degree d. p and q are the largest
/// coordinates of its points when p+q >= d and the smallest otherwise.
struct Odd {
  int d = 0, p = 0, q = 0;
  friend bool operator==(const Odd&, const Odd&) = default;
};

/// Label of an indecomposable double complex.
class Shape {
 public:
  using Variant = std::variant<Odd, Even, Square>;

  Shape() : v_(Odd{}) {}
  Shape(Square s) : v_(s) {}  // NOLINT
  /// Throws std::invalid_argument unless i in {1,2} and r >= 1.
  Shape(Even e);  // NOLINT
  Shape(Odd o) : v_(o) {}  // NOLINT

  static Shape dot(int p, int q) { return Odd{p + q, p, q}; }

  const Variant& variant() const { return v_; }
  bool is_square() const { return std::holds_alternative<Square>(v_); }
  bool is_even() const { return std::holds_alternative<Even>(v_); }
  bool is_odd() const { return std::holds_alternative<Odd>(v_); }
  bool is_zigzag() const { return !is_square(); }
  bool is_dot() const;
  const Square& square() const { return std::get<Square>(v_); }
  const Even& even() const { return std::get<Even>(v_); }
  const Odd& odd() const { return std::get<Odd>(v_); }

  /// Sorted list of the bidegrees of the shape.
  std::vector<Bidegree> points() const;
  int length() const;
  bool contains(int p, int q) const;
  int min_total_degree() const;

  /// (p,q) -> (q,p). Exchanges the two kinds of even zigzags.
  Shape transposed() const;
  /// (p,q) -> (n-p, n-q).
  Shape reflected(int n) const;
  /// (p,q) -> (p+k, q+k).
  Shape shifted(int k) const;

  /// "S^{p,q}", "S_{i,r}^{p,q}" or "S_d^{p,q}".
  std::string label() const;
  /// Inverse of label(); also accepts braces around any index and surrounding spaces.
  static Shape parse(std::string_view label);

  /// Rendering order: lowest total degree, then Odd < Even < Square, then length, p, q.
  friend std::strong_ordering operator<=>(const Shape& a, const Shape& b);
  friend bool operator==(const Shape& a, const Shape& b) { return a.v_ == b.v_; }

 private:
  Variant v_;
};

std::ostream& operator<<(std::ostream& os, const Shape& s);

}  // namespace dcx
