#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>

#include "dcx/zigzags.hpp"

namespace dcx {

/// R0: isomorphism classes (squares kept); R1: E_1 classes (squares dropped);
/// Rinf: E_∞ classes (only odd zigzags).
enum class Level { R0, R1, Rinf };

std::string to_string(Level level);
Level parse_level(std::string_view text);

/// A finite Z-linear combination of shapes.
class RingClass {
 public:
  explicit RingClass(Level level = Level::R1) : level_(level) {}
  RingClass(Level level, const Shape& s, long coefficient = 1);

  static RingClass one(Level level) { return RingClass(level, Shape::dot(0, 0)); }

  Level level() const { return level_; }
  /// Nonzero coefficients only.
  const std::map<Shape, long>& terms() const { return terms_; }
  long operator[](const Shape& s) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds c·[s]; shapes invisible at this level are ignored.
  void add(const Shape& s, long c);
  /// Same class read at a coarser level.
  RingClass projected(Level level) const;

  RingClass& operator+=(const RingClass& other);
  RingClass& operator-=(const RingClass& other);
  RingClass& operator*=(long c);

  friend RingClass operator+(RingClass a, const RingClass& b) { return a += b; }
  friend RingClass operator-(RingClass a, const RingClass& b) { return a -= b; }
  friend RingClass operator*(RingClass a, long c) { return a *= c; }
  friend RingClass operator*(long c, RingClass a) { return a *= c; }
  friend bool operator==(const RingClass& a, const RingClass& b) = default;

 private:
  Level level_;
  std::map<Shape, long> terms_;
};

/// True if the shape contributes at this level.
bool visible_at(const Shape& s, Level level);

/// Product of two elementary classes.
RingClass shape_product(const Shape& a, const Shape& b, Level level);
/// Throws std::invalid_argument on a level mismatch.
RingClass ring_mul(const RingClass& x, const RingClass& y);

RingClass class_of(const MultiplicityVector& m, Level level);

struct ProductCheck {
  bool holds = true;
  RingClass tensor_class{Level::R0};
  RingClass predicted{Level::R0};
};
/// Compares the class of a ⊗ b with the product of the classes, at R0 and R1.
ProductCheck check_product(const DoubleComplex& a, const DoubleComplex& b);
bool verify_product(const DoubleComplex& a, const DoubleComplex& b);

/// Key (a,b,c) of R^a U^b L^c, and (l,a,b) of R^a U^b X_l or Y_l.
using Exponents = std::array<int, 3>;

struct NormalForm {
  std::map<Exponents, long> laurent;
  std::map<Exponents, long> x_part;
  std::map<Exponents, long> y_part;

  std::string to_string() const;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

/// Throws std::invalid_argument at level R0.
NormalForm normal_form(const RingClass& x);
RingClass from_normal_form(const NormalForm& nf, Level level);
/// R, U, L, X_l and Y_l as shapes.
Shape monomial_shape(int a, int b, int c);

bool is_first_quadrant(const RingClass& x);

/// Evaluates sums and products of shape labels, integers and the generators
/// R, U, L (with integer exponents), X_l, Y_l, e.g. "2*S_1^{0,0} + S_{1,2}^{0,1}".
RingClass evaluate_expression(std::string_view text, Level level);

std::string to_string(const RingClass& x);

}  // namespace dcx
