#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dcx {

enum class FieldKind { rationals, gaussian_rationals, prime_field };

/// The base field of a computation: Q, Q(i) or F_p.
class FieldSpec {
 public:
  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
  static FieldSpec gaussian_rationals() { return FieldSpec(FieldKind::gaussian_rationals, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime_field(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  /// Zero unless kind() == prime_field.
  std::uint64_t prime() const { return prime_; }
  std::uint64_t characteristic() const { return prime_; }

  /// Canonical tag: "Q", "Q(i)" or "F_p".
  std::string tag() const;
  /// Accepts the canonical tags plus the aliases "QI", "qi", "rationals",
  /// "gaussian_rationals", "Fp"/"GF(p)"/"F_p".
  static FieldSpec parse(std::string_view tag);

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind kind, std::uint64_t prime) : kind_(kind), prime_(prime) {}

  FieldKind kind_ = FieldKind::rationals;
  std::uint64_t prime_ = 0;
};

/// An exact field element.
///
/// Characteristic-zero values are stored as a pair of reduced GMP rationals
/// (real, imaginary); a rational number is simply a value with zero imaginary
/// part, so Q embeds in Q(i) without conversion. Prime-field values carry their
/// modulus and a canonical residue in [0, p).
///
/// Integer-constructed values (`Scalar(1)`, the zero Eigen creates for
/// `setZero()`) are characteristic zero. Mixing such a value with a residue
/// maps it into F_p, which is the ring map Z -> F_p, so identities and signs
/// behave correctly in every field. Mixing two residues with different moduli,
/// or a residue with a non-real Gaussian value, throws FieldMismatch.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : re_(value) {}  // NOLINT: implicit for Eigen literals
  Scalar(long value) : re_(value) {}  // NOLINT
  explicit Scalar(mpq_class value) : re_(std::move(value)) { re_.canonicalize(); }
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar residue(std::int64_t value, std::uint64_t modulus);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  /// The integer `value` as an element of `field`.
  static Scalar from_integer(long value, const FieldSpec& field);
  static Scalar zero(const FieldSpec& field) { return from_integer(0, field); }
  static Scalar one(const FieldSpec& field) { return from_integer(1, field); }

  bool is_modular() const { return modulus_ != 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t value() const { return residue_; }
  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return is_modular() ? residue_ == 0 : (sgn(re_) == 0 && sgn(im_) == 0); }
  bool is_one() const;

  /// Gaussian conjugation; the identity on Q and on F_p.
  Scalar conjugate() const;
  /// Throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  void to_modular(std::uint64_t p);

  mpq_class re_;
  mpq_class im_;
  std::uint64_t modulus_ = 0;
  std::uint64_t residue_ = 0;
};

/// True if `value` is (without loss) an element of `field`.
bool belongs_to(const Scalar& value, const FieldSpec& field);
/// Maps `value` into `field`; throws FieldMismatch if it has no image there
/// (imaginary part outside Q(i), denominator divisible by p, foreign modulus).
Scalar coerce(const Scalar& value, const FieldSpec& field);

/// Text form inside a document of known field: "n/d", "a/b+c/di", or a bare residue.
std::string to_string(const Scalar& value);
/// Standalone text form; residues are written "k mod p".
std::string to_string_standalone(const Scalar& value);
/// Parses the encodings produced by to_string (and "k mod p") as an element of `field`.
Scalar parse_scalar(std::string_view text, const FieldSpec& field);

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace dcx
