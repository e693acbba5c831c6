#include "dcx/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const unsigned __int128 s = static_cast<unsigned __int128>(a) + b;
  return static_cast<std::uint64_t>(s % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    const __int128 quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("residue is not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p));
}

// Image of a characteristic-zero value in F_p.
std::uint64_t to_residue(const mpq_class& re, const mpq_class& im, std::uint64_t p) {
  if (sgn(im) != 0) throw FieldMismatch("non-real Gaussian value has no image in a prime field");
  const std::uint64_t den = mpz_mod(re.get_den(), p);
  if (den == 0) throw FieldMismatch("denominator divisible by the field characteristic");
  return mul_mod(mpz_mod(re.get_num(), p), inv_mod(den, p), p);
}

std::string trim(std::string_view text) {
  auto begin = text.begin();
  auto end = text.end();
  while (begin != end && std::isspace(static_cast<unsigned char>(*begin))) ++begin;
  while (end != begin && std::isspace(static_cast<unsigned char>(*(end - 1)))) --end;
  return std::string(begin, end);
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// [+-]?digits(/digits)?
mpq_class parse_rational(std::string_view text) {
  std::string s = trim(text);
  bool negative = false;
  std::string_view body = s;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) throw ParseError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return negative ? mpq_class(-q) : q;
}

}  // namespace

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
  }
  return FieldSpec(FieldKind::prime_field, p);
}

std::string FieldSpec::tag() const {
  switch (kind_) {
    case FieldKind::rationals: return "Q";
    case FieldKind::gaussian_rationals: return "Q(i)";
    case FieldKind::prime_field: return "F_" + std::to_string(prime_);
  }
  return "?";
}

FieldSpec FieldSpec::parse(std::string_view tag) {
  std::string t = trim(tag);
  std::string lower(t);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "q" || lower == "rationals") return rationals();
  if (lower == "q(i)" || lower == "qi" || lower == "gaussian_rationals") return gaussian_rationals();
  std::string digits;
  if (lower.rfind("f_", 0) == 0) digits = lower.substr(2);
  else if (lower.rfind("gf(", 0) == 0 && lower.back() == ')') digits = lower.substr(3, lower.size() - 4);
  else if (lower.rfind("f", 0) == 0) digits = lower.substr(1);
  if (is_digits(digits)) return prime_field(std::stoull(digits));
  throw ParseError("unknown field tag '" + t + "'");
}

Scalar Scalar::residue(std::int64_t value, std::uint64_t modulus) {
  if (modulus < 2) throw std::invalid_argument("residue modulus must be at least 2");
  Scalar s;
  s.modulus_ = modulus;
  const __int128 m = modulus;
  __int128 r = static_cast<__int128>(value) % m;
  if (r < 0) r += m;
  s.residue_ = static_cast<std::uint64_t>(r);
  return s;
}

Scalar Scalar::from_integer(long value, const FieldSpec& field) {
  if (field.kind() == FieldKind::prime_field) return residue(value, field.prime());
  return Scalar(value);
}

bool Scalar::is_one() const {
  if (is_modular()) return residue_ == 1;
  return re_ == 1 && sgn(im_) == 0;
}

Scalar Scalar::conjugate() const {
  if (is_modular() || sgn(im_) == 0) return *this;
  return Scalar(re_, mpq_class(-im_));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (is_modular()) {
    Scalar s = *this;
    s.residue_ = inv_mod(residue_, modulus_);
    return s;
  }
  if (sgn(im_) == 0) return Scalar(mpq_class(1 / re_));
  const mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(mpq_class(re_ / norm), mpq_class(-im_ / norm));
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (is_modular()) {
    s.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  } else {
    s.re_ = -re_;
    s.im_ = -im_;
  }
  return s;
}

namespace {

// Brings `a` and `b` to a common representation; returns the common modulus (0 for char 0).
std::uint64_t common_modulus(const Scalar& a, const Scalar& b) {
  if (a.is_modular() && b.is_modular() && a.modulus() != b.modulus()) {
    throw FieldMismatch("residues modulo " + std::to_string(a.modulus()) + " and " + std::to_string(b.modulus()));
  }
  return a.is_modular() ? a.modulus() : b.modulus();
}

std::uint64_t residue_of(const Scalar& s, std::uint64_t p) {
  return s.is_modular() ? s.value() : to_residue(s.real(), s.imag(), p);
}

}  // namespace

void Scalar::to_modular(std::uint64_t p) {
  if (is_modular()) return;
  residue_ = to_residue(re_, im_, p);
  modulus_ = p;
  re_ = 0;
  im_ = 0;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  if (const std::uint64_t p = common_modulus(*this, other); p != 0) {
    to_modular(p);
    residue_ = add_mod(residue_, residue_of(other, p), p);
  } else {
    re_ += other.re_;
    im_ += other.im_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  if (const std::uint64_t p = common_modulus(*this, other); p != 0) {
    to_modular(p);
    residue_ = mul_mod(residue_, residue_of(other, p), p);
  } else if (sgn(im_) == 0 && sgn(other.im_) == 0) {
    re_ *= other.re_;
  } else {
    mpq_class re = re_ * other.re_ - im_ * other.im_;
    mpq_class im = re_ * other.im_ + im_ * other.re_;
    re_ = std::move(re);
    im_ = std::move(im);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (const std::uint64_t p = common_modulus(*this, other); p != 0) {
    Scalar divisor = other;
    divisor.to_modular(p);
    return *this *= divisor.inverse();
  }
  return *this *= other.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (const std::uint64_t p = common_modulus(a, b); p != 0) {
    if (!a.is_modular() && sgn(a.imag()) != 0) return false;
    if (!b.is_modular() && sgn(b.imag()) != 0) return false;
    return residue_of(a, p) == residue_of(b, p);
  }
  return a.re_ == b.re_ && a.im_ == b.im_;
}

bool belongs_to(const Scalar& value, const FieldSpec& field) {
  switch (field.kind()) {
    case FieldKind::rationals: return !value.is_modular() && sgn(value.imag()) == 0;
    case FieldKind::gaussian_rationals: return !value.is_modular();
    case FieldKind::prime_field: return value.is_modular() && value.modulus() == field.prime();
  }
  return false;
}

Scalar coerce(const Scalar& value, const FieldSpec& field) {
  switch (field.kind()) {
    case FieldKind::rationals:
      if (value.is_modular()) throw FieldMismatch("residue cannot be coerced into Q");
      if (sgn(value.imag()) != 0) throw FieldMismatch("non-real value cannot be coerced into Q");
      return value;
    case FieldKind::gaussian_rationals:
      if (value.is_modular()) throw FieldMismatch("residue cannot be coerced into Q(i)");
      return value;
    case FieldKind::prime_field:
      if (value.is_modular()) {
        if (value.modulus() != field.prime()) throw FieldMismatch("residue belongs to a different prime field");
        return value;
      }
      return Scalar::residue(0, field.prime()) + value;
  }
  return value;
}

std::string to_string(const Scalar& value) {
  if (value.is_modular()) return std::to_string(value.value());
  const mpq_class& re = value.real();
  const mpq_class& im = value.imag();
  if (sgn(im) == 0) return re.get_str();
  std::string out;
  if (sgn(re) != 0) out = re.get_str();
  const mpq_class magnitude = abs(im);
  out += sgn(im) < 0 ? "-" : (out.empty() ? "" : "+");
  if (magnitude != 1) out += magnitude.get_str();
  out += "i";
  return out;
}

std::string to_string_standalone(const Scalar& value) {
  if (value.is_modular()) return std::to_string(value.value()) + " mod " + std::to_string(value.modulus());
  return to_string(value);
}

Scalar parse_scalar(std::string_view text, const FieldSpec& field) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty scalar");
  if (const auto pos = s.find("mod"); pos != std::string::npos) {
    const std::string modulus = trim(std::string_view(s).substr(pos + 3));
    if (!is_digits(modulus)) throw ParseError("malformed modulus in '" + s + "'");
    if (field.kind() != FieldKind::prime_field || std::stoull(modulus) != field.prime()) {
      throw FieldMismatch("'" + s + "' is not an element of " + field.tag());
    }
    return coerce(Scalar(parse_rational(std::string_view(s).substr(0, pos))), field);
  }
  if (s.back() == 'i') {
    if (field.kind() != FieldKind::gaussian_rationals) {
      throw FieldMismatch("imaginary value '" + s + "' outside Q(i)");
    }
    const std::string body = s.substr(0, s.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    const std::string real_text = split == std::string::npos ? "" : body.substr(0, split);
    std::string imag_text = split == std::string::npos ? body : body.substr(split);
    if (imag_text.empty() || imag_text == "+") imag_text = "1";
    else if (imag_text == "-") imag_text = "-1";
    const mpq_class re = real_text.empty() ? mpq_class(0) : parse_rational(real_text);
    return Scalar(re, parse_rational(imag_text));
  }
  return coerce(Scalar(parse_rational(s)), field);
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << to_string(value); }

}  // namespace dcx
