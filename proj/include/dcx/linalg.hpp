#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "dcx/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<dcx::Scalar> : GenericNumTraits<dcx::Scalar> {
  typedef dcx::Scalar Real;
  typedef dcx::Scalar NonInteger;
  typedef dcx::Scalar Literal;
  typedef dcx::Scalar Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 40,
    MulCost = 80
  };
  // Exact arithmetic: there is no rounding.
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace dcx {

using Index = Eigen::Index;
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

Matrix zeros(Index rows, Index cols);
Matrix identity(Index n, const FieldSpec& field);

/// Checked arithmetic. Throws DimensionMismatch / FieldMismatch.
Matrix add(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, const Scalar& s);
/// Entrywise Gaussian conjugation; the identity on Q and F_p.
Matrix conjugate(const Matrix& a);

bool is_zero(const Matrix& m);
/// Every entry is an element of `field`.
bool belongs_to(const Matrix& m, const FieldSpec& field);
Matrix coerce(const Matrix& m, const FieldSpec& field);

/// Reduced row-echelon form plus pivot columns.
struct RowEchelon {
  Matrix rref;
  std::vector<Index> pivots;

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. If any entry is a residue, the whole matrix is
/// read in that prime field. The zero rows are dropped from `rref`.
RowEchelon row_reduce(Matrix m);

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return row_reduce(m.eval()).rank();
}

/// A subspace of K^n, stored through its canonical RREF basis (one basis vector per row).
class Subspace {
 public:
  Subspace() = default;
  /// The span of the rows of `rows`, which must have `ambient` columns.
  static Subspace span(const Matrix& rows, Index ambient);
  static Subspace span(const Matrix& rows) { return span(rows, rows.cols()); }
  static Subspace zero(Index ambient) { return span(Matrix(0, ambient), ambient); }
  static Subspace full(Index ambient, const FieldSpec& field) { return span(identity(ambient, field), ambient); }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  bool contains(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Index ambient_ = 0;
  Matrix basis_;
};

/// {x : m x = 0}, a subspace of K^{cols(m)}.
Subspace kernel(const Matrix& m);
/// Column space of m, a subspace of K^{rows(m)}.
Subspace image(const Matrix& m);
/// m applied to the vectors of u.
Subspace image(const Matrix& m, const Subspace& u);
/// {x : m x in w}.
Subspace preimage(const Matrix& m, const Subspace& w);

/// Vectors annihilated by the rows of u's basis under the standard bilinear pairing.
Subspace annihilator(const Subspace& u);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);
/// w is a subspace of u.
bool contains(const Subspace& u, const Subspace& w);
/// dim u/w. Throws std::invalid_argument unless w is contained in u.
Index quotient_dim(const Subspace& u, const Subspace& w);

/// Coefficients of each row of `vectors` in the (independent) rows of `basis`.
/// Result has one row per vector. Throws std::invalid_argument if a vector is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& vectors);

/// Rows of `candidates` (in order) extending the rows of `base` to a basis of their joint span.
/// Returns the indices of the chosen rows.
std::vector<Index> greedy_extension(const Matrix& base, const Matrix& candidates);

/// Stacks two matrices with equal column counts.
Matrix vstack(const Matrix& top, const Matrix& bottom);

std::string to_string(const Matrix& m);

}  // namespace dcx
