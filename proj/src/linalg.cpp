#include "dcx/linalg.hpp"

#include <sstream>
#include <stdexcept>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

std::uint64_t modulus_of(const Matrix& m) {
  std::uint64_t p = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const Scalar& s = m(i, j);
      if (!s.is_modular()) continue;
      if (p != 0 && p != s.modulus()) throw FieldMismatch("matrix mixes residues of different moduli");
      p = s.modulus();
    }
  }
  return p;
}

// Incremental echelon basis used for independence tests.
class Echelon {
 public:
  explicit Echelon(Index n) : n_(n) {}

  // Reduces v in place; returns true if it was independent (and stores it).
  bool insert(Vector v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Index c = pivots_[k];
      if (v(c).is_zero()) continue;
      const Scalar f = v(c);
      for (Index j = c; j < n_; ++j) {
        if (!rows_[k](j).is_zero()) v(j) -= f * rows_[k](j);
      }
    }
    for (Index j = 0; j < n_; ++j) {
      if (v(j).is_zero()) continue;
      const Scalar inv = v(j).inverse();
      for (Index t = j; t < n_; ++t) v(t) *= inv;
      rows_.push_back(std::move(v));
      pivots_.push_back(j);
      return true;
    }
    return false;
  }

 private:
  Index n_;
  std::vector<Vector> rows_;
  std::vector<Index> pivots_;
};

}  // namespace

Matrix zeros(Index rows, Index cols) { return Matrix::Constant(rows, cols, Scalar(0)); }

Matrix identity(Index n, const FieldSpec& field) {
  Matrix m = Matrix::Constant(n, n, Scalar::zero(field));
  for (Index i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("add: shapes differ");
  return a + b;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
  if (a.cols() == 0) return zeros(a.rows(), b.cols());
  Matrix out(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < b.cols(); ++j) {
      Scalar acc;
      for (Index k = 0; k < a.cols(); ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Matrix scale(const Matrix& a, const Scalar& s) {
  Matrix out = a;
  for (Index i = 0; i < out.rows(); ++i)
    for (Index j = 0; j < out.cols(); ++j) out(i, j) *= s;
  return out;
}

Matrix conjugate(const Matrix& a) {
  return a.unaryExpr([](const Scalar& s) { return s.conjugate(); });
}

bool is_zero(const Matrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool belongs_to(const Matrix& m, const FieldSpec& field) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!belongs_to(m(i, j), field)) return false;
  return true;
}

Matrix coerce(const Matrix& m, const FieldSpec& field) {
  return m.unaryExpr([&field](const Scalar& s) { return coerce(s, field); });
}

RowEchelon row_reduce(Matrix m) {
  if (const std::uint64_t p = modulus_of(m); p != 0) m = coerce(m, FieldSpec::prime_field(p));
  const Index rows = m.rows();
  const Index cols = m.cols();
  RowEchelon out;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = r;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    const Scalar inv = m(r, c).inverse();
    for (Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Scalar f = m(i, c);
      for (Index j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = m.topRows(r);
  return out;
}

Subspace Subspace::span(const Matrix& rows, Index ambient) {
  if (rows.cols() != ambient) throw DimensionMismatch("span: vectors do not live in the ambient space");
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = row_reduce(rows).rref;
  return s;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("contains: vector of wrong length");
  Matrix stacked(basis_.rows() + 1, ambient_);
  stacked.topRows(basis_.rows()) = basis_;
  stacked.row(basis_.rows()) = v.transpose();
  return rank(stacked) == basis_.rows();
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.basis_.rows() == b.basis_.rows() && a.basis_ == b.basis_;
}

Subspace kernel(const Matrix& m) {
  const RowEchelon e = row_reduce(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  Matrix basis = zeros(n - e.rank(), n);
  Index row = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(row, f) = 1;
    for (Index i = 0; i < e.rank(); ++i) basis(row, e.pivots[static_cast<std::size_t>(i)]) = -e.rref(i, f);
    ++row;
  }
  return Subspace::span(basis, n);
}

Subspace image(const Matrix& m) { return Subspace::span(m.transpose(), m.rows()); }

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient_dim()) throw DimensionMismatch("image: subspace does not live in the domain");
  return Subspace::span(multiply(u.basis(), m.transpose()), m.rows());
}

Subspace annihilator(const Subspace& u) { return kernel(u.basis()); }

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient_dim()) throw DimensionMismatch("preimage: subspace does not live in the codomain");
  return kernel(multiply(annihilator(w).basis(), m));
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("sum: ambient dimensions differ");
  return Subspace::span(vstack(u.basis(), w.basis()), u.ambient_dim());
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  if (u.dim() == 0 || w.dim() == 0) return Subspace::zero(u.ambient_dim());
  if (u.dim() == u.ambient_dim()) return w;
  if (w.dim() == w.ambient_dim()) return u;
  return annihilator(sum(annihilator(u), annihilator(w)));
}

bool contains(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim()) throw DimensionMismatch("contains: ambient dimensions differ");
  return sum(u, w).dim() == u.dim();
}

Index quotient_dim(const Subspace& u, const Subspace& w) {
  if (!contains(u, w)) throw std::invalid_argument("quotient_dim: the second space is not contained in the first");
  return u.dim() - w.dim();
}

Matrix coordinates(const Matrix& basis, const Matrix& vectors) {
  if (basis.cols() != vectors.cols()) throw DimensionMismatch("coordinates: vectors of wrong length");
  const Index k = basis.rows();
  // Solve C * basis = vectors, i.e. basis^T C^T = vectors^T, via the augmented system.
  Matrix aug(basis.cols(), k + vectors.rows());
  aug.leftCols(k) = basis.transpose();
  aug.rightCols(vectors.rows()) = vectors.transpose();
  const RowEchelon e = row_reduce(aug);
  Index lead = 0;
  while (lead < e.rank() && e.pivots[static_cast<std::size_t>(lead)] < k) ++lead;
  if (lead != k) throw std::invalid_argument("coordinates: basis rows are dependent");
  if (e.rank() != k) throw std::invalid_argument("coordinates: vector outside the span");
  Matrix c = e.rref.topRows(k).rightCols(vectors.rows()).transpose();
  return c;
}

std::vector<Index> greedy_extension(const Matrix& base, const Matrix& candidates) {
  if (base.cols() != candidates.cols()) throw DimensionMismatch("greedy_extension: vectors of wrong length");
  Matrix all = vstack(base, candidates);
  if (const std::uint64_t p = modulus_of(all); p != 0) all = coerce(all, FieldSpec::prime_field(p));
  Echelon echelon(all.cols());
  for (Index i = 0; i < base.rows(); ++i) echelon.insert(all.row(i).transpose());
  std::vector<Index> chosen;
  for (Index i = 0; i < candidates.rows(); ++i) {
    if (echelon.insert(all.row(base.rows() + i).transpose())) chosen.push_back(i);
  }
  return chosen;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix out(top.rows() + bottom.rows(), top.cols());
  out.topRows(top.rows()) = top;
  out.bottomRows(bottom.rows()) = bottom;
  return out;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << to_string(m(i, j));
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace dcx
