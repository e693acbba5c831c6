#include "dcx/bicomplex.hpp"

#include <algorithm>
#include <set>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

Scalar sign(int exponent, const FieldSpec& field) {
  return Scalar::from_integer(exponent % 2 == 0 ? 1 : -1, field);
}

void require_same_field(const DoubleComplex& a, const DoubleComplex& b) {
  if (!(a.field() == b.field())) {
    throw FieldMismatch("complexes over " + a.field().tag() + " and " + b.field().tag());
  }
}

}  // namespace

int DoubleComplex::dim(int p, int q) const {
  const auto it = dims_.find({p, q});
  return it == dims_.end() ? 0 : it->second;
}

void DoubleComplex::set_dim(int p, int q, int dim) {
  if (dim < 0) throw std::invalid_argument("negative dimension");
  for (auto* maps : {&d1_, &d2_}) {
    maps->erase({p, q});
  }
  d1_.erase({p - 1, q});
  d2_.erase({p, q - 1});
  if (dim == 0) dims_.erase({p, q});
  else dims_[{p, q}] = dim;
}

int DoubleComplex::total_dim() const {
  int total = 0;
  for (const auto& [b, n] : dims_) total += n;
  return total;
}

Box DoubleComplex::support() const {
  Box box;
  for (const auto& [b, n] : dims_) {
    if (box.empty) {
      box = Box{false, b.first, b.first, b.second, b.second};
      continue;
    }
    box.pmin = std::min(box.pmin, b.first);
    box.pmax = std::max(box.pmax, b.first);
    box.qmin = std::min(box.qmin, b.second);
    box.qmax = std::max(box.qmax, b.second);
  }
  return box;
}

Matrix DoubleComplex::stored(const std::map<Bidegree, Matrix>& maps, int p, int q, int tp, int tq) const {
  const auto it = maps.find({p, q});
  if (it != maps.end()) return it->second;
  return Matrix::Constant(dim(tp, tq), dim(p, q), Scalar::zero(field_));
}

void DoubleComplex::store(std::map<Bidegree, Matrix>& maps, int p, int q, int tp, int tq, const Matrix& m,
                          const char* name) {
  if (m.rows() != dim(tp, tq) || m.cols() != dim(p, q)) {
    throw DimensionMismatch(std::string(name) + " at (" + std::to_string(p) + "," + std::to_string(q) + ") must be " +
                            std::to_string(dim(tp, tq)) + "x" + std::to_string(dim(p, q)) + ", got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (m.size() == 0) {
    maps.erase({p, q});
    return;
  }
  maps[{p, q}] = coerce(m, field_);
}

Matrix DoubleComplex::d1(int p, int q) const { return stored(d1_, p, q, p + 1, q); }
Matrix DoubleComplex::d2(int p, int q) const { return stored(d2_, p, q, p, q + 1); }
void DoubleComplex::set_d1(int p, int q, const Matrix& m) { store(d1_, p, q, p + 1, q, m, "d1"); }
void DoubleComplex::set_d2(int p, int q, const Matrix& m) { store(d2_, p, q, p, q + 1, m, "d2"); }

std::string Violation::describe() const {
  return identity + " fails at (" + std::to_string(at.first) + "," + std::to_string(at.second) + ")";
}

std::vector<Violation> validate(const DoubleComplex& a) {
  std::vector<Violation> out;
  for (const auto& [b, n] : a.dims()) {
    const auto [p, q] = b;
    if (!is_zero(multiply(a.d1(p + 1, q), a.d1(p, q)))) out.push_back({b, "d1∘d1"});
    if (!is_zero(multiply(a.d2(p, q + 1), a.d2(p, q)))) out.push_back({b, "d2∘d2"});
    if (a.dim(p + 1, q + 1) > 0) {
      const Matrix anti = add(multiply(a.d1(p, q + 1), a.d2(p, q)), multiply(a.d2(p + 1, q), a.d1(p, q)));
      if (!is_zero(anti)) out.push_back({b, "d1∘d2+d2∘d1"});
    }
  }
  return out;
}

void require_valid(const DoubleComplex& a) {
  const auto violations = validate(a);
  if (!violations.empty()) throw InvalidComplex("invalid double complex: " + violations.front().describe());
}

DoubleComplex elementary(const Shape& s, const FieldSpec& field) {
  DoubleComplex c(field);
  const auto pts = s.points();
  for (const auto& [p, q] : pts) c.set_dim(p, q, 1);
  const Matrix one = Matrix::Constant(1, 1, Scalar::one(field));
  for (const auto& [p, q] : pts) {
    if (s.contains(p + 1, q)) {
      const bool top_left = s.is_square() && p == s.square().p - 1 && q == s.square().q;
      c.set_d1(p, q, top_left ? Matrix(-one) : one);
    }
    if (s.contains(p, q + 1)) c.set_d2(p, q, one);
  }
  return c;
}

DoubleComplex elementary_sum(const std::vector<std::pair<Shape, int>>& shapes, const FieldSpec& field) {
  DoubleComplex out(field);
  for (const auto& [s, count] : shapes) {
    const DoubleComplex e = elementary(s, field);
    for (int k = 0; k < count; ++k) out = direct_sum(out, e);
  }
  return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

namespace {

Matrix block_diagonal(const Matrix& x, const Matrix& y) {
  Matrix out = Matrix::Constant(x.rows() + y.rows(), x.cols() + y.cols(), Scalar(0));
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

// Block layout of (A ⊗ B)^{p,q}: offsets of A^{a} ⊗ B^{(p,q)-a}, ordered by a.
struct TensorLayout {
  std::map<Bidegree, std::map<Bidegree, int>> offsets;
  std::map<Bidegree, int> dims;
};

TensorLayout tensor_layout(const DoubleComplex& a, const DoubleComplex& b) {
  TensorLayout layout;
  for (const auto& [ba, na] : a.dims()) {
    for (const auto& [bb, nb] : b.dims()) {
      const Bidegree t{ba.first + bb.first, ba.second + bb.second};
      layout.offsets[t][ba] = 0;
      layout.dims[t] += na * nb;
    }
  }
  for (auto& [t, blocks] : layout.offsets) {
    int offset = 0;
    for (auto& [ba, off] : blocks) {
      off = offset;
      offset += a.dim(ba) * b.dim(t.first - ba.first, t.second - ba.second);
    }
  }
  return layout;
}

}  // namespace

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b) {
  require_same_field(a, b);
  DoubleComplex out(a.field());
  std::set<Bidegree> support;
  for (const auto& [bd, n] : a.dims()) support.insert(bd);
  for (const auto& [bd, n] : b.dims()) support.insert(bd);
  for (const auto& [p, q] : support) out.set_dim(p, q, a.dim(p, q) + b.dim(p, q));
  for (const auto& [p, q] : support) {
    out.set_d1(p, q, block_diagonal(a.d1(p, q), b.d1(p, q)));
    out.set_d2(p, q, block_diagonal(a.d2(p, q), b.d2(p, q)));
  }
  return out;
}

DoubleComplex tensor(const DoubleComplex& a, const DoubleComplex& b) {
  require_same_field(a, b);
  const FieldSpec& field = a.field();
  const TensorLayout layout = tensor_layout(a, b);
  DoubleComplex out(field);
  for (const auto& [t, n] : layout.dims) out.set_dim(t.first, t.second, n);
  for (const auto& [t, blocks] : layout.offsets) {
    for (int which = 1; which <= 2; ++which) {
      const Bidegree target = which == 1 ? Bidegree{t.first + 1, t.second} : Bidegree{t.first, t.second + 1};
      const int rows = out.dim(target);
      if (rows == 0) continue;
      Matrix m = Matrix::Constant(rows, layout.dims.at(t), Scalar::zero(field));
      const auto& target_blocks = layout.offsets.at(target);
      for (const auto& [ba, col] : blocks) {
        const Bidegree bb{t.first - ba.first, t.second - ba.second};
        const int na = a.dim(ba), nb = b.dim(bb);
        // d a ⊗ b
        const Bidegree ta = which == 1 ? Bidegree{ba.first + 1, ba.second} : Bidegree{ba.first, ba.second + 1};
        if (a.dim(ta) > 0) {
          const Matrix da = which == 1 ? a.d1(ba.first, ba.second) : a.d2(ba.first, ba.second);
          const Matrix block = kronecker(da, identity(nb, field));
          m.block(target_blocks.at(ta), col, block.rows(), block.cols()) += block;
        }
        // ± a ⊗ d b
        const Bidegree tb = which == 1 ? Bidegree{bb.first + 1, bb.second} : Bidegree{bb.first, bb.second + 1};
        if (b.dim(tb) > 0) {
          const Matrix db = which == 1 ? b.d1(bb.first, bb.second) : b.d2(bb.first, bb.second);
          const Matrix block = scale(kronecker(identity(na, field), db), sign(ba.first + ba.second, field));
          m.block(target_blocks.at(ba), col, block.rows(), block.cols()) += block;
        }
      }
      if (which == 1) out.set_d1(t.first, t.second, m);
      else out.set_d2(t.first, t.second, m);
    }
  }
  return out;
}

DoubleComplex dual(const DoubleComplex& a, int n) {
  const FieldSpec& field = a.field();
  DoubleComplex out(field);
  for (const auto& [b, k] : a.dims()) out.set_dim(n - b.first, n - b.second, k);
  for (const auto& [b, k] : out.dims()) {
    const auto [p, q] = b;
    const Scalar s = sign(p + q + 1, field);
    if (out.dim(p + 1, q) > 0) out.set_d1(p, q, scale(a.d1(n - p - 1, n - q).transpose(), s));
    if (out.dim(p, q + 1) > 0) out.set_d2(p, q, scale(a.d2(n - p, n - q - 1).transpose(), s));
  }
  return out;
}

DoubleComplex shift(const DoubleComplex& a, int k) {
  DoubleComplex out(a.field());
  for (const auto& [b, n] : a.dims()) out.set_dim(b.first + k, b.second + k, n);
  for (const auto& [b, m] : a.d1_maps()) out.set_d1(b.first + k, b.second + k, m);
  for (const auto& [b, m] : a.d2_maps()) out.set_d2(b.first + k, b.second + k, m);
  return out;
}

DoubleComplex transpose_pq(const DoubleComplex& a) {
  DoubleComplex out(a.field());
  for (const auto& [b, n] : a.dims()) out.set_dim(b.second, b.first, n);
  for (const auto& [b, m] : a.d1_maps()) out.set_d2(b.second, b.first, m);
  for (const auto& [b, m] : a.d2_maps()) out.set_d1(b.second, b.first, m);
  return out;
}

DoubleComplex conjugate(const DoubleComplex& a) {
  DoubleComplex out(a.field());
  for (const auto& [b, n] : a.dims()) out.set_dim(b.second, b.first, n);
  for (const auto& [b, m] : a.d1_maps()) out.set_d2(b.second, b.first, conjugate(m));
  for (const auto& [b, m] : a.d2_maps()) out.set_d1(b.second, b.first, conjugate(m));
  return out;
}

Matrix ComplexMorphism::at(int p, int q) const {
  const auto it = maps.find({p, q});
  if (it != maps.end()) return it->second;
  return Matrix::Constant(target.dim(p, q), source.dim(p, q), Scalar::zero(source.field()));
}

std::vector<Violation> validate(const ComplexMorphism& f) {
  std::vector<Violation> out;
  if (!(f.source.field() == f.target.field())) {
    out.push_back({{0, 0}, "source and target fields agree"});
    return out;
  }
  for (const auto& [b, m] : f.maps) {
    if (m.rows() != f.target.dim(b) || m.cols() != f.source.dim(b)) out.push_back({b, "map has bidegree (0,0) shape"});
  }
  if (!out.empty()) return out;
  for (const auto& [b, n] : f.source.dims()) {
    const auto [p, q] = b;
    if (!is_zero(add(multiply(f.at(p + 1, q), f.source.d1(p, q)), -multiply(f.target.d1(p, q), f.at(p, q))))) {
      out.push_back({b, "f∘d1=d1∘f"});
    }
    if (!is_zero(add(multiply(f.at(p, q + 1), f.source.d2(p, q)), -multiply(f.target.d2(p, q), f.at(p, q))))) {
      out.push_back({b, "f∘d2=d2∘f"});
    }
  }
  return out;
}

ComplexMorphism identity_morphism(const DoubleComplex& a) {
  ComplexMorphism f{a, a, {}};
  for (const auto& [b, n] : a.dims()) f.maps[b] = identity(n, a.field());
  return f;
}

ComplexMorphism zero_morphism(const DoubleComplex& source, const DoubleComplex& target) {
  return ComplexMorphism{source, target, {}};
}

}  // namespace dcx
