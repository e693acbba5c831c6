#pragma once

#include <map>
#include <string>
#include <vector>

#include "dcx/linalg.hpp"
#include "dcx/shape.hpp"

namespace dcx {

/// Bounding box of the support; meaningless when `empty`.
struct Box {
  bool empty = true;
  int pmin = 0, pmax = -1, qmin = 0, qmax = -1;

  int width() const { return empty ? 0 : pmax - pmin + 1; }
  int height() const { return empty ? 0 : qmax - qmin + 1; }
};

/// A bounded double complex A^{p,q} with anticommuting differentials
/// d1 : A^{p,q} -> A^{p+1,q} and d2 : A^{p,q} -> A^{p,q+1}.
///
/// Maps are matrices acting on column vectors; absent components are zero-dimensional
/// and absent maps are zero.
class DoubleComplex {
 public:
  explicit DoubleComplex(FieldSpec field = FieldSpec::rationals()) : field_(field) {}

  const FieldSpec& field() const { return field_; }

  int dim(int p, int q) const;
  int dim(const Bidegree& b) const { return dim(b.first, b.second); }
  /// Setting a dimension drops any stored map touching (p,q).
  void set_dim(int p, int q, int dim);
  /// Nonzero dimensions only.
  const std::map<Bidegree, int>& dims() const { return dims_; }
  int total_dim() const;
  Box support() const;
  bool empty() const { return dims_.empty(); }

  Matrix d1(int p, int q) const;
  Matrix d2(int p, int q) const;
  /// Shape-checked; entries are coerced into field().
  void set_d1(int p, int q, const Matrix& m);
  void set_d2(int p, int q, const Matrix& m);
  const std::map<Bidegree, Matrix>& d1_maps() const { return d1_; }
  const std::map<Bidegree, Matrix>& d2_maps() const { return d2_; }

 private:
  Matrix stored(const std::map<Bidegree, Matrix>& maps, int p, int q, int tp, int tq) const;
  void store(std::map<Bidegree, Matrix>& maps, int p, int q, int tp, int tq, const Matrix& m, const char* name);

  FieldSpec field_;
  std::map<Bidegree, int> dims_;
  std::map<Bidegree, Matrix> d1_;
  std::map<Bidegree, Matrix> d2_;
};

struct Violation {
  Bidegree at;
  /// "d1∘d1", "d2∘d2", "d1∘d2+d2∘d1" or, for morphisms, "f∘d1=d1∘f" and the like.
  std::string identity;

  std::string describe() const;
};

std::vector<Violation> validate(const DoubleComplex& a);
/// Throws InvalidComplex naming the first violation.
void require_valid(const DoubleComplex& a);

/// Canonical rank-one complex of a shape: every map +1 except -1 on the d1 out of a square's top-left corner.
DoubleComplex elementary(const Shape& s, const FieldSpec& field);
/// Direct sum of elementary complexes, `count` copies of each shape.
DoubleComplex elementary_sum(const std::vector<std::pair<Shape, int>>& shapes, const FieldSpec& field);

DoubleComplex direct_sum(const DoubleComplex& a, const DoubleComplex& b);
/// Koszul sign on the total degree of the left factor.
DoubleComplex tensor(const DoubleComplex& a, const DoubleComplex& b);
/// The dual complex reflected at p+q = n.
DoubleComplex dual(const DoubleComplex& a, int n);
/// A[k]^{p,q} = A^{p-k,q-k}.
DoubleComplex shift(const DoubleComplex& a, int k);
/// Swaps (p,q) and exchanges d1 with d2.
DoubleComplex transpose_pq(const DoubleComplex& a);
/// transpose_pq followed by entrywise conjugation.
DoubleComplex conjugate(const DoubleComplex& a);

/// Matrix Kronecker product.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// A bidegree-(0,0) map between double complexes.
struct ComplexMorphism {
  DoubleComplex source;
  DoubleComplex target;
  /// (p,q) -> dim target(p,q) x dim source(p,q); absent entries are zero.
  std::map<Bidegree, Matrix> maps;

  Matrix at(int p, int q) const;
};

std::vector<Violation> validate(const ComplexMorphism& f);
ComplexMorphism identity_morphism(const DoubleComplex& a);
ComplexMorphism zero_morphism(const DoubleComplex& source, const DoubleComplex& target);

}  // namespace dcx
