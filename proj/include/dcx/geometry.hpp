#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dcx/bicomplex.hpp"
#include "dcx/zigzags.hpp"

namespace dcx {

/// A real Lie algebra with basis e_1..e_{2n}, structure constants c_{ij}^k ([e_i,e_j] = Σ_k c_{ij}^k e_k)
/// and an almost complex structure J (columns are J e_j). Indices are 0-based.
class LieData {
 public:
  explicit LieData(int dim = 0);

  int dim() const { return dim_; }
  const mpq_class& c(int i, int j, int k) const { return constants_[index(i, j, k)]; }
  /// Sets c_{ij}^k = v and c_{ji}^k = -v.
  void set_bracket(int i, int j, int k, const mpq_class& v);
  const std::vector<std::vector<mpq_class>>& complex_structure() const { return j_; }
  void set_complex_structure(std::vector<std::vector<mpq_class>> j);

  /// [x, y] on coordinate vectors.
  std::vector<mpq_class> bracket(const std::vector<mpq_class>& x, const std::vector<mpq_class>& y) const;
  std::vector<mpq_class> apply_j(const std::vector<mpq_class>& x) const;

 private:
  std::size_t index(int i, int j, int k) const;

  int dim_;
  std::vector<mpq_class> constants_;
  std::vector<std::vector<mpq_class>> j_;
};

/// Failed conditions among: odd dimension, J^2 = -Id, Jacobi identity, Nijenhuis integrability.
std::vector<std::string> lie_data_violations(const LieData& data);

/// [e1,e2] = e4, [e1,e3] = [e2,e4] = -e6; J e1 = e2, J e3 = e4, J e5 = e6.
LieData h9_data();

/// Element of the exterior algebra on θ^0..θ^{2n-1}: bit mask of a sorted index set -> coefficient.
using Form = std::map<std::uint32_t, Scalar>;

Form wedge(const Form& a, const Form& b);

/// The Dolbeault model of an invariant complex structure.
///
/// θ^a = ω^a for a < n are (1,0)-forms, θ^{n+a} = conj(ω^a). Each bidegree's basis lists the
/// subsets with p holomorphic and q antiholomorphic indices in lexicographic order.
struct LieModel {
  int n = 0;
  /// Rows: θ^a in the dual basis e^1..e^{2n}.
  Matrix theta;
  /// dθ^a as 2-forms.
  std::vector<Form> d_theta;
  std::map<Bidegree, std::vector<std::uint32_t>> basis;
  DoubleComplex complex{FieldSpec::gaussian_rationals()};

  Bidegree bidegree(std::uint32_t mask) const;
  int position(std::uint32_t mask) const;
};

/// Throws InvalidComplex when the data fail lie_data_violations or d has stray bidegrees.
LieModel lie_model(const LieData& data);
DoubleComplex lie_complex(const LieData& data);

/// Morphism of Dolbeault models induced by a Lie algebra endomorphism phi (columns are phi(e_j)),
/// acting by pullback. Throws InvalidComplex unless phi preserves types.
ComplexMorphism lie_morphism(const LieModel& model, const std::vector<std::vector<mpq_class>>& phi);

/// e1 -> e3 - e6, e2 -> e4 + e5, other basis vectors -> 0.
std::vector<std::vector<mpq_class>> h9_phi();
ComplexMorphism h9_endomorphism();

/// Zero differentials, dimensions from the table.
DoubleComplex hodge_complex(const std::map<Bidegree, int>& table, const FieldSpec& field = FieldSpec::rationals());

MultiplicityVector hopf_multiplicities();
/// dot(0,0) + S_1^{0,0} + S_3^{2,2} + dot(2,2).
DoubleComplex hopf_model(const FieldSpec& field = FieldSpec::rationals());

/// Throws std::invalid_argument unless 0 <= u < v.
MultiplicityVector calabi_eckmann_multiplicities(int u, int v);
DoubleComplex calabi_eckmann_model(int u, int v, const FieldSpec& field = FieldSpec::rationals());

/// mx + Σ_{i=1}^{r-1} mz[i]. Throws std::invalid_argument for r < 2.
MultiplicityVector blowup_class(const MultiplicityVector& mx, const MultiplicityVector& mz, int r);
/// Σ_{i=0}^{m} mx[i].
MultiplicityVector projective_bundle_class(const MultiplicityVector& mx, int m);

}  // namespace dcx
