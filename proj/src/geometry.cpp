#include "dcx/geometry.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

using RealVector = std::vector<mpq_class>;

RealVector unit(int n, int i) {
  RealVector v(static_cast<std::size_t>(n));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

bool is_zero(const RealVector& v) {
  return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

RealVector combine(const std::vector<std::pair<int, const RealVector*>>& terms) {
  RealVector out(terms.front().second->size());
  for (const auto& [s, v] : terms)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += s * (*v)[i];
  return out;
}

// Sign of sorting `seq`, or 0 if an index repeats.
int sort_sign(std::vector<int>& seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return 0;
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  std::sort(seq.begin(), seq.end());
  return sign;
}

std::vector<int> indices(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i);
  return out;
}

std::uint32_t mask_of(const std::vector<int>& seq) {
  std::uint32_t m = 0;
  for (int i : seq) m |= 1u << i;
  return m;
}

void accumulate(Form& f, std::uint32_t mask, const Scalar& c) {
  if (c.is_zero()) return;
  Scalar& slot = f[mask];
  slot += c;
  if (slot.is_zero()) f.erase(mask);
}

Matrix inverse(const Matrix& m) {
  const Index n = m.rows();
  const Matrix inv = coordinates(m, identity(n, FieldSpec::gaussian_rationals()));
  return inv;
}

Form differential(const LieModel& model, std::uint32_t mask) {
  Form out;
  const std::vector<int> idx = indices(mask);
  for (std::size_t j = 0; j < idx.size(); ++j) {
    const Scalar koszul = Scalar(j % 2 == 0 ? 1 : -1);
    for (const auto& [two, c] : model.d_theta[static_cast<std::size_t>(idx[j])]) {
      std::vector<int> seq(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(j));
      for (int t : indices(two)) seq.push_back(t);
      seq.insert(seq.end(), idx.begin() + static_cast<std::ptrdiff_t>(j) + 1, idx.end());
      const int s = sort_sign(seq);
      if (s != 0) accumulate(out, mask_of(seq), koszul * Scalar(s) * c);
    }
  }
  return out;
}

}  // namespace

LieData::LieData(int dim)
    : dim_(dim), constants_(static_cast<std::size_t>(dim) * dim * dim), j_(static_cast<std::size_t>(dim),
                                                                          RealVector(static_cast<std::size_t>(dim))) {}

std::size_t LieData::index(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("Lie algebra index");
  return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
}

void LieData::set_bracket(int i, int j, int k, const mpq_class& v) {
  if (i == j && sgn(v) != 0) throw std::invalid_argument("[e_i, e_i] must vanish");
  constants_[index(i, j, k)] = v;
  constants_[index(j, i, k)] = -v;
}

void LieData::set_complex_structure(std::vector<std::vector<mpq_class>> j) {
  if (j.size() != static_cast<std::size_t>(dim_)) throw DimensionMismatch("J must be square of the algebra's dimension");
  for (const auto& row : j)
    if (row.size() != static_cast<std::size_t>(dim_)) throw DimensionMismatch("J must be square of the algebra's dimension");
  j_ = std::move(j);
}

RealVector LieData::bracket(const RealVector& x, const RealVector& y) const {
  RealVector out(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      const mpq_class xy = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

RealVector LieData::apply_j(const RealVector& x) const {
  RealVector out(static_cast<std::size_t>(dim_));
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < dim_; ++c) out[r] += j_[r][c] * x[c];
  return out;
}

std::vector<std::string> lie_data_violations(const LieData& data) {
  std::vector<std::string> out;
  const int n = data.dim();
  if (n % 2 != 0) out.push_back("dimension is odd");
  for (int i = 0; i < n; ++i) {
    RealVector jj = data.apply_j(data.apply_j(unit(n, i)));
    jj[i] += 1;
    if (!is_zero(jj)) {
      out.push_back("J^2 != -Id");
      break;
    }
  }
  bool jacobi = true;
  for (int i = 0; i < n && jacobi; ++i) {
    for (int j = i + 1; j < n && jacobi; ++j) {
      for (int k = j + 1; k < n && jacobi; ++k) {
        const RealVector a = data.bracket(data.bracket(unit(n, i), unit(n, j)), unit(n, k));
        const RealVector b = data.bracket(data.bracket(unit(n, j), unit(n, k)), unit(n, i));
        const RealVector c = data.bracket(data.bracket(unit(n, k), unit(n, i)), unit(n, j));
        if (!is_zero(combine({{1, &a}, {1, &b}, {1, &c}}))) jacobi = false;
      }
    }
  }
  if (!jacobi) out.push_back("Jacobi identity fails");
  for (int i = 0; i < n; ++i) {
    bool integrable = true;
    for (int j = 0; j < n && integrable; ++j) {
      const RealVector x = unit(n, i), y = unit(n, j);
      const RealVector jx = data.apply_j(x), jy = data.apply_j(y);
      const RealVector lhs = data.bracket(jx, jy);
      const RealVector t1 = data.apply_j(data.bracket(jx, y));
      const RealVector t2 = data.apply_j(data.bracket(x, jy));
      const RealVector t3 = data.bracket(x, y);
      if (!is_zero(combine({{1, &lhs}, {-1, &t1}, {-1, &t2}, {-1, &t3}}))) integrable = false;
    }
    if (!integrable) {
      out.push_back("Nijenhuis tensor does not vanish");
      break;
    }
  }
  return out;
}

LieData h9_data() {
  LieData d(6);
  d.set_bracket(0, 1, 3, 1);
  d.set_bracket(0, 2, 5, -1);
  d.set_bracket(1, 3, 5, -1);
  std::vector<std::vector<mpq_class>> j(6, RealVector(6));
  for (int a = 0; a < 3; ++a) {
    j[2 * a + 1][2 * a] = 1;   // J e_{2a} = e_{2a+1}
    j[2 * a][2 * a + 1] = -1;  // J e_{2a+1} = -e_{2a}
  }
  d.set_complex_structure(std::move(j));
  return d;
}

Form wedge(const Form& a, const Form& b) {
  Form out;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma & mb) continue;
      std::vector<int> seq = indices(ma);
      for (int i : indices(mb)) seq.push_back(i);
      const int s = sort_sign(seq);
      accumulate(out, ma | mb, Scalar(s) * ca * cb);
    }
  }
  return out;
}

Bidegree LieModel::bidegree(std::uint32_t mask) const {
  const std::uint32_t hol = (1u << n) - 1;
  return {std::popcount(mask & hol), std::popcount(mask & ~hol)};
}

int LieModel::position(std::uint32_t mask) const {
  const auto& list = basis.at(bidegree(mask));
  return static_cast<int>(std::find(list.begin(), list.end(), mask) - list.begin());
}

LieModel lie_model(const LieData& data) {
  if (const auto v = lie_data_violations(data); !v.empty()) throw InvalidComplex("invalid Lie data: " + v.front());
  const int dim = data.dim();
  const int n = dim / 2;
  if (dim > 30) throw std::invalid_argument("Lie algebra too large");
  const FieldSpec qi = FieldSpec::gaussian_rationals();
  const Scalar i_unit = Scalar::imaginary_unit();
  const auto& j = data.complex_structure();

  LieModel model;
  model.n = n;
  // (1,0)-forms: ω∘J = -iω.
  bool paired = true;
  for (int a = 0; a < n && paired; ++a) {
    for (int r = 0; r < dim; ++r) {
      const int expect = r == 2 * a + 1 ? 1 : 0;
      if (j[r][2 * a] != expect) paired = false;
    }
  }
  Matrix omega = zeros(n, dim);
  if (paired) {
    for (int a = 0; a < n; ++a) {
      omega(a, 2 * a) = 1;
      omega(a, 2 * a + 1) = -i_unit;
    }
  } else {
    Matrix jt_plus_i(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) jt_plus_i(r, c) = Scalar(j[c][r]) + (r == c ? i_unit : Scalar(0));
    const Subspace eigen = kernel(jt_plus_i);
    if (eigen.dim() != n) throw InvalidComplex("eigenspace of J has the wrong dimension");
    omega = eigen.basis();
  }
  model.theta = vstack(omega, conjugate(omega));
  const Matrix q = inverse(model.theta);  // e^j = Σ_s q(j,s) θ^s

  model.d_theta.resize(static_cast<std::size_t>(dim));
  for (int a = 0; a < dim; ++a) {
    Form f;
    for (int k = 0; k < dim; ++k) {
      const Scalar pak = model.theta(a, k);
      if (pak.is_zero()) continue;
      for (int i = 0; i < dim; ++i) {
        for (int jj = i + 1; jj < dim; ++jj) {
          const mpq_class& c = data.c(i, jj, k);
          if (sgn(c) == 0) continue;
          // de^k ∋ -c e^i ∧ e^j
          const Scalar coeff = -pak * Scalar(c);
          for (int s = 0; s < dim; ++s) {
            for (int t = s + 1; t < dim; ++t) {
              const Scalar w = q(i, s) * q(jj, t) - q(i, t) * q(jj, s);
              if (!w.is_zero()) accumulate(f, (1u << s) | (1u << t), coeff * w);
            }
          }
        }
      }
    }
    model.d_theta[static_cast<std::size_t>(a)] = std::move(f);
  }

  // Subsets in lexicographic order of their sorted index tuples, bucketed by bidegree.
  std::vector<std::vector<int>> subsets{{}};
  for (int k = 1; k <= dim; ++k) {
    std::vector<int> comb(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) comb[t] = t;
    while (true) {
      subsets.push_back(comb);
      int t = k - 1;
      while (t >= 0 && comb[t] == dim - k + t) --t;
      if (t < 0) break;
      ++comb[t];
      for (int u = t + 1; u < k; ++u) comb[u] = comb[u - 1] + 1;
    }
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto& s : subsets) {
    const std::uint32_t m = mask_of(s);
    model.basis[model.bidegree(m)].push_back(m);
  }

  DoubleComplex& cx = model.complex;
  for (const auto& [bd, list] : model.basis) cx.set_dim(bd.first, bd.second, static_cast<int>(list.size()));
  for (const auto& [bd, list] : model.basis) {
    const auto [p, q0] = bd;
    Matrix d1 = Matrix::Constant(cx.dim(p + 1, q0), cx.dim(p, q0), Scalar::zero(qi));
    Matrix d2 = Matrix::Constant(cx.dim(p, q0 + 1), cx.dim(p, q0), Scalar::zero(qi));
    for (std::size_t col = 0; col < list.size(); ++col) {
      for (const auto& [mask, c] : differential(model, list[col])) {
        const Bidegree t = model.bidegree(mask);
        if (t == Bidegree{p + 1, q0}) d1(model.position(mask), static_cast<Index>(col)) = c;
        else if (t == Bidegree{p, q0 + 1}) d2(model.position(mask), static_cast<Index>(col)) = c;
        else throw InvalidComplex("d has a component of bidegree (" + std::to_string(t.first - p) + "," +
                                  std::to_string(t.second - q0) + ")");
      }
    }
    cx.set_d1(p, q0, d1);
    cx.set_d2(p, q0, d2);
  }
  require_valid(cx);
  return model;
}

DoubleComplex lie_complex(const LieData& data) { return lie_model(data).complex; }

ComplexMorphism lie_morphism(const LieModel& model, const std::vector<std::vector<mpq_class>>& phi) {
  const Index dim = model.theta.cols();
  if (phi.size() != static_cast<std::size_t>(dim)) throw DimensionMismatch("phi must match the algebra's dimension");
  Matrix phi_m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    if (phi[r].size() != static_cast<std::size_t>(dim)) throw DimensionMismatch("phi must be square");
    for (Index c = 0; c < dim; ++c) phi_m(r, c) = Scalar(phi[r][c]);
  }
  const Matrix q = inverse(model.theta);
  // Row a: the pullback of θ^a in the θ basis.
  const Matrix pull = multiply(multiply(model.theta, phi_m), q);
  const int n = model.n;
  std::vector<Form> images(static_cast<std::size_t>(dim));
  for (Index a = 0; a < dim; ++a) {
    for (Index b = 0; b < dim; ++b) {
      if (pull(a, b).is_zero()) continue;
      if ((a < n) != (b < n)) throw InvalidComplex("endomorphism does not preserve the complex structure");
      images[a][1u << b] = pull(a, b);
    }
  }
  ComplexMorphism f{model.complex, model.complex, {}};
  for (const auto& [bd, list] : model.basis) {
    Matrix m = Matrix::Constant(static_cast<Index>(list.size()), static_cast<Index>(list.size()),
                                Scalar::zero(FieldSpec::gaussian_rationals()));
    for (std::size_t col = 0; col < list.size(); ++col) {
      Form image{{0u, Scalar(1)}};
      for (int i : indices(list[col])) image = wedge(image, images[static_cast<std::size_t>(i)]);
      for (const auto& [mask, c] : image) m(model.position(mask), static_cast<Index>(col)) = c;
    }
    f.maps[bd] = m;
  }
  if (const auto v = validate(f); !v.empty()) throw InvalidComplex("induced map is not a morphism: " + v.front().describe());
  return f;
}

std::vector<std::vector<mpq_class>> h9_phi() {
  std::vector<std::vector<mpq_class>> phi(6, RealVector(6));
  // column 0: e3 - e6; column 1: e4 + e5
  phi[2][0] = 1;
  phi[5][0] = -1;
  phi[3][1] = 1;
  phi[4][1] = 1;
  return phi;
}

ComplexMorphism h9_endomorphism() { return lie_morphism(lie_model(h9_data()), h9_phi()); }

DoubleComplex hodge_complex(const std::map<Bidegree, int>& table, const FieldSpec& field) {
  DoubleComplex out(field);
  for (const auto& [bd, h] : table) {
    if (h < 0) throw std::invalid_argument("negative Hodge number");
    out.set_dim(bd.first, bd.second, h);
  }
  return out;
}

MultiplicityVector hopf_multiplicities() {
  return MultiplicityVector{{Shape::dot(0, 0), 1}, {Odd{1, 0, 0}, 1}, {Odd{3, 2, 2}, 1}, {Shape::dot(2, 2), 1}};
}

DoubleComplex hopf_model(const FieldSpec& field) { return model_complex(hopf_multiplicities(), field); }

MultiplicityVector calabi_eckmann_multiplicities(int u, int v) {
  if (u < 0 || u >= v) throw std::invalid_argument("Calabi-Eckmann model needs 0 <= u < v");
  const int n = u + v + 1;
  std::vector<Shape> seeds{Odd{0, 0, 0}, Odd{2 * u + 1, u, u}};
  for (int p = 0; p < u; ++p) seeds.push_back(Even{1, 1, p, p + 1});
  std::set<Shape> orbit;
  for (const Shape& s : seeds) {
    orbit.insert(s);
    orbit.insert(s.transposed());
    orbit.insert(s.reflected(n));
    orbit.insert(s.reflected(n).transposed());
  }
  MultiplicityVector m;
  for (const Shape& s : orbit) m.add(s, 1);
  return m;
}

DoubleComplex calabi_eckmann_model(int u, int v, const FieldSpec& field) {
  return model_complex(calabi_eckmann_multiplicities(u, v), field);
}

MultiplicityVector blowup_class(const MultiplicityVector& mx, const MultiplicityVector& mz, int r) {
  if (r < 2) throw std::invalid_argument("blowup needs codimension r >= 2");
  MultiplicityVector out = mx;
  for (int i = 1; i <= r - 1; ++i) out = out + mz.shifted(i);
  return out;
}

MultiplicityVector projective_bundle_class(const MultiplicityVector& mx, int m) {
  if (m < 0) throw std::invalid_argument("projective bundle rank must be nonnegative");
  MultiplicityVector out;
  for (int i = 0; i <= m; ++i) out = out + mx.shifted(i);
  return out;
}

}  // namespace dcx
