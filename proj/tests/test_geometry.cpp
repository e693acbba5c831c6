#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcx/errors.hpp"
#include "dcx/geometry.hpp"
#include "dcx/grothendieck.hpp"
#include "dcx/spectral.hpp"
#include "support/helpers.hpp"

using namespace dcx;
using dcx::testing::gi;

namespace {

using Real = std::vector<std::vector<mpq_class>>;

template <class K>
std::map<K, int> nonzero(std::map<K, int> m) {
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

Real standard_j(int dim) {
  Real j(dim, std::vector<mpq_class>(dim, 0));
  for (int a = 0; a < dim; a += 2) {
    j[a + 1][a] = 1;   // J e_a = e_{a+1}
    j[a][a + 1] = -1;  // J e_{a+1} = -e_a
  }
  return j;
}

/// 2-forms on the real basis: (i,j) with i<j -> coefficient of e^i ∧ e^j.
using TwoForm = std::map<std::pair<int, int>, Scalar>;

void put(TwoForm& f, int i, int j, const Scalar& c) {
  if (i == j || c.is_zero()) return;
  if (i > j) return put(f, j, i, -c);
  f[{i, j}] += c;
  if (f[{i, j}].is_zero()) f.erase({i, j});
}

/// dω(e_i, e_j) = -ω([e_i, e_j]) for a 1-form with coefficients w.
TwoForm exterior_d(const LieData& g, const std::vector<Scalar>& w) {
  TwoForm out;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      Scalar value = 0;
      for (int k = 0; k < g.dim(); ++k) value -= w[k] * Scalar(g.c(i, j, k));
      put(out, i, j, value);
    }
  return out;
}

TwoForm wedge1(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  TwoForm out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) put(out, static_cast<int>(i), static_cast<int>(j), a[i] * b[j]);
  return out;
}

TwoForm combine(const TwoForm& a, const Scalar& s, const TwoForm& b, const Scalar& t) {
  TwoForm out;
  for (const auto& [k, v] : a) put(out, k.first, k.second, s * v);
  for (const auto& [k, v] : b) put(out, k.first, k.second, t * v);
  return out;
}

/// A 2-form in the θ basis of the model, rewritten on the real basis.
TwoForm to_real(const LieModel& model, const Form& f) {
  TwoForm out;
  for (const auto& [mask, c] : f) {
    std::vector<int> idx;
    for (int a = 0; a < 32; ++a)
      if (mask & (1u << a)) idx.push_back(a);
    REQUIRE(idx.size() == 2);
    for (Index k = 0; k < model.theta.cols(); ++k)
      for (Index l = 0; l < model.theta.cols(); ++l)
        put(out, static_cast<int>(k), static_cast<int>(l), c * model.theta(idx[0], k) * model.theta(idx[1], l));
  }
  return out;
}

std::vector<Scalar> row(const Matrix& m, Index r) {
  std::vector<Scalar> out;
  for (Index k = 0; k < m.cols(); ++k) out.push_back(m(r, k));
  return out;
}

int binomial(int n, int k) { return k < 0 || k > n ? 0 : (k == 0 ? 1 : binomial(n - 1, k - 1) * n / k); }

}  // namespace

TEST_CASE("Lie data validation") {
  CHECK(lie_data_violations(h9_data()).empty());
  LieData bad_j(2);
  bad_j.set_complex_structure({{1, 0}, {0, 1}});
  CHECK(lie_data_violations(bad_j) == std::vector<std::string>{"J^2 != -Id"});
  LieData jac(4);
  jac.set_complex_structure(standard_j(4));
  jac.set_bracket(0, 1, 2, 1);
  jac.set_bracket(1, 2, 3, 1);
  jac.set_bracket(2, 3, 0, 1);
  CHECK_FALSE(lie_data_violations(jac).empty());
  // h3 x R with J e0 = e1 and J e2 = e3 is not integrable.
  LieData nij(4);
  nij.set_complex_structure(standard_j(4));
  nij.set_bracket(0, 2, 1, 1);
  const auto v = lie_data_violations(nij);
  CHECK(std::find(v.begin(), v.end(), "Nijenhuis tensor does not vanish") != v.end());
  CHECK_THROWS_AS(lie_complex(nij), InvalidComplex);
  CHECK_THROWS_AS(lie_complex(bad_j), InvalidComplex);
}

TEST_CASE("abelian Lie algebra gives the torus") {
  for (int dim : {2, 4, 6}) {
    LieData g(dim);
    g.set_complex_structure(standard_j(dim));
    const DoubleComplex t = lie_complex(g);
    const int n = dim / 2;
    for (const auto& [b, m] : t.d1_maps()) CHECK(is_zero(m));
    for (const auto& [b, m] : t.d2_maps()) CHECK(is_zero(m));
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) CHECK(t.dim(p, q) == binomial(n, p) * binomial(n, q));
    CHECK(satisfies_ddbar_lemma(t));
  }
}

TEST_CASE("h9 structure equations") {
  const LieData g = h9_data();
  const LieModel model = lie_model(g);
  CHECK(model.n == 3);
  CHECK(model.complex.total_dim() == 64);
  CHECK(validate(model.complex).empty());

  // ω^1 = e^1 - i e^2 and so on.
  const Matrix& th = model.theta;
  CHECK(th(0, 0) == Scalar(1));
  CHECK(th(0, 1) == gi(0, -1));
  CHECK(th(3, 1) == gi(0, 1));

  for (int a = 0; a < 6; ++a) CHECK(to_real(model, model.d_theta[a]) == exterior_d(g, row(th, a)));

  const auto w1 = row(th, 0), w2 = row(th, 1), w1b = row(th, 3), w2b = row(th, 4);
  CHECK(model.d_theta[0].empty());
  CHECK(model.d_theta[3].empty());
  // The displayed structure equations, up to one overall sign: dω² = -½ ω̄¹∧ω¹, dω³ = -(i/2)(ω¹∧ω̄² + ω̄¹∧ω²).
  const TwoForm shown2 = combine(wedge1(w1b, w1), dcx::testing::q(1, 2), {}, 0);
  const TwoForm shown3 = combine(wedge1(w1, w2b), Scalar(mpq_class(0), mpq_class(1, 2)), wedge1(w1b, w2),
                                 Scalar(mpq_class(0), mpq_class(1, 2)));
  CHECK(exterior_d(g, w2) == combine(shown2, -1, {}, 0));
  CHECK(exterior_d(g, row(th, 2)) == combine(shown3, -1, {}, 0));
  // ∂ω² = 0: dω² is purely of type (1,1).
  for (const auto& [mask, c] : model.d_theta[1]) CHECK(model.bidegree(mask) == Bidegree{1, 1});

  CHECK(betti_numbers(model.complex).at(1) == 4);
}

TEST_CASE("h9 endomorphism") {
  const LieModel model = lie_model(h9_data());
  const ComplexMorphism f = h9_endomorphism();
  CHECK(validate(f).empty());
  // Degree (1,0): basis ω¹, ω², ω³; f(ω¹) = 0, f(ω²) = ω¹, f(ω³) = iω¹.
  const Matrix f10 = f.at(1, 0);
  REQUIRE(f10.rows() == 3);
  const Matrix expected = dcx::testing::mat({{0, 1, gi(0, 1)}, {0, 0, 0}, {0, 0, 0}});
  CHECK(f10 == expected);
  // ω¹∧ω² ↦ 0 by multiplicativity.
  const int pos = model.position(0b011);
  CHECK(is_zero(f.at(2, 0).col(pos)));

  CHECK_FALSE(is_strict(f, Side::first));
  bool seen = false;
  for (const StrictnessCheck& c : strictness_report(f, Side::first)) {
    if (c.degree != 1 || c.p != 1) continue;
    seen = true;
    CHECK(c.image_of_filtration == 0);
    CHECK(c.filtration_of_image == 1);
    CHECK_FALSE(c.strict);
  }
  CHECK(seen);
}

TEST_CASE("h9 multiplicities") {
  const MultiplicityVector m = multiplicities(lie_complex(h9_data()));
  CHECK(m[Odd{0, 0, 0}] == 1);
  CHECK(m[Odd{1, 1, 0}] == 1);
  CHECK(m[Odd{1, 0, 0}] == 2);
  CHECK(reconciles(lie_complex(h9_data()), m));
  CHECK(realizability_necessary(m, 3).empty());
}

TEST_CASE("Hodge complexes") {
  const int g = 3;
  const DoubleComplex s = hodge_complex({{{0, 0}, 1}, {{1, 0}, g}, {{0, 1}, g}, {{1, 1}, 1}});
  CHECK(betti_numbers(s) == std::map<int, int>{{0, 1}, {1, 2 * g}, {2, 1}});
  CHECK(satisfies_ddbar_lemma(s));
  const DoubleComplex p2 = hodge_complex({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}});
  CHECK(nonzero(betti_numbers(p2)) == std::map<int, int>{{0, 1}, {2, 1}, {4, 1}});
  CHECK(hodge_complex({}).empty());
  CHECK_THROWS_AS(hodge_complex({{{0, 0}, -1}}), std::invalid_argument);
}

TEST_CASE("Hopf surface") {
  const DoubleComplex h = hopf_model();
  CHECK(h.total_dim() == 8);
  const MultiplicityVector m = multiplicities(h);
  CHECK(m == MultiplicityVector{{Odd{0, 0, 0}, 1}, {Odd{1, 0, 0}, 1}, {Odd{3, 2, 2}, 1}, {Odd{4, 2, 2}, 1}});
  CHECK(m == hopf_multiplicities());
  CHECK(nonzero(delta_degrees(h)) == std::map<int, int>{{2, 2}});
  CHECK(realizability_necessary(m, 2).empty());
}

TEST_CASE("Calabi-Eckmann manifolds") {
  const DoubleComplex m = calabi_eckmann_model(1, 2);
  CHECK(m.total_dim() == 16);
  CHECK(nonzero(betti_numbers(m)) == std::map<int, int>{{0, 1}, {3, 1}, {5, 1}, {8, 1}});
  const std::map<Bidegree, int> borel{{{0, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}, {{1, 2}, 1},
                                      {{3, 2}, 1}, {{3, 3}, 1}, {{4, 3}, 1}, {{4, 4}, 1}};
  CHECK(nonzero(dolbeault(m, Side::first)) == borel);
  CHECK_FALSE(degenerates_at(m, 1));
  CHECK(degenerates_at(m, 2));
  CHECK(realizability_necessary(multiplicities(m), 4).empty());

  const DoubleComplex hopf_like = calabi_eckmann_model(0, 1);
  CHECK(nonzero(betti_numbers(hopf_like)) == std::map<int, int>{{0, 1}, {1, 1}, {3, 1}, {4, 1}});
  CHECK(degenerates_at(hopf_like, 1));

  for (const auto& [u, v] : {std::pair{0, 2}, {1, 3}, {2, 3}}) {
    const DoubleComplex c = calabi_eckmann_model(u, v);
    const int n = u + v + 1;
    CHECK(realizability_necessary(multiplicities(c), n).empty());
    CHECK(nonzero(betti_numbers(c)) == std::map<int, int>{{0, 1}, {2 * u + 1, 1}, {2 * v + 1, 1}, {2 * n, 1}});
    CHECK(degenerates_at(c, 2));
    CHECK(degenerates_at(c, 1) == (u == 0));
  }
  CHECK_THROWS_AS(calabi_eckmann_model(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(calabi_eckmann_model(2, 1), std::invalid_argument);
}

TEST_CASE("projective bundles and blowups") {
  const MultiplicityVector point{{Shape::dot(0, 0), 1}};
  const MultiplicityVector p2 = projective_bundle_class(point, 2);
  CHECK(p2 == MultiplicityVector{{Shape::dot(0, 0), 1}, {Shape::dot(1, 1), 1}, {Shape::dot(2, 2), 1}});
  CHECK(projective_bundle_class(hopf_multiplicities(), 0) == hopf_multiplicities());
  CHECK(blowup_class(p2, point, 2) == p2 + MultiplicityVector{{Shape::dot(1, 1), 1}});
  CHECK_THROWS_AS(blowup_class(p2, point, 1), std::invalid_argument);

  const MultiplicityVector hp2 = projective_bundle_class(hopf_multiplicities(), 2);
  CHECK(delta_from_zigzags(hp2).at(4) == 2);
  const MultiplicityVector blown = blowup_class(hp2, hopf_multiplicities(), 2);
  CHECK(delta_from_zigzags(blown).at(4) == 4);
  for (int k : {0, 1, 2, 6, 7, 8}) {
    const auto a = delta_from_zigzags(hp2), b = delta_from_zigzags(blown);
    CHECK((a.count(k) ? a.at(k) : 0) == (b.count(k) ? b.at(k) : 0));
  }

  // Künneth in R1: the class of H x P^2 is the product of the classes.
  const RingClass product = ring_mul(class_of(multiplicities(hopf_model()), Level::R1), class_of(p2, Level::R1));
  CHECK(product == class_of(hp2, Level::R1));
  CHECK(class_of(multiplicities(tensor(hopf_model(), hodge_complex({{{0, 0}, 1}, {{1, 1}, 1}, {{2, 2}, 1}}))),
                 Level::R1) == class_of(hp2, Level::R1));
}
