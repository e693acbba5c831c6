#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "dcx/geometry.hpp"
#include "dcx/spectral.hpp"
#include "dcx/zigzags.hpp"
#include "support/random_complexes.hpp"
#include "support/shape_oracle.hpp"

using namespace dcx;

namespace {

const FieldSpec Q = FieldSpec::rationals();

template <class K>
std::map<K, int> nonzero(std::map<K, int> m) {
  for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
  return m;
}

bool all_zero(const std::map<Bidegree, int>& residuals) {
  return std::all_of(residuals.begin(), residuals.end(), [](const auto& e) { return e.second == 0; });
}

bool mentions(const std::vector<std::string>& v, const std::string& key) {
  return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.rfind(key, 0) == 0; });
}

}  // namespace

TEST_CASE("multiplicity vector basics") {
  MultiplicityVector m{{Square{1, 1}, 2}, {Shape::dot(0, 0), 1}};
  CHECK(m[Square{1, 1}] == 2);
  CHECK(m[Odd{5, 0, 0}] == 0);
  CHECK(m.total_dim() == 9);
  m.add(Square{1, 1}, -2);
  CHECK(m == MultiplicityVector{{Shape::dot(0, 0), 1}});
  CHECK_THROWS(m.add(Shape::dot(0, 0), -2));
  CHECK(MultiplicityVector{{Odd{1, 1, 0}, 1}}.transposed() == MultiplicityVector{{Odd{1, 0, 1}, 1}});
  CHECK(MultiplicityVector{{Odd{1, 0, 0}, 1}}.reflected(2) == MultiplicityVector{{Odd{3, 2, 2}, 1}});
}

TEST_CASE("multiplicities of elementary complexes") {
  CHECK(multiplicities(elementary(Square{1, 1}, Q)) == MultiplicityVector{{Square{1, 1}, 1}});
  CHECK(multiplicities(elementary(Even{1, 2, 0, 1}, Q)) == MultiplicityVector{{Even{1, 2, 0, 1}, 1}});
  for (const Shape& s : dcx::testing::shapes_in_box(4)) {
    CAPTURE(s.label());
    CHECK(multiplicities(elementary(s, FieldSpec::prime_field(5))) == MultiplicityVector{{s, 1}});
  }
}

TEST_CASE("reconcile") {
  const DoubleComplex sq = elementary(Square{1, 1}, Q);
  CHECK(all_zero(reconcile(sq, multiplicities(sq))));
  const DoubleComplex z = elementary(Odd{1, 0, 0}, Q);
  const DoubleComplex s = direct_sum(sq, z);
  CHECK(reconciles(s, multiplicities(sq) + multiplicities(z)));
  const auto off = reconcile(s, multiplicities(sq));
  CHECK(off.at({1, 1}) == 1);
  CHECK_FALSE(reconciles(s, multiplicities(sq)));
}

TEST_CASE("cohomology from zigzags") {
  const ZigzagCohomology odd = cohomology_from_zigzags({{Odd{1, 0, 0}, 1}});
  CHECK(nonzero(odd.bott_chern) == std::map<Bidegree, int>{{{1, 1}, 1}});
  CHECK(nonzero(odd.aeppli) == std::map<Bidegree, int>{{{0, 1}, 1}, {{1, 0}, 1}});
  const ZigzagCohomology hopf = cohomology_from_zigzags(hopf_multiplicities());
  CHECK(nonzero(hopf.bott_chern) ==
        std::map<Bidegree, int>{{{0, 0}, 1}, {{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}, {{2, 2}, 1}});
  CHECK(nonzero(hopf.betti) == std::map<int, int>{{0, 1}, {1, 1}, {3, 1}, {4, 1}});
  const ZigzagCohomology sq = cohomology_from_zigzags({{Square{1, 1}, 3}});
  CHECK(nonzero(sq.bott_chern).empty());
  CHECK(nonzero(sq.dolbeault1).empty());
}

TEST_CASE("E_r equivalence") {
  const MultiplicityVector dot = multiplicities(elementary(Shape::dot(0, 0), Q));
  const MultiplicityVector dot_sq = multiplicities(elementary_sum({{Shape::dot(0, 0), 1}, {Square{2, 2}, 1}}, Q));
  CHECK(er_equivalent(dot_sq, dot, 1));
  const MultiplicityVector even{{Even{1, 1, 0, 0}, 1}};
  CHECK_FALSE(er_equivalent(even, {}, 1));
  CHECK(er_equivalent(even, {}, 2));
  CHECK(er_equivalent(even, {}, kInfinitePage));
  CHECK_FALSE(er_equivalent({{Even{2, 2, 0, 0}, 1}}, {}, 2));
  CHECK(er_equivalent({{Even{2, 2, 0, 0}, 1}}, {}, 3));
  CHECK_FALSE(er_equivalent(dot, {}, kInfinitePage));
  const MultiplicityVector h = hopf_multiplicities();
  for (int r : {1, 2, 5, kInfinitePage}) CHECK(er_equivalent(h, h, r));
}

TEST_CASE("delta from zigzags") {
  CHECK(nonzero(delta_from_zigzags({{Odd{1, 0, 0}, 1}})) == std::map<int, int>{{2, 1}});
  CHECK(nonzero(delta_from_zigzags(hopf_multiplicities())) == std::map<int, int>{{2, 2}});
  CHECK(nonzero(delta_from_zigzags({{Shape::dot(1, 1), 3}, {Square{1, 2}, 2}})).empty());
  CHECK(nonzero(delta_from_zigzags({{Even{2, 3, 1, 1}, 1}})) == std::map<int, int>{{2, 3}, {3, 3}});
}

TEST_CASE("realizability conditions") {
  CHECK(realizability_necessary(hopf_multiplicities(), 2).empty());
  const auto corner = realizability_necessary({{Odd{2, 0, 1}, 1}}, 2);
  CHECK(mentions(corner, "corner"));
  const auto asym = realizability_necessary({{Odd{1, 1, 0}, 1}}, 2);
  CHECK(mentions(asym, "real structure"));
  const auto outside = realizability_necessary({{Shape::dot(3, 0), 1}}, 2);
  CHECK(mentions(outside, "support"));
  const auto unconnected = realizability_necessary({{Shape::dot(2, 2), 1}}, 2);
  CHECK(mentions(unconnected, "connectedness"));
  CHECK(mentions(unconnected, "duality"));
}

TEST_CASE("bimeromorphic invariants") {
  const MultiplicityVector h = hopf_multiplicities();
  CHECK(bimeromorphic_invariants(h, 2) == h);
  CHECK(bimeromorphic_invariants({{Shape::dot(1, 1), 1}}, 2).empty());
  CHECK(bimeromorphic_invariants({{Square{1, 1}, 5}}, 2).empty());
  CHECK(bimeromorphic_invariants({{Shape::dot(1, 1), 1}, {Shape::dot(0, 1), 2}}, 3) ==
        MultiplicityVector{{Shape::dot(0, 1), 2}});
}

TEST_CASE("model complex") {
  const MultiplicityVector h = hopf_multiplicities();
  const DoubleComplex m = model_complex(h, Q);
  CHECK(m.total_dim() == 8);
  CHECK(multiplicities(m) == h);
}

TEST_CASE("property: multiplicities recover the decomposition") {
  const auto corpus = dcx::testing::random_corpus(150, 31);
  for (const auto& [a, shapes] : corpus) {
    const MultiplicityVector m = multiplicities(a);
    CHECK(m == shapes);
    CHECK(all_zero(reconcile(a, m)));
    const auto oracle = dcx::testing::oracle_tables(shapes);
    const ZigzagCohomology z = cohomology_from_zigzags(m);
    CHECK(nonzero(z.bott_chern) == oracle.bc);
    CHECK(nonzero(z.aeppli) == oracle.aeppli);
    CHECK(nonzero(z.dolbeault1) == oracle.col);
    CHECK(nonzero(z.dolbeault2) == oracle.row);
    CHECK(nonzero(z.betti) == oracle.betti);
    CHECK(nonzero(delta_from_zigzags(m)) == nonzero(delta_degrees(a)));
    CHECK(model_complex(m, a.field()).dims() == a.dims());
    CHECK(multiplicities(transpose_pq(a)) == m.transposed());
    CHECK(multiplicities(dual(a, 3)).zigzag_part() == m.zigzag_part().reflected(3));
  }
}

TEST_CASE("property: multiplicities are additive") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const FieldSpec& f = dcx::testing::test_fields()[trial % dcx::testing::test_fields().size()];
    const DoubleComplex a = dcx::testing::random_complex(rng, f, 4, 2, 4).complex;
    const DoubleComplex b = dcx::testing::random_complex(rng, f, 4, 2, 4).complex;
    CHECK(multiplicities(direct_sum(a, b)) == multiplicities(a) + multiplicities(b));
  }
}
