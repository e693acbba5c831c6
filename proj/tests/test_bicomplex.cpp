#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dcx/bicomplex.hpp"
#include "dcx/errors.hpp"
#include "support/helpers.hpp"
#include "support/random_complexes.hpp"

using namespace dcx;
using dcx::testing::mat;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::set<Bidegree> point_set(const Shape& s) {
  const auto pts = s.points();
  return {pts.begin(), pts.end()};
}

std::map<Bidegree, int> convolve(const std::map<Bidegree, int>& a, const std::map<Bidegree, int>& b) {
  std::map<Bidegree, int> out;
  for (const auto& [x, m] : a)
    for (const auto& [y, n] : b) out[{x.first + y.first, x.second + y.second}] += m * n;
  return out;
}

}  // namespace

TEST_CASE("shape points") {
  CHECK(point_set(Even{1, 2, 0, 1}) == std::set<Bidegree>{{0, 1}, {1, 1}, {1, 0}, {2, 0}});
  CHECK(point_set(Odd{1, 1, 1}) == std::set<Bidegree>{{1, 0}, {0, 1}, {0, 0}});
  CHECK(point_set(Odd{2, 1, 1}) == std::set<Bidegree>{{1, 1}});
  CHECK(Shape(Odd{2, 1, 1}).is_dot());
  CHECK(point_set(Square{1, 1}) == std::set<Bidegree>{{1, 1}, {0, 1}, {1, 0}, {0, 0}});
  CHECK(point_set(Even{2, 1, 0, 0}) == std::set<Bidegree>{{0, 0}, {0, 1}});
  CHECK(point_set(Odd{1, 0, 0}) == std::set<Bidegree>{{0, 1}, {1, 1}, {1, 0}});
  CHECK_THROWS_AS(Shape(Even{1, 0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Shape(Even{3, 1, 0, 0}), std::invalid_argument);
}

TEST_CASE("shape labels") {
  CHECK(Shape(Square{2, 1}).label() == "S^{2,1}");
  CHECK(Shape(Even{1, 2, 0, 1}).label() == "S_{1,2}^{0,1}");
  CHECK(Shape(Odd{3, 2, 2}).label() == "S_3^{2,2}");
  CHECK(Shape(Odd{-1, 0, -2}).label() == "S_{-1}^{0,-2}");
  for (const Shape& s : dcx::testing::shapes_in_box(4)) CHECK(Shape::parse(s.label()) == s);
  CHECK(Shape::parse(" S_{1}^{0,0} ") == Shape(Odd{1, 0, 0}));
  CHECK_THROWS_AS(Shape::parse("S_1^{0}"), ParseError);
  CHECK_THROWS_AS(Shape::parse("T^{0,0}"), ParseError);
}

TEST_CASE("property: shape transforms act on point sets") {
  for (const Shape& s : dcx::testing::shapes_in_box(4)) {
    std::set<Bidegree> t, r;
    for (const auto& [p, q] : s.points()) t.insert({q, p}), r.insert({3 - p, 3 - q});
    CHECK(point_set(s.transposed()) == t);
    CHECK(point_set(s.reflected(3)) == r);
    CHECK(s.transposed().transposed() == s);
    CHECK(s.reflected(3).reflected(3) == s);
    CHECK(s.length() == static_cast<int>(s.points().size()));
  }
}

TEST_CASE("validate") {
  CHECK(validate(elementary(Square{1, 1}, Q)).empty());
  CHECK(validate(DoubleComplex(Q)).empty());

  DoubleComplex bad = elementary(Square{1, 1}, Q);
  CHECK(bad.d1(0, 1) == mat({{-1}}));
  bad.set_d1(0, 1, mat({{1}}));
  const auto v = validate(bad);
  REQUIRE(v.size() == 1);
  CHECK(v[0].at == Bidegree{0, 0});
  CHECK(v[0].identity == "d1∘d2+d2∘d1");
  CHECK_THROWS_AS(require_valid(bad), InvalidComplex);

  DoubleComplex twice(Q);
  twice.set_dim(0, 0, 1), twice.set_dim(1, 0, 1), twice.set_dim(2, 0, 1);
  twice.set_d1(0, 0, mat({{1}}));
  twice.set_d1(1, 0, mat({{1}}));
  const auto w = validate(twice);
  REQUIRE(w.size() == 1);
  CHECK(w[0].at == Bidegree{0, 0});
  CHECK(w[0].identity == "d1∘d1");
}

TEST_CASE("set_d1 checks shapes and fields") {
  DoubleComplex a(Q);
  a.set_dim(0, 0, 2), a.set_dim(1, 0, 1);
  CHECK_THROWS_AS(a.set_d1(0, 0, mat({{1}})), DimensionMismatch);
  CHECK_THROWS_AS(a.set_d1(0, 0, mat({{dcx::testing::gi(0, 1), 0}})), FieldMismatch);
  a.set_d1(0, 0, mat({{1, 2}}));
  CHECK(a.d1(0, 0) == mat({{1, 2}}));
  CHECK(a.d1(5, 5).rows() == 0);
}

TEST_CASE("elementary complexes") {
  const DoubleComplex sq = elementary(Square{1, 1}, Q);
  CHECK(sq.total_dim() == 4);
  const DoubleComplex dot = elementary(Odd{0, 0, 0}, Q);
  CHECK(dot.dims() == std::map<Bidegree, int>{{{0, 0}, 1}});
  const DoubleComplex e = elementary(Even{2, 1, 0, 0}, Q);
  CHECK(e.dims() == std::map<Bidegree, int>{{{0, 0}, 1}, {{0, 1}, 1}});
  CHECK(e.d2(0, 0) == mat({{1}}));
  CHECK(e.d1_maps().empty());
  for (const Shape& s : dcx::testing::shapes_in_box(4)) CHECK(validate(elementary(s, FieldSpec::prime_field(3))).empty());
}

TEST_CASE("direct sum") {
  const DoubleComplex dot = elementary(Odd{0, 0, 0}, Q);
  CHECK(direct_sum(dot, dot).dim(0, 0) == 2);
  const DoubleComplex sq = elementary(Square{1, 1}, Q);
  const DoubleComplex s = direct_sum(sq, DoubleComplex(Q));
  CHECK(s.dims() == sq.dims());
  CHECK(s.d1(0, 1) == sq.d1(0, 1));
  CHECK(validate(direct_sum(sq, dot)).empty());
  CHECK_THROWS_AS(direct_sum(sq, DoubleComplex(FieldSpec::prime_field(2))), FieldMismatch);
}

TEST_CASE("tensor products") {
  const DoubleComplex unit = elementary(Odd{0, 0, 0}, Q);
  const DoubleComplex z = elementary(Even{1, 2, 0, 1}, Q);
  const DoubleComplex t = tensor(unit, z);
  CHECK(t.dims() == z.dims());
  CHECK(t.d1_maps() == z.d1_maps());
  CHECK(t.d2_maps() == z.d2_maps());

  CHECK(tensor(elementary(Shape::dot(1, 0), Q), elementary(Shape::dot(0, 2), Q)).dims() ==
        std::map<Bidegree, int>{{{1, 2}, 1}});

  const DoubleComplex sq = elementary(Square{1, 1}, Q);
  const DoubleComplex ss = tensor(sq, sq);
  CHECK(ss.dim(1, 1) == 4);
  CHECK(ss.total_dim() == 16);
  CHECK(validate(ss).empty());
}

TEST_CASE("dual, shift, transpose, conjugate") {
  CHECK(dual(elementary(Odd{0, 0, 0}, Q), 2).dims() == std::map<Bidegree, int>{{{2, 2}, 1}});
  const DoubleComplex e = elementary(Even{1, 1, 0, 0}, Q);
  CHECK(dual(e, 1).dims() == std::map<Bidegree, int>{{{1, 1}, 1}, {{0, 1}, 1}});
  CHECK(validate(dual(e, 1)).empty());
  CHECK(shift(elementary(Odd{0, 0, 0}, Q), 1).dims() == std::map<Bidegree, int>{{{1, 1}, 1}});
  const DoubleComplex v = elementary(Even{2, 1, 0, 0}, Q);
  const DoubleComplex h = elementary(Even{1, 1, 0, 0}, Q);
  CHECK(transpose_pq(v).dims() == h.dims());
  CHECK(transpose_pq(v).d1(0, 0) == h.d1(0, 0));

  DoubleComplex c(FieldSpec::gaussian_rationals());
  c.set_dim(0, 0, 1), c.set_dim(1, 0, 1);
  c.set_d1(0, 0, mat({{dcx::testing::gi(2, 3)}}));
  const DoubleComplex cc = conjugate(c);
  CHECK(cc.d2(0, 0) == mat({{dcx::testing::gi(2, -3)}}));
  const DoubleComplex back = conjugate(cc);
  CHECK(back.dims() == c.dims());
  CHECK(back.d1_maps() == c.d1_maps());
}

TEST_CASE("property: constructors preserve validity and dimension formulas") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec& f = dcx::testing::test_fields()[trial % dcx::testing::test_fields().size()];
    const DoubleComplex a = dcx::testing::random_complex(rng, f, 3, 2, 3).complex;
    const DoubleComplex b = dcx::testing::random_complex(rng, f, 3, 2, 3).complex;
    CHECK(validate(a).empty());
    const DoubleComplex ab = tensor(a, b);
    CHECK(validate(ab).empty());
    CHECK(ab.dims() == convolve(a.dims(), b.dims()));
    CHECK(tensor(b, a).dims() == ab.dims());
    const DoubleComplex c = dcx::testing::random_complex(rng, f, 2, 1, 2).complex;
    CHECK(tensor(ab, c).dims() == tensor(a, tensor(b, c)).dims());
    CHECK(validate(direct_sum(a, b)).empty());

    const DoubleComplex da = dual(a, 3);
    CHECK(validate(da).empty());
    std::map<Bidegree, int> reflected;
    for (const auto& [pt, n] : a.dims()) reflected[{3 - pt.first, 3 - pt.second}] = n;
    CHECK(da.dims() == reflected);
    CHECK(dual(da, 3).dims() == a.dims());
    CHECK(validate(shift(a, -2)).empty());
    CHECK(validate(transpose_pq(a)).empty());
    CHECK(validate(conjugate(a)).empty());
  }
}

TEST_CASE("morphisms") {
  const DoubleComplex a = elementary(Odd{1, 0, 0}, Q);
  CHECK(validate(identity_morphism(a)).empty());
  CHECK(validate(zero_morphism(a, a)).empty());
  ComplexMorphism f = identity_morphism(a);
  f.maps[{1, 1}] = mat({{2}});
  const auto v = validate(f);
  CHECK_FALSE(v.empty());
}
