#pragma once

#include <climits>
#include <map>
#include <string>
#include <vector>

#include "dcx/bicomplex.hpp"

namespace dcx {

/// Finitely supported map Shape -> N.
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  MultiplicityVector(std::initializer_list<std::pair<const Shape, int>> init);

  int operator[](const Shape& s) const;
  /// Adds `count` copies; a result of zero removes the entry. Throws on a negative result.
  void add(const Shape& s, int count = 1);
  const std::map<Shape, int>& entries() const { return counts_; }
  bool empty() const { return counts_.empty(); }
  /// Σ count · length.
  int total_dim() const;

  MultiplicityVector zigzag_part() const;
  MultiplicityVector square_part() const;
  MultiplicityVector transposed() const;
  MultiplicityVector reflected(int n) const;
  MultiplicityVector shifted(int k) const;

  friend MultiplicityVector operator+(const MultiplicityVector& a, const MultiplicityVector& b);
  friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) = default;

 private:
  std::map<Shape, int> counts_;
};

/// Every shape with a nonzero count, computed from ranks of spectral differentials,
/// the refined Betti numbers and the images of d1 d2.
MultiplicityVector multiplicities(const DoubleComplex& a);

/// dim A^{p,q} minus the dimension the multiplicities account for, at every relevant bidegree.
std::map<Bidegree, int> reconcile(const DoubleComplex& a, const MultiplicityVector& m);
bool reconciles(const DoubleComplex& a, const MultiplicityVector& m);

/// The direct sum of elementary complexes with these multiplicities.
DoubleComplex model_complex(const MultiplicityVector& m, const FieldSpec& field);

struct ZigzagCohomology {
  std::map<Bidegree, int> bott_chern;
  std::map<Bidegree, int> aeppli;
  /// H_{d2}, the first page of side 1.
  std::map<Bidegree, int> dolbeault1;
  /// H_{d1}, the first page of side 2.
  std::map<Bidegree, int> dolbeault2;
  std::map<int, int> betti;
};

ZigzagCohomology cohomology_from_zigzags(const MultiplicityVector& m);

inline constexpr int kInfinitePage = INT_MAX;

/// Equal on odd shapes and on even shapes of length >= 2r. r = kInfinitePage compares odd shapes only.
bool er_equivalent(const MultiplicityVector& a, const MultiplicityVector& b, int r);

std::map<int, int> delta_from_zigzags(const MultiplicityVector& m);

/// One entry per violated necessary condition for m to come from a compact complex n-fold.
std::vector<std::string> realizability_necessary(const MultiplicityVector& m, int n);

/// Zigzags meeting the frame p, q in {0, n}, and non-dot zigzags through
/// (1,1), (1,n-1), (n-1,1) or (n-1,n-1).
MultiplicityVector bimeromorphic_invariants(const MultiplicityVector& m, int n);

}  // namespace dcx
