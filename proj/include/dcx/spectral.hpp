#pragma once

#include <map>
#include <vector>

#include "dcx/bicomplex.hpp"

namespace dcx {

/// Side 1 filters by columns (E_1 = H_{d2}); side 2 by rows (E_1 = H_{d1}).
enum class Side { first = 1, second = 2 };

/// Tot(A)^k = ⊕_{p+q=k} A^{p,q}, blocks ordered by ascending p, with d = d1 + d2.
struct TotalComplex {
  struct Block {
    Bidegree at;
    int offset;
    int dim;
  };

  std::map<int, std::vector<Block>> blocks;
  std::map<int, Matrix> differential;
  FieldSpec field;

  int dim(int k) const;
  /// dim(k+1) x dim(k).
  Matrix d(int k) const;
  /// Offset of the (p,q) block inside degree p+q, or -1 if absent.
  int offset(int p, int q) const;
  int min_degree() const;
  int max_degree() const;
};

TotalComplex total_complex(const DoubleComplex& a);

/// Cohomology of the total complex in one degree.
struct CohomologyClasses {
  int dim = 0;
  /// One representative cocycle of Tot^k per row.
  Matrix representatives;
};

std::map<int, CohomologyClasses> de_rham(const DoubleComplex& a);
std::map<int, int> betti_numbers(const DoubleComplex& a);

/// Side 1 gives H_{d2} (columns), side 2 gives H_{d1} (rows).
std::map<Bidegree, int> dolbeault(const DoubleComplex& a, Side side);
std::map<Bidegree, int> column_cohomology(const DoubleComplex& a);
std::map<Bidegree, int> row_cohomology(const DoubleComplex& a);

struct BottChernAeppli {
  std::map<Bidegree, int> bott_chern;
  std::map<Bidegree, int> aeppli;
};
BottChernAeppli bott_chern_aeppli(const DoubleComplex& a);

struct SSEntry {
  int dim = 0;
  /// Representatives in Tot^{p+q}, one per row; they project to a basis of E_r^{p,q}.
  Matrix representatives;
};

/// One page of a Frölicher spectral sequence.
struct SSPage {
  Side side = Side::first;
  int r = 1;
  std::map<Bidegree, SSEntry> entries;
  /// d_r out of (p,q), a dim(target) x dim(p,q) matrix.
  std::map<Bidegree, Matrix> differentials;

  int dim(int p, int q) const;
  int total_dim() const;
  /// (p+r, q-r+1) on side 1, (p-r+1, q+r) on side 2.
  Bidegree target(int p, int q) const;
  Matrix differential(int p, int q) const;
};

SSPage ss_page(const DoubleComplex& a, Side side, int r);
/// Pages 1..max_page.
std::vector<SSPage> spectral_sequence(const DoubleComplex& a, Side side, int max_page);
/// A page past which every differential vanishes: support width (or height) plus one.
int stable_page(const DoubleComplex& a, Side side);

/// Hodge filtrations on H^d and the refined Betti numbers.
struct FilteredCohomology {
  int degree = 0;
  int dim = 0;
  /// Cocycle-level filtration spaces F_i^p coc = (ker d ∩ F_i^p) + im d, keyed by p.
  std::map<int, Subspace> f1;
  std::map<int, Subspace> f2;
  /// dim F_i^p H^d.
  std::map<int, int> f1_dims;
  std::map<int, int> f2_dims;
  /// b_d^{p,q}, nonzero entries only.
  std::map<Bidegree, int> refined;
};

FilteredCohomology hodge_filtrations(const DoubleComplex& a, int d);

/// Σ dim E_r equals Σ b_k on the given side.
bool degenerates_at(const DoubleComplex& a, int r, Side side);
/// Both sides degenerate at r.
bool degenerates_at(const DoubleComplex& a, int r);
/// b_d = Σ_{p+q=k} b_d^{p,q}.
bool pure_hodge(const DoubleComplex& a, int d, int k);
/// Bott-Chern to Aeppli is injective in every bidegree.
bool satisfies_ddbar_lemma(const DoubleComplex& a);

struct Predicates {
  /// First degenerate page per side.
  int degeneration_page_1 = 1;
  int degeneration_page_2 = 1;
  bool ddbar = true;
  /// Degree d -> H^d pure of weight d.
  std::map<int, bool> pure;
};
Predicates predicates(const DoubleComplex& a);

/// Δ^k = Σ_{p+q=k}(dim BC + dim Aeppli) - 2 b_k.
std::map<int, int> delta_degrees(const DoubleComplex& a);

struct MiddleCohomology {
  int holomorphic_corner = 0;  // H_{d2}^{n,0}
  int middle = 0;              // (ker d ∩ M)/(im d ∩ M), M = A^{n-1,1} ⊕ ... ⊕ A^{1,n-1}
  int antiholomorphic_corner = 0;  // H_{d1}^{0,n}
};
/// Throws std::invalid_argument for n < 2.
MiddleCohomology middle_cohomology(const DoubleComplex& a, int n);

/// The map on Tot^k.
Matrix total_map(const ComplexMorphism& f, int k);
/// Matrix of f* : H^k(source) -> H^k(target) in the de_rham representative bases.
Matrix induced_de_rham(const ComplexMorphism& f, int k);

struct StrictnessCheck {
  int degree = 0;
  int p = 0;
  /// dim f*(F^p H)
  int image_of_filtration = 0;
  /// dim (F^p H ∩ im f*)
  int filtration_of_image = 0;
  bool strict = true;
};

/// Compares f*(F_i^p H^k) with F_i^p H^k ∩ im f* for every degree and p.
std::vector<StrictnessCheck> strictness_report(const ComplexMorphism& f, Side side);
bool is_strict(const ComplexMorphism& f, Side side);

}  // namespace dcx
