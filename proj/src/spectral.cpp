#include "dcx/spectral.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "dcx/errors.hpp"

namespace dcx {

namespace {

using BlockPredicate = std::function<bool(int p, int q)>;

// Coordinates of Tot^k lying in blocks that satisfy `pred`.
std::vector<Index> block_coordinates(const TotalComplex& t, int k, const BlockPredicate& pred) {
  std::vector<Index> out;
  const auto it = t.blocks.find(k);
  if (it == t.blocks.end()) return out;
  for (const auto& b : it->second) {
    if (!pred(b.at.first, b.at.second)) continue;
    for (int j = 0; j < b.dim; ++j) out.push_back(b.offset + j);
  }
  return out;
}

Subspace coordinate_subspace(Index ambient, const std::vector<Index>& coords) {
  Matrix basis = zeros(static_cast<Index>(coords.size()), ambient);
  for (std::size_t i = 0; i < coords.size(); ++i) basis(static_cast<Index>(i), coords[i]) = 1;
  return Subspace::span(basis, ambient);
}

// {x in Tot^k supported on blocks with `support` : dx vanishes on blocks with `vanish`}.
Subspace cycles_where(const TotalComplex& t, int k, const BlockPredicate& support, const BlockPredicate& vanish) {
  const Index n = t.dim(k);
  const std::vector<Index> cols = block_coordinates(t, k, support);
  const std::vector<Index> rows = block_coordinates(t, k + 1, vanish);
  if (cols.empty()) return Subspace::zero(n);
  if (rows.empty()) return coordinate_subspace(n, cols);
  const Matrix d = t.d(k);
  Matrix sub(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(static_cast<Index>(i), static_cast<Index>(j)) = d(rows[i], cols[j]);
  const Subspace kern = kernel(sub);
  Matrix basis = zeros(kern.dim(), n);
  for (Index i = 0; i < kern.dim(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) basis(i, cols[j]) = kern.basis()(i, static_cast<Index>(j));
  return Subspace::span(basis, n);
}

// Side-1 filtration F^p Tot^k: blocks with p' >= p.
BlockPredicate column_filtration(int p) {
  return [p](int pp, int) { return pp >= p; };
}
BlockPredicate row_filtration(int q) {
  return [q](int, int qq) { return qq >= q; };
}
BlockPredicate everything() {
  return [](int, int) { return true; };
}

Matrix select_rows(const Matrix& m, const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(static_cast<Index>(i)) = m.row(rows[i]);
  return out;
}

// Greedy complement of `b` inside `z`, drawn from the rows of z's basis.
Matrix complement(const Subspace& z, const Subspace& b) {
  return select_rows(z.basis(), greedy_extension(b.basis(), z.basis()));
}

// Coordinates of the rows of `vectors` on the classes `reps`, modulo `b`.
Matrix class_coordinates(const Matrix& reps, const Subspace& b, const Matrix& vectors) {
  if (vectors.rows() == 0 || reps.rows() == 0) return zeros(reps.rows(), vectors.rows());
  const Matrix coords = coordinates(vstack(reps, b.basis()), vectors);
  return coords.leftCols(reps.rows()).transpose();
}

struct PageData {
  SSPage page;
  std::map<Bidegree, Subspace> boundaries;
};

PageData page_side1(const DoubleComplex& a, const TotalComplex& t, int r) {
  PageData out;
  out.page.side = Side::first;
  out.page.r = r;
  for (const auto& [bd, n] : a.dims()) {
    const auto [p, q] = bd;
    const int k = p + q;
    const Subspace z = cycles_where(t, k, column_filtration(p), [p, r](int pp, int) { return pp < p + r; });
    const Subspace z_next =
        cycles_where(t, k, column_filtration(p + 1), [p, r](int pp, int) { return pp < p + r; });
    const int s = p - r + 1;
    const Subspace z_prev = cycles_where(t, k - 1, column_filtration(s), [p](int pp, int) { return pp < p; });
    const Subspace b = sum(z_next, image(t.d(k - 1), z_prev));
    SSEntry entry;
    entry.representatives = complement(z, b);
    entry.dim = static_cast<int>(entry.representatives.rows());
    out.page.entries[bd] = std::move(entry);
    out.boundaries[bd] = b;
  }
  for (const auto& [bd, entry] : out.page.entries) {
    const Bidegree tgt = out.page.target(bd.first, bd.second);
    const auto it = out.page.entries.find(tgt);
    if (entry.dim == 0 || it == out.page.entries.end() || it->second.dim == 0) continue;
    const int k = bd.first + bd.second;
    const Matrix images = multiply(entry.representatives, t.d(k).transpose());
    out.page.differentials[bd] = class_coordinates(it->second.representatives, out.boundaries.at(tgt), images);
  }
  return out;
}

// Coordinates of Tot^k(transpose_pq(a)) re-expressed in Tot^k(a).
Matrix untranspose_rows(const Matrix& rows, const TotalComplex& transposed, const TotalComplex& original, int k) {
  Matrix out = zeros(rows.rows(), original.dim(k));
  const auto it = transposed.blocks.find(k);
  if (it == transposed.blocks.end()) return out;
  for (const auto& b : it->second) {
    const int target = original.offset(b.at.second, b.at.first);
    for (Index i = 0; i < rows.rows(); ++i)
      for (int j = 0; j < b.dim; ++j) out(i, target + j) = rows(i, b.offset + j);
  }
  return out;
}

int support_width(const DoubleComplex& a, Side side) {
  const Box box = a.support();
  return side == Side::first ? box.width() : box.height();
}

int sum_values(const std::map<int, int>& m) {
  int s = 0;
  for (const auto& [k, v] : m) s += v;
  return s;
}

}  // namespace

int TotalComplex::dim(int k) const {
  const auto it = blocks.find(k);
  if (it == blocks.end() || it->second.empty()) return 0;
  const Block& last = it->second.back();
  return last.offset + last.dim;
}

Matrix TotalComplex::d(int k) const {
  const auto it = differential.find(k);
  if (it != differential.end()) return it->second;
  return Matrix::Constant(dim(k + 1), dim(k), Scalar::zero(field));
}

int TotalComplex::offset(int p, int q) const {
  const auto it = blocks.find(p + q);
  if (it == blocks.end()) return -1;
  for (const auto& b : it->second)
    if (b.at == Bidegree{p, q}) return b.offset;
  return -1;
}

int TotalComplex::min_degree() const { return blocks.empty() ? 0 : blocks.begin()->first; }
int TotalComplex::max_degree() const { return blocks.empty() ? -1 : blocks.rbegin()->first; }

TotalComplex total_complex(const DoubleComplex& a) {
  TotalComplex t;
  t.field = a.field();
  for (const auto& [bd, n] : a.dims()) {
    auto& list = t.blocks[bd.first + bd.second];
    const int offset = list.empty() ? 0 : list.back().offset + list.back().dim;
    list.push_back({bd, offset, n});
  }
  for (const auto& [k, list] : t.blocks) {
    if (t.blocks.count(k + 1) == 0) continue;
    Matrix d = Matrix::Constant(t.dim(k + 1), t.dim(k), Scalar::zero(a.field()));
    for (const auto& b : list) {
      const auto [p, q] = b.at;
      if (const int o = t.offset(p + 1, q); o >= 0) d.block(o, b.offset, a.dim(p + 1, q), b.dim) = a.d1(p, q);
      if (const int o = t.offset(p, q + 1); o >= 0) d.block(o, b.offset, a.dim(p, q + 1), b.dim) = a.d2(p, q);
    }
    t.differential[k] = std::move(d);
  }
  return t;
}

std::map<int, CohomologyClasses> de_rham(const DoubleComplex& a) {
  require_valid(a);
  const TotalComplex t = total_complex(a);
  std::map<int, CohomologyClasses> out;
  for (const auto& [k, list] : t.blocks) {
    const Subspace z = kernel(t.d(k));
    const Subspace b = image(t.d(k - 1));
    CohomologyClasses c;
    c.representatives = complement(z, b);
    c.dim = static_cast<int>(c.representatives.rows());
    out[k] = std::move(c);
  }
  return out;
}

std::map<int, int> betti_numbers(const DoubleComplex& a) {
  std::map<int, int> out;
  for (const auto& [k, c] : de_rham(a))
    if (c.dim != 0) out[k] = c.dim;
  return out;
}

std::map<Bidegree, int> column_cohomology(const DoubleComplex& a) {
  require_valid(a);
  std::map<Bidegree, int> out;
  for (const auto& [bd, n] : a.dims()) {
    const auto [p, q] = bd;
    const int h = static_cast<int>(n - rank(a.d2(p, q)) - rank(a.d2(p, q - 1)));
    if (h != 0) out[bd] = h;
  }
  return out;
}

std::map<Bidegree, int> row_cohomology(const DoubleComplex& a) {
  require_valid(a);
  std::map<Bidegree, int> out;
  for (const auto& [bd, n] : a.dims()) {
    const auto [p, q] = bd;
    const int h = static_cast<int>(n - rank(a.d1(p, q)) - rank(a.d1(p - 1, q)));
    if (h != 0) out[bd] = h;
  }
  return out;
}

std::map<Bidegree, int> dolbeault(const DoubleComplex& a, Side side) {
  return side == Side::first ? column_cohomology(a) : row_cohomology(a);
}

BottChernAeppli bott_chern_aeppli(const DoubleComplex& a) {
  require_valid(a);
  BottChernAeppli out;
  for (const auto& [bd, n] : a.dims()) {
    const auto [p, q] = bd;
    const Matrix d1 = a.d1(p, q), d2 = a.d2(p, q);
    const Subspace closed = kernel(vstack(d1, d2));
    const Index exact = rank(multiply(a.d1(p - 1, q), a.d2(p - 1, q - 1)));
    const int bc = static_cast<int>(closed.dim() - exact);
    const Index ddbar_closed = kernel(multiply(a.d2(p + 1, q), d1)).dim();
    const Index sum_exact = sum(image(a.d1(p - 1, q)), image(a.d2(p, q - 1))).dim();
    const int ae = static_cast<int>(ddbar_closed - sum_exact);
    if (bc != 0) out.bott_chern[bd] = bc;
    if (ae != 0) out.aeppli[bd] = ae;
  }
  return out;
}

int SSPage::dim(int p, int q) const {
  const auto it = entries.find({p, q});
  return it == entries.end() ? 0 : it->second.dim;
}

int SSPage::total_dim() const {
  int total = 0;
  for (const auto& [bd, e] : entries) total += e.dim;
  return total;
}

Bidegree SSPage::target(int p, int q) const {
  return side == Side::first ? Bidegree{p + r, q - r + 1} : Bidegree{p - r + 1, q + r};
}

Matrix SSPage::differential(int p, int q) const {
  const auto it = differentials.find({p, q});
  if (it != differentials.end()) return it->second;
  const Bidegree t = target(p, q);
  return zeros(dim(t.first, t.second), dim(p, q));
}

std::vector<SSPage> spectral_sequence(const DoubleComplex& a, Side side, int max_page) {
  require_valid(a);
  if (max_page < 1) throw std::invalid_argument("pages start at r = 1");
  std::vector<SSPage> pages;
  if (side == Side::first) {
    const TotalComplex t = total_complex(a);
    for (int r = 1; r <= max_page; ++r) pages.push_back(page_side1(a, t, r).page);
    return pages;
  }
  const DoubleComplex b = transpose_pq(a);
  const TotalComplex t = total_complex(a);
  const TotalComplex tb = total_complex(b);
  for (int r = 1; r <= max_page; ++r) {
    const SSPage src = page_side1(b, tb, r).page;
    SSPage page;
    page.side = Side::second;
    page.r = r;
    for (const auto& [bd, e] : src.entries) {
      SSEntry entry;
      entry.dim = e.dim;
      entry.representatives = untranspose_rows(e.representatives, tb, t, bd.first + bd.second);
      page.entries[{bd.second, bd.first}] = std::move(entry);
    }
    for (const auto& [bd, m] : src.differentials) page.differentials[{bd.second, bd.first}] = m;
    pages.push_back(std::move(page));
  }
  return pages;
}

SSPage ss_page(const DoubleComplex& a, Side side, int r) { return spectral_sequence(a, side, r).back(); }

int stable_page(const DoubleComplex& a, Side side) { return support_width(a, side) + 1; }

FilteredCohomology hodge_filtrations(const DoubleComplex& a, int d) {
  require_valid(a);
  const TotalComplex t = total_complex(a);
  FilteredCohomology out;
  out.degree = d;
  const Subspace z = kernel(t.d(d));
  const Subspace b = image(t.d(d - 1));
  out.dim = static_cast<int>(z.dim() - b.dim());
  const Index n = t.dim(d);
  const Box box = a.support();
  if (box.empty || n == 0) return out;
  // p and q range over the support plus one step past each end.
  for (int p = box.pmin; p <= box.pmax + 1; ++p) {
    out.f1[p] = sum(cycles_where(t, d, column_filtration(p), everything()), b);
    out.f1_dims[p] = static_cast<int>(out.f1[p].dim() - b.dim());
  }
  for (int q = box.qmin; q <= box.qmax + 1; ++q) {
    out.f2[q] = sum(cycles_where(t, d, row_filtration(q), everything()), b);
    out.f2_dims[q] = static_cast<int>(out.f2[q].dim() - b.dim());
  }
  std::map<Bidegree, Index> both;
  for (const auto& [p, f1] : out.f1)
    for (const auto& [q, f2] : out.f2) both[{p, q}] = intersect(f1, f2).dim() - b.dim();
  for (int p = box.pmin; p <= box.pmax; ++p) {
    for (int q = box.qmin; q <= box.qmax; ++q) {
      const Index v = both[{p, q}] - both[{p + 1, q}] - both[{p, q + 1}] + both[{p + 1, q + 1}];
      if (v != 0) out.refined[{p, q}] = static_cast<int>(v);
    }
  }
  return out;
}

bool degenerates_at(const DoubleComplex& a, int r, Side side) {
  return spectral_sequence(a, side, r).back().total_dim() == sum_values(betti_numbers(a));
}

bool degenerates_at(const DoubleComplex& a, int r) {
  return degenerates_at(a, r, Side::first) && degenerates_at(a, r, Side::second);
}

bool pure_hodge(const DoubleComplex& a, int d, int k) {
  const FilteredCohomology h = hodge_filtrations(a, d);
  int on_line = 0;
  for (const auto& [bd, v] : h.refined)
    if (bd.first + bd.second == k) on_line += v;
  return on_line == h.dim;
}

bool satisfies_ddbar_lemma(const DoubleComplex& a) {
  require_valid(a);
  for (const auto& [bd, n] : a.dims()) {
    const auto [p, q] = bd;
    const Subspace closed = kernel(vstack(a.d1(p, q), a.d2(p, q)));
    const Subspace exact_sum = sum(image(a.d1(p - 1, q)), image(a.d2(p, q - 1)));
    const Index exact = rank(multiply(a.d1(p - 1, q), a.d2(p - 1, q - 1)));
    if (intersect(closed, exact_sum).dim() != exact) return false;
  }
  return true;
}

Predicates predicates(const DoubleComplex& a) {
  require_valid(a);
  Predicates out;
  const int betti = sum_values(betti_numbers(a));
  for (Side side : {Side::first, Side::second}) {
    const auto pages = spectral_sequence(a, side, stable_page(a, side));
    int first = static_cast<int>(pages.size());
    for (const auto& page : pages) {
      if (page.total_dim() == betti) {
        first = page.r;
        break;
      }
    }
    (side == Side::first ? out.degeneration_page_1 : out.degeneration_page_2) = first;
  }
  out.ddbar = satisfies_ddbar_lemma(a);
  for (const auto& [k, c] : de_rham(a)) {
    if (c.dim != 0) out.pure[k] = pure_hodge(a, k, k);
  }
  return out;
}

std::map<int, int> delta_degrees(const DoubleComplex& a) {
  const BottChernAeppli ba = bott_chern_aeppli(a);
  const std::map<int, int> betti = betti_numbers(a);
  std::map<int, int> out;
  const Box box = a.support();
  if (box.empty) return out;
  for (int k = box.pmin + box.qmin; k <= box.pmax + box.qmax; ++k) out[k] = 0;
  for (const auto& [bd, v] : ba.bott_chern) out[bd.first + bd.second] += v;
  for (const auto& [bd, v] : ba.aeppli) out[bd.first + bd.second] += v;
  for (const auto& [k, v] : betti) out[k] -= 2 * v;
  return out;
}

MiddleCohomology middle_cohomology(const DoubleComplex& a, int n) {
  if (n < 2) throw std::invalid_argument("middle cohomology needs n >= 2");
  require_valid(a);
  MiddleCohomology out;
  const auto columns = column_cohomology(a);
  const auto rows = row_cohomology(a);
  if (const auto it = columns.find({n, 0}); it != columns.end()) out.holomorphic_corner = it->second;
  if (const auto it = rows.find({0, n}); it != rows.end()) out.antiholomorphic_corner = it->second;
  const TotalComplex t = total_complex(a);
  const BlockPredicate band = [n](int p, int q) { return p >= 1 && q >= 1 && p + q == n; };
  const Subspace closed = cycles_where(t, n, band, everything());
  const Subspace in_band = coordinate_subspace(t.dim(n), block_coordinates(t, n, band));
  const Subspace exact = intersect(image(t.d(n - 1)), in_band);
  out.middle = static_cast<int>(closed.dim() - exact.dim());
  return out;
}

Matrix total_map(const ComplexMorphism& f, int k) {
  const TotalComplex ts = total_complex(f.source);
  const TotalComplex tt = total_complex(f.target);
  Matrix m = Matrix::Constant(tt.dim(k), ts.dim(k), Scalar::zero(f.source.field()));
  const auto it = ts.blocks.find(k);
  if (it == ts.blocks.end()) return m;
  for (const auto& b : it->second) {
    const int o = tt.offset(b.at.first, b.at.second);
    if (o < 0) continue;
    m.block(o, b.offset, f.target.dim(b.at), b.dim) = f.at(b.at.first, b.at.second);
  }
  return m;
}

Matrix induced_de_rham(const ComplexMorphism& f, int k) {
  if (const auto v = validate(f); !v.empty()) throw InvalidComplex("invalid morphism: " + v.front().describe());
  const auto hs = de_rham(f.source);
  const auto ht = de_rham(f.target);
  const auto s = hs.find(k);
  const auto t = ht.find(k);
  const int ds = s == hs.end() ? 0 : s->second.dim;
  const int dt = t == ht.end() ? 0 : t->second.dim;
  if (ds == 0 || dt == 0) return zeros(dt, ds);
  const TotalComplex tt = total_complex(f.target);
  const Matrix images = multiply(s->second.representatives, total_map(f, k).transpose());
  return class_coordinates(t->second.representatives, image(tt.d(k - 1)), images);
}

std::vector<StrictnessCheck> strictness_report(const ComplexMorphism& f, Side side) {
  if (const auto v = validate(f); !v.empty()) throw InvalidComplex("invalid morphism: " + v.front().describe());
  require_valid(f.source);
  require_valid(f.target);
  const TotalComplex ts = total_complex(f.source);
  const TotalComplex tt = total_complex(f.target);
  std::set<int> degrees;
  for (const auto& [k, l] : ts.blocks) degrees.insert(k);
  for (const auto& [k, l] : tt.blocks) degrees.insert(k);
  int lo = std::numeric_limits<int>::max(), hi = std::numeric_limits<int>::min();
  for (const auto* c : {&f.source, &f.target}) {
    const Box box = c->support();
    if (box.empty) continue;
    lo = std::min(lo, side == Side::first ? box.pmin : box.qmin);
    hi = std::max(hi, side == Side::first ? box.pmax : box.qmax);
  }
  std::vector<StrictnessCheck> out;
  for (int k : degrees) {
    const Matrix fk = total_map(f, k);
    const Subspace exact_t = image(tt.d(k - 1));
    const Subspace image_classes = sum(image(fk, kernel(ts.d(k))), exact_t);
    for (int p = lo; p <= hi; ++p) {
      const BlockPredicate filt = side == Side::first ? column_filtration(p) : row_filtration(p);
      const Subspace fs = cycles_where(ts, k, filt, everything());
      const Subspace ft = sum(cycles_where(tt, k, filt, everything()), exact_t);
      StrictnessCheck c;
      c.degree = k;
      c.p = p;
      c.image_of_filtration = static_cast<int>(sum(image(fk, fs), exact_t).dim() - exact_t.dim());
      c.filtration_of_image = static_cast<int>(intersect(ft, image_classes).dim() - exact_t.dim());
      c.strict = c.image_of_filtration == c.filtration_of_image;
      out.push_back(c);
    }
  }
  return out;
}

bool is_strict(const ComplexMorphism& f, Side side) {
  const auto report = strictness_report(f, side);
  return std::all_of(report.begin(), report.end(), [](const StrictnessCheck& c) { return c.strict; });
}

}  // namespace dcx
