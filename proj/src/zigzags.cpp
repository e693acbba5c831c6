#include "dcx/zigzags.hpp"

#include <cstdlib>
#include <set>
#include <stdexcept>

#include "dcx/spectral.hpp"

namespace dcx {

MultiplicityVector::MultiplicityVector(std::initializer_list<std::pair<const Shape, int>> init) {
  for (const auto& [s, c] : init) add(s, c);
}

int MultiplicityVector::operator[](const Shape& s) const {
  const auto it = counts_.find(s);
  return it == counts_.end() ? 0 : it->second;
}

void MultiplicityVector::add(const Shape& s, int count) {
  const int v = (*this)[s] + count;
  if (v < 0) throw std::invalid_argument("negative multiplicity for " + s.label());
  if (v == 0) counts_.erase(s);
  else counts_[s] = v;
}

int MultiplicityVector::total_dim() const {
  int total = 0;
  for (const auto& [s, c] : counts_) total += c * s.length();
  return total;
}

MultiplicityVector MultiplicityVector::zigzag_part() const {
  MultiplicityVector out;
  for (const auto& [s, c] : counts_)
    if (s.is_zigzag()) out.counts_[s] = c;
  return out;
}

MultiplicityVector MultiplicityVector::square_part() const {
  MultiplicityVector out;
  for (const auto& [s, c] : counts_)
    if (s.is_square()) out.counts_[s] = c;
  return out;
}

MultiplicityVector MultiplicityVector::transposed() const {
  MultiplicityVector out;
  for (const auto& [s, c] : counts_) out.add(s.transposed(), c);
  return out;
}

MultiplicityVector MultiplicityVector::reflected(int n) const {
  MultiplicityVector out;
  for (const auto& [s, c] : counts_) out.add(s.reflected(n), c);
  return out;
}

MultiplicityVector MultiplicityVector::shifted(int k) const {
  MultiplicityVector out;
  for (const auto& [s, c] : counts_) out.add(s.shifted(k), c);
  return out;
}

MultiplicityVector operator+(const MultiplicityVector& a, const MultiplicityVector& b) {
  MultiplicityVector out = a;
  for (const auto& [s, c] : b.counts_) out.add(s, c);
  return out;
}

MultiplicityVector multiplicities(const DoubleComplex& a) {
  require_valid(a);
  MultiplicityVector m;
  for (const auto& [bd, n] : a.dims()) {
    const auto [p, q] = bd;
    const auto r = rank(multiply(a.d1(p - 1, q), a.d2(p - 1, q - 1)));
    if (r > 0) m.add(Square{p, q}, static_cast<int>(r));
  }
  for (Side side : {Side::first, Side::second}) {
    const int last = std::max(1, stable_page(a, side) - 1);
    for (const SSPage& page : spectral_sequence(a, side, last)) {
      for (const auto& [bd, d] : page.differentials) {
        const auto r = rank(d);
        if (r > 0) m.add(Even{static_cast<int>(side), page.r, bd.first, bd.second}, static_cast<int>(r));
      }
    }
  }
  for (const auto& [k, c] : betti_numbers(a)) {
    for (const auto& [bd, v] : hodge_filtrations(a, k).refined) m.add(Odd{k, bd.first, bd.second}, v);
  }
  return m;
}

std::map<Bidegree, int> reconcile(const DoubleComplex& a, const MultiplicityVector& m) {
  std::map<Bidegree, int> out;
  for (const auto& [bd, n] : a.dims()) out[bd] += n;
  for (const auto& [s, c] : m.entries())
    for (const auto& pt : s.points()) out[pt] -= c;
  return out;
}

bool reconciles(const DoubleComplex& a, const MultiplicityVector& m) {
  for (const auto& [bd, v] : reconcile(a, m))
    if (v != 0) return false;
  return true;
}

DoubleComplex model_complex(const MultiplicityVector& m, const FieldSpec& field) {
  std::vector<std::pair<Shape, int>> shapes(m.entries().begin(), m.entries().end());
  return elementary_sum(shapes, field);
}

ZigzagCohomology cohomology_from_zigzags(const MultiplicityVector& m) {
  ZigzagCohomology out;
  for (const auto& [s, c] : m.entries()) {
    if (s.is_square()) continue;
    if (s.is_odd()) out.betti[s.odd().d] += c;
    for (const auto& [p, q] : s.points()) {
      const bool right = s.contains(p + 1, q), left = s.contains(p - 1, q);
      const bool up = s.contains(p, q + 1), down = s.contains(p, q - 1);
      if (!right && !up) out.bott_chern[{p, q}] += c;
      if (!left && !down) out.aeppli[{p, q}] += c;
      if (!up && !down) out.dolbeault1[{p, q}] += c;
      if (!left && !right) out.dolbeault2[{p, q}] += c;
    }
  }
  return out;
}

bool er_equivalent(const MultiplicityVector& a, const MultiplicityVector& b, int r) {
  if (r < 1) throw std::invalid_argument("E_r equivalence needs r >= 1");
  const auto relevant = [r](const Shape& s) {
    if (s.is_odd()) return true;
    if (s.is_even()) return r != kInfinitePage && s.even().r >= r;  // length 2 s.r >= 2r
    return false;
  };
  std::set<Shape> shapes;
  for (const auto& [s, c] : a.entries()) shapes.insert(s);
  for (const auto& [s, c] : b.entries()) shapes.insert(s);
  for (const Shape& s : shapes)
    if (relevant(s) && a[s] != b[s]) return false;
  return true;
}

std::map<int, int> delta_from_zigzags(const MultiplicityVector& m) {
  std::map<int, int> out;
  for (const auto& [s, c] : m.entries()) {
    if (s.is_odd()) {
      const Odd& o = s.odd();
      const int signed_m = o.p + o.q - o.d;
      if (signed_m == 0) continue;
      const int mm = std::abs(signed_m);
      out[o.d] += c * (mm - 1);
      out[o.d - (signed_m > 0 ? 1 : -1)] += c * mm;
    } else if (s.is_even()) {
      const Even& e = s.even();
      out[e.p + e.q] += c * e.r;
      out[e.p + e.q + 1] += c * e.r;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second == 0) it = out.erase(it);
    else ++it;
  }
  return out;
}

std::vector<std::string> realizability_necessary(const MultiplicityVector& m, int n) {
  std::vector<std::string> out;
  const MultiplicityVector z = m.zigzag_part();
  for (const auto& [s, c] : m.entries()) {
    for (const auto& [p, q] : s.points()) {
      if (p < 0 || q < 0 || p > n || q > n) {
        out.push_back("support: " + s.label() + " leaves [0," + std::to_string(n) + "]^2");
        break;
      }
    }
  }
  const std::vector<Bidegree> corners{{0, 0}, {n, 0}, {0, n}, {n, n}};
  for (const auto& [s, c] : z.entries()) {
    if (s.is_dot()) continue;
    for (const auto& [p, q] : corners) {
      if (s.contains(p, q)) {
        out.push_back("corner: " + s.label() + " passes through (" + std::to_string(p) + "," + std::to_string(q) + ")");
        break;
      }
    }
  }
  if (!(m.transposed() == m)) out.push_back("real structure: not invariant under (p,q) -> (q,p)");
  if (!(z.reflected(n) == z)) out.push_back("duality: zigzags not invariant under (p,q) -> (n-p,n-q)");
  if (m[Shape::dot(0, 0)] != m[Shape::dot(n, n)]) {
    out.push_back("connectedness: multiplicities of the dots at (0,0) and (n,n) differ");
  }
  return out;
}

MultiplicityVector bimeromorphic_invariants(const MultiplicityVector& m, int n) {
  MultiplicityVector out;
  const std::vector<Bidegree> inner{{1, 1}, {1, n - 1}, {n - 1, 1}, {n - 1, n - 1}};
  for (const auto& [s, c] : m.entries()) {
    if (s.is_square()) continue;
    bool selected = false;
    for (const auto& [p, q] : s.points()) {
      if (p == 0 || p == n || q == 0 || q == n) selected = true;
    }
    if (!s.is_dot()) {
      for (const auto& [p, q] : inner)
        if (s.contains(p, q)) selected = true;
    }
    if (selected) out.add(s, c);
  }
  return out;
}

}  // namespace dcx
