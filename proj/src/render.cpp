#include "dcx/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dcx {

namespace {

std::string grid(const std::map<Bidegree, int>& dims) {
  if (dims.empty()) return "(empty complex)\n";
  int pmin = dims.begin()->first.first, pmax = pmin, qmin = dims.begin()->first.second, qmax = qmin;
  int width = 1;
  for (const auto& [bd, n] : dims) {
    pmin = std::min(pmin, bd.first), pmax = std::max(pmax, bd.first);
    qmin = std::min(qmin, bd.second), qmax = std::max(qmax, bd.second);
    width = std::max(width, static_cast<int>(std::to_string(n).size()));
  }
  for (int p = pmin; p <= pmax; ++p) width = std::max(width, static_cast<int>(std::to_string(p).size()));
  int label = 1;
  for (int q = qmin; q <= qmax; ++q) label = std::max(label, static_cast<int>(std::to_string(q).size()));

  std::ostringstream os;
  for (int q = qmax; q >= qmin; --q) {
    os << std::setw(label) << q << " |";
    for (int p = pmin; p <= pmax; ++p) {
      const auto it = dims.find({p, q});
      os << ' ' << std::setw(width) << (it == dims.end() ? std::string(".") : std::to_string(it->second));
    }
    os << '\n';
  }
  os << std::string(static_cast<std::size_t>(label), ' ') << " +"
     << std::string(static_cast<std::size_t>((pmax - pmin + 1) * (width + 1)), '-') << '\n';
  os << std::string(static_cast<std::size_t>(label), ' ') << "  ";
  for (int p = pmin; p <= pmax; ++p) os << ' ' << std::setw(width) << p;
  os << '\n';
  return os.str();
}

std::string shape_lines(const MultiplicityVector& m) {
  std::ostringstream os;
  for (const auto& [s, c] : m.entries()) {
    os << s.label() << " x" << c << ':';
    for (const auto& [p, q] : s.points()) os << " (" << p << ',' << q << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::string render_ascii(const DoubleComplex& a, const MultiplicityVector& m) {
  return grid(a.dims()) + shape_lines(m);
}

std::string render_ascii(const MultiplicityVector& m) {
  std::map<Bidegree, int> dims;
  for (const auto& [s, c] : m.entries())
    for (const auto& pt : s.points()) dims[pt] += c;
  return grid(dims) + shape_lines(m);
}

std::string render_svg(const MultiplicityVector& m) {
  constexpr int cell = 80, margin = 40, radius = 5;
  // Count the nodes per bidegree to place them side by side.
  std::map<Bidegree, int> load;
  int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
  bool first = true;
  for (const auto& [s, c] : m.entries()) {
    for (const auto& pt : s.points()) {
      load[pt] += c;
      if (first) {
        pmin = pmax = pt.first, qmin = qmax = pt.second;
        first = false;
      }
      pmin = std::min(pmin, pt.first), pmax = std::max(pmax, pt.first);
      qmin = std::min(qmin, pt.second), qmax = std::max(qmax, pt.second);
    }
  }
  const int cols = first ? 0 : pmax - pmin + 1, rows = first ? 0 : qmax - qmin + 1;
  const int w = 2 * margin + cols * cell, h = 2 * margin + rows * cell;
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
     << ' ' << h << "\">\n";
  os << "  <defs><marker id=\"arrow\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
        "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"black\"/></marker></defs>\n";
  os << "  <g class=\"grid\" stroke=\"#bbbbbb\" fill=\"none\">\n";
  for (int i = 0; i <= cols; ++i)
    os << "    <line x1=\"" << margin + i * cell << "\" y1=\"" << margin << "\" x2=\"" << margin + i * cell
       << "\" y2=\"" << h - margin << "\"/>\n";
  for (int j = 0; j <= rows; ++j)
    os << "    <line x1=\"" << margin << "\" y1=\"" << margin + j * cell << "\" x2=\"" << w - margin << "\" y2=\""
       << margin + j * cell << "\"/>\n";
  os << "  </g>\n  <g class=\"labels\" font-family=\"monospace\" font-size=\"12\">\n";
  for (int p = pmin; p < pmin + cols; ++p)
    os << "    <text x=\"" << margin + (p - pmin) * cell + cell / 2 << "\" y=\"" << h - margin / 2
       << "\" text-anchor=\"middle\">" << p << "</text>\n";
  for (int q = qmin; q < qmin + rows; ++q)
    os << "    <text x=\"" << margin / 2 << "\" y=\"" << margin + (qmax - q) * cell + cell / 2
       << "\" text-anchor=\"middle\">" << q << "</text>\n";
  os << "  </g>\n";

  std::map<Bidegree, int> placed;
  const auto position = [&](const Bidegree& pt, int slot) {
    const int n = load[pt];
    const double step = static_cast<double>(cell) / (n + 1);
    const double x = margin + (pt.first - pmin) * cell + step * (slot + 1);
    const double y = margin + (qmax - pt.second) * cell + step * (slot + 1);
    return std::pair<double, double>{x, y};
  };
  for (const auto& [s, c] : m.entries()) {
    for (int copy = 0; copy < c; ++copy) {
      std::map<Bidegree, std::pair<double, double>> at;
      for (const auto& pt : s.points()) at[pt] = position(pt, placed[pt]++);
      os << "  <g class=\"shape\" data-label=\"" << s.label() << "\">\n";
      for (const auto& [pt, xy] : at) {
        for (const Bidegree& nb : {Bidegree{pt.first + 1, pt.second}, Bidegree{pt.first, pt.second + 1}}) {
          const auto it = at.find(nb);
          if (it == at.end()) continue;
          os << "    <line class=\"arrow\" x1=\"" << xy.first << "\" y1=\"" << xy.second << "\" x2=\""
             << it->second.first << "\" y2=\"" << it->second.second
             << "\" stroke=\"black\" marker-end=\"url(#arrow)\"/>\n";
        }
      }
      for (const auto& [pt, xy] : at)
        os << "    <circle class=\"node\" cx=\"" << xy.first << "\" cy=\"" << xy.second << "\" r=\"" << radius
           << "\"/>\n";
      os << "  </g>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dcx
