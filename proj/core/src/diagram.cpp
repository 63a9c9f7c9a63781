#include <algorithm>
#include <sstream>

#include "kmsph/errors.hpp"
#include "kmsph/shell.hpp"

namespace kmsph {

namespace {

// Edge cell between nodes i (left) and j (right): core symbol by the larger
// off-diagonal entry, arrow toward the shorter root (the row with the larger
// absolute entry).
std::string edge_cell(const GeneralizedCartanMatrix& gcm, int i, int j) {
  Int aij = abs(gcm.at(i, j)), aji = abs(gcm.at(j, i));
  Int m = std::max(aij, aji);
  char core = m == 1 ? '-' : m == 2 ? '=' : '#';
  char l = aij > aji ? '<' : '-';
  char rr = aji > aij ? '>' : '-';
  if (aij == aji && m > 1) { l = '<'; rr = '>'; }
  return std::string(1, l) + core + rr;
}

std::string type_of(int i, const TypePartition& part) {
  if (std::find(part.a.begin(), part.a.end(), i) != part.a.end()) return "a";
  if (std::find(part.two_a.begin(), part.two_a.end(), i) != part.two_a.end()) return "2a";
  if (std::find(part.p.begin(), part.p.end(), i) != part.p.end()) return "p";
  return "b";
}

std::string ascii_diagram(const HomogeneousSphericalDatum& datum) {
  const GeneralizedCartanMatrix& gcm = datum.ambient().gcm();
  int n = gcm.n();
  if (n == 0) return "(empty diagram)\n";
  TypePartition part = type_partition(datum);
  std::vector<Color> colors = derive_colors(datum);

  std::string nodes, types;
  std::vector<size_t> col(n);
  for (int i = 0; i < n; ++i) {
    col[i] = nodes.size();
    nodes += gcm.label(i);
    if (i + 1 < n) {
      nodes += ' ';
      nodes += gcm.at(i, i + 1) == 0 ? "   " : edge_cell(gcm, i, i + 1);
      nodes += ' ';
    }
  }
  for (int i = 0; i < n; ++i) {
    if (types.size() < col[i]) types.resize(col[i], ' ');
    types += type_of(i, part);
  }

  std::ostringstream out;
  out << nodes << "\n" << types << "\n";

  std::string extra;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (gcm.at(i, j) == 0) continue;
      if (!extra.empty()) extra += ", ";
      extra += gcm.label(i) + " " + edge_cell(gcm, i, j) + " " + gcm.label(j);
    }
  if (!extra.empty()) out << "edges: " << extra << "\n";

  std::string arcs;
  for (const auto& c : colors) {
    if (c.movers.size() < 2) continue;
    if (!arcs.empty()) arcs += ", ";
    arcs += c.id + "(";
    for (size_t m = 0; m < c.movers.size(); ++m) {
      if (m) arcs += ", ";
      arcs += gcm.label(c.movers[m]);
    }
    arcs += ")";
  }
  if (!arcs.empty()) out << "arcs: " << arcs << "\n";
  return out.str();
}

std::string tex_diagram(const HomogeneousSphericalDatum& datum) {
  const GeneralizedCartanMatrix& gcm = datum.ambient().gcm();
  int n = gcm.n();
  TypePartition part = type_partition(datum);
  std::vector<Color> colors = derive_colors(datum);

  auto x_of = [](int i) { return 20 + 40 * i; };
  int width = n > 0 ? x_of(n - 1) + 20 : 40;
  const int y = 50;

  std::ostringstream out;
  out << "\\documentclass{standalone}\n\\begin{document}\n";
  out << "\\setlength{\\unitlength}{1pt}\n";
  out << "\\begin{picture}(" << width << ",100)(0,0)\n";
  for (int i = 0; i < n; ++i) {
    out << "\\put(" << x_of(i) << "," << y << "){\\circle{8}}\n";
    out << "\\put(" << x_of(i) << "," << y - 14 << "){\\makebox(0,0){\\scriptsize "
        << gcm.label(i) << "}}\n";
    out << "\\put(" << x_of(i) << "," << y - 26 << "){\\makebox(0,0){\\scriptsize "
        << type_of(i, part) << "}}\n";
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (gcm.at(i, j) == 0) continue;
      std::string cell = edge_cell(gcm, i, j);
      if (j == i + 1) {
        int x1 = x_of(i) + 4, len = x_of(j) - x_of(i) - 8;
        int m = cell[1] == '-' ? 1 : cell[1] == '=' ? 2 : 3;
        for (int t = 0; t < m; ++t) {
          int dy = (m == 1) ? 0 : (m == 2 ? (t == 0 ? -2 : 2) : (t - 1) * 3);
          out << "\\put(" << x1 << "," << y + dy << "){\\line(1,0){" << len << "}}\n";
        }
        int mid = (x_of(i) + x_of(j)) / 2;
        if (cell[0] == '<')
          out << "\\put(" << mid - 5 << "," << y << "){\\makebox(0,0){$<$}}\n";
        if (cell[2] == '>')
          out << "\\put(" << mid + 5 << "," << y << "){\\makebox(0,0){$>$}}\n";
      } else {
        int mid = (x_of(i) + x_of(j)) / 2;
        out << "\\qbezier(" << x_of(i) << "," << y + 5 << ")(" << mid << "," << y + 28 << ")("
            << x_of(j) << "," << y + 5 << ")\n";
        out << "\\put(" << mid << "," << y + 20 << "){\\makebox(0,0){\\scriptsize " << cell
            << "}}\n";
      }
    }
  for (const auto& c : colors) {
    if (c.movers.size() < 2) continue;
    int i = c.movers.front(), j = c.movers.back();
    int mid = (x_of(i) + x_of(j)) / 2;
    out << "\\qbezier(" << x_of(i) << "," << y - 30 << ")(" << mid << "," << y - 44 << ")("
        << x_of(j) << "," << y - 30 << ")\n";
    out << "\\put(" << mid << "," << y - 40 << "){\\makebox(0,0){\\scriptsize " << c.id
        << "}}\n";
  }
  out << "\\end{picture}\n\\end{document}\n";
  return out.str();
}

}  // namespace

std::string emit_diagram(const HomogeneousSphericalDatum& datum, DiagramFormat format) {
  return format == DiagramFormat::ascii ? ascii_diagram(datum) : tex_diagram(datum);
}

}  // namespace kmsph
