#include "redpow/render.hpp"

#include <algorithm>
#include <sstream>

namespace redpow {

std::string render_table_text(const EmbedArtifact& a) {
  const std::size_t K = a.table.width;
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{""}, sub{""};
  for (std::size_t i = 1; i <= K; ++i) {
    head.push_back("m" + std::to_string(i));
    sub.push_back(a.elements.at(i).to_string());
  }
  grid.push_back(head);
  grid.push_back(sub);
  for (std::size_t n = 1; n <= a.table.depth; ++n) {
    std::vector<std::string> row{"P" + std::to_string(n)};
    for (std::size_t i = 1; i <= K; ++i) row.push_back(a.table.value(n, i).str());
    grid.push_back(std::move(row));
  }
  std::vector<std::size_t> width(K + 1, 0);
  for (const auto& r : grid) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  std::ostringstream out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < grid[r].size(); ++c) {
      const auto& cell = grid[r][c];
      if (c == 0) {
        out << cell << std::string(width[0] - cell.size(), ' ') << " |";
      } else {
        out << ' ' << std::string(width[c] - cell.size(), ' ') << cell;
      }
    }
    out << '\n';
    if (r == 1) {
      out << std::string(width[0] + 1, '-') << '+';
      for (std::size_t c = 1; c <= K; ++c) out << std::string(width[c] + 1, '-');
      out << '\n';
    }
  }
  return out.str();
}

std::string render_table_csv(const EmbedArtifact& a) {
  std::ostringstream out;
  out << "row";
  for (std::size_t i = 1; i <= a.table.width; ++i) out << ",m" << i;
  out << '\n';
  for (std::size_t n = 1; n <= a.table.depth; ++n) {
    out << 'P' << n;
    for (std::size_t i = 1; i <= a.table.width; ++i) out << ',' << a.table.value(n, i).str();
    out << '\n';
  }
  return out.str();
}

std::string render_ufamily(UFamily& family, const OrdinalCNF& alpha, std::size_t n_max) {
  std::ostringstream out;
  for (std::size_t n = 0; n <= n_max; ++n) {
    out << n << "\t{";
    const auto& s = family.u(alpha, n);
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? ", " : "") << s[i].pretty();
    out << "}\n";
  }
  return out.str();
}

}  // namespace redpow
