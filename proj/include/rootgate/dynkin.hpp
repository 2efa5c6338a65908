#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootgate/render.hpp"
#include "rootgate/root_system.hpp"

namespace rootgate {

// ASCII Dynkin diagram. Nodes are 'o' (the doubled node of BC_n is '*' with a
// footnote), bonds are --- (single), =>= / =<= (double, arrow toward the
// shorter root) and #># / #<# (triple, same arrow rule).  Branched diagrams
// (D_n, E_n) hang the off-chain node above its attachment point.
inline std::string ascii_dynkin(const RootSystem& rs) {
  const int n = rs.rank();
  const IntMatrix& cartan = rs.cartan_matrix();

  // node order along the drawn chain, plus an optional hanging node
  std::vector<int> chain;  // 1-based simple-root indices
  std::optional<std::pair<int, int>> hang;  // {chain position, node index}
  switch (rs.type().family) {
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) chain.push_back(i);
      hang = {n - 3, n};  // a_n above a_{n-2}
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      chain.push_back(1);
      for (int i = 3; i <= n; ++i) chain.push_back(i);
      hang = {2, 2};  // a2 above a4
      break;
    default:
      for (int i = 1; i <= n; ++i) chain.push_back(i);
      break;
  }

  const bool doubled_tail = rs.type().family == Family::BC;
  std::string nodes_line;
  std::string labels_line;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const std::size_t col = 4 * k;
    detail::pad_to(nodes_line, col);
    detail::pad_to(labels_line, col);
    const bool star = doubled_tail && k + 1 == chain.size();
    nodes_line += star ? "*" : "o";
    labels_line += "α" + std::to_string(chain[k]);
    if (k + 1 == chain.size()) break;
    const int i = chain[k] - 1, j = chain[k + 1] - 1;
    const int mult = cartan[i][j] * cartan[j][i];
    if (mult == 1) {
      nodes_line += "---";
    } else {
      // arrow toward the shorter root: |A_ij| = 2<a_i,a_j>/<a_j,a_j> is the
      // larger magnitude exactly when a_j is shorter
      const bool right = std::abs(cartan[i][j]) > std::abs(cartan[j][i]);
      if (mult == 2) nodes_line += right ? "=>=" : "=<=";
      else nodes_line += right ? "#>#" : "#<#";
    }
  }

  std::string out;
  if (hang) {
    const std::size_t col = 4 * static_cast<std::size_t>(hang->first);
    std::string top(col, ' '), bar(col, ' ');
    top += "o α" + std::to_string(hang->second);
    bar += "|";
    out += top + "\n" + bar + "\n";
  }
  out += nodes_line + "\n" + labels_line;
  if (doubled_tail)
    out += "\n*: 2α" + std::to_string(n) + " is also a root";
  return out;
}

}  // namespace rootgate
