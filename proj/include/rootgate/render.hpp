#pragma once

#include <string>
#include <vector>

#include "rootgate/coarse.hpp"
#include "rootgate/index_set.hpp"
#include "rootgate/root_system.hpp"

namespace rootgate {

// Plain-text renderings shared by the CLI formats. All of them are pure
// functions of exact integer data, so output is reproducible byte for byte.

namespace detail {

// Visible width of our label strings: each UTF-8 alpha is two bytes, one column.
inline std::size_t visible_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline void pad_to(std::string& line, std::size_t column) {
  std::size_t w = visible_width(line);
  if (w < column) line += std::string(column - w, ' ');
}

}  // namespace detail

// "a1+2a2" / "-a1-a2" style, with the simple roots written as UTF-8 alphas.
inline std::string coeff_string(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    int c = r.coords[i];
    if (c == 0) continue;
    if (c > 0 && !out.empty()) out += "+";
    if (c < 0) out += "-";
    int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += "α" + std::to_string(i + 1);
  }
  return out;
}

// Ambient coordinates: "e1-e2", "2e1", or "(e1-e2-e3-e4)/2" when any entry is
// a half-integer. Input is the doubled representation.
inline std::string ambient_string(const Root& r) {
  bool halves = false;
  for (int a : r.ambient2)
    if (a % 2 != 0) halves = true;
  std::string body;
  for (std::size_t i = 0; i < r.ambient2.size(); ++i) {
    int c = halves ? r.ambient2[i] : r.ambient2[i] / 2;
    if (c == 0) continue;
    if (c > 0 && !body.empty()) body += "+";
    if (c < 0) body += "-";
    int mag = c < 0 ? -c : c;
    if (mag != 1) body += std::to_string(mag);
    body += "e" + std::to_string(i + 1);
  }
  return halves ? "(" + body + ")/2" : body;
}

// "{a1,a3}" for an omitted or kept index set.
inline std::string index_set_string(IndexSet s) {
  std::string out = "{";
  bool first = true;
  for (int i : s.indices()) {
    if (!first) out += ",";
    out += "α" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

// Aligned bracket rows for a Cartan matrix.
inline std::vector<std::string> cartan_rows(const IntMatrix& a) {
  std::size_t width = 1;
  for (const auto& row : a)
    for (int v : row) width = std::max(width, std::to_string(v).size());
  std::vector<std::string> out;
  for (const auto& row : a) {
    std::string line = "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell = std::to_string(row[j]);
      line += std::string(width + 1 - cell.size(), ' ') + cell;
    }
    line += " ]";
    out.push_back(line);
  }
  return out;
}

// Comma-joined representatives of a class list ("-a1, -a1-a2").
inline std::string class_reps_string(const std::vector<CoarseClass>& classes) {
  std::string out;
  for (const CoarseClass& c : classes) {
    if (!out.empty()) out += ", ";
    out += coeff_string(c.representative());
  }
  return out;
}

}  // namespace rootgate
