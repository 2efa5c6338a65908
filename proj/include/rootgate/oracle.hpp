#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootgate/parabolic.hpp"
#include "rootgate/rational.hpp"
#include "rootgate/root_system.hpp"

namespace rootgate::oracle {

// Slow, first-principles recomputations used to validate the production path.
// Parabolic membership is decided by an exact rational span solve over the
// kept simple roots' ambient vectors (never by the support shortcut), and
// coarse grouping is redone by ambient proportionality.

namespace detail {

inline bool positively_proportional(const std::vector<int>& u, const std::vector<int>& v) {
  long long dot = 0;
  for (std::size_t i = 0; i < u.size(); ++i) dot += static_cast<long long>(u[i]) * v[i];
  if (dot <= 0) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (static_cast<long long>(u[i]) * v[j] != static_cast<long long>(u[j]) * v[i]) return false;
  return true;
}

}  // namespace detail

// Resonant codimension of q_{kept}, recomputed independently.
inline int resonant_codim(const RootSystem& rs, IndexSet kept) {
  if (!kept.subset_of(IndexSet::full(rs.rank())))
    throw Error("oracle::resonant_codim: kept indices exceed the rank");
  std::vector<std::vector<int>> columns;
  for (int i : kept.indices()) columns.push_back(rs.simple_roots()[i - 1].ambient2);

  const auto& roots = rs.all_roots();
  std::vector<char> in_q(roots.size());
  for (std::size_t i = 0; i < roots.size(); ++i)
    in_q[i] = roots[i].positive() || in_span(columns, roots[i].ambient2);

  // group into coarse classes by positive proportionality of ambient vectors
  std::vector<char> seen(roots.size(), 0);
  int excluded = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (seen[i]) continue;
    bool class_meets_q = false;
    for (std::size_t j = i; j < roots.size(); ++j) {
      if (seen[j] || !detail::positively_proportional(roots[i].ambient2, roots[j].ambient2))
        continue;
      seen[j] = 1;
      class_meets_q = class_meets_q || in_q[j];
    }
    if (!class_meets_q) ++excluded;
  }
  return excluded;
}

struct MinScan {
  int min_value = 0;
  std::vector<IndexSet> witnesses;  // kept subsets attaining the minimum
};

// Exact minimum of the resonant codimension over every proper kept subset
// (2^rank - 1 of them).  Exhaustive; refuses rank > 8 unless forced.
inline MinScan min_over_all_proper(const RootSystem& rs, bool force = false) {
  if (rs.rank() > 8 && !force)
    throw RankTooLargeError("min_over_all_proper: rank " + std::to_string(rs.rank()) +
                            " > 8 (pass force to scan 2^rank subsets anyway)");
  const std::uint32_t full = IndexSet::full(rs.rank()).mask();
  MinScan scan{INT_MAX, {}};
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    int c = resonant_codim(rs, IndexSet::from_mask(mask));
    if (c < scan.min_value) {
      scan.min_value = c;
      scan.witnesses.assign(1, IndexSet::from_mask(mask));
    } else if (c == scan.min_value) {
      scan.witnesses.push_back(IndexSet::from_mask(mask));
    }
  }
  return scan;
}

struct Mismatch {
  std::string context;
  long long fast = 0;
  long long oracle = 0;
};

struct OracleReport {
  long long checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Fast path vs oracle on every kept subset (the full subset included).
inline OracleReport compare_all_subsets(const std::shared_ptr<const RootSystem>& rs) {
  OracleReport report;
  const std::uint32_t full = IndexSet::full(rs->rank()).mask();
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    IndexSet kept = IndexSet::from_mask(mask);
    int fast = resonant_codimension(make_parabolic(rs, kept));
    int slow = resonant_codim(*rs, kept);
    ++report.checked;
    if (fast != slow) {
      std::string context = rs->label() + " kept={";
      bool first = true;
      for (int i : kept.indices()) {
        if (!first) context += ",";
        context += std::to_string(i);
        first = false;
      }
      context += "}";
      report.mismatches.push_back(Mismatch{context, fast, slow});
    }
  }
  return report;
}

}  // namespace rootgate::oracle
