#pragma once

#include <climits>
#include <string>
#include <vector>

#include "rootgate/parabolic.hpp"
#include "rootgate/realforms.hpp"

namespace rootgate {

// One minimized invariant with the parabolics attaining it.
struct InvariantSlice {
  int value = 0;
  std::vector<Parabolic> witnesses;
};

struct InvariantReport {
  InvariantSlice r;
  InvariantSlice m;
};

namespace detail {

inline void merge_min(InvariantSlice& acc, int value, std::vector<Parabolic> witnesses) {
  if (value < acc.value) {
    acc.value = value;
    acc.witnesses = std::move(witnesses);
  } else if (value == acc.value) {
    for (Parabolic& p : witnesses) acc.witnesses.push_back(std::move(p));
  }
}

}  // namespace detail

// r: the least resonant codimension over the maximal proper parabolics,
// minimized across the non-compact factors.  (For a rank-1 factor the unique
// proper parabolic keeps nothing and excludes the single class, so r = 1.)
inline InvariantSlice r_invariant(const AlgebraDescriptor& alg) {
  if (!alg.has_noncompact())
    throw NoNoncompactFactorError("r is undefined: no non-compact factor in " + alg.name());
  InvariantSlice best{INT_MAX, {}};
  for (const SimpleFactor& f : alg.factors) {
    if (f.compact) continue;
    auto rs = restricted_root_system(f);
    InvariantSlice local{INT_MAX, {}};
    for (Parabolic& q : maximal_parabolics(rs))
      detail::merge_min(local, resonant_codimension(q), {q});
    detail::merge_min(best, local.value, std::move(local.witnesses));
  }
  return best;
}

// m: the least resonant codimension over the corank-2 parabolics, minimized
// across the non-compact factors.  A rank-1 factor contributes the value 1 by
// definition (it has no corank-2 parabolic, hence no witness).
inline InvariantSlice m_invariant(const AlgebraDescriptor& alg) {
  if (!alg.has_noncompact())
    throw NoNoncompactFactorError("m is undefined: no non-compact factor in " + alg.name());
  InvariantSlice best{INT_MAX, {}};
  for (const SimpleFactor& f : alg.factors) {
    if (f.compact) continue;
    if (f.restricted.rank == 1) {
      detail::merge_min(best, 1, {});
      continue;
    }
    auto rs = restricted_root_system(f);
    InvariantSlice local{INT_MAX, {}};
    for (Parabolic& q : corank2_parabolics(rs))
      detail::merge_min(local, resonant_codimension(q), {q});
    detail::merge_min(best, local.value, std::move(local.witnesses));
  }
  return best;
}

inline InvariantReport invariant_report(const AlgebraDescriptor& alg) {
  return InvariantReport{r_invariant(alg), m_invariant(alg)};
}

// Dimension regimes relative to the two thresholds.
enum class Regime { invariant_measure, critical_dimension, projective_factor, above_thresholds };

inline std::string regime_name(Regime r) {
  switch (r) {
    case Regime::invariant_measure: return "InvariantMeasure";
    case Regime::critical_dimension: return "CriticalDimension";
    case Regime::projective_factor: return "ProjectiveFactor";
    case Regime::above_thresholds: return "AboveThresholds";
  }
  throw Error("regime_name: bad regime");
}

struct RegimeVerdict {
  Regime regime = Regime::above_thresholds;
  int dim = 0;
  int r_value = 0;
  int m_value = 0;
  std::vector<std::string> notes;
};

// Places a manifold dimension against r and m:
//   dim < r       -> InvariantMeasure      (strongest conclusion)
//   dim = r       -> CriticalDimension     (sharpest statement applicable)
//   r < dim <= m  -> ProjectiveFactor
//   dim > m       -> AboveThresholds      (no claim)
inline RegimeVerdict classify_regime(const AlgebraDescriptor& alg, int dim) {
  if (dim < 1) throw Error("classify_regime: dimension must be at least 1");
  InvariantReport rep = invariant_report(alg);
  RegimeVerdict v;
  v.dim = dim;
  v.r_value = rep.r.value;
  v.m_value = rep.m.value;
  if (dim < v.r_value) {
    v.regime = Regime::invariant_measure;
    v.notes.push_back(
        "dim(M) < r(G): every C^{1+Holder} action of a lattice in G on M preserves a Borel "
        "probability measure.");
  } else if (dim == v.r_value) {
    v.regime = Regime::critical_dimension;
    v.notes.push_back(
        "dim(M) = r(G): every C^{1+Holder} lattice action on M either preserves a Borel "
        "probability measure or is measurably conjugate to a finite extension of the standard "
        "action on Q\\G for a maximal parabolic subgroup Q.");
  } else if (dim <= v.m_value) {
    v.regime = Regime::projective_factor;
    v.notes.push_back(
        "r(G) < dim(M) <= m(G): every C^{1+Holder} lattice action on M either preserves a Borel "
        "probability measure or admits a quasi-invariant measure making it a relatively "
        "measure-preserving extension of the standard action on Q\\G for a standard parabolic "
        "subgroup Q.");
  } else {
    v.regime = Regime::above_thresholds;
    v.notes.push_back("dim(M) > m(G): no structure theorem applies at this dimension.");
  }

  if (dim == 2) {
    for (const SimpleFactor& f : alg.factors) {
      if (f.compact || f.name.rfind("sl(", 0) != 0 || f.name.find(",R)") == std::string::npos)
        continue;
      if (f.restricted.family == Family::A && f.restricted.rank >= 3) {  // sl(n,R), n >= 4
        v.notes.push_back(
            "surface case: every C^{1+Holder} action of a lattice in SL(n,R), n >= 4, on a "
            "closed oriented surface is trivial (it factors through a finite group).");
        break;
      }
    }
  }
  return v;
}

}  // namespace rootgate
