#pragma once

#include <memory>
#include <set>
#include <vector>

#include "rootgate/coarse.hpp"
#include "rootgate/root_system.hpp"

namespace rootgate {

// Standard parabolic subalgebra q determined by a kept subset of the simple
// roots: q contains every positive root space, and a negative root space
// exactly when the root's support lies inside the kept subset.
struct Parabolic {
  std::shared_ptr<const RootSystem> system;
  IndexSet kept;

  bool proper() const { return kept != IndexSet::full(system->rank()); }
  IndexSet omitted() const { return IndexSet::full(system->rank()).without(kept); }
  int corank() const { return omitted().size(); }
};

inline Parabolic make_parabolic(std::shared_ptr<const RootSystem> rs, IndexSet kept) {
  if (!rs) throw Error("make_parabolic: null system");
  if (!kept.subset_of(IndexSet::full(rs->rank())))
    throw Error("make_parabolic: kept indices exceed the rank");
  return Parabolic{std::move(rs), kept};
}

// Is the root space g^root contained in q?
inline bool contains_root_space(const Parabolic& q, const Root& root) {
  if (!q.system->owns(root)) throw RootNotInSystemError("contains_root_space: foreign root");
  return root.positive() || support(root).subset_of(q.kept);
}

// The roots whose spaces lie in q, in canonical order.
inline std::vector<Root> root_set(const Parabolic& q) {
  std::vector<Root> out;
  for (const Root& r : q.system->all_roots())
    if (r.positive() || support(r).subset_of(q.kept)) out.push_back(r);
  return out;
}

// Independent pair-scan oracle: is the subset closed under root addition?
// (Whenever b, c are in the subset and b + c is a root, b + c is in it too.)
inline bool bracket_closed(const RootSystem& rs, const std::vector<Root>& subset) {
  std::set<std::vector<int>> have;
  for (const Root& r : subset) have.insert(r.coords);
  for (const Root& b : subset)
    for (const Root& c : subset) {
      std::vector<int> sum = b.coords;
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += c.coords[i];
      if (rs.contains(sum) && have.count(sum) == 0) return false;
    }
  return true;
}

// Bracket closure of q's root set, checked by the literal pair scan.
inline bool verify_closure(const Parabolic& q) { return bracket_closed(*q.system, root_set(q)); }

// Number of coarse classes with no root space inside q. Classes are saturated
// (both members of a pair share support and sign), so testing the
// representative decides the whole class.
inline int resonant_codimension(const Parabolic& q) {
  int excluded = 0;
  for (const CoarseClass& cls : coarse_classes(*q.system)) {
    const Root& rep = cls.representative();
    if (!(rep.positive() || support(rep).subset_of(q.kept))) ++excluded;
  }
  return excluded;
}

// The excluded coarse classes themselves (for reports), canonical rep order.
inline std::vector<CoarseClass> excluded_classes(const Parabolic& q) {
  std::vector<CoarseClass> out;
  for (const CoarseClass& cls : coarse_classes(*q.system)) {
    const Root& rep = cls.representative();
    if (!(rep.positive() || support(rep).subset_of(q.kept))) out.push_back(cls);
  }
  return out;
}

// The rank maximal proper parabolics q_{P \ {a_i}}, i ascending.
inline std::vector<Parabolic> maximal_parabolics(std::shared_ptr<const RootSystem> rs) {
  if (!rs) throw Error("maximal_parabolics: null system");
  std::vector<Parabolic> out;
  IndexSet full = IndexSet::full(rs->rank());
  for (int i = 1; i <= rs->rank(); ++i)
    out.push_back(Parabolic{rs, full.without(IndexSet::of({i}))});
  return out;
}

// All rank*(rank-1)/2 corank-2 parabolics, omitted pairs in ascending order.
inline std::vector<Parabolic> corank2_parabolics(std::shared_ptr<const RootSystem> rs) {
  if (!rs) throw Error("corank2_parabolics: null system");
  if (rs->rank() < 2)
    throw RankTooSmallError("corank2_parabolics: rank " + std::to_string(rs->rank()) +
                            " admits no corank-2 subset");
  std::vector<Parabolic> out;
  IndexSet full = IndexSet::full(rs->rank());
  for (int i = 1; i <= rs->rank(); ++i)
    for (int j = i + 1; j <= rs->rank(); ++j)
      out.push_back(Parabolic{rs, full.without(IndexSet::of({i, j}))});
  return out;
}

}  // namespace rootgate
