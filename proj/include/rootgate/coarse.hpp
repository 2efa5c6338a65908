#pragma once

#include <optional>
#include <vector>

#include "rootgate/root_system.hpp"

namespace rootgate {

enum class Sign { positive, negative };

// Positive-proportionality class of roots: a singleton {b}, or {b, 2b} when
// the system is non-reduced. Members share their sign and their support.
struct CoarseClass {
  std::vector<Root> members;  // one or two roots, the shorter one first
  Sign sign = Sign::positive;

  const Root& representative() const { return members.front(); }

  friend bool operator==(const CoarseClass&, const CoarseClass&) = default;
};

namespace detail {

inline std::vector<int> scaled(const std::vector<int>& v, int factor) {
  std::vector<int> out = v;
  for (int& x : out) x *= factor;
  return out;
}

// coords/2 when every entry is even, nullopt otherwise.
inline std::optional<std::vector<int>> halved(const std::vector<int>& v) {
  std::vector<int> out = v;
  for (int& x : out) {
    if (x % 2 != 0) return std::nullopt;
    x /= 2;
  }
  return out;
}

}  // namespace detail

// All coarse classes: positive classes first, then negative, each batch in
// the canonical order of its representatives.
inline std::vector<CoarseClass> coarse_classes(const RootSystem& rs) {
  std::vector<CoarseClass> out;
  for (Sign sign : {Sign::positive, Sign::negative}) {
    for (const Root& r : rs.all_roots()) {
      if ((sign == Sign::positive) != r.positive()) continue;
      if (auto half = detail::halved(r.coords); half && rs.contains(*half))
        continue;  // r = 2b: counted with its shorter member
      CoarseClass cls;
      cls.sign = sign;
      cls.members.push_back(r);
      if (const Root* twice = rs.find(detail::scaled(r.coords, 2))) cls.members.push_back(*twice);
      out.push_back(std::move(cls));
    }
  }
  return out;
}

// The class of one given root. Throws RootNotInSystemError for foreign roots.
inline CoarseClass coarse_class_of(const RootSystem& rs, const Root& root) {
  if (!rs.owns(root)) throw RootNotInSystemError("coarse_class_of: root not in this system");
  const Root* shortest = &root;
  if (auto half = detail::halved(root.coords)) {
    if (const Root* h = rs.find(*half)) shortest = h;
  }
  CoarseClass cls;
  cls.sign = shortest->positive() ? Sign::positive : Sign::negative;
  cls.members.push_back(*shortest);
  if (const Root* twice = rs.find(detail::scaled(shortest->coords, 2)))
    cls.members.push_back(*twice);
  return cls;
}

// Number of positive coarse classes: |positive roots| for reduced systems,
// |positive roots| - rank for BC_n (the n pairs {e_i, 2e_i} merge).
inline std::size_t positive_class_count(const RootSystem& rs) {
  std::size_t count = 0;
  for (const CoarseClass& c : coarse_classes(rs))
    if (c.sign == Sign::positive) ++count;
  return count;
}

}  // namespace rootgate
