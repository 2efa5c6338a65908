#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rootgate/errors.hpp"
#include "rootgate/index_set.hpp"
#include "rootgate/rational.hpp"
#include "rootgate/types.hpp"

namespace rootgate {

using IntMatrix = std::vector<std::vector<int>>;

// A root, in two exact presentations at once:
//   coords   — integer coefficients over the simple roots (all >= 0 or all <= 0),
//   ambient2 — ambient coordinates multiplied by 2, so that the half-integer
//              entries of the exceptional presentations stay integral.
struct Root {
  std::vector<int> coords;
  std::vector<int> ambient2;
  int height = 0;  // sum of coords; nonzero, and its sign is the root's sign

  bool positive() const { return height > 0; }

  Root negated() const {
    Root n = *this;
    for (int& c : n.coords) c = -c;
    for (int& a : n.ambient2) a = -a;
    n.height = -n.height;
    return n;
  }

  friend bool operator==(const Root&, const Root&) = default;
};

// Canonical ordering: ascending height; at equal height the coefficient
// vectors are compared from the first index, larger coefficient first
// (this puts a1 before a2, matching how root tables are conventionally read).
inline bool canonical_less(const Root& a, const Root& b) {
  if (a.height != b.height) return a.height < b.height;
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    if (a.coords[i] != b.coords[i]) return a.coords[i] > b.coords[i];
  return false;
}

// 1-based indices of the nonzero simple-root coefficients.
inline IndexSet support(const Root& r) {
  IndexSet s;
  for (std::size_t i = 0; i < r.coords.size(); ++i)
    if (r.coords[i] != 0) s.insert(static_cast<int>(i) + 1);
  return s;
}

namespace detail {

// Doubled ambient vectors of the simple roots, standard presentations:
//   A_n: e_i - e_{i+1} in R^{n+1}
//   B_n/BC_n: e_i - e_{i+1}, e_n        C_n: e_i - e_{i+1}, 2e_n
//   D_n: e_i - e_{i+1}, e_{n-1} + e_n
//   G2 in R^3, F4 in R^4, E6/E7/E8 in R^8 (E-series with half-integer a1).
inline std::vector<std::vector<int>> simple_ambient2(const RootSystemType& t) {
  const int n = t.rank;
  const int d = ambient_dim(t);
  std::vector<std::vector<int>> s;
  auto vec = [&]() { return std::vector<int>(d, 0); };
  auto chain = [&](int count) {  // e_i - e_{i+1} for i = 1..count
    for (int i = 0; i < count; ++i) {
      auto v = vec();
      v[i] = 2;
      v[i + 1] = -2;
      s.push_back(v);
    }
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
    case Family::BC: {
      chain(n - 1);
      auto v = vec();
      v[n - 1] = 2;
      s.push_back(v);
      break;
    }
    case Family::C: {
      chain(n - 1);
      auto v = vec();
      v[n - 1] = 4;
      s.push_back(v);
      break;
    }
    case Family::D: {
      chain(n - 1);
      auto v = vec();
      v[n - 2] = 2;
      v[n - 1] = 2;
      s.push_back(v);
      break;
    }
    case Family::G2:
      s.push_back({2, -2, 0});
      s.push_back({-4, 2, 2});
      break;
    case Family::F4:
      s.push_back({0, 2, -2, 0});
      s.push_back({0, 0, 2, -2});
      s.push_back({0, 0, 0, 2});
      s.push_back({1, -1, -1, -1});
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8: {
      s.push_back({1, -1, -1, -1, -1, -1, -1, 1});  // a1 = (e1 + e8 - e2 - ... - e7)/2
      s.push_back({2, 2, 0, 0, 0, 0, 0, 0});        // a2 = e1 + e2
      for (int k = 3; k <= n; ++k) {                // a_k = e_{k-1} - e_{k-2}
        auto v = vec();
        v[k - 3] = -2;
        v[k - 2] = 2;
        s.push_back(v);
      }
      break;
    }
  }
  return s;
}

// Doubled ambient vectors of the full root set (positives and negatives).
inline std::vector<std::vector<int>> all_ambient2(const RootSystemType& t) {
  const int n = t.rank;
  const int d = ambient_dim(t);
  std::vector<std::vector<int>> out;
  auto vec = [&]() { return std::vector<int>(d, 0); };
  auto push2 = [&](std::vector<int> v) {  // v and -v
    auto neg = v;
    for (int& x : neg) x = -x;
    out.push_back(std::move(v));
    out.push_back(std::move(neg));
  };
  auto differences = [&](int count) {  // +-(e_i - e_j), i < j <= count
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        auto v = vec();
        v[i] = 2;
        v[j] = -2;
        push2(v);
      }
  };
  auto sums = [&](int count) {  // +-(e_i + e_j), i < j <= count
    for (int i = 0; i < count; ++i)
      for (int j = i + 1; j < count; ++j) {
        auto v = vec();
        v[i] = 2;
        v[j] = 2;
        push2(v);
      }
  };
  auto units = [&](int scale2) {  // +-(scale2/2) e_i
    for (int i = 0; i < n; ++i) {
      auto v = vec();
      v[i] = scale2;
      push2(v);
    }
  };
  switch (t.family) {
    case Family::A:
      differences(n + 1);
      break;
    case Family::B:
      differences(n);
      sums(n);
      units(2);
      break;
    case Family::C:
      differences(n);
      sums(n);
      units(4);
      break;
    case Family::D:
      differences(n);
      sums(n);
      break;
    case Family::BC:
      differences(n);
      sums(n);
      units(2);
      units(4);
      break;
    case Family::G2:
      differences(3);
      for (int a = 0; a < 3; ++a) {  // +-(2e_a - e_b - e_c)
        std::vector<int> v(3, -2);
        v[a] = 4;
        push2(v);
      }
      break;
    case Family::F4:
      units(2);
      differences(4);
      sums(4);
      for (int mask = 0; mask < 8; ++mask) {  // (+-e1 +-e2 +-e3 +-e4)/2
        std::vector<int> v(4, 1);
        for (int b = 0; b < 3; ++b)
          if (mask & (1 << b)) v[b + 1] = -1;
        push2(v);
      }
      break;
    case Family::E6:
      differences(5);
      sums(5);
      for (int mask = 0; mask < 32; ++mask) {  // (+-e1..+-e5 - e6 - e7 + e8)/2, even minus count
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        std::vector<int> v = {1, 1, 1, 1, 1, -1, -1, 1};
        for (int b = 0; b < 5; ++b)
          if (mask & (1 << b)) v[b] = -1;
        push2(v);
      }
      break;
    case Family::E7: {
      differences(6);
      sums(6);
      auto v = vec();
      v[6] = -2;
      v[7] = 2;
      push2(v);                                // +-(e8 - e7)
      for (int mask = 0; mask < 64; ++mask) {  // (+-e1..+-e6 - e7 + e8)/2, odd minus count
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 1) continue;
        std::vector<int> h = {1, 1, 1, 1, 1, 1, -1, 1};
        for (int b = 0; b < 6; ++b)
          if (mask & (1 << b)) h[b] = -1;
        push2(h);
      }
      break;
    }
    case Family::E8:
      differences(8);
      sums(8);
      for (int mask = 0; mask < 256; ++mask) {  // (+-e1 .. +-e8)/2, even minus count
        if (std::popcount(static_cast<unsigned>(mask)) % 2 != 0) continue;
        std::vector<int> v(8, 1);
        for (int b = 0; b < 8; ++b)
          if (mask & (1 << b)) v[b] = -1;
        out.push_back(v);  // negation already enumerated (parity is preserved)
      }
      break;
  }
  return out;
}

inline long long dot2(const std::vector<int>& a, const std::vector<int>& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long long>(a[i]) * b[i];
  return s;
}

}  // namespace detail

// Cartan matrix A[i][j] = 2<a_i, a_j> / <a_j, a_j> from doubled ambient vectors
// (the doubling cancels). Entries must come out integral.
inline IntMatrix cartan_from_ambient(const std::vector<std::vector<int>>& simple2) {
  const std::size_t n = simple2.size();
  IntMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      long long num = 2 * detail::dot2(simple2[i], simple2[j]);
      long long den = detail::dot2(simple2[j], simple2[j]);
      if (den == 0 || num % den != 0) throw Error("cartan_from_ambient: non-integral entry");
      a[i][j] = static_cast<int>(num / den);
    }
  return a;
}

// Immutable restricted root system in its standard presentation.
// Construction enumerates the ambient root vectors from the family's explicit
// formulas and solves each one exactly against the simple roots; the sign
// coherence of the resulting coefficients is checked rather than assumed.
class RootSystem {
 public:
  explicit RootSystem(RootSystemType t) : type_(t) {
    validate(t);
    auto s2 = detail::simple_ambient2(t);
    auto all2 = detail::all_ambient2(t);
    roots_.reserve(all2.size());
    for (auto& amb : all2) {
      auto sol = solve_in_span(s2, amb);
      if (!sol) throw Error("RootSystem: root outside the simple-root span");
      std::vector<int> coords(t.rank);
      int height = 0;
      bool nonneg = true, nonpos = true;
      for (int i = 0; i < t.rank; ++i) {
        if (!(*sol)[i].integer()) throw Error("RootSystem: non-integral root coefficient");
        coords[i] = static_cast<int>((*sol)[i].num);
        height += coords[i];
        nonneg = nonneg && coords[i] >= 0;
        nonpos = nonpos && coords[i] <= 0;
      }
      if (height == 0 || !(nonneg || nonpos))
        throw Error("RootSystem: sign-incoherent root coefficients");
      roots_.push_back(Root{std::move(coords), std::move(amb), height});
    }
    std::sort(roots_.begin(), roots_.end(), canonical_less);
    for (std::size_t i = 0; i < roots_.size(); ++i) index_[roots_[i].coords] = i;
    if (index_.size() != roots_.size()) throw Error("RootSystem: duplicate roots");
    cartan_ = cartan_from_ambient(s2);
    for (int i = 0; i < t.rank; ++i) {
      std::vector<int> e(t.rank, 0);
      e[i] = 1;
      const Root* r = find(e);
      if (!r) throw Error("RootSystem: simple root missing");
      simple_.push_back(*r);
    }
  }

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int ambient_dimension() const { return ambient_dim(type_); }
  std::string label() const { return type_label(type_); }

  // All roots, canonically ordered (negatives first by ascending height).
  const std::vector<Root>& all_roots() const { return roots_; }
  const std::vector<Root>& simple_roots() const { return simple_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }

  bool contains(const std::vector<int>& coords) const { return index_.count(coords) != 0; }

  const Root* find(const std::vector<int>& coords) const {
    auto it = index_.find(coords);
    return it == index_.end() ? nullptr : &roots_[it->second];
  }

  std::size_t positive_count() const { return roots_.size() / 2; }

  // True membership test for a Root value (coords and ambient must both match).
  bool owns(const Root& r) const {
    const Root* mine = find(r.coords);
    return mine != nullptr && *mine == r;
  }

 private:
  RootSystemType type_;
  std::vector<Root> simple_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  IntMatrix cartan_;
};

inline std::shared_ptr<const RootSystem> build(RootSystemType t) {
  return std::make_shared<const RootSystem>(t);
}

inline std::shared_ptr<const RootSystem> build(Family f, int rank) {
  return build(make_type(f, rank));
}

// Positive roots in display order: ascending height, then the canonical
// coefficient order. Deterministic across runs and platforms.
inline std::vector<Root> enumerate_positive_roots(const RootSystem& rs) {
  std::vector<Root> out;
  out.reserve(rs.positive_count());
  for (const Root& r : rs.all_roots())
    if (r.positive()) out.push_back(r);
  return out;
}

// Independent generation route, used to cross-check build(): close the simple
// roots under the simple reflections encoded by a Cartan matrix.  Returns the
// roots as simple-root coefficient vectors (a Cartan matrix alone carries no
// ambient presentation).  Throws NonConvergenceError when the closure keeps
// growing, i.e. the matrix is not of finite type.
inline std::set<std::vector<int>> closure_oracle(const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  if (n == 0) throw Error("closure_oracle: empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (cartan[i].size() != n) throw Error("closure_oracle: matrix not square");
    if (cartan[i][i] != 2) throw Error("closure_oracle: diagonal entry must be 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0) throw Error("closure_oracle: positive off-diagonal entry");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw Error("closure_oracle: zero pattern not symmetric");
    }
  }

  constexpr std::size_t kMaxRoots = 100000;
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> work;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    work.push_back(std::move(e));
  }
  while (!work.empty()) {
    std::vector<int> beta = std::move(work.back());
    work.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      // s_j(beta) = beta - <beta, a_j^v> a_j, with <beta, a_j^v> = sum_i beta_i A[i][j]
      long long pairing = 0;
      for (std::size_t i = 0; i < n; ++i) pairing += static_cast<long long>(beta[i]) * cartan[i][j];
      std::vector<int> image = beta;
      image[j] = static_cast<int>(image[j] - pairing);
      if (roots.insert(image).second) {
        if (roots.size() > kMaxRoots)
          throw NonConvergenceError("closure_oracle: root set keeps growing (not finite type)");
        work.push_back(std::move(image));
      }
    }
  }
  return roots;
}

// Orthogonal direct sum: factor roots embedded into concatenated coefficient
// and ambient blocks, so roots of distinct factors are orthogonal by layout.
class DirectSum {
 public:
  explicit DirectSum(std::vector<std::shared_ptr<const RootSystem>> factors)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw Error("DirectSum: no factors");
    for (const auto& f : factors_) {
      if (!f) throw Error("DirectSum: null factor");
      rank_ += f->rank();
      ambient_ += f->ambient_dimension();
    }
  }

  const std::vector<std::shared_ptr<const RootSystem>>& factors() const { return factors_; }
  int total_rank() const { return rank_; }
  int total_ambient_dimension() const { return ambient_; }

  // Every root of every factor, in its embedded presentation, factors in order.
  std::vector<Root> all_roots() const {
    std::vector<Root> out;
    int coord_off = 0, amb_off = 0;
    for (const auto& f : factors_) {
      for (const Root& r : f->all_roots()) {
        Root e;
        e.coords.assign(rank_, 0);
        e.ambient2.assign(ambient_, 0);
        std::copy(r.coords.begin(), r.coords.end(), e.coords.begin() + coord_off);
        std::copy(r.ambient2.begin(), r.ambient2.end(), e.ambient2.begin() + amb_off);
        e.height = r.height;
        out.push_back(std::move(e));
      }
      coord_off += f->rank();
      amb_off += f->ambient_dimension();
    }
    return out;
  }

 private:
  std::vector<std::shared_ptr<const RootSystem>> factors_;
  int rank_ = 0;
  int ambient_ = 0;
};

}  // namespace rootgate
