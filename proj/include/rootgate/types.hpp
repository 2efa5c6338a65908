#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rootgate/errors.hpp"

namespace rootgate {

// Families of irreducible restricted root systems. BC is the non-reduced one.
enum class Family { A, B, C, D, BC, E6, E7, E8, F4, G2 };

inline constexpr std::array<Family, 10> kAllFamilies = {
    Family::A,  Family::B,  Family::C,  Family::D,  Family::BC,
    Family::E6, Family::E7, Family::E8, Family::F4, Family::G2};

inline std::string family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  throw Error("family_name: bad family");
}

// Exceptional families exist at exactly one rank.
inline std::optional<int> fixed_rank(Family f) {
  switch (f) {
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
    default: return std::nullopt;
  }
}

inline int min_rank(Family f) {
  switch (f) {
    case Family::A: return 1;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
    case Family::BC: return 1;
    default: return *fixed_rank(f);
  }
}

struct RootSystemType {
  Family family;
  int rank;

  friend bool operator==(const RootSystemType&, const RootSystemType&) = default;
};

// Rank bounds: A >= 1, B >= 2, C >= 2, D >= 4, BC >= 1, exceptionals fixed.
// The upper bound of 31 comes from the IndexSet representation; every
// advertised computation stays at rank <= 12.
inline void validate(const RootSystemType& t) {
  if (auto fixed = fixed_rank(t.family)) {
    if (t.rank != *fixed)
      throw InvalidRankError("invalid rank " + std::to_string(t.rank) + " for family " +
                             family_name(t.family) + " (must be " + std::to_string(*fixed) + ")");
    return;
  }
  if (t.rank < min_rank(t.family))
    throw InvalidRankError("invalid rank " + std::to_string(t.rank) + " for family " +
                           family_name(t.family) + " (minimum is " +
                           std::to_string(min_rank(t.family)) + ")");
  if (t.rank > 31) throw InvalidRankError("rank " + std::to_string(t.rank) + " too large");
}

inline RootSystemType make_type(Family f, int rank) {
  RootSystemType t{f, rank};
  validate(t);
  return t;
}

// "A3", "BC2", "E6", ... (exceptional labels already carry their rank).
inline std::string type_label(const RootSystemType& t) {
  if (fixed_rank(t.family)) return family_name(t.family);
  return family_name(t.family) + std::to_string(t.rank);
}

// Dimension of the ambient presentation space.
inline int ambient_dim(const RootSystemType& t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::BC: return t.rank;
    case Family::G2: return 3;
    case Family::F4: return 4;
    case Family::E6:
    case Family::E7:
    case Family::E8: return 8;
  }
  throw Error("ambient_dim: bad family");
}

// Parses a bare type label ("A3", "BC2", "G2").  Returns nullopt when the
// string is not shaped like a type label at all; throws InvalidRankError when
// the shape is right but the rank is out of range (e.g. "D3").
inline std::optional<RootSystemType> parse_type_label(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size() && s[i] >= 'A' && s[i] <= 'Z') ++i;
  std::string_view letters = s.substr(0, i);
  std::string_view digits = s.substr(i);
  if (letters.empty() || digits.empty()) return std::nullopt;
  if (digits.size() > 1 && digits[0] == '0') return std::nullopt;  // no leading zeros
  for (char c : digits)
    if (c < '0' || c > '9') return std::nullopt;
  int rank = 0;
  if (digits.size() > 3) return std::nullopt;
  for (char c : digits) rank = rank * 10 + (c - '0');

  Family f;
  if (letters == "A") f = Family::A;
  else if (letters == "B") f = Family::B;
  else if (letters == "C") f = Family::C;
  else if (letters == "D") f = Family::D;
  else if (letters == "BC") f = Family::BC;
  else if (letters == "E" && rank == 6) f = Family::E6;
  else if (letters == "E" && rank == 7) f = Family::E7;
  else if (letters == "E" && rank == 8) f = Family::E8;
  else if (letters == "F" && rank == 4) f = Family::F4;
  else if (letters == "G" && rank == 2) f = Family::G2;
  else if (letters == "E" || letters == "F" || letters == "G")
    throw InvalidRankError("no type " + std::string(s) + " exists");
  else return std::nullopt;

  return make_type(f, rank);  // may throw InvalidRankError (D3, B1, ...)
}

}  // namespace rootgate
