#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rootgate/root_system.hpp"
#include "rootgate/types.hpp"

namespace rootgate {

// One simple (or compact semisimple) factor of a real Lie algebra.
struct SimpleFactor {
  std::string name;  // canonical form, e.g. "sl(4,R)", "so(4,5)", "su(3)", "BC2"
  bool compact = false;
  RootSystemType restricted{Family::A, 1};  // meaningful only when !compact
  int real_rank = 0;                        // 0 for compact factors

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct AlgebraDescriptor {
  std::vector<SimpleFactor> factors;

  std::string name() const {
    std::string out;
    for (const SimpleFactor& f : factors) {
      if (!out.empty()) out += " x ";
      out += f.name;
    }
    return out;
  }

  bool has_noncompact() const {
    for (const SimpleFactor& f : factors)
      if (!f.compact) return true;
    return false;
  }

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

// Restricted root system of one factor. Compact factors have none.
inline std::shared_ptr<const RootSystem> restricted_root_system(const SimpleFactor& f) {
  if (f.compact)
    throw CompactFactorError("factor " + f.name + " is compact (real rank 0), no root system");
  return build(f.restricted);
}

namespace detail {

// Catalog of supported named real forms -> restricted type.
//   sl(n,R) / sl(n,C) / sl(n,H)  -> A_{n-1}           (n >= 2)
//   sp(n,R)                      -> C_n               (n >= 2)
//   so(p,q), p < q               -> B_p               (p >= 2)
//   so(n,n)                      -> D_n               (n >= 4)
//   su(p,q) / sp(p,q), p < q     -> BC_p              (p >= 1)
//   su(n,n) / sp(n,n)            -> C_n               (n >= 2)
//   so(n), su(n), sp(n)          -> compact, no restricted system
// Anything landing outside a valid (family, rank) pair is rejected: low-rank
// coincidences are not silently resolved to their isomorphic images.
inline SimpleFactor catalog_factor(const std::string& base, std::vector<long long> args,
                                   char field, std::size_t at) {
  auto unsupported = [&](const std::string& why) {
    return UnsupportedAlgebraError("unsupported algebra " + base + ": " + why);
  };
  if (base != "sl" && base != "so" && base != "su" && base != "sp")
    throw unsupported("unknown algebra family");
  SimpleFactor f;

  if (base == "sl") {
    if (args.size() != 1 || field == 0)
      throw ParseError("sl expects (n,R), (n,C) or (n,H)", at);
    long long n = args[0];
    if (n < 2) throw unsupported("sl(" + std::to_string(n) + ",...) is not semisimple");
    f.name = "sl(" + std::to_string(n) + "," + field + ")";
    f.restricted = make_type(Family::A, static_cast<int>(n - 1));
    f.real_rank = f.restricted.rank;
    return f;
  }

  if (field != 0 && base != "sp") throw ParseError("only sl and sp take a field argument", at);

  if (base == "sp" && field != 0) {
    if (field != 'R') throw unsupported("sp over " + std::string(1, field) + " is not in the catalog");
    if (args.size() != 1) throw ParseError("sp expects (n,R), (p,q) or (n)", at);
    long long n = args[0];
    if (n < 1) throw unsupported("non-positive rank");
    if (n == 1) throw unsupported("sp(1,R) is isomorphic to sl(2,R); write sl(2,R)");
    f.name = "sp(" + std::to_string(n) + ",R)";
    f.restricted = make_type(Family::C, static_cast<int>(n));
    f.real_rank = f.restricted.rank;
    return f;
  }

  const bool compact_shape = args.size() == 1;
  if (!compact_shape && args.size() != 2)
    throw ParseError(base + " expects one or two integer arguments", at);

  if (compact_shape) {
    long long n = args[0];
    if (base == "so") {
      if (n < 3)
        throw unsupported("so(" + std::to_string(n) + ") is not semisimple");
    } else if (base == "su") {
      if (n < 2) throw unsupported("su(" + std::to_string(n) + ") is trivial");
    } else if (base == "sp") {
      if (n < 1) throw unsupported("sp(" + std::to_string(n) + ") is trivial");
    } else {
      throw unsupported("unknown algebra family");
    }
    f.name = base + "(" + std::to_string(n) + ")";
    f.compact = true;
    return f;
  }

  long long p = args[0], q = args[1];
  if (p > q) std::swap(p, q);  // canonical signature order
  if (p < 1) throw unsupported("signature must have two positive parts");
  f.name = base + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  f.real_rank = static_cast<int>(p);

  auto reject_rank = [&](Family fam, const std::string& hint) -> RootSystemType {
    try {
      return make_type(fam, static_cast<int>(p));
    } catch (const InvalidRankError&) {
      throw unsupported(hint);
    }
  };

  if (base == "so") {
    if (p == q)
      f.restricted = reject_rank(
          Family::D, "so(n,n) needs n >= 4 (so(3,3) ~ sl(4,R), so(2,2) is not simple)");
    else
      f.restricted = reject_rank(Family::B, "so(1,q) has rank one; write sl(2,R) for so(1,2)");
    return f;
  }
  if (base == "su") {
    if (p == q)
      f.restricted = reject_rank(Family::C, "su(1,1) is isomorphic to sl(2,R); write sl(2,R)");
    else
      f.restricted = make_type(Family::BC, static_cast<int>(p));
    return f;
  }
  if (base == "sp") {
    if (p == q)
      f.restricted = reject_rank(Family::C, "sp(1,1) has rank one; no split-rank-2 form");
    else
      f.restricted = make_type(Family::BC, static_cast<int>(p));
    return f;
  }
  throw unsupported("unknown algebra family");
}

class AlgebraParser {
 public:
  explicit AlgebraParser(std::string_view text) : text_(text) {}

  AlgebraDescriptor parse() {
    AlgebraDescriptor alg;
    alg.factors.push_back(factor());
    skip_ws();
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x') throw ParseError("expected 'x' between factors", pos_);
      ++pos_;
      alg.factors.push_back(factor());
      skip_ws();
    }
    return alg;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  SimpleFactor factor() {
    skip_ws();
    const std::size_t start = pos_;
    std::string letters;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      // a lowercase 'x' ends the factor name only if a name has already begun
      if (text_[pos_] == 'x' && !letters.empty()) break;
      letters += text_[pos_++];
    }
    if (letters.empty()) throw ParseError("expected an algebra or type name", pos_);

    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];

    if (pos_ < text_.size() && text_[pos_] == '(') {
      if (!digits.empty()) throw ParseError("unexpected digits before '('", start + letters.size());
      ++pos_;
      std::vector<long long> args;
      char field = 0;
      while (true) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unterminated '('", pos_);
        if (std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          long long v = 0;
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            v = v * 10 + (text_[pos_++] - '0');
          if (v > 1000) throw ParseError("argument out of range", pos_);
          args.push_back(v);
        } else if (text_[pos_] == 'R' || text_[pos_] == 'C' || text_[pos_] == 'H') {
          if (field != 0) throw ParseError("repeated field letter", pos_);
          field = text_[pos_++];
        } else {
          throw ParseError("expected an integer or R/C/H", pos_);
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError("expected ',' or ')'", pos_);
      }
      if (args.empty()) throw ParseError("expected at least one integer argument", start);
      return detail::catalog_factor(letters, std::move(args), field, start);
    }

    // bare restricted type label, e.g. "A3", "BC2", "G2"
    const std::string label = letters + digits;
    auto t = parse_type_label(label);  // may throw InvalidRankError
    if (!t) {
      if (digits.empty())
        throw ParseError("expected rank digits or '(' after name '" + letters + "'", pos_);
      throw UnsupportedAlgebraError("unknown type label " + label);
    }
    SimpleFactor f;
    f.name = type_label(*t);
    f.restricted = *t;
    f.real_rank = t->rank;
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Grammar: factor ("x" factor)*, where a factor is a named real form
// sl(n,R|C|H) / so(p,q) / su(p,q) / sp(p,q) / sp(n,R) / so(n) / su(n) / sp(n)
// or a bare restricted type label such as A3, BC2, E7.  Signatures are
// normalized to p <= q; the canonical rendering round-trips through parse.
inline AlgebraDescriptor parse_algebra(std::string_view text) {
  detail::AlgebraParser parser(text);
  return parser.parse();
}

}  // namespace rootgate
