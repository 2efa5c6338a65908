#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rootgate/coarse.hpp"
#include "rootgate/dynkin.hpp"
#include "rootgate/errors.hpp"
#include "rootgate/invariants.hpp"
#include "rootgate/oracle.hpp"
#include "rootgate/parabolic.hpp"
#include "rootgate/realforms.hpp"
#include "rootgate/render.hpp"
#include "rootgate/root_system.hpp"
#include "rootgate/types.hpp"

namespace rootgate::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json, markdown };

inline constexpr int kTableMaxRankDefault = 8;
inline constexpr int kTableMaxRankCap = 12;
inline constexpr int kVerifyMaxRankDefault = 6;
inline constexpr int kVerifyMaxRankCap = 12;

// --format flag wins, then the ROOTGATE_FORMAT environment variable, then text.
inline Format resolve_format(const std::string& flag) {
  std::string v = flag;
  if (v.empty())
    if (const char* env = std::getenv("ROOTGATE_FORMAT")) v = env;
  if (v.empty() || v == "text") return Format::text;
  if (v == "json") return Format::json;
  if (v == "markdown") return Format::markdown;
  throw Error("unknown output format '" + v + "' (expected text, json or markdown)");
}

namespace detail {

using rootgate::detail::pad_to;
using rootgate::detail::visible_width;

struct FactorView {
  const SimpleFactor* factor;
  std::shared_ptr<const RootSystem> rs;  // null for compact factors
  std::size_t classes_total = 0;
  std::size_t classes_positive = 0;
};

inline std::vector<FactorView> factor_views(const AlgebraDescriptor& alg) {
  std::vector<FactorView> out;
  for (const SimpleFactor& f : alg.factors) {
    FactorView v{&f, nullptr, 0, 0};
    if (!f.compact) {
      v.rs = restricted_root_system(f);
      for (const CoarseClass& c : coarse_classes(*v.rs)) {
        ++v.classes_total;
        if (c.sign == Sign::positive) ++v.classes_positive;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

inline std::string slice_attainment(const InvariantSlice& s) {
  if (s.witnesses.empty()) return "set by the rank-1 rule (no corank-2 parabolic exists)";
  const Parabolic& q = s.witnesses.front();
  std::string out =
      "attained omitting " + index_set_string(q.omitted()) + " of " + q.system->label();
  if (s.witnesses.size() > 1) out += " (+" + std::to_string(s.witnesses.size() - 1) + " more)";
  return out;
}

inline Json witnesses_json(const InvariantSlice& s) {
  Json arr = Json::array();
  for (const Parabolic& q : s.witnesses) {
    Json w;
    w["system"] = q.system->label();
    w["omitted"] = Json::array();
    for (int i : q.omitted().indices()) w["omitted"].push_back(i);
    arr.push_back(std::move(w));
  }
  return arr;
}

inline Json index_set_json(IndexSet s) {
  Json arr = Json::array();
  for (int i : s.indices()) arr.push_back(i);
  return arr;
}

inline std::string simple_roots_line(const RootSystem& rs) {
  std::string out;
  for (const Root& r : rs.simple_roots()) {
    if (!out.empty()) out += ", ";
    out += ambient_string(r);
  }
  return out;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

// Excluded coarse classes, shortest representative first (reading order).
inline std::vector<std::string> excluded_reps(const Parabolic& q) {
  std::vector<CoarseClass> classes = excluded_classes(q);
  std::vector<std::string> reps;
  reps.reserve(classes.size());
  for (auto it = classes.rbegin(); it != classes.rend(); ++it)
    reps.push_back(coeff_string(it->representative()));
  return reps;
}

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

// The root system a parabolic command operates on: the unique non-compact factor.
inline std::shared_ptr<const RootSystem> single_system(const AlgebraDescriptor& alg) {
  const SimpleFactor* found = nullptr;
  for (const SimpleFactor& f : alg.factors) {
    if (f.compact) continue;
    if (found) throw Error("need exactly one non-compact factor, got several in " + alg.name());
    found = &f;
  }
  if (!found) throw NoNoncompactFactorError("no non-compact factor in " + alg.name());
  return restricted_root_system(*found);
}

inline std::vector<Parabolic> all_proper_parabolics(std::shared_ptr<const RootSystem> rs) {
  const std::uint32_t full = IndexSet::full(rs->rank()).mask();
  std::vector<Parabolic> out;
  out.reserve(full);
  for (std::uint32_t mask = 0; mask < full; ++mask)
    out.push_back(make_parabolic(rs, IndexSet::from_mask(mask)));
  std::sort(out.begin(), out.end(), [](const Parabolic& a, const Parabolic& b) {
    const auto ka = a.omitted().indices();
    const auto kb = b.omitted().indices();
    if (ka.size() != kb.size()) return ka.size() < kb.size();
    return ka < kb;
  });
  return out;
}

inline Family parse_family_flag(const std::string& name) {
  for (Family f : kAllFamilies)
    if (family_name(f) == name) return f;
  throw Error("unknown family '" + name + "' (expected A, B, C, D, BC, E6, E7, E8, F4 or G2)");
}

inline std::vector<RootSystemType> table_types(const std::optional<Family>& only, int max_rank) {
  std::vector<RootSystemType> out;
  for (Family f : kAllFamilies) {
    if (only && *only != f) continue;
    if (auto fixed = fixed_rank(f)) {
      if (*fixed <= max_rank) out.push_back(make_type(f, *fixed));
    } else {
      for (int n = min_rank(f); n <= max_rank; ++n) out.push_back(make_type(f, n));
    }
  }
  return out;
}

inline AlgebraDescriptor type_descriptor(RootSystemType t) {
  SimpleFactor f;
  f.name = type_label(t);
  f.compact = false;
  f.restricted = t;
  f.real_rank = t.rank;
  return AlgebraDescriptor{{f}};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// info
// ---------------------------------------------------------------------------

inline void cmd_info(const std::string& input, Format fmt, std::ostream& out) {
  const AlgebraDescriptor alg = parse_algebra(input);
  const std::vector<detail::FactorView> views = detail::factor_views(alg);
  std::optional<InvariantReport> rep;
  if (alg.has_noncompact()) rep = invariant_report(alg);

  if (fmt == Format::text) {
    out << "algebra: " << alg.name() << "\n";
    for (std::size_t i = 0; i < views.size(); ++i) {
      const detail::FactorView& v = views[i];
      out << "factor " << (i + 1) << ": " << v.factor->name;
      if (v.factor->compact) {
        out << "  [compact, real rank 0]\n";
        continue;
      }
      out << "  [type " << v.rs->label() << ", real rank " << v.rs->rank() << "]\n";
      out << "  positive roots: " << v.rs->positive_count() << " (of "
          << v.rs->all_roots().size() << " total)\n";
      out << "  coarse classes: " << v.classes_total << " (" << v.classes_positive
          << " positive)\n";
      out << "  simple roots: " << detail::simple_roots_line(*v.rs) << "\n";
      out << "  cartan matrix:\n";
      for (const std::string& row : cartan_rows(v.rs->cartan_matrix())) out << "    " << row << "\n";
      out << "  dynkin diagram:\n";
      for (const std::string& line : detail::split_lines(ascii_dynkin(*v.rs)))
        out << "    " << line << "\n";
    }
    if (rep) {
      out << "r = " << rep->r.value << "  " << detail::slice_attainment(rep->r) << "\n";
      out << "m = " << rep->m.value << "  " << detail::slice_attainment(rep->m) << "\n";
    } else {
      out << "r = undefined (no non-compact factor)\n";
      out << "m = undefined (no non-compact factor)\n";
    }
    return;
  }

  if (fmt == Format::json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = "info";
    doc["input"] = input;
    doc["name"] = alg.name();
    const bool single = views.size() == 1 && !views.front().factor->compact;
    if (single) {
      const detail::FactorView& v = views.front();
      doc["type"] = family_name(v.rs->type().family);
      doc["rank"] = v.rs->rank();
      doc["positive_roots"] = v.rs->positive_count();
      doc["coarse_classes"] = v.classes_total;
    }
    Json factors = Json::array();
    for (const detail::FactorView& v : views) {
      Json f;
      f["name"] = v.factor->name;
      f["compact"] = v.factor->compact;
      if (!v.factor->compact) {
        f["label"] = v.rs->label();
        f["type"] = family_name(v.rs->type().family);
        f["rank"] = v.rs->rank();
        f["positive_roots"] = v.rs->positive_count();
        f["coarse_classes"] = v.classes_total;
        f["positive_classes"] = v.classes_positive;
        Json simple = Json::array();
        for (const Root& r : v.rs->simple_roots()) simple.push_back(ambient_string(r));
        f["simple_roots"] = std::move(simple);
        f["cartan"] = v.rs->cartan_matrix();
        f["dynkin"] = ascii_dynkin(*v.rs);
      }
      factors.push_back(std::move(f));
    }
    doc["factors"] = std::move(factors);
    if (rep) {
      doc["r"] = rep->r.value;
      doc["m"] = rep->m.value;
      doc["r_witnesses"] = detail::witnesses_json(rep->r);
      doc["m_witnesses"] = detail::witnesses_json(rep->m);
    } else {
      doc["r"] = nullptr;
      doc["m"] = nullptr;
      doc["r_witnesses"] = Json::array();
      doc["m_witnesses"] = Json::array();
    }
    out << doc.dump(2) << "\n";
    return;
  }

  // markdown
  out << "# " << alg.name() << "\n\n";
  out << "| factor | type | real rank | positive roots | coarse classes |\n";
  out << "| --- | --- | --- | --- | --- |\n";
  for (const detail::FactorView& v : views) {
    if (v.factor->compact) {
      out << "| " << v.factor->name << " | compact | 0 | - | - |\n";
    } else {
      out << "| " << v.factor->name << " | " << v.rs->label() << " | " << v.rs->rank() << " | "
          << v.rs->positive_count() << " | " << v.classes_total << " |\n";
    }
  }
  out << "\n";
  if (rep) {
    out << "**r = " << rep->r.value << "** — " << detail::slice_attainment(rep->r) << "\n\n";
    out << "**m = " << rep->m.value << "** — " << detail::slice_attainment(rep->m) << "\n";
  } else {
    out << "**r**, **m**: undefined (no non-compact factor)\n";
  }
  for (const detail::FactorView& v : views) {
    if (v.factor->compact) continue;
    out << "\n## " << v.factor->name << " (" << v.rs->label() << ")\n\n";
    out << "```\n";
    for (const std::string& row : cartan_rows(v.rs->cartan_matrix())) out << row << "\n";
    out << "\n" << ascii_dynkin(*v.rs) << "\n";
    out << "```\n";
  }
}

// ---------------------------------------------------------------------------
// parabolics
// ---------------------------------------------------------------------------

inline void cmd_parabolics(const std::string& input, const std::string& corank, bool force,
                           Format fmt, std::ostream& out) {
  const AlgebraDescriptor alg = parse_algebra(input);
  std::shared_ptr<const RootSystem> rs = detail::single_system(alg);

  std::vector<Parabolic> rows;
  if (corank == "1") {
    rows = maximal_parabolics(rs);
  } else if (corank == "2") {
    rows = corank2_parabolics(rs);
  } else {  // all proper subsets
    if (rs->rank() > 12 && !force)
      throw RankTooLargeError("rank " + std::to_string(rs->rank()) +
                              " has over 2^12 proper parabolics; pass --force to list them");
    rows = detail::all_proper_parabolics(rs);
  }

  struct Rendered {
    std::string omitted;
    int codim;
    std::vector<std::string> excluded;
  };
  std::vector<Rendered> rendered;
  rendered.reserve(rows.size());
  for (const Parabolic& q : rows)
    rendered.push_back(
        Rendered{index_set_string(q.omitted()), resonant_codimension(q), detail::excluded_reps(q)});

  if (fmt == Format::text) {
    out << "parabolics of " << rs->label() << " (corank " << corank << "): " << rows.size()
        << "\n";
    std::size_t w_omit = detail::visible_width("omitted");
    for (const Rendered& r : rendered) w_omit = std::max(w_omit, detail::visible_width(r.omitted));
    std::size_t w_codim = std::string("codim").size();
    for (const Rendered& r : rendered)
      w_codim = std::max(w_codim, std::to_string(r.codim).size());
    std::string header = "omitted";
    detail::pad_to(header, w_omit + 2);
    header += "codim";
    detail::pad_to(header, w_omit + 2 + w_codim + 2);
    header += "excluded classes";
    out << header << "\n";
    for (const Rendered& r : rendered) {
      std::string line = r.omitted;
      detail::pad_to(line, w_omit + 2);
      line += std::to_string(r.codim);
      detail::pad_to(line, w_omit + 2 + w_codim + 2);
      line += detail::join(r.excluded, ", ");
      out << line << "\n";
    }
    return;
  }

  if (fmt == Format::json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = "parabolics";
    doc["input"] = input;
    doc["system"] = rs->label();
    doc["corank"] = corank;
    doc["count"] = rows.size();
    Json arr = Json::array();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      Json row;
      row["omitted"] = detail::index_set_json(rows[i].omitted());
      row["kept"] = detail::index_set_json(rows[i].kept);
      row["codimension"] = rendered[i].codim;
      row["excluded_classes"] = rendered[i].excluded;
      arr.push_back(std::move(row));
    }
    doc["parabolics"] = std::move(arr);
    out << doc.dump(2) << "\n";
    return;
  }

  out << "# parabolics of " << rs->label() << " (corank " << corank << ")\n\n";
  out << "| omitted | codimension | excluded classes |\n";
  out << "| --- | --- | --- |\n";
  for (const Rendered& r : rendered)
    out << "| " << r.omitted << " | " << r.codim << " | " << detail::join(r.excluded, ", ")
        << " |\n";
}

// ---------------------------------------------------------------------------
// zimmer
// ---------------------------------------------------------------------------

inline std::string regime_headline(const RegimeVerdict& v) {
  const std::string name = regime_name(v.regime);
  switch (v.regime) {
    case Regime::invariant_measure:
      return name + " (dim " + std::to_string(v.dim) + " < r = " + std::to_string(v.r_value) +
             ")";
    case Regime::critical_dimension:
      return name + " (dim = r = " + std::to_string(v.r_value) + ")";
    case Regime::projective_factor:
      return name + " (r = " + std::to_string(v.r_value) + " < dim " + std::to_string(v.dim) +
             " <= m = " + std::to_string(v.m_value) + ")";
    case Regime::above_thresholds:
      return name + " (dim " + std::to_string(v.dim) + " > m = " + std::to_string(v.m_value) +
             ")";
  }
  throw Error("regime_headline: bad regime");
}

inline void cmd_zimmer(const std::string& input, int dim, Format fmt, std::ostream& out) {
  const AlgebraDescriptor alg = parse_algebra(input);
  const RegimeVerdict v = classify_regime(alg, dim);
  const std::string headline = regime_headline(v);

  if (fmt == Format::text) {
    out << headline << "\n";
    out << "algebra: " << alg.name() << "\n";
    out << "r = " << v.r_value << ", m = " << v.m_value << "\n";
    out << "notes:\n";
    for (const std::string& n : v.notes) out << "- " << n << "\n";
    return;
  }

  if (fmt == Format::json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = "zimmer";
    doc["input"] = input;
    doc["algebra"] = alg.name();
    doc["dim"] = v.dim;
    doc["regime"] = regime_name(v.regime);
    doc["headline"] = headline;
    doc["r"] = v.r_value;
    doc["m"] = v.m_value;
    doc["notes"] = v.notes;
    out << doc.dump(2) << "\n";
    return;
  }

  out << "# " << alg.name() << " acting in dimension " << v.dim << "\n\n";
  out << "**" << headline << "**\n\n";
  out << "| r | m | dim |\n| --- | --- | --- |\n";
  out << "| " << v.r_value << " | " << v.m_value << " | " << v.dim << " |\n\n";
  for (const std::string& n : v.notes) out << "- " << n << "\n";
}

// ---------------------------------------------------------------------------
// table
// ---------------------------------------------------------------------------

inline void cmd_table(const std::string& which, const std::string& family_flag, int max_rank,
                      bool force, Format fmt, std::ostream& out) {
  if (max_rank < 1) throw Error("--max-rank must be at least 1");
  if (max_rank > kTableMaxRankCap && !force)
    throw RankTooLargeError("--max-rank above " + std::to_string(kTableMaxRankCap) +
                            " requires --force");
  std::optional<Family> only;
  if (!family_flag.empty()) only = detail::parse_family_flag(family_flag);
  const std::vector<RootSystemType> types = detail::table_types(only, max_rank);

  const std::string scope =
      (only ? "family " + family_name(*only) + ", " : std::string()) + "max rank " +
      std::to_string(max_rank);

  if (which == "r" || which == "m") {
    struct Row {
      RootSystemType t;
      int value;
    };
    std::vector<Row> rows;
    rows.reserve(types.size());
    for (RootSystemType t : types) {
      const AlgebraDescriptor alg = detail::type_descriptor(t);
      const InvariantSlice s = which == "r" ? r_invariant(alg) : m_invariant(alg);
      rows.push_back(Row{t, s.value});
    }

    if (fmt == Format::text) {
      out << which << " by type (" << scope << ")\n\n";
      std::size_t w_type = std::string("type").size();
      for (const Row& r : rows) w_type = std::max(w_type, type_label(r.t).size());
      std::string header = "type";
      detail::pad_to(header, w_type + 2);
      header += "rank";
      detail::pad_to(header, w_type + 2 + 6);
      header += which;
      out << header << "\n";
      for (const Row& r : rows) {
        std::string line = type_label(r.t);
        detail::pad_to(line, w_type + 2);
        line += std::to_string(r.t.rank);
        detail::pad_to(line, w_type + 2 + 6);
        line += std::to_string(r.value);
        out << line << "\n";
      }
      return;
    }

    if (fmt == Format::json) {
      Json doc;
      doc["schema"] = 1;
      doc["command"] = "table";
      doc["table"] = which;
      doc["family"] = only ? Json(family_name(*only)) : Json(nullptr);
      doc["max_rank"] = max_rank;
      Json arr = Json::array();
      for (const Row& r : rows) {
        Json row;
        row["type"] = family_name(r.t.family);
        row["rank"] = r.t.rank;
        row["label"] = type_label(r.t);
        row["value"] = r.value;
        arr.push_back(std::move(row));
      }
      doc["rows"] = std::move(arr);
      out << doc.dump(2) << "\n";
      return;
    }

    out << "# " << which << " by type (" << scope << ")\n\n";
    out << "| type | rank | " << which << " |\n| --- | --- | --- |\n";
    for (const Row& r : rows)
      out << "| " << type_label(r.t) << " | " << r.t.rank << " | " << r.value << " |\n";
    return;
  }

  if (which != "roots") throw Error("unknown table '" + which + "' (expected r, m or roots)");

  struct RootsRow {
    RootSystemType t;
    std::vector<std::string> simple;
    std::vector<std::string> positive;
  };
  std::vector<RootsRow> rows;
  rows.reserve(types.size());
  for (RootSystemType t : types) {
    auto rs = build(t);
    RootsRow row{t, {}, {}};
    for (const Root& r : rs->simple_roots()) row.simple.push_back(ambient_string(r));
    for (const Root& r : enumerate_positive_roots(*rs)) row.positive.push_back(ambient_string(r));
    rows.push_back(std::move(row));
  }

  if (fmt == Format::text) {
    out << "root data (" << scope << ")\n\n";
    for (const RootsRow& r : rows) {
      out << type_label(r.t) << "\n";
      out << "  simple roots: " << detail::join(r.simple, ", ") << "\n";
      out << "  positive roots: " << detail::join(r.positive, ", ") << "\n";
    }
    return;
  }

  if (fmt == Format::json) {
    Json doc;
    doc["schema"] = 1;
    doc["command"] = "table";
    doc["table"] = "roots";
    doc["family"] = only ? Json(family_name(*only)) : Json(nullptr);
    doc["max_rank"] = max_rank;
    Json arr = Json::array();
    for (const RootsRow& r : rows) {
      Json row;
      row["type"] = family_name(r.t.family);
      row["rank"] = r.t.rank;
      row["label"] = type_label(r.t);
      row["simple_roots"] = r.simple;
      row["positive_roots"] = r.positive;
      arr.push_back(std::move(row));
    }
    doc["rows"] = std::move(arr);
    out << doc.dump(2) << "\n";
    return;
  }

  out << "# root data (" << scope << ")\n\n";
  out << "| type | simple roots | positive roots |\n| --- | --- | --- |\n";
  for (const RootsRow& r : rows)
    out << "| " << type_label(r.t) << " | " << detail::join(r.simple, ", ") << " | "
        << detail::join(r.positive, ", ") << " |\n";
}

// ---------------------------------------------------------------------------
// verify (hidden): exhaustive cross-checks of the fast paths
// ---------------------------------------------------------------------------

inline bool cmd_verify(int max_rank, bool force, std::ostream& out) {
  if (max_rank < 1) throw Error("--max-rank must be at least 1");
  if (max_rank > 8 && !force)
    throw RankTooLargeError("verify above rank 8 scans 2^rank subsets per system; pass --force");
  if (max_rank > kVerifyMaxRankCap)
    throw RankTooLargeError("verify caps at rank " + std::to_string(kVerifyMaxRankCap));

  out << "verify: exhaustive cross-checks up to rank " << max_rank << "\n";
  int systems = 0;
  long long comparisons = 0;
  int failures = 0;

  for (RootSystemType t : detail::table_types(std::nullopt, max_rank)) {
    auto rs = build(t);
    ++systems;
    std::vector<std::string> bad;

    // 1. The enumerated roots against an independent generator.  Reduced systems
    //    must equal the reflection closure of their Cartan matrix.  A non-reduced
    //    BC system cannot arise that way (2en is invisible to the simple
    //    reflections), so it is checked as the union of the B and C presentations
    //    sharing its ambient space; BC1 = {±e1, ±2e1} is pinned literally.
    if (t.family != Family::BC) {
      std::set<std::vector<int>> enumerated;
      for (const Root& r : rs->all_roots()) enumerated.insert(r.coords);
      if (closure_oracle(rs->cartan_matrix()) != enumerated) bad.push_back("closure mismatch");
    } else {
      std::set<std::vector<int>> bc, expected;
      for (const Root& r : rs->all_roots()) bc.insert(r.ambient2);
      if (t.rank == 1) {
        expected = {{2}, {4}, {-2}, {-4}};  // doubled ambient entries
      } else {
        auto b_sys = build(Family::B, t.rank);
        auto c_sys = build(Family::C, t.rank);
        for (const Root& r : b_sys->all_roots()) expected.insert(r.ambient2);
        for (const Root& r : c_sys->all_roots()) expected.insert(r.ambient2);
      }
      if (bc != expected) bad.push_back("B∪C union mismatch");
    }

    // 3. Fast resonant codimension equals the span-solving oracle on every subset.
    const oracle::OracleReport rep = oracle::compare_all_subsets(rs);
    comparisons += rep.checked;
    if (!rep.ok())
      bad.push_back("fast/oracle mismatch on " + std::to_string(rep.mismatches.size()) +
                    " subsets");

    // 4. The corank-1 minimum equals the minimum over all proper subsets.
    const oracle::MinScan scan = oracle::min_over_all_proper(*rs, /*force=*/rs->rank() > 8);
    int corank1_min = INT_MAX;
    if (rs->rank() == 1) {
      corank1_min = resonant_codimension(make_parabolic(rs, IndexSet{}));
    } else {
      for (const Parabolic& q : maximal_parabolics(rs))
        corank1_min = std::min(corank1_min, resonant_codimension(q));
    }
    if (scan.min_value != corank1_min)
      bad.push_back("corank-1 min " + std::to_string(corank1_min) + " != exhaustive min " +
                    std::to_string(scan.min_value));

    if (bad.empty()) {
      out << "  " << rs->label() << ": roots ok; " << rep.checked
          << " subsets agree; min over proper = min over corank-1 = " << scan.min_value << "\n";
    } else {
      ++failures;
      out << "  " << rs->label() << ": FAIL (" << detail::join(bad, "; ") << ")\n";
    }
  }

  out << (failures == 0 ? "PASS" : "FAIL") << ": " << systems << " systems, " << comparisons
      << " subset comparisons, " << failures << " failures\n";
  return failures == 0;
}

// ---------------------------------------------------------------------------
// driver
// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"restricted root systems, parabolic subalgebras and dimension thresholds"};
  app.name("rootgate");
  app.require_subcommand(1);

  std::string info_input, info_fmt;
  CLI::App* info = app.add_subcommand(
      "info", "type, rank, root data, Dynkin diagram and thresholds for an algebra");
  info->add_option("algebra", info_input, "algebra or type, e.g. sl(3,R), su(2,5) x E6, A2")
      ->required();
  info->add_option("--format", info_fmt, "text, json or markdown");

  std::string par_input, par_fmt, par_corank = "1";
  bool par_force = false;
  CLI::App* par = app.add_subcommand(
      "parabolics", "standard parabolics with resonant codimensions and excluded classes");
  par->add_option("algebra", par_input, "algebra or type with one non-compact factor")
      ->required();
  par->add_option("--corank", par_corank, "1 (maximal), 2, or all proper subsets")
      ->check(CLI::IsMember({"1", "2", "all"}));
  par->add_flag("--force", par_force, "allow --corank all above rank 12");
  par->add_option("--format", par_fmt, "text, json or markdown");

  std::string zim_input, zim_fmt;
  int zim_dim = 0;
  CLI::App* zim = app.add_subcommand(
      "zimmer", "classify a manifold dimension against the r and m thresholds");
  zim->add_option("algebra", zim_input, "algebra or type, e.g. sl(4,R)")->required();
  zim->add_option("dim", zim_dim, "manifold dimension (positive integer)")->required();
  zim->add_option("--format", zim_fmt, "text, json or markdown");

  std::string tab_which, tab_family, tab_fmt;
  int tab_max_rank = kTableMaxRankDefault;
  bool tab_force = false;
  CLI::App* tab =
      app.add_subcommand("table", "r, m or root-data tables across families and ranks");
  tab->add_option("which", tab_which, "r, m or roots")
      ->required()
      ->check(CLI::IsMember({"r", "m", "roots"}));
  tab->add_option("--family", tab_family, "restrict to one family (A, B, C, D, BC, E6..G2)");
  tab->add_option("--max-rank", tab_max_rank, "largest rank listed (default 8, cap 12)");
  tab->add_flag("--force", tab_force, "lift the max-rank cap");
  tab->add_option("--format", tab_fmt, "text, json or markdown");

  int ver_max_rank = kVerifyMaxRankDefault;
  bool ver_force = false;
  CLI::App* ver = app.add_subcommand("verify", "cross-check fast paths against oracles");
  ver->group("");  // hidden from help
  ver->add_option("--max-rank", ver_max_rank, "largest rank verified (default 6)");
  ver->add_flag("--force", ver_force, "allow ranks above 8 (up to 12)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (info->parsed()) {
      cmd_info(info_input, resolve_format(info_fmt), out);
    } else if (par->parsed()) {
      cmd_parabolics(par_input, par_corank, par_force, resolve_format(par_fmt), out);
    } else if (zim->parsed()) {
      cmd_zimmer(zim_input, zim_dim, resolve_format(zim_fmt), out);
    } else if (tab->parsed()) {
      cmd_table(tab_which, tab_family, tab_max_rank, tab_force, resolve_format(tab_fmt), out);
    } else if (ver->parsed()) {
      if (!cmd_verify(ver_max_rank, ver_force, out)) return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

inline int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

inline RunResult run_capture(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.exit_code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace rootgate::cli
