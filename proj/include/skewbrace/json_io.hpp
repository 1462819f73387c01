// JSON serialisation: groups, finite braces, matrices, holomorph subgroups,
// and machine-readable check reports.
#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "skewbrace/brace.hpp"
#include "skewbrace/finite_group.hpp"
#include "skewbrace/holomorph.hpp"
#include "skewbrace/zn.hpp"

namespace skewbrace {

using Json = nlohmann::json;

// {"order": n, "table": [[...]], "generators": [...]}
inline Json group_to_json(const FiniteGroup& g) {
  return Json{{"order", g.order}, {"table", g.table}, {"generators", g.generators}};
}

inline FiniteGroup group_from_json(const Json& j) {
  std::vector<std::vector<int>> table = j.at("table");
  std::vector<int> gens;
  if (j.contains("generators")) gens = j.at("generators").get<std::vector<int>>();
  auto g = validate_group(std::move(table), std::move(gens));
  if (j.contains("order") && j.at("order").get<int>() != g.order)
    raise("NotLatinSquare", "declared order disagrees with the table");
  return g;
}

// {"carrier": {"kind": "finite", "order": n}, "dot": ..., "circ": ..., "lambda_kind": "table"}
inline Json brace_to_json(const FiniteBrace& b) {
  return Json{{"carrier", Json{{"kind", "finite"}, {"order", b.order()}}},
              {"dot", b.add.table},
              {"circ", b.mult.table},
              {"lambda_kind", "table"}};
}

inline FiniteBrace brace_from_json(const Json& j) {
  if (j.at("carrier").at("kind") != "finite")
    raise("UnsupportedFamily", "only finite carriers are serialisable");
  auto add = validate_group(j.at("dot").get<std::vector<std::vector<int>>>(), {},
                            /*allow_relabel=*/false);
  return FiniteBrace::create(std::move(add), j.at("circ").get<std::vector<std::vector<int>>>());
}

inline Json matrix_to_json(const IntMatrix& m) {
  std::vector<std::vector<std::string>> rows(m.n, std::vector<std::string>(m.n));
  for (int r = 0; r < m.n; ++r)
    for (int c = 0; c < m.n; ++c) rows[r][c] = m.at(r, c).str();
  return Json(rows);
}

inline IntMatrix matrix_from_json(const Json& j) {
  IntMatrix m = IntMatrix::zero(static_cast<int>(j.size()));
  for (int r = 0; r < m.n; ++r) {
    if (static_cast<int>(j.at(r).size()) != m.n) raise("NotUnimodular", "matrix is not square");
    for (int c = 0; c < m.n; ++c) {
      const auto& cell = j.at(r).at(c);
      m.at(r, c) = cell.is_string() ? Int(cell.get<std::string>()) : Int(cell.get<long long>());
    }
  }
  return m;
}

inline Json hol_subgroups_to_json(const Holomorph& h, const std::vector<HolSubgroup>& subs) {
  Json aut = Json::array();
  for (const auto& f : h.aut.auts) aut.push_back(f.img);
  Json list = Json::array();
  for (const auto& s : subs) {
    Json members = Json::array();
    for (const auto& m : s.members) members.push_back(Json::array({m.aut, m.elem}));
    list.push_back(std::move(members));
  }
  return Json{{"group", group_to_json(h.group)},
              {"automorphisms", std::move(aut)},
              {"regular_subgroups", std::move(list)}};
}

inline Json verdict_to_json(const Verdict& v) {
  Json j{{"check", v.check}, {"pass", v.pass}};
  j["witness"] = v.pass ? Json(nullptr) : Json(v.witness);
  j["samples"] = v.samples;
  j["seed"] = v.seed;
  return j;
}

/// One CLI invocation's outcome; stable under fixed seed and inputs except
/// for the timing fields.
struct Report {
  std::string command;
  std::uint64_t seed = kDefaultSeed;
  std::vector<Verdict> verdicts;
  std::vector<double> check_ms;
  double total_ms = 0;

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }
};

inline Json report_to_json(const Report& r) {
  Json checks = Json::array();
  for (std::size_t i = 0; i < r.verdicts.size(); ++i) {
    auto j = verdict_to_json(r.verdicts[i]);
    j["ms"] = i < r.check_ms.size() ? r.check_ms[i] : 0.0;
    checks.push_back(std::move(j));
  }
  return Json{{"report_version", 1},
              {"command", r.command},
              {"seed", r.seed},
              {"verdicts", std::move(checks)},
              {"total_ms", r.total_ms},
              {"all_pass", r.all_pass()}};
}

/// Report JSON with the timing fields removed, for byte-stability comparisons.
inline Json report_to_json_stable(const Report& r) {
  Json j = report_to_json(r);
  j.erase("total_ms");
  for (auto& v : j.at("verdicts")) v.erase("ms");
  return j;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise("IoError", "cannot open " + path);
  Json j;
  in >> j;
  return j;
}

}  // namespace skewbrace
