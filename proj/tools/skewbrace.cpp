// skewbrace: construct, verify, enumerate, and classify skew braces, with
// machine-readable JSON reports.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "skewbrace/json_io.hpp"
#include "skewbrace/lattice_brace.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/suite.hpp"
#include "skewbrace/word_brace.hpp"
#include "skewbrace/wreath.hpp"
#include "skewbrace/ybe.hpp"

namespace {

using namespace skewbrace;
using Clock = std::chrono::steady_clock;

struct GlobalOpts {
  std::uint64_t seed = kDefaultSeed;
  long samples = 1000;
  int limit = kDefaultOrderBound;
  std::string out;
  bool json = false;
};

int finish(const Report& report, const GlobalOpts& g, const Json& payload = nullptr) {
  Json j = report_to_json(report);
  if (!payload.is_null()) j["result"] = payload;
  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) {
      std::cerr << "cannot write " << g.out << "\n";
      return 2;
    }
    f << j.dump(2) << "\n";
  }
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& v : report.verdicts) {
      std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << v.check;
      if (v.samples > 0) std::cout << "  (samples=" << v.samples << " seed=" << v.seed << ")";
      std::cout << "\n";
      if (!v.pass) std::cout << "       witness: " << v.witness << "\n";
    }
  }
  return report.all_pass() ? 0 : 1;
}

Report new_report(std::string command, std::uint64_t seed) {
  Report r;
  r.command = std::move(command);
  r.seed = seed;
  return r;
}

void push_timed(Report& r, Clock::time_point& t0, Verdict v) {
  auto now = Clock::now();
  r.check_ms.push_back(std::chrono::duration<double, std::milli>(now - t0).count());
  r.total_ms += r.check_ms.back();
  r.verdicts.push_back(std::move(v));
  t0 = now;
}

// Accepts either a JSON file path or a stock-group shorthand such as
// cyclic:6, dihedral:4, elementary:3, quaternion, z2xz4.
FiniteGroup load_group(const std::string& arg) {
  auto colon = arg.find(':');
  std::string head = arg.substr(0, colon);
  if (head == "cyclic" || head == "dihedral" || head == "elementary") {
    int n = std::stoi(arg.substr(colon + 1));
    if (head == "cyclic") return groups::cyclic(n);
    if (head == "dihedral") return groups::dihedral(n);
    return groups::elementary_abelian(n);
  }
  if (arg == "quaternion") return groups::quaternion8();
  if (arg == "z2xz4") return groups::direct_product(groups::cyclic(2), groups::cyclic(4));
  return group_from_json(load_json_file(arg));
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < csv.size()) {
    std::size_t j = csv.find(',', i);
    if (j == std::string::npos) j = csv.size();
    out.push_back(std::stoi(csv.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

int cmd_enum_regular(const std::string& group_path, const GlobalOpts& g) {
  auto grp = load_group(group_path);
  auto hol = Holomorph::of(grp, g.limit);
  auto t0 = Clock::now();
  auto subs = enumerate_regular_subgroups(hol, g.limit);
  auto r = new_report("enum-regular", g.seed);
  push_timed(r, t0,
             Verdict::ok("enumerated " + std::to_string(subs.size()) + " regular subgroups"));
  return finish(r, g, hol_subgroups_to_json(hol, subs));
}

int cmd_construct(const std::string& kind, const std::string& group_path,
                  const std::string& subgroup_csv, const std::string& lambda_path,
                  const GlobalOpts& g) {
  auto grp = load_group(group_path);
  auto r = new_report("construct", g.seed);
  auto t0 = Clock::now();
  FiniteBrace brace;
  if (kind == "trivial") {
    brace = trivial_brace(grp);
  } else if (kind == "opposite") {
    brace = opposite_brace(grp);
  } else if (kind == "index2") {
    brace = index2_brace(grp, parse_int_list(subgroup_csv));
  } else if (kind == "from-lambda") {
    auto maps = load_json_file(lambda_path).get<std::vector<std::vector<int>>>();
    auto res = construct_from_lambda(grp, maps);
    push_timed(r, t0, res.verdict);
    if (!res.brace) return finish(r, g);
    brace = *res.brace;
    t0 = Clock::now();
  } else {
    raise("Usage", "unknown construction kind " + kind);
  }
  push_timed(r, t0, check_brace_axiom(brace, brace.elements()));
  return finish(r, g, brace_to_json(brace));
}

int cmd_verify(const std::string& brace_path, const std::string& mode, const GlobalOpts& g) {
  auto b = brace_from_json(load_json_file(brace_path));
  auto r = new_report("verify", g.seed);
  auto t0 = Clock::now();
  if (mode == "axiom") {
    push_timed(r, t0, check_brace_axiom(b, b.elements()));
  } else if (mode == "lambda-hom") {
    push_timed(r, t0, is_lambda_homomorphic(b, b.elements()));
  } else if (mode == "symmetric") {
    push_timed(r, t0, is_symmetric(b, b.elements(),
                                   [&](int k) { return b.kernel_contains(k); }));
  } else if (mode == "meta-trivial") {
    if (is_lambda_homomorphic(b, b.elements()).pass) {
      push_timed(r, t0, kernel_subbrace(b).report);
    } else {
      auto ideal = find_meta_trivial_ideal(b);
      push_timed(r, t0,
                 ideal ? Verdict::ok("meta-trivial via ideal of order " +
                                     std::to_string(ideal->size()))
                       : Verdict::fail("meta-trivial", "no trivialising ideal found"));
    }
  } else {
    raise("Usage", "unknown verify mode " + mode);
  }
  return finish(r, g);
}

int cmd_z2(long long p, const std::string& family, bool verify, const GlobalOpts& g) {
  auto m = family == "case1" ? z2_case1_matrix(p) : z2_case2_matrix(p);
  auto r = new_report("z2", g.seed);
  auto t0 = Clock::now();
  auto cls = z2_classify(m);
  const char* type = cls.mult_type == Z2Classification::MultType::SameFreeAbelian
                         ? "multiplicative group equals the lattice"
                         : cls.mult_type == Z2Classification::MultType::IsomorphicFreeAbelian
                               ? "multiplicative group is free abelian of rank 2"
                               : "multiplicative group is the Klein bottle group";
  push_timed(r, t0, Verdict::ok(std::string("classified: ") + type + " (p=" + cls.p.str() + ")"));
  push_timed(r, t0, cls.relations);
  if (verify) {
    auto br = make_lattice_brace(m);
    push_timed(r, t0, check_brace_axiom(br, lattice_box(2, 3), "axiom on box [-3,3]^2"));
    auto box = lattice_box(2, 2);
    push_timed(r, t0, is_lambda_homomorphic(br, box));
    push_timed(r, t0, is_symmetric(br, box,
                                   [&](const ZnVector& v) { return br.kernel_contains(v); }));
  }
  return finish(r, g, matrix_to_json(m));
}

int cmd_zn_cyclic(int n, bool verify_pres, bool verify, const GlobalOpts& g) {
  auto r = new_report("zn-cyclic", g.seed);
  auto t0 = Clock::now();
  auto br = cyclic_permutation_brace(n);
  push_timed(r, t0, Verdict::ok("constructed cyclic-permutation brace of rank " +
                                std::to_string(n)));
  if (verify_pres) push_timed(r, t0, verify_presentation_relations(n));
  if (verify) {
    push_timed(r, t0,
               check_brace_axiom_sampled(br, lattice_sampler(n, 3), g.samples, g.seed));
    push_timed(r, t0,
               is_symmetric_sampled(br, lattice_sampler(n, 3), g.samples, g.seed,
                                    [&](const ZnVector& v) { return br.kernel_contains(v); }));
  }
  return finish(r, g, matrix_to_json(br.phi));
}

int cmd_free(const std::string& construction, bool verify, const GlobalOpts& g) {
  auto r = new_report("free", g.seed);
  auto t0 = Clock::now();
  auto sampler = [](Rng& rng) { return random_word(rng, 2, 6); };
  auto run_checks = [&](auto br) {
    if (!verify) return;
    push_timed(r, t0, check_brace_axiom_sampled(br, sampler, g.samples, g.seed));
    push_timed(r, t0, lambda_circ_product_rule_sampled(br, sampler, g.samples, g.seed + 1));
    push_timed(r, t0,
               is_symmetric_sampled(br, sampler, g.samples, g.seed + 2,
                                    [&br](const FreeWord& w) { return br.kernel_contains(w); }));
  };
  if (construction == "swap") {
    push_timed(r, t0, Verdict::ok("swap brace on two generators"));
    run_checks(f2_swap_brace());
  } else if (construction == "inversion") {
    push_timed(r, t0, verify_f3_semidirect_presentation());
    run_checks(f2_inversion_brace());
  } else if (construction == "ia") {
    auto a = word_mul(FreeWord::generator(0), FreeWord::generator(1));
    push_timed(r, t0, Verdict::ok("log-power brace from an inner automorphism"));
    run_checks(homogeneous_brace(2, inner_automorphism(2, a)));
  } else {
    raise("Usage", "unknown construction " + construction);
  }
  return finish(r, g);
}

int cmd_factor(const std::string& family, bool verify, const GlobalOpts& g) {
  auto r = new_report("factor", g.seed);
  auto t0 = Clock::now();
  if (family == "f2") {
    auto br = free_factorization_brace(2, {1});
    auto sampler = [](Rng& rng) { return random_word(rng, 2, 5); };
    push_timed(r, t0, Verdict::ok("free factorization brace, complement <x2>"));
    if (!verify) return finish(r, g);
    push_timed(r, t0, check_brace_axiom_sampled(br, sampler, g.samples, g.seed));
    Rng rng(g.seed + 1);
    bool ok = true;
    for (long i = 0; i < g.samples && ok; ++i) {
      auto z = random_word(rng, 2, 5), w = random_word(rng, 2, 5);
      ok = lambda_apply(br, z, w) == br.lambda_inner(z, w);
    }
    push_timed(r, t0, ok ? Verdict::ok("lambda = inner by b-part", g.samples, g.seed + 1)
                         : Verdict::fail("lambda = inner by b-part", "", g.samples, g.seed + 1));
    push_timed(r, t0,
               is_symmetric_sampled(br, sampler, g.samples, g.seed + 2,
                                    [&](const FreeWord& w) { return br.kernel_contains(w); }));
  } else if (family == "wreath") {
    WreathFactorizationBrace br;
    auto sampler = wreath_sampler();
    push_timed(r, t0, Verdict::ok("wreath-product factorization brace"));
    if (!verify) return finish(r, g);
    push_timed(r, t0, check_brace_axiom_sampled(br, sampler, g.samples, g.seed));
    Rng rng(g.seed + 1);
    bool comm = true;
    for (long i = 0; i < g.samples && comm; ++i) {
      auto p = sampler(rng), q = sampler(rng);
      comm = br.circ(p, q) == br.circ(q, p);
    }
    push_timed(r, t0,
               comm ? Verdict::ok("multiplicative commutativity", g.samples, g.seed + 1)
                    : Verdict::fail("multiplicative commutativity", "", g.samples, g.seed + 1));
    push_timed(r, t0,
               is_symmetric_sampled(br, sampler, g.samples, g.seed + 2,
                                    [&](const WreathElement& e) { return br.kernel_contains(e); }));
  } else {
    raise("Usage", "unknown family " + family);
  }
  return finish(r, g);
}

int cmd_series(int vars, int degree, const std::string& check, int len, const GlobalOpts& g) {
  auto r = new_report("series", g.seed);
  auto t0 = Clock::now();
  if (check == "two-sided") {
    push_timed(r, t0, check_two_sided_brace(vars, degree, g.samples, g.seed));
    SeriesBrace br{vars, degree};
    push_timed(r, t0,
               check_brace_axiom_sampled(br, series_sampler(vars, degree), g.samples, g.seed + 1));
  } else if (check == "free-witness") {
    if (vars != 2) raise("Usage", "the free witness runs on two variables");
    push_timed(r, t0, free_subgroup_witness(degree, len));
  } else {
    raise("Usage", "unknown check " + check);
  }
  return finish(r, g);
}

int cmd_ybe(const std::string& brace_path, const std::string& checks, const GlobalOpts& g) {
  auto b = brace_from_json(load_json_file(brace_path));
  auto r = new_report("ybe", g.seed);
  auto t0 = Clock::now();
  bool want_braid = checks.find("braid") != std::string::npos;
  bool want_nondegen = checks.find("nondegen") != std::string::npos;
  bool want_invol = checks.find("involutive") != std::string::npos;
  if (want_braid) push_timed(r, t0, verify_braid(b, b.elements()));
  if (want_nondegen || want_invol) {
    auto t = classify_solution(b);
    if (want_nondegen)
      push_timed(r, t0, t.bijective && t.nondegenerate
                            ? Verdict::ok("non-degenerate bijective solution")
                            : Verdict::fail("non-degenerate bijective solution", "degenerate"));
    if (want_invol)
      push_timed(r, t0, Verdict::ok(std::string("involutive: ") +
                                    (t.involutive ? "yes" : "no")));
  }
  return finish(r, g);
}

int cmd_paper_suite(const std::string& level, const GlobalOpts& g) {
  SuiteOptions opt;
  opt.seed = g.seed;
  opt.quick = level == "quick";
  auto results = run_acceptance(opt);
  Report r = new_report("paper-suite", g.seed);
  for (auto& c : results) {
    r.verdicts.push_back(c.verdict);
    r.check_ms.push_back(c.ms);
    r.total_ms += c.ms;
  }
  return finish(r, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact skew-brace constructions, verification, and enumeration"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--seed", g.seed, "seed for sampled checks (echoed in reports)");
  app.add_option("--samples", g.samples, "sample count for randomised checks");
  app.add_option("--limit", g.limit, "order bound for exhaustive enumeration");
  app.add_option("--out", g.out, "write the JSON report to this file");
  app.add_flag("--json", g.json, "print the JSON report to stdout");

  std::string group_path, brace_path, mode = "axiom", kind = "trivial";
  std::string subgroup_csv, lambda_path, family = "case1", construction = "swap";
  std::string series_check = "two-sided", ybe_checks = "braid,nondegen,involutive";
  std::string level = "desk";
  long long p = 0;
  int n = 3, vars = 2, degree = 4, len = 4;
  bool verify = false, verify_pres = false;

  auto* enr = app.add_subcommand("enum-regular", "enumerate regular subgroups of Hol(G)");
  enr->add_option("--group", group_path, "group JSON file or stock name (cyclic:N, dihedral:N, elementary:K, quaternion, z2xz4)")->required();

  auto* con = app.add_subcommand("construct", "build a finite brace and emit its JSON");
  con->add_option("--group", group_path)->required();
  con->add_option("--kind", kind, "trivial | opposite | index2 | from-lambda");
  con->add_option("--subgroup", subgroup_csv, "comma-separated member list for index2");
  con->add_option("--lambda", lambda_path, "per-element automorphism images, JSON");

  auto* ver = app.add_subcommand("verify", "check a brace JSON file");
  ver->add_option("brace", brace_path, "brace JSON file")->required();
  ver->add_option("--mode", mode, "axiom | lambda-hom | symmetric | meta-trivial");

  auto* z2 = app.add_subcommand("z2", "rank-2 lattice brace families");
  z2->add_option("--p", p, "family parameter")->required();
  z2->add_option("--family", family, "case1 | case2");
  z2->add_flag("--verify", verify);

  auto* znc = app.add_subcommand("zn-cyclic", "cyclic-permutation lattice brace");
  znc->add_option("--n", n, "rank")->required();
  znc->add_flag("--verify-presentation", verify_pres);
  znc->add_flag("--verify", verify);

  auto* fre = app.add_subcommand("free", "braces on free groups");
  fre->add_option("--construction", construction, "swap | inversion | ia");
  fre->add_flag("--verify", verify);

  auto* fac = app.add_subcommand("factor", "braces from exact factorizations");
  fac->add_option("--family", family, "f2 | wreath");
  fac->add_flag("--verify", verify);

  auto* ser = app.add_subcommand("series", "truncated power-series brace");
  ser->add_option("--vars", vars);
  ser->add_option("--degree", degree);
  ser->add_option("--check", series_check, "two-sided | free-witness");
  ser->add_option("--len", len, "word length for the free witness");

  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter checks for a brace JSON file");
  ybe->add_option("brace", brace_path)->required();
  ybe->add_option("--check", ybe_checks, "comma list of braid,nondegen,involutive");

  auto* ps = app.add_subcommand("paper-suite", "run the full acceptance battery");
  ps->add_option("--level", level, "desk | quick");

  // global flags remain valid after the subcommand name
  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (enr->parsed()) return cmd_enum_regular(group_path, g);
    if (con->parsed()) return cmd_construct(kind, group_path, subgroup_csv, lambda_path, g);
    if (ver->parsed()) return cmd_verify(brace_path, mode, g);
    if (z2->parsed()) return cmd_z2(p, family, verify, g);
    if (znc->parsed()) return cmd_zn_cyclic(n, verify_pres, verify, g);
    if (fre->parsed()) return cmd_free(construction, verify, g);
    if (fac->parsed()) return cmd_factor(family, verify, g);
    if (ser->parsed()) return cmd_series(vars, degree, series_check, len, g);
    if (ybe->parsed()) return cmd_ybe(brace_path, ybe_checks, g);
    if (ps->parsed()) return cmd_paper_suite(level, g);
    return 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
