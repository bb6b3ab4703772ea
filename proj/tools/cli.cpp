#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "euler_adic/adic_order.hpp"

namespace euler_adic::cli {

namespace {

using nlohmann::json;

std::string rational_string(const BigRational& q) {
  BigRational c(q);
  c.canonicalize();
  return c.get_str();
}

std::string approx(const BigRational& q) {
  std::ostringstream s;
  s << std::setprecision(17) << q.get_d();
  return s.str();
}

FormulaVariant parse_variant(const std::string& name) {
  if (name == "slot") return FormulaVariant::SlotCorrected;
  if (name == "literal") return FormulaVariant::Literal;
  throw std::invalid_argument("unknown formula variant '" + name + "'");
}

}  // namespace

Cylinder parse_cylinder_or_perm(const std::string& text) {
  if (text.find_first_of("LR") != std::string::npos || text.empty() || text == "-")
    return parse_cylinder(text);
  return perm_to_path(parse_permutation(text));
}

MeasureSpec make_measure_spec(const std::string& name, const std::vector<std::string>& alphas,
                              const std::string& alpha1, unsigned depth) {
  if (name == "symmetric") return SymmetricMeasure{Orientation::Standard};
  if (name == "symmetric-reverse") return SymmetricMeasure{Orientation::Reverse};
  if (name == "finite-rank") {
    if (!alphas.empty()) {
      std::vector<BigRational> values;
      for (const auto& a : alphas) {
        BigRational q;
        if (q.set_str(a, 10) != 0) throw std::invalid_argument("bad rational '" + a + "'");
        values.push_back(q);
      }
      return FiniteRankMeasure(std::move(values));
    }
    if (!alpha1.empty()) {
      BigRational q;
      if (q.set_str(alpha1, 10) != 0) throw std::invalid_argument("bad rational '" + alpha1 + "'");
      q.canonicalize();
      return FiniteRankMeasure::from_recursion(q, depth);
    }
    return FiniteRankMeasure::canonical(depth);
  }
  throw std::invalid_argument("unknown measure spec '" + name + "'");
}

json check_report_json(const CheckReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json measures = json::array();
    for (const auto& m : v.measures) measures.push_back(rational_string(m));
    violations.push_back({{"level", v.level},
                          {"column", v.column ? json(*v.column) : json(nullptr)},
                          {"measures", measures}});
  }
  return {{"spec", report.spec},
          {"check", report.check},
          {"depth", report.depth},
          {"status", report.passed() ? "pass" : "fail"},
          {"violations", violations}};
}

json ratio_rows_json(const std::vector<RatioRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r{{"n", row.n},
           {"k", row.k},
           {"dim_F", row.dim_a.get_str()},
           {"dim_Fprime", row.dim_b.get_str()}};
    if (row.ratio) {
      r["ratio_num"] = row.ratio->get_num().get_str();
      r["ratio_den"] = row.ratio->get_den().get_str();
      r["abs_dev"] = rational_string(*row.abs_deviation);
      r["abs_dev_approx"] = row.abs_deviation->get_d();
    } else {
      r["flag"] = "zero denominator";
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_ratio_csv(const std::vector<RatioRow>& rows, std::ostream& out) {
  out << "n,k,dim_F,dim_Fprime,ratio_num,ratio_den,abs_dev\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.k << ',' << row.dim_a.get_str() << ',' << row.dim_b.get_str() << ',';
    if (row.ratio)
      out << row.ratio->get_num().get_str() << ',' << row.ratio->get_den().get_str() << ','
          << approx(*row.abs_deviation);
    else
      out << ",,";
    out << '\n';
  }
}

void write_trajectory_csv(const WalkResult& walk, std::ostream& out) {
  out << "step,choice,k_n\n";
  for (const auto& s : walk.trajectory) out << s.step << ',' << s.choice << ',' << s.k << '\n';
}

int cmd_eulerian(const EulerianOptions& opt, std::ostream& out, std::ostream& err) {
  const EulerianTable& table = shared_eulerian_table(opt.max_n);
  bool ok = true;
  json rows = json::array();
  if (opt.format == Format::Csv) out << "n,k,A\n";
  for (unsigned n = 0; n <= opt.max_n; ++n) {
    BigNat sum = 0;
    json row = json::array();
    for (unsigned k = 0; k <= n; ++k) {
      const BigNat& a = table.at(n, k);
      sum += a;
      switch (opt.format) {
        case Format::Table: out << (k ? " " : "") << a.get_str(); break;
        case Format::Csv: out << n << ',' << k << ',' << a.get_str() << '\n'; break;
        case Format::Json: row.push_back(a.get_str()); break;
      }
    }
    if (opt.format == Format::Table) out << '\n';
    if (opt.format == Format::Json) rows.push_back(std::move(row));
    if (sum != factorial(n + 1)) {
      err << "row " << n << " sums to " << sum.get_str() << ", expected " << (n + 1) << "!\n";
      ok = false;
    }
  }
  if (opt.format == Format::Json)
    out << json{{"max_n", opt.max_n}, {"rows", rows}, {"row_sums_ok", ok}}.dump(2) << '\n';
  return ok ? kOk : kCheckFailure;
}

int cmd_dim(const DimOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.k > opt.n) {
    err << "target column k exceeds level n\n";
    return kUsage;
  }
  const DimQuery q(parse_cylinder_or_perm(opt.cylinder), {opt.n, opt.k});
  const bool want_slot = opt.variant == "slot" || opt.variant == "both";
  const bool want_literal = opt.variant == "literal" || opt.variant == "both";
  if (!want_slot && !want_literal) throw std::invalid_argument("unknown variant '" + opt.variant + "'");
  const bool want_graph = opt.oracle == "graph" || opt.oracle == "all";
  const bool want_perm = opt.oracle == "perm" || opt.oracle == "all";
  if (!want_graph && !want_perm && opt.oracle != "none")
    throw std::invalid_argument("unknown oracle '" + opt.oracle + "'");

  std::optional<BigNat> slot, literal, graph, perm;
  if (want_slot) slot = dim_formula(q, FormulaVariant::SlotCorrected);
  if (want_literal) literal = dim_formula(q, FormulaVariant::Literal);
  if (want_graph) graph = dim_graph_oracle(q);
  if (want_perm) {
    if (q.target().level <= PatternRiseCensus::kMaxLevel)
      perm = dim_permutation_oracle(q);
    else
      err << "permutation oracle skipped: level above " << PatternRiseCensus::kMaxLevel << '\n';
  }

  std::optional<BigNat> truth = graph ? graph : perm;
  bool mismatch = graph && perm && *graph != *perm;
  if (slot && truth && *slot != *truth) mismatch = true;
  const bool literal_differs = literal && truth && *literal != *truth;

  if (opt.format == Format::Json) {
    json j{{"cylinder", format_cylinder(q.cylinder())},
           {"pattern", format_permutation(q.pattern())},
           {"n", opt.n},
           {"k", opt.k}};
    if (slot) j["formula_slot_corrected"] = slot->get_str();
    if (literal) {
      j["formula_literal"] = literal->get_str();
      j["literal_flagged"] = literal_differs;
    }
    if (graph) j["oracle_graph"] = graph->get_str();
    if (perm) j["oracle_permutation"] = perm->get_str();
    j["status"] = mismatch ? "mismatch" : "ok";
    out << j.dump(2) << '\n';
  } else {
    out << "cylinder " << format_cylinder(q.cylinder()) << "  pattern "
        << format_permutation(q.pattern()) << "  target (" << opt.n << "," << opt.k << ")\n";
    if (slot) out << "formula (slot-corrected) = " << slot->get_str() << '\n';
    if (literal)
      out << "formula (literal)        = " << literal->get_str()
          << (literal_differs ? "  [flagged: differs from oracle]" : "") << '\n';
    if (perm) out << "oracle (permutations)    = " << perm->get_str() << '\n';
    if (graph) out << "oracle (graph DP)        = " << graph->get_str() << '\n';
    out << (mismatch ? "MISMATCH\n" : "ok\n");
  }
  return mismatch ? kCheckFailure : kOk;
}

int cmd_ratio(const RatioOptions& opt, std::ostream& out, std::ostream& err) {
  const Cylinder a = parse_cylinder_or_perm(opt.cylinder_a);
  const Cylinder b = parse_cylinder_or_perm(opt.cylinder_b);
  std::vector<Vertex> schedule;
  if (opt.columns.empty()) {
    schedule = diagonal_schedule(opt.levels);
  } else {
    if (opt.columns.size() != opt.levels.size()) {
      err << "--k needs one column per --n level\n";
      return kUsage;
    }
    for (std::size_t i = 0; i < opt.levels.size(); ++i)
      schedule.push_back(make_vertex(opt.levels[i], opt.columns[i]));
  }
  const auto rows = ratio_table(a, b, schedule, parse_variant(opt.variant));
  switch (opt.format) {
    case Format::Csv: write_ratio_csv(rows, out); break;
    case Format::Json:
      out << json{{"cylinder_a", format_cylinder(a)},
                  {"cylinder_b", format_cylinder(b)},
                  {"rows", ratio_rows_json(rows)}}
                 .dump(2)
          << '\n';
      break;
    case Format::Table:
      out << "F  = " << format_cylinder(a) << " (" << format_permutation(path_to_perm(a)) << ")\n"
          << "F' = " << format_cylinder(b) << " (" << format_permutation(path_to_perm(b)) << ")\n";
      for (const auto& row : rows) {
        out << "(" << row.n << "," << row.k << ")  ";
        if (row.ratio)
          out << "ratio ~ " << approx(*row.ratio) << "  |ratio-1| ~ " << approx(*row.abs_deviation);
        else
          out << "flagged: dim(F',(n,k)) = 0";
        out << '\n';
      }
      break;
  }
  return kOk;
}

int cmd_perm2path(const std::string& permutation, std::ostream& out, std::ostream&) {
  const Cylinder c = perm_to_path(parse_permutation(permutation));
  out << (c.empty() ? "-" : format_cylinder(c)) << '\n';
  return kOk;
}

int cmd_path2perm(const std::string& cylinder, std::ostream& out, std::ostream&) {
  out << format_permutation(path_to_perm(parse_cylinder(cylinder))) << '\n';
  return kOk;
}

int cmd_sample(const SampleOptions& opt, std::ostream& out, std::ostream& err) {
  if (!opt.seed) {
    err << "sample requires --seed\n";
    return kUsage;
  }
  if (opt.m < 2 || opt.m > 8) {
    err << "sample supports 2 <= m <= 8\n";
    return kUsage;
  }
  const MeasureSpec spec = make_measure_spec(opt.spec, {}, "", opt.m - 1);
  PathSampler sampler(spec, *opt.seed);

  // cells in lexicographic permutation order
  std::vector<unsigned> ident(opt.m);
  for (unsigned i = 0; i < opt.m; ++i) ident[i] = i + 1;
  std::map<std::vector<unsigned>, std::size_t> cell;
  std::vector<Permutation> perms;
  do {
    cell.emplace(ident, perms.size());
    perms.emplace_back(ident);
  } while (std::next_permutation(ident.begin(), ident.end()));

  std::vector<std::uint64_t> counts(perms.size(), 0);
  for (std::uint64_t i = 0; i < opt.samples; ++i) {
    const Permutation p = sampler.next_permutation(opt.m);
    ++counts[cell.at({p.entries().begin(), p.entries().end()})];
  }

  // Compare against exact cylinder measures, dropping null cells.
  std::vector<std::uint64_t> observed;
  std::vector<double> probs;
  std::vector<BigRational> exact(perms.size());
  bool null_cell_hit = false;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    exact[i] = cylinder_measure(spec, perm_to_path(perms[i]));
    if (exact[i] == 0) {
      null_cell_hit |= counts[i] != 0;
      continue;
    }
    observed.push_back(counts[i]);
    probs.push_back(exact[i].get_d());
  }
  std::optional<ChiSquareResult> chi;
  if (observed.size() >= 2) chi = chi_square(observed, probs);
  const bool pass = !null_cell_hit && (!chi || chi->p_value >= opt.significance);

  if (opt.format == Format::Json) {
    json cells = json::array();
    for (std::size_t i = 0; i < perms.size(); ++i)
      cells.push_back({{"permutation", format_permutation(perms[i])},
                       {"count", counts[i]},
                       {"expected", rational_string(exact[i])}});
    json j{{"spec", spec_name(spec)}, {"m", opt.m}, {"samples", opt.samples}, {"seed", *opt.seed},
           {"cells", cells}, {"status", pass ? "pass" : "fail"}};
    if (chi) {
      j["chi_square"] = chi->statistic;
      j["dof"] = chi->degrees_of_freedom;
      j["p_value"] = chi->p_value;
    }
    out << j.dump(2) << '\n';
  } else if (opt.format == Format::Csv) {
    out << "permutation,count,expected\n";
    for (std::size_t i = 0; i < perms.size(); ++i)
      out << format_permutation(perms[i]) << ',' << counts[i] << ',' << rational_string(exact[i])
          << '\n';
  } else {
    for (std::size_t i = 0; i < perms.size(); ++i)
      out << format_permutation(perms[i]) << "  " << counts[i] << "  (expected "
          << rational_string(exact[i]) << ")\n";
    if (chi)
      out << "chi-square = " << chi->statistic << "  dof = " << chi->degrees_of_freedom
          << "  p = " << chi->p_value << '\n';
    out << (pass ? "pass" : "FAIL") << " at significance " << opt.significance << '\n';
  }
  return pass ? kOk : kCheckFailure;
}

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const MeasureSpec spec = make_measure_spec(opt.spec, opt.alphas, opt.alpha1, opt.depth);
  std::vector<CheckReport> reports;
  if (opt.kind == "invariance" || opt.kind == "both") reports.push_back(check_invariance(spec, opt.depth));
  if (opt.kind == "consistency" || opt.kind == "both")
    reports.push_back(check_consistency(spec, opt.depth));
  if (reports.empty()) {
    err << "unknown check kind '" << opt.kind << "'\n";
    return kUsage;
  }
  const bool pass = std::all_of(reports.begin(), reports.end(), [](auto& r) { return r.passed(); });
  if (opt.format == Format::Json) {
    if (reports.size() == 1) {
      out << check_report_json(reports.front()).dump(2) << '\n';
    } else {
      json all = json::array();
      for (const auto& r : reports) all.push_back(check_report_json(r));
      out << all.dump(2) << '\n';
    }
  } else {
    for (const auto& r : reports) {
      out << r.check << " (" << r.spec << ", depth " << r.depth << "): "
          << (r.passed() ? "pass" : "FAIL") << '\n';
      for (const auto& v : r.violations) {
        out << "  level " << v.level;
        if (v.column) out << " column " << *v.column;
        out << ":";
        for (const auto& m : v.measures) out << ' ' << rational_string(m);
        out << '\n';
      }
    }
  }
  return pass ? kOk : kCheckFailure;
}

int cmd_walk(const WalkOptions& opt, std::ostream& out, std::ostream& err) {
  if (!opt.seed) {
    err << "walk requires --seed\n";
    return kUsage;
  }
  Reinforcement mode;
  if (opt.mode == "negative")
    mode = Reinforcement::Negative;
  else if (opt.mode == "positive")
    mode = Reinforcement::Positive;
  else {
    err << "unknown walk mode '" << opt.mode << "'\n";
    return kUsage;
  }
  const WalkResult walk = reinforced_walk(opt.steps, mode, *opt.seed);
  switch (opt.format) {
    case Format::Csv: write_trajectory_csv(walk, out); break;
    case Format::Json:
      out << json{{"mode", opt.mode},
                  {"steps", opt.steps},
                  {"seed", *opt.seed},
                  {"final_k", walk.final_k()},
                  {"final_fraction", walk.final_fraction()}}
                 .dump(2)
          << '\n';
      break;
    case Format::Table:
      out << opt.mode << " reinforcement, " << opt.steps << " steps, seed " << *opt.seed << '\n'
          << "loop A chosen " << walk.final_k() << " times; k_n/n = " << walk.final_fraction()
          << '\n';
      break;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Euler adic system: Eulerian numbers, path/permutation codec, dimension counts, "
               "measures"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
  auto format_option = [&](CLI::App* sub, Format& target) {
    sub->add_option("--format", target, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  };

  EulerianOptions eul;
  auto* eulerian = app.add_subcommand("eulerian", "Dump the Eulerian triangle A(n,k)");
  eulerian->add_option("--max-n", eul.max_n, "Largest level")->check(CLI::Range(0u, 2000u));
  format_option(eulerian, eul.format);

  DimOptions dim;
  auto* dimc = app.add_subcommand("dim", "dim(F,(n,k)) by formula and oracles");
  dimc->add_option("--cylinder", dim.cylinder, "Cylinder (L1,R2,...) or permutation (213)")->required();
  dimc->add_option("--n", dim.n, "Target level")->required();
  dimc->add_option("--k", dim.k, "Target column")->required();
  dimc->add_option("--variant", dim.variant, "slot, literal or both")
      ->check(CLI::IsMember({"slot", "literal", "both"}));
  dimc->add_option("--oracle", dim.oracle, "none, graph, perm or all")
      ->check(CLI::IsMember({"none", "graph", "perm", "all"}));
  format_option(dimc, dim.format);

  RatioOptions ratio;
  auto* ratioc = app.add_subcommand("ratio", "dim(F,(n,k)) / dim(F',(n,k)) along a schedule");
  ratioc->add_option("--cylinder-a", ratio.cylinder_a, "Cylinder or permutation F")->required();
  ratioc->add_option("--cylinder-b", ratio.cylinder_b, "Cylinder or permutation F'")->required();
  ratioc->add_option("--n", ratio.levels, "Levels (default 10 20 40 80)")->delimiter(',');
  ratioc->add_option("--k", ratio.columns, "Columns, one per level (default floor(n/2))")
      ->delimiter(',');
  ratioc->add_option("--variant", ratio.variant, "slot or literal")
      ->check(CLI::IsMember({"slot", "literal"}));
  format_option(ratioc, ratio.format);

  std::string perm_text;
  auto* p2p = app.add_subcommand("perm2path", "Permutation of {1..m} to its root path");
  p2p->add_option("permutation", perm_text, "e.g. 2341 or 10,2,...")->required();

  std::string path_text;
  auto* path2perm = app.add_subcommand("path2perm", "Root path to its permutation");
  path2perm->add_option("cylinder", path_text, "e.g. L1,R1,R1 ('-' for the empty path)")->required();

  SampleOptions sample;
  auto* samplec = app.add_subcommand("sample", "Sample permutations and run a chi-square test");
  samplec->add_option("--spec", sample.spec, "symmetric or finite-rank")
      ->check(CLI::IsMember({"symmetric", "finite-rank"}));
  samplec->add_option("--m", sample.m, "Permutation length");
  samplec->add_option("--samples", sample.samples, "Number of draws");
  samplec->add_option("--seed", sample.seed, "Random seed (required)")->required();
  samplec->add_option("--significance", sample.significance, "Test level");
  format_option(samplec, sample.format);

  CheckOptions check;
  auto* checkc = app.add_subcommand("check", "Exact invariance / consistency checks of a measure");
  checkc->add_option("--spec", check.spec, "symmetric, symmetric-reverse or finite-rank")
      ->check(CLI::IsMember({"symmetric", "symmetric-reverse", "finite-rank"}));
  checkc->add_option("--alphas", check.alphas, "Explicit finite-rank weights a_1,a_2,... (p/q)")
      ->delimiter(',');
  checkc->add_option("--alpha1", check.alpha1, "Finite-rank a_1; later terms by recursion");
  checkc->add_option("--depth", check.depth, "Deepest level checked");
  checkc->add_option("--kind", check.kind, "invariance, consistency or both")
      ->check(CLI::IsMember({"invariance", "consistency", "both"}));
  format_option(checkc, check.format);

  WalkOptions walk;
  auto* walkc = app.add_subcommand(
      "walk",
      "Two-loop reinforced walk. k_n counts how often loop A (a right turn) was taken in n steps");
  walkc->add_option("--mode", walk.mode, "negative (Euler graph) or positive (reverse graph)")
      ->check(CLI::IsMember({"negative", "positive"}));
  walkc->add_option("--steps", walk.steps, "Number of steps")->check(CLI::PositiveNumber);
  walkc->add_option("--seed", walk.seed, "Random seed (required)")->required();
  format_option(walkc, walk.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eulerian) return cmd_eulerian(eul, out, err);
    if (*dimc) return cmd_dim(dim, out, err);
    if (*ratioc) return cmd_ratio(ratio, out, err);
    if (*p2p) return cmd_perm2path(perm_text, out, err);
    if (*path2perm) return cmd_path2perm(path_text, out, err);
    if (*samplec) return cmd_sample(sample, out, err);
    if (*checkc) return cmd_check(check, out, err);
    if (*walkc) return cmd_walk(walk, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace euler_adic::cli
