#include <CLI11.hpp>
#include <iostream>

#include "tjoin/oracle.hpp"
#include "tjoin/pipeline.hpp"

namespace {

using namespace tjoin;

struct CommonArgs {
  RunConfig cfg;
  std::string config_path;
  std::vector<std::string> unit_names;
  std::string normalize = "none";

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file; flags override its values");
    cmd->add_option("--n0", cfg.n0, "minimum n-gram length");
    cmd->add_option("--nmax", cfg.n_max, "maximum n-gram length");
    cmd->add_option("--max-placeholders", cfg.max_placeholders, "placeholder bound per skeleton");
    cmd->add_option("--skeleton-cap", cfg.skeleton_cap, "skeleton bound per row pair");
    cmd->add_option("--min-placeholder-len", cfg.min_placeholder_len,
                    "minimum placeholder length");
    cmd->add_option("--min-support", cfg.min_support, "minimum coverage fraction to keep");
    cmd->add_option("--top-k", cfg.top_k, "how many top transformations to report");
    cmd->add_option("--sample", cfg.sample_size, "evaluate on a random pair sample of this size");
    cmd->add_option("--seed", cfg.seed, "random seed");
    cmd->add_option("--normalize", normalize, "text normalization: none|lowercase");
    cmd->add_option("--units", unit_names,
                    "unit kinds: substr,split,splitsubstr,twocharsplitsubstr,literal|default|all")
        ->delimiter(',');
    cmd->add_option("--workers", cfg.workers, "worker threads (0 = hardware)");
  }

  RunConfig resolve(CLI::App* cmd) {
    RunConfig base;
    if (!config_path.empty())
      base = RunConfig::from_json(nlohmann::json::parse(read_file(config_path)));
    // flags the user actually passed win over the config file
    auto passed = [cmd](const char* name) { return cmd->count(name) > 0; };
    RunConfig out = base;
    if (passed("--n0")) out.n0 = cfg.n0;
    if (passed("--nmax")) out.n_max = cfg.n_max;
    if (passed("--max-placeholders")) out.max_placeholders = cfg.max_placeholders;
    if (passed("--skeleton-cap")) out.skeleton_cap = cfg.skeleton_cap;
    if (passed("--min-placeholder-len")) out.min_placeholder_len = cfg.min_placeholder_len;
    if (passed("--min-support")) out.min_support = cfg.min_support;
    if (passed("--top-k")) out.top_k = cfg.top_k;
    if (passed("--sample")) out.sample_size = cfg.sample_size;
    if (passed("--seed")) out.seed = cfg.seed;
    if (passed("--normalize")) out.normalization = parse_normalization(normalize);
    if (passed("--units")) out.units = parse_unit_kinds(unit_names);
    if (passed("--workers")) out.workers = cfg.workers;
    out.validate();
    return out;
  }
};

std::string column_or_default(const std::string& flag, const std::string& path) {
  return flag.empty() ? default_column(path) : flag;
}

void emit_report(const nlohmann::ordered_json& report, const std::string& out_path) {
  const std::string text = report.dump(2) + "\n";
  if (out_path.empty()) std::cout << text;
  else write_file(out_path, text);
}

std::string pairs_csv(const PairList& pairs) {
  std::string out = "source_id,target_id\n";
  for (const auto& p : pairs)
    out += format_csv_row({std::to_string(p.source_id), std::to_string(p.target_id)});
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"discovers string transformations that make two table columns equi-joinable"};
  app.require_subcommand(1);

  // match-rows -------------------------------------------------------------
  auto* match = app.add_subcommand("match-rows", "find candidate joinable row pairs via n-grams");
  CommonArgs match_args;
  std::string m_src, m_tgt, m_src_col, m_tgt_col, m_out, m_report;
  match->add_option("--source", m_src, "source table CSV")->required();
  match->add_option("--target", m_tgt, "target table CSV")->required();
  match->add_option("--source-col", m_src_col, "source column (name or index)");
  match->add_option("--target-col", m_tgt_col, "target column (name or index)");
  match->add_option("--out", m_out, "write pairs CSV here");
  match->add_option("--report", m_report, "write JSON report here (default stdout)");
  match_args.add_flags(match);
  match->callback([&] {
    RunConfig cfg = match_args.resolve(match);
    ColumnTable a = ingest(m_src, column_or_default(m_src_col, m_src), cfg.normalization);
    ColumnTable b = ingest(m_tgt, column_or_default(m_tgt_col, m_tgt), cfg.normalization);
    auto [src, tgt] = designate_source(a, b);
    const bool swapped = src != &a;
    PairList pairs = find_candidate_pairs(*src, *tgt, cfg.n0, cfg.n_max);
    nlohmann::ordered_json report;
    report["command"] = "match-rows";
    report["config"] = cfg.to_json();
    report["source_file"] = swapped ? m_tgt : m_src;
    report["target_file"] = swapped ? m_src : m_tgt;
    report["designation_swapped"] = swapped;
    report["pairs"] = pairs.size();
    if (!m_out.empty()) write_file(m_out, pairs_csv(pairs));
    emit_report(report, m_report);
  });

  // discover ---------------------------------------------------------------
  auto* discover = app.add_subcommand("discover", "discover covering transformations");
  CommonArgs disc_args;
  std::string d_src, d_tgt, d_src_col, d_tgt_col, d_golden, d_out, d_trans;
  bool d_no_designate = false;
  discover->add_option("--source", d_src, "source table CSV")->required();
  discover->add_option("--target", d_tgt, "target table CSV")->required();
  discover->add_option("--source-col", d_src_col, "source column (name or index)");
  discover->add_option("--target-col", d_tgt_col, "target column (name or index)");
  discover->add_option("--golden", d_golden, "golden pairs CSV: use instead of row matching");
  discover->add_option("--out", d_out, "write JSON report here (default stdout)");
  discover->add_option("--transformations-out", d_trans, "write the covering set here");
  discover->add_flag("--no-designate", d_no_designate,
                     "keep --source as the source even if the target rows are longer");
  disc_args.add_flags(discover);
  discover->callback([&] {
    RunConfig cfg = disc_args.resolve(discover);
    ColumnTable a = ingest(d_src, column_or_default(d_src_col, d_src), cfg.normalization);
    ColumnTable b = ingest(d_tgt, column_or_default(d_tgt_col, d_tgt), cfg.normalization);
    const ColumnTable* src = &a;
    const ColumnTable* tgt = &b;
    bool swapped = false;
    std::optional<PairList> golden;
    if (!d_golden.empty()) {
      golden = golden_to_pairs(load_golden_pairs(d_golden), a, b);
    } else if (!d_no_designate) {
      std::tie(src, tgt) = designate_source(a, b);
      swapped = src != &a;
    }
    DiscoverOutcome out = run_discover(cfg, *src, *tgt, golden);
    out.report["designation_swapped"] = swapped;
    if (!d_trans.empty()) write_transformations(d_trans, out.cover);
    emit_report(out.report, d_out);
  });

  // join -------------------------------------------------------------------
  auto* join = app.add_subcommand("join", "apply transformations and equi-join");
  CommonArgs join_args;
  std::string j_src, j_tgt, j_src_col, j_tgt_col, j_trans, j_golden, j_out, j_report;
  join->add_option("--source", j_src, "source table CSV")->required();
  join->add_option("--target", j_tgt, "target table CSV")->required();
  join->add_option("--source-col", j_src_col, "source column (name or index)");
  join->add_option("--target-col", j_tgt_col, "target column (name or index)");
  join->add_option("--transformations", j_trans, "transformations file (one per line)")->required();
  join->add_option("--golden", j_golden, "golden pairs CSV for metrics");
  join->add_option("--out", j_out, "write joined pairs CSV here");
  join->add_option("--report", j_report, "write JSON report here (default stdout)");
  join_args.add_flags(join);
  join->callback([&] {
    RunConfig cfg = join_args.resolve(join);
    ColumnTable src = ingest(j_src, column_or_default(j_src_col, j_src), cfg.normalization);
    ColumnTable tgt = ingest(j_tgt, column_or_default(j_tgt_col, j_tgt), cfg.normalization);
    std::vector<Transformation> ts = load_transformations(j_trans);
    if (ts.empty()) throw std::runtime_error(j_trans + ": no transformations");
    std::optional<std::vector<std::pair<int32_t, int32_t>>> golden;
    if (!j_golden.empty()) golden = load_golden_pairs(j_golden);
    JoinOutcome out = run_join(cfg, src, tgt, ts, golden);
    if (!j_out.empty()) {
      std::string csv = "source_id,target_id,witness\n";
      for (const auto& p : out.result.pairs) {
        for (const auto& w : p.witnesses)
          csv += format_csv_row(
              {std::to_string(p.source_id), std::to_string(p.target_id), print_transformation(w)});
      }
      write_file(j_out, csv);
    }
    emit_report(out.report, j_report);
  });

  // gen-synth ----------------------------------------------------------------
  auto* gen = app.add_subcommand("gen-synth", "generate a synthetic joinable benchmark");
  SynthParams params;
  bool long_rows = false;
  std::string g_dir;
  gen->add_option("--rows", params.rows, "rows per table");
  gen->add_option("--seed", params.seed, "random seed");
  gen->add_flag("--long", long_rows, "long rows: source lengths in [40,70]");
  gen->add_option("--transformations", params.transformations, "covering transformations");
  gen->add_option("--placeholders", params.placeholders, "placeholder units per transformation");
  gen->add_option("--out-dir", g_dir, "output directory")->required();
  gen->callback([&] {
    if (long_rows) {
      params.len_lo = 40;
      params.len_hi = 70;
    }
    SynthBenchmark bench = generate_benchmark(params);
    write_synth_benchmark(bench, g_dir);
    nlohmann::ordered_json report;
    report["command"] = "gen-synth";
    report["rows"] = params.rows;
    report["seed"] = params.seed;
    report["len_lo"] = params.len_lo;
    report["len_hi"] = params.len_hi;
    report["transformations"] = bench.golden_transformations.size();
    report["out_dir"] = g_dir;
    std::cout << report.dump(2) << "\n";
  });

  // eval ---------------------------------------------------------------------
  auto* eval = app.add_subcommand("eval", "score a pairs CSV against golden pairs");
  std::string e_pairs, e_golden, e_report;
  eval->add_option("--pairs", e_pairs, "pairs CSV (source_id,target_id[,witness])")->required();
  eval->add_option("--golden", e_golden, "golden pairs CSV")->required();
  eval->add_option("--report", e_report, "write JSON report here (default stdout)");
  eval->callback([&] {
    auto got = load_golden_pairs(e_pairs);  // same id,id layout
    auto gold = load_golden_pairs(e_golden);
    JoinResult result;
    std::unordered_set<int64_t> seen;
    for (auto [s, t] : got) {
      if (seen.insert((static_cast<int64_t>(s) << 32) | static_cast<uint32_t>(t)).second)
        result.pairs.push_back(JoinedPair{s, t, {}});
    }
    JoinMetrics m = evaluate_join(result, gold);
    nlohmann::ordered_json report;
    report["command"] = "eval";
    report["pairs"] = result.pairs.size();
    report["golden_pairs"] = gold.size();
    report["precision"] = m.precision;
    report["recall"] = m.recall;
    report["f1"] = m.f1;
    emit_report(report, e_report);
  });

  // prob -----------------------------------------------------------------
  auto* prob = app.add_subcommand("prob", "sampling detection probability");
  double p_q = 0.0;
  int64_t p_s = 0;
  prob->add_option("--coverage", p_q, "transformation coverage fraction q")->required();
  prob->add_option("--sample", p_s, "sample size s (>= 2)")->required();
  prob->callback([&] {
    nlohmann::ordered_json report;
    report["command"] = "prob";
    report["coverage"] = p_q;
    report["sample"] = p_s;
    report["probability"] = detection_probability(p_q, p_s);
    std::cout << report.dump(2) << "\n";
  });

  // oracle (hidden): brute-force enumeration on tiny inputs -----------------
  auto* oracle = app.add_subcommand("oracle", "");
  oracle->group("");
  std::string o_src, o_tgt, o_src_col, o_tgt_col;
  int32_t o_units = 3;
  oracle->add_option("--source", o_src)->required();
  oracle->add_option("--target", o_tgt)->required();
  oracle->add_option("--source-col", o_src_col);
  oracle->add_option("--target-col", o_tgt_col);
  oracle->add_option("--max-units", o_units);
  oracle->callback([&] {
    ColumnTable src = ingest(o_src, column_or_default(o_src_col, o_src), Normalization::none);
    ColumnTable tgt = ingest(o_tgt, column_or_default(o_tgt_col, o_tgt), Normalization::none);
    if (src.size() != tgt.size()) throw std::runtime_error("oracle: tables must align row-by-row");
    PairList pairs;
    for (size_t i = 0; i < src.size(); ++i)
      pairs.push_back(CandidatePair{src.rows()[i].id, tgt.rows()[i].id, src.rows()[i].text,
                                    tgt.rows()[i].text});
    OracleBudget budget;
    budget.max_units = o_units;
    auto entries = enumerate_all_transformations(pairs, budget);
    size_t best = 0;
    for (const auto& e : entries) best = std::max(best, e.covered.size());
    nlohmann::ordered_json report;
    report["command"] = "oracle";
    report["pairs"] = pairs.size();
    report["transformations"] = entries.size();
    report["best_coverage"] = pairs.empty() ? 0.0 : double(best) / double(pairs.size());
    try {
      auto cover = exact_min_cover(pairs, entries);
      report["min_cover_size"] = cover.size();
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (size_t idx : cover) list.push_back(print_transformation(entries[idx].transformation));
      report["min_cover"] = std::move(list);
    } catch (const BudgetExceeded& e) {
      report["min_cover_error"] = e.what();
    }
    std::cout << report.dump(2) << "\n";
  });

  CLI11_PARSE(app, argc, argv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "tjoin: " << e.what() << "\n";
    return 1;
  }
}
