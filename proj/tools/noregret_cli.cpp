// Command-line front end: run auction simulations, solve the revenue LPs,
// check the closed-form counterexamples, and benchmark the learners.
//
//   noregret_cli simulate --config cfg.json --out results/
//   noregret_cli lp single --dist configs/uniform4.json
//   noregret_cli verify samebid --qS 2/5 --n 2
//   noregret_cli bench-learners --T 20000
//
// Exit codes: 0 success, 1 usage/config/runtime error (JSON object on
// stderr), 2 a verification claim evaluated to FAIL.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "noregret/noregret.hpp"

namespace fs = std::filesystem;
using namespace noregret;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path.string());
  out << content;
}

ValueDistribution load_dist(const std::string& path) {
  std::vector<std::string> errors;
  auto d = dist_from_document(read_file(path), &errors);
  if (!d) {
    std::string msg = "invalid distribution file " + path;
    for (const auto& e : errors) msg += "; " + e;
    throw std::runtime_error(msg);
  }
  return *d;
}

Rational parse_fraction_flag(const std::string& s, const std::string& flag) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw std::runtime_error(flag + ": " + e.what());
  }
}

void emit_json_error(const std::string& message,
                     const std::vector<std::string>& details = {}) {
  ojson err;
  err["error"] = message;
  if (!details.empty()) err["details"] = details;
  std::cerr << err.dump() << "\n";
}

void print_report_text(const VerificationReport& rep) {
  std::cout << rep.claim << "\n";
  for (const auto& c : rep.checks)
    std::cout << "  [" << (c.holds ? "ok" : "VIOLATED") << "] "
              << c.description << ": " << frac_str(c.lhs)
              << (c.strict ? " > " : " >= ") << frac_str(c.rhs) << "\n";
  for (const auto& n : rep.notes) std::cout << "  note: " << n << "\n";
  std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
}

int report_exit(const VerificationReport& rep) { return rep.pass ? 0 : 2; }

// ---------------------------------------------------------------------------
// simulate

struct SimulateOpts {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  int jobs = 1;
  std::string format = "text";
};

int cmd_simulate(const SimulateOpts& o) {
  ParseOutcome parsed = parse_config(read_file(o.config_path));
  if (!parsed.ok()) {
    emit_json_error("invalid config", parsed.errors);
    return 1;
  }
  ExperimentConfig e = *parsed.config;
  if (o.seed) e.sim.seed = *o.seed;
  if (o.trials) {
    e.trials = *o.trials;
    e.sim.trials = *o.trials;
  }
  materialize_schedule(&e);

  std::vector<SimulationTrace> traces(static_cast<size_t>(e.trials));
  // every trial gets its own derived key; the pool size never changes results
  std::atomic<int> next{0};
  std::vector<std::string> worker_errors;
  std::mutex err_mu;
  auto work = [&] {
    for (;;) {
      const int k = next.fetch_add(1);
      if (k >= e.trials) break;
      try {
        SimulationConfig ck = e.sim;
        ck.seed = derive(e.sim.seed, rng_purpose::kTrial,
                         static_cast<std::uint64_t>(k));
        traces[static_cast<size_t>(k)] = run(ck);
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(err_mu);
        worker_errors.push_back("trial " + std::to_string(k) + ": " + ex.what());
      }
    }
  };
  const int jobs = std::clamp(o.jobs, 1, std::max(e.trials, 1));
  if (jobs <= 1 || e.trials <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (!worker_errors.empty()) {
    emit_json_error("simulation failed", worker_errors);
    return 1;
  }

  // the coordinator alone touches the filesystem
  fs::create_directories(o.out_dir);
  const ojson summary = simulate_summary_json(e, traces);
  write_file(fs::path(o.out_dir) / "summary.json", summary.dump(2) + "\n");
  for (int k = 0; k < e.trials; ++k) {
    const SimulationTrace& tr = traces[static_cast<size_t>(k)];
    if (!tr.has_rounds) continue;
    const std::string name =
        e.trials == 1 ? "trace.csv" : "trace_" + std::to_string(k) + ".csv";
    std::ofstream out(fs::path(o.out_dir) / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write trace file " + name);
    write_trace_csv(out, tr, e.sim.dist);
  }

  if (o.format == "json") {
    std::cout << summary.dump(2) << "\n";
  } else {
    for (int k = 0; k < e.trials; ++k) {
      const SimulationTrace& tr = traces[static_cast<size_t>(k)];
      std::cout << "trial " << k << ": seed=" << tr.seed
                << " revenue=" << to_double(tr.revenue_exact)
                << " welfare=" << to_double(tr.welfare_exact);
      for (int b = 0; b < tr.n; ++b)
        std::cout << " u" << b << "=" << to_double(tr.utility_exact[b]);
      std::cout << "\n";
    }
    std::cout << "wrote " << (fs::path(o.out_dir) / "summary.json").string()
              << " (" << e.trials << " trial" << (e.trials == 1 ? "" : "s")
              << ")\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// lp

struct LpOpts {
  std::string problem;
  std::string dist_path;
  int n = 2;
  double H = 1e4;
  int grid = 2000;
  std::string out_dir;
  std::string format = "text";
};

template <class S>
void print_solution_text(const std::string& problem, const LpSolution<S>& sol,
                         bool rational, int n_total) {
  std::cout << "problem: " << problem << "\n";
  std::cout << "status: " << to_string(sol.status) << "\n";
  if (sol.status != LpStatus::kOptimal) return;
  auto show = [&](const S& v) {
    std::ostringstream ss;
    if (rational) ss << to_fraction_string(Rational(v)) << " = ";
    ss << to_double(v);
    return ss.str();
  };
  std::cout << "objective: " << show(sol.objective) << "\n";
  if (n_total > 1)
    std::cout << "total (x" << n_total << " buyers): "
              << show(S(sol.objective * n_total)) << "\n";
  if (sol.value_only) return;
  for (size_t i = 0; i < sol.x.size(); ++i)
    std::cout << "x_" << (i + 1) << " = " << show(sol.x[i]) << "\n";
  for (size_t i = 0; i < sol.u.size(); ++i)
    std::cout << "u_" << (i + 1) << " = " << show(sol.u[i]) << "\n";
}

template <class S>
int lp_dispatch(const LpOpts& o, bool rational) {
  ojson out;
  if (o.problem == "single" || o.problem == "border" || o.problem == "uniform") {
    const ValueDistribution d = load_dist(o.dist_path);
    LpSolution<S> sol;
    int n_total = 1;
    if (o.problem == "single") {
      sol = solve_single_lp<S>(d);
    } else if (o.problem == "border") {
      sol = solve_border_lp<S>(d, o.n);
    } else {
      sol = solve_reduced_uniform_lp<S>(d, o.n);
      n_total = o.n;  // per-buyer objective; total = n * objective
    }
    out = lp_solution_json(o.problem, sol, rational);
    if (o.problem == "uniform" && sol.status == LpStatus::kOptimal) {
      const S total = S(sol.objective * o.n);
      if (rational) out["total"] = to_fraction_string(Rational(total));
      out["total_float"] = to_double(total);
    }
    if (o.format == "json") std::cout << out.dump(2) << "\n";
    else print_solution_text(o.problem, sol, rational, n_total);
  } else if (o.problem == "fill") {
    const ValueDistribution d = load_dist(o.dist_path);
    const FillResult<S> fill = fill_low_to_high<S>(d);
    const S value = lagrangian_value(d, fill.phis);
    out["format"] = 1;
    out["problem"] = "fill";
    out["numeric"] = rational ? "rational" : "float";
    ojson lam = ojson::array();
    for (const auto& row : fill.lam) {
      ojson r = ojson::array();
      for (const auto& v : row)
        r.push_back(rational ? ojson(to_fraction_string(Rational(v)))
                             : ojson(to_double(v)));
      lam.push_back(std::move(r));
    }
    out["lam"] = std::move(lam);
    ojson phis = ojson::array();
    for (const auto& v : fill.phis)
      phis.push_back(rational ? ojson(to_fraction_string(Rational(v)))
                              : ojson(to_double(v)));
    out["phis"] = std::move(phis);
    if (rational) out["lagrangian"] = to_fraction_string(Rational(value));
    out["lagrangian_float"] = to_double(value);
    if (o.format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "problem: fill\n";
      for (size_t i = 0; i < fill.phis.size(); ++i) {
        std::cout << "phi_" << (i + 1) << " = ";
        if (rational)
          std::cout << to_fraction_string(Rational(fill.phis[i])) << " = ";
        std::cout << to_double(fill.phis[i]) << "\n";
      }
      std::cout << "lagrangian: ";
      if (rational) std::cout << to_fraction_string(Rational(value)) << " = ";
      std::cout << to_double(value) << "\n";
    }
  } else {  // slprev: double-valued by construction
    if (o.H <= 1) throw std::runtime_error("--H must be greater than 1");
    const SlprevResult r = slprev_equal_revenue(o.H, o.grid);
    out["format"] = 1;
    out["problem"] = "slprev";
    out["H"] = o.H;
    out["grid_points"] = o.grid;
    out["value"] = r.value;
    out["phi_boundary"] = r.phi_boundary;
    out["support_size"] = r.m;
    if (o.format == "json") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "problem: slprev\nH: " << o.H << "\nvalue: " << r.value
                << "\nphi_boundary: " << r.phi_boundary
                << "\nsupport_size: " << r.m << "\n";
    }
  }
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    write_file(fs::path(o.out_dir) / "solution.json", out.dump(2) + "\n");
  }
  return 0;
}

int cmd_lp(const LpOpts& o) {
  const NumericMode mode = numeric_mode_from_env(NumericMode::kRational);
  if (o.problem == "slprev") return lp_dispatch<double>(o, false);
  if (mode == NumericMode::kRational) return lp_dispatch<Rational>(o, true);
  return lp_dispatch<double>(o, false);
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
  std::string claim;
  std::string delta = "1/10";
  long long M = 10;
  std::string qS = "2/5";
  int n = 2;
  std::string out_dir;
  std::string format = "text";
};

int cmd_verify(const VerifyOpts& o) {
  VerificationReport rep;
  ojson extra;
  if (o.claim == "counterexample") {
    rep = verify_counterexample(o.M, parse_fraction_flag(o.delta, "--delta"));
  } else if (o.claim == "samebid") {
    const Rational bound =
        same_bid_alloc_bound(parse_fraction_flag(o.qS, "--qS"), o.n);
    if (o.format == "json") {
      ojson j;
      j["format"] = 1;
      j["claim"] = "samebid";
      j["bound"] = frac_str(bound);
      j["bound_float"] = to_double(bound);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << frac_str(bound) << "\n";
    }
    if (!o.out_dir.empty()) {
      fs::create_directories(o.out_dir);
      ojson j;
      j["format"] = 1;
      j["claim"] = "samebid";
      j["bound"] = frac_str(bound);
      j["bound_float"] = to_double(bound);
      write_file(fs::path(o.out_dir) / "report.json", j.dump(2) + "\n");
    }
    return 0;
  } else if (o.claim == "nonconvex") {
    const NonconvexityReport nc = verify_nonconvexity();
    rep = nc.report;
    auto arr = [](const std::vector<Rational>& v) {
      ojson a = ojson::array();
      for (const auto& r : v) a.push_back(frac_str(r));
      return a;
    };
    extra["products_a5"] = arr(nc.products_a5);
    extra["products_a4"] = arr(nc.products_a4);
    extra["products_a3"] = arr(nc.products_a3);
    extra["products_b5"] = arr(nc.products_b5);
    extra["products_b4"] = arr(nc.products_b4);
    extra["products_b3"] = arr(nc.products_b3);
    extra["y_mid"] = arr(nc.y_mid);
    extra["products_mid5"] = arr(nc.products_mid5);
    extra["products_mid4"] = arr(nc.products_mid4);
  } else {  // uniform-subopt
    rep = verify_uniform_suboptimality();
  }
  ojson j = verification_report_json(rep);
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else print_report_text(rep);
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    write_file(fs::path(o.out_dir) / "report.json", j.dump(2) + "\n");
  }
  return report_exit(rep);
}

// ---------------------------------------------------------------------------
// bench-learners

struct BenchOpts {
  long long T = 20000;
  std::uint64_t seed = 1;
  std::string dist_path;
  std::string out_dir;
  std::string format = "text";
};

int cmd_bench(const BenchOpts& o) {
  const ValueDistribution d =
      o.dist_path.empty() ? uniform4() : load_dist(o.dist_path);
  ojson rows = ojson::array();
  std::cout << "second-price benchmark: learner vs truthful opponent, T=" << o.T
            << "\n";
  for (Algo algo : {Algo::kMw, Algo::kFtl, Algo::kFtpl}) {
    for (bool clever : {false, true}) {
      SimulationConfig cfg;
      cfg.dist = d;
      cfg.n = 2;
      cfg.T = o.T;
      cfg.auction = AuctionKind::kSpaReserve;
      cfg.reserve = Rational(0);
      cfg.buyers.resize(2);
      cfg.buyers[0].kind = BuyerKind::kLearner;
      cfg.buyers[0].learner.algo = algo;
      cfg.buyers[0].learner.clever = clever;
      cfg.buyers[1].kind = BuyerKind::kScriptedTruthful;
      cfg.seed = o.seed;
      cfg.record_rounds = false;
      cfg.record_sigma = false;
      const auto t0 = std::chrono::steady_clock::now();
      const SimulationTrace tr = run(cfg);
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      const double reg = regret(tr, 0);
      ojson row;
      row["algo"] = to_string(algo);
      row["clever"] = clever;
      row["regret"] = reg;
      row["utility"] = to_double(tr.utility_exact[0]);
      row["revenue"] = to_double(tr.revenue_exact);
      row["seconds"] = secs;
      rows.push_back(std::move(row));
      std::ostringstream line;
      line << "  " << to_string(algo) << (clever ? " clever" : "       ")
           << "  regret=" << reg << "  utility=" << to_double(tr.utility_exact[0])
           << "  revenue=" << to_double(tr.revenue_exact) << "  (" << secs
           << "s)";
      std::cout << line.str() << "\n";
    }
  }
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    ojson j;
    j["format"] = 1;
    j["T"] = o.T;
    j["seed"] = o.seed;
    j["rows"] = std::move(rows);
    write_file(fs::path(o.out_dir) / "bench.json", j.dump(2) + "\n");
  } else if (o.format == "json") {
    ojson j;
    j["format"] = 1;
    j["T"] = o.T;
    j["seed"] = o.seed;
    j["rows"] = std::move(rows);
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"repeated-auction simulator, LP solver and claim checker"};
  app.require_subcommand(1);

  SimulateOpts so;
  CLI::App* sim = app.add_subcommand("simulate", "run a configured simulation");
  sim->add_option("--config", so.config_path, "experiment config JSON")
      ->required();
  sim->add_option("--out", so.out_dir, "output directory (default .)");
  std::uint64_t seed_flag = 0;
  int trials_flag = 0;
  CLI::Option* seed_opt =
      sim->add_option("--seed", seed_flag, "override the config seed");
  CLI::Option* trials_opt =
      sim->add_option("--trials", trials_flag, "override the config trial count");
  sim->add_option("--jobs", so.jobs, "worker threads for trials (default 1)");
  sim->add_option("--format", so.format, "stdout style: text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  LpOpts lo;
  CLI::App* lp = app.add_subcommand("lp", "solve a revenue program");
  lp->add_option("problem", lo.problem, "single|border|uniform|fill|slprev")
      ->required()
      ->check(CLI::IsMember({"single", "border", "uniform", "fill", "slprev"}));
  lp->add_option("--dist", lo.dist_path, "value distribution JSON");
  lp->add_option("--n", lo.n, "number of buyers (border/uniform)");
  lp->add_option("--H", lo.H, "equal-revenue truncation (slprev)");
  lp->add_option("--grid", lo.grid, "grid points (slprev, default 2000)");
  lp->add_option("--out", lo.out_dir, "also write solution.json here");
  lp->add_option("--format", lo.format, "stdout style: text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  VerifyOpts vo;
  CLI::App* ver = app.add_subcommand("verify", "check a closed-form claim");
  ver->add_option("claim", vo.claim,
                  "counterexample|nonconvex|samebid|uniform-subopt")
      ->required()
      ->check(CLI::IsMember(
          {"counterexample", "nonconvex", "samebid", "uniform-subopt"}));
  ver->add_option("--delta", vo.delta, "gap parameter (counterexample)");
  ver->add_option("--M", vo.M, "top value (counterexample, default 10)");
  ver->add_option("--qS", vo.qS, "probability of the shared bid (samebid)");
  ver->add_option("--n", vo.n, "number of buyers (samebid)");
  ver->add_option("--out", vo.out_dir, "also write report.json here");
  ver->add_option("--format", vo.format, "stdout style: text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  BenchOpts bo;
  CLI::App* bench =
      app.add_subcommand("bench-learners", "time the learning algorithms");
  bench->add_option("--T", bo.T, "rounds per run (default 20000)");
  bench->add_option("--seed", bo.seed, "base seed (default 1)");
  bench->add_option("--dist", bo.dist_path, "value distribution JSON");
  bench->add_option("--out", bo.out_dir, "write bench.json here");
  bench->add_option("--format", bo.format, "stdout style: text or json")
      ->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    emit_json_error(e.what());
    return 1;
  }

  try {
    if (*sim) {
      if (*seed_opt) so.seed = seed_flag;
      if (*trials_opt) so.trials = trials_flag;
      return cmd_simulate(so);
    }
    if (*lp) return cmd_lp(lo);
    if (*ver) return cmd_verify(vo);
    if (*bench) return cmd_bench(bo);
  } catch (const std::exception& e) {
    emit_json_error(e.what());
    return 1;
  }
  emit_json_error("no command given");
  return 1;
}
