#ifndef NOREGRET_JSON_IO_HPP_
#define NOREGRET_JSON_IO_HPP_

// JSON and CSV serialization: experiment configs (with schema validation and
// unknown-key rejection), run summaries, trace tables, LP solutions and
// verification reports. Exact values travel as fraction strings ("3/4").

#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "noregret/auctions.hpp"
#include "noregret/engine.hpp"
#include "noregret/lp.hpp"
#include "noregret/verify.hpp"

namespace noregret {

using ojson = nlohmann::ordered_json;

enum class NumericMode { kFloat, kRational };

// NOREGRET_NUMERIC={float,rational} overrides the caller's default
inline NumericMode numeric_mode_from_env(NumericMode fallback) {
  const char* v = std::getenv("NOREGRET_NUMERIC");
  if (!v) return fallback;
  std::string s(v);
  if (s == "float") return NumericMode::kFloat;
  if (s == "rational") return NumericMode::kRational;
  throw std::invalid_argument(
      "NOREGRET_NUMERIC must be 'float' or 'rational', got '" + s + "'");
}

inline std::string frac_str(const Rational& r) { return to_fraction_string(r); }

// ---------------------------------------------------------------------------
// schema-checked parsing helpers; errors accumulate as "path: problem"

namespace schema {

inline void err(std::vector<std::string>* errors, const std::string& path,
                const std::string& what) {
  errors->push_back(path + ": " + what);
}

inline bool require_object(const ojson& j, const std::string& path,
                           std::vector<std::string>* errors) {
  if (j.is_object()) return true;
  err(errors, path, "expected an object");
  return false;
}

// unknown keys are rejected so typos cannot silently change an experiment
inline void check_keys(const ojson& j, const std::set<std::string>& allowed,
                       const std::string& path,
                       std::vector<std::string>* errors) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) err(errors, path + "." + it.key(), "unknown key");
}

inline Rational get_fraction(const ojson& j, const std::string& path,
                             std::vector<std::string>* errors,
                             const Rational& fallback) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_number_float()) return parse_rational(std::to_string(j.get<double>()));
  } catch (const std::exception& e) {
    err(errors, path, e.what());
    return fallback;
  }
  err(errors, path, "expected a fraction string or number");
  return fallback;
}

template <class T>
T get_num(const ojson& j, const std::string& path,
          std::vector<std::string>* errors, T fallback) {
  if (j.is_number()) return j.get<T>();
  err(errors, path, "expected a number");
  return fallback;
}

inline bool get_bool(const ojson& j, const std::string& path,
                     std::vector<std::string>* errors, bool fallback) {
  if (j.is_boolean()) return j.get<bool>();
  err(errors, path, "expected a boolean");
  return fallback;
}

inline std::string get_str(const ojson& j, const std::string& path,
                           std::vector<std::string>* errors,
                           const std::string& fallback) {
  if (j.is_string()) return j.get<std::string>();
  err(errors, path, "expected a string");
  return fallback;
}

}  // namespace schema

// ---------------------------------------------------------------------------
// value distribution

inline ojson dist_to_json(const ValueDistribution& d) {
  ojson j;
  ojson sup = ojson::array(), pr = ojson::array();
  for (int i = 0; i < d.m(); ++i) {
    sup.push_back(frac_str(d.support(i)));
    pr.push_back(frac_str(d.prob(i)));
  }
  j["support"] = std::move(sup);
  j["probs"] = std::move(pr);
  return j;
}

inline std::optional<ValueDistribution> dist_from_json(
    const ojson& j, const std::string& path,
    std::vector<std::string>* errors) {
  if (!schema::require_object(j, path, errors)) return std::nullopt;
  schema::check_keys(j, {"support", "probs"}, path, errors);
  if (!j.contains("support") || !j.contains("probs")) {
    schema::err(errors, path, "needs 'support' and 'probs' arrays");
    return std::nullopt;
  }
  const ojson& sup = j["support"];
  const ojson& pr = j["probs"];
  if (!sup.is_array() || !pr.is_array() || sup.size() != pr.size() ||
      sup.empty()) {
    schema::err(errors, path,
                "'support' and 'probs' must be equal-length nonempty arrays");
    return std::nullopt;
  }
  std::vector<Rational> w, q;
  for (size_t i = 0; i < sup.size(); ++i) {
    w.push_back(schema::get_fraction(
        sup[i], path + ".support[" + std::to_string(i) + "]", errors, Rational(1)));
    q.push_back(schema::get_fraction(
        pr[i], path + ".probs[" + std::to_string(i) + "]", errors, Rational(0)));
  }
  if (!errors->empty()) return std::nullopt;
  try {
    return ValueDistribution(std::move(w), std::move(q));
  } catch (const std::exception& e) {
    schema::err(errors, path, e.what());
    return std::nullopt;
  }
}

// convenience for CLI --dist files: accepts either a bare distribution
// object or one wrapped under a "distribution" key
inline std::optional<ValueDistribution> dist_from_document(
    const std::string& text, std::vector<std::string>* errors) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    schema::err(errors, "$", std::string("malformed JSON: ") + e.what());
    return std::nullopt;
  }
  if (j.is_object() && j.contains("distribution"))
    return dist_from_json(j["distribution"], "$.distribution", errors);
  return dist_from_json(j, "$", errors);
}

// ---------------------------------------------------------------------------
// buyers

inline const char* to_string(BuyerKind k) {
  switch (k) {
    case BuyerKind::kLearner: return "learner";
    case BuyerKind::kScriptedIntended: return "intended";
    case BuyerKind::kScriptedTruthful: return "truthful";
    case BuyerKind::kScriptedFixedArm: return "fixed_arm";
    case BuyerKind::kScriptedWorstArm: return "worst_arm";
  }
  return "learner";
}

inline ojson buyer_to_json(const BuyerSpec& b) {
  ojson j;
  j["kind"] = to_string(b.kind);
  if (b.kind == BuyerKind::kLearner) {
    j["algo"] = to_string(b.learner.algo);
    j["clever"] = b.learner.clever;
    j["gamma"] = b.learner.gamma;
    j["learning_rate"] = b.learner.learning_rate;
    j["recency_eta"] = b.learner.recency_eta;
    j["k_switch"] = b.learner.k_switch;
  }
  if (b.kind == BuyerKind::kScriptedFixedArm) j["fixed_arm"] = b.fixed_arm;
  return j;
}

inline BuyerSpec buyer_from_json(const ojson& j, const std::string& path,
                                 std::vector<std::string>* errors) {
  BuyerSpec b;
  if (!schema::require_object(j, path, errors)) return b;
  schema::check_keys(j,
                     {"kind", "algo", "clever", "gamma", "learning_rate",
                      "recency_eta", "k_switch", "fixed_arm"},
                     path, errors);
  std::string kind = j.contains("kind")
                         ? schema::get_str(j["kind"], path + ".kind", errors,
                                           "learner")
                         : "learner";
  if (kind == "learner") b.kind = BuyerKind::kLearner;
  else if (kind == "intended") b.kind = BuyerKind::kScriptedIntended;
  else if (kind == "truthful") b.kind = BuyerKind::kScriptedTruthful;
  else if (kind == "fixed_arm") b.kind = BuyerKind::kScriptedFixedArm;
  else if (kind == "worst_arm") b.kind = BuyerKind::kScriptedWorstArm;
  else schema::err(errors, path + ".kind", "unknown buyer kind '" + kind + "'");
  if (b.kind != BuyerKind::kLearner)
    for (const char* k : {"algo", "clever", "gamma", "learning_rate",
                          "recency_eta", "k_switch"})
      if (j.contains(k))
        schema::err(errors, path + "." + k, "only valid for kind 'learner'");
  if (j.contains("algo")) {
    std::string a = schema::get_str(j["algo"], path + ".algo", errors, "mw");
    if (a == "mw") b.learner.algo = Algo::kMw;
    else if (a == "ftl") b.learner.algo = Algo::kFtl;
    else if (a == "ftpl") b.learner.algo = Algo::kFtpl;
    else schema::err(errors, path + ".algo", "unknown algorithm '" + a + "'");
  }
  if (j.contains("clever"))
    b.learner.clever = schema::get_bool(j["clever"], path + ".clever", errors, false);
  if (j.contains("gamma"))
    b.learner.gamma = schema::get_num<double>(j["gamma"], path + ".gamma", errors, -1);
  if (j.contains("learning_rate"))
    b.learner.learning_rate = schema::get_num<double>(
        j["learning_rate"], path + ".learning_rate", errors, -1);
  if (j.contains("recency_eta"))
    b.learner.recency_eta = schema::get_num<double>(
        j["recency_eta"], path + ".recency_eta", errors, 1.0);
  if (j.contains("k_switch"))
    b.learner.k_switch = schema::get_num<int>(j["k_switch"], path + ".k_switch",
                                              errors, -1);
  if (j.contains("fixed_arm")) {
    if (b.kind != BuyerKind::kScriptedFixedArm)
      schema::err(errors, path + ".fixed_arm", "only valid for kind 'fixed_arm'");
    b.fixed_arm = schema::get_num<int>(j["fixed_arm"], path + ".fixed_arm",
                                       errors, 0);
  }
  return b;
}

// ---------------------------------------------------------------------------
// reserve schedules for the declining-reserve auction are configured by a
// compact descriptor, expanded to a length-T schedule when the run starts

struct ScheduleSpec {
  enum class Kind { kNone, kConstant, kFromLp, kExplicit };
  Kind kind = Kind::kNone;
  Rational reserve;             // kConstant
  std::vector<Rational> x;      // kFromLp: target interim allocation
  std::vector<Rational> values; // kExplicit (repeated cyclically to length T)
};

inline ojson schedule_to_json(const ScheduleSpec& s) {
  ojson j;
  switch (s.kind) {
    case ScheduleSpec::Kind::kNone: break;
    case ScheduleSpec::Kind::kConstant:
      j["kind"] = "constant";
      j["reserve"] = frac_str(s.reserve);
      break;
    case ScheduleSpec::Kind::kFromLp: {
      j["kind"] = "from_lp";
      ojson arr = ojson::array();
      for (const auto& v : s.x) arr.push_back(frac_str(v));
      j["x"] = std::move(arr);
      break;
    }
    case ScheduleSpec::Kind::kExplicit: {
      j["kind"] = "explicit";
      ojson arr = ojson::array();
      for (const auto& v : s.values) arr.push_back(frac_str(v));
      j["values"] = std::move(arr);
      break;
    }
  }
  return j;
}

inline ScheduleSpec schedule_from_json(const ojson& j, const std::string& path,
                                       std::vector<std::string>* errors) {
  ScheduleSpec s;
  if (!schema::require_object(j, path, errors)) return s;
  schema::check_keys(j, {"kind", "reserve", "x", "values"}, path, errors);
  std::string kind =
      j.contains("kind") ? schema::get_str(j["kind"], path + ".kind", errors, "")
                         : "";
  auto read_fracs = [&](const char* key) {
    std::vector<Rational> out;
    if (!j.contains(key) || !j[key].is_array()) {
      schema::err(errors, path + "." + key, "expected an array of fractions");
      return out;
    }
    size_t i = 0;
    for (const auto& e : j[key])
      out.push_back(schema::get_fraction(
          e, path + "." + key + "[" + std::to_string(i++) + "]", errors,
          Rational(0)));
    return out;
  };
  if (kind == "constant") {
    s.kind = ScheduleSpec::Kind::kConstant;
    if (j.contains("reserve"))
      s.reserve = schema::get_fraction(j["reserve"], path + ".reserve", errors,
                                       Rational(0));
    else
      schema::err(errors, path, "constant schedule needs 'reserve'");
  } else if (kind == "from_lp") {
    s.kind = ScheduleSpec::Kind::kFromLp;
    s.x = read_fracs("x");
  } else if (kind == "explicit") {
    s.kind = ScheduleSpec::Kind::kExplicit;
    s.values = read_fracs("values");
  } else {
    schema::err(errors, path + ".kind",
                "expected 'constant', 'from_lp' or 'explicit'");
  }
  return s;
}

// ---------------------------------------------------------------------------
// experiment config (the simulate schema)

struct ExperimentConfig {
  SimulationConfig sim;
  ScheduleSpec schedule_spec;
  int trials = 1;
  int jobs = 1;
  std::string out_dir = ".";
  std::string format = "json";
};

inline const char* to_string(ValueMode v) {
  return v == ValueMode::kIid ? "iid" : "fixed";
}

// full effective config echo; feeding this back reproduces the run
inline ojson experiment_to_json(const ExperimentConfig& e) {
  const SimulationConfig& c = e.sim;
  ojson j;
  j["format"] = 1;
  j["command"] = "simulate";
  j["auction"] = to_string(c.auction);
  j["distribution"] = dist_to_json(c.dist);
  j["n"] = c.n;
  j["T"] = c.T;
  if (c.auction == AuctionKind::kFse) {
    j["P"] = c.P;
    if (c.welfare_delta > 0) j["welfare_delta"] = c.welfare_delta;
  }
  j["epsilon"] = frac_str(c.epsilon);
  if (c.auction == AuctionKind::kSpaReserve)
    j["reserve"] = frac_str(c.reserve);
  if (e.schedule_spec.kind != ScheduleSpec::Kind::kNone)
    j["schedule"] = schedule_to_json(e.schedule_spec);
  ojson buyers = ojson::array();
  for (const auto& b : c.buyers) buyers.push_back(buyer_to_json(b));
  j["buyers"] = std::move(buyers);
  j["value_mode"] = to_string(c.value_mode);
  if (c.value_mode == ValueMode::kFixed) j["fixed_values"] = c.fixed_values;
  j["seed"] = c.seed;
  j["trials"] = e.trials;
  j["record_rounds"] = c.record_rounds;
  j["record_sigma"] = c.record_sigma;
  j["snapshot_every"] = c.snapshot_every;
  return j;
}

struct ParseOutcome {
  std::optional<ExperimentConfig> config;
  std::vector<std::string> errors;
  bool ok() const { return errors.empty() && config.has_value(); }
};

// validates the whole document; on failure 'errors' lists every schema
// problem with its JSON path
inline ParseOutcome parse_config(const std::string& text) {
  ParseOutcome out;
  std::vector<std::string>* errors = &out.errors;
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& e) {
    schema::err(errors, "$", std::string("malformed JSON: ") + e.what());
    return out;
  }
  if (!schema::require_object(j, "$", errors)) return out;
  schema::check_keys(
      j,
      {"format", "command", "auction", "distribution", "n", "T", "P",
       "welfare_delta", "epsilon", "reserve", "schedule", "buyers",
       "value_mode", "fixed_values", "seed", "trials", "record_rounds",
       "record_sigma", "snapshot_every"},
      "$", errors);
  ExperimentConfig e;
  SimulationConfig& c = e.sim;
  if (j.contains("format")) {
    int f = schema::get_num<int>(j["format"], "$.format", errors, 1);
    if (f != 1) schema::err(errors, "$.format", "unsupported format version");
  }
  if (j.contains("command")) {
    std::string cmd = schema::get_str(j["command"], "$.command", errors, "simulate");
    if (cmd != "simulate")
      schema::err(errors, "$.command", "config documents drive 'simulate' only");
  }
  if (j.contains("distribution")) {
    auto d = dist_from_json(j["distribution"], "$.distribution", errors);
    if (d) c.dist = *d;
  }
  std::string auction =
      j.contains("auction")
          ? schema::get_str(j["auction"], "$.auction", errors, "fse")
          : "fse";
  if (auction == "fse") c.auction = AuctionKind::kFse;
  else if (auction == "spa_reserve") c.auction = AuctionKind::kSpaReserve;
  else if (auction == "uniform_declining") c.auction = AuctionKind::kUniformDeclining;
  else if (auction == "null") c.auction = AuctionKind::kNull;
  else schema::err(errors, "$.auction", "unknown auction '" + auction + "'");
  if (j.contains("n")) c.n = schema::get_num<int>(j["n"], "$.n", errors, 2);
  if (j.contains("T")) c.T = schema::get_num<long long>(j["T"], "$.T", errors, 0);
  if (j.contains("P")) c.P = schema::get_num<int>(j["P"], "$.P", errors, 0);
  if (j.contains("welfare_delta"))
    c.welfare_delta = schema::get_num<double>(j["welfare_delta"],
                                              "$.welfare_delta", errors, 0);
  if (j.contains("epsilon"))
    c.epsilon = schema::get_fraction(j["epsilon"], "$.epsilon", errors,
                                     Rational(-1));
  if (j.contains("reserve"))
    c.reserve = schema::get_fraction(j["reserve"], "$.reserve", errors,
                                     Rational(0));
  if (j.contains("schedule"))
    e.schedule_spec = schedule_from_json(j["schedule"], "$.schedule", errors);
  if (j.contains("buyers")) {
    if (!j["buyers"].is_array() || j["buyers"].empty()) {
      schema::err(errors, "$.buyers", "expected a nonempty array");
    } else {
      c.buyers.clear();
      size_t i = 0;
      for (const auto& b : j["buyers"])
        c.buyers.push_back(
            buyer_from_json(b, "$.buyers[" + std::to_string(i++) + "]", errors));
    }
  }
  if (j.contains("value_mode")) {
    std::string v = schema::get_str(j["value_mode"], "$.value_mode", errors, "iid");
    if (v == "iid") c.value_mode = ValueMode::kIid;
    else if (v == "fixed") c.value_mode = ValueMode::kFixed;
    else schema::err(errors, "$.value_mode", "expected 'iid' or 'fixed'");
  }
  if (j.contains("fixed_values")) {
    if (!j["fixed_values"].is_array()) {
      schema::err(errors, "$.fixed_values", "expected an array of value indices");
    } else {
      c.fixed_values.clear();
      size_t i = 0;
      for (const auto& v : j["fixed_values"])
        c.fixed_values.push_back(schema::get_num<int>(
            v, "$.fixed_values[" + std::to_string(i++) + "]", errors, 0));
    }
  }
  if (j.contains("seed"))
    c.seed = schema::get_num<std::uint64_t>(j["seed"], "$.seed", errors, 1);
  if (j.contains("trials")) {
    e.trials = schema::get_num<int>(j["trials"], "$.trials", errors, 1);
    c.trials = e.trials;
  }
  if (j.contains("record_rounds"))
    c.record_rounds = schema::get_bool(j["record_rounds"], "$.record_rounds",
                                       errors, true);
  if (j.contains("record_sigma"))
    c.record_sigma = schema::get_bool(j["record_sigma"], "$.record_sigma",
                                      errors, true);
  if (j.contains("snapshot_every"))
    c.snapshot_every = schema::get_num<long long>(
        j["snapshot_every"], "$.snapshot_every", errors, 0);
  if (!errors->empty()) return out;

  // cross-field invariants, checked here so config errors carry paths
  if (c.T < 0) schema::err(errors, "$.T", "T must be nonnegative");
  if (e.trials < 0) schema::err(errors, "$.trials", "trials must be nonnegative");
  if (c.n < 1) schema::err(errors, "$.n", "need at least one buyer");
  if (c.auction == AuctionKind::kFse && c.T > 0) {
    if (c.P < c.dist.m())
      schema::err(errors, "$.P",
                  "FseConfig invariant: P must be at least m");
    else if (c.P < 1 || c.T % (2LL * c.P) != 0)
      schema::err(errors, "$.T",
                  "FseConfig invariant violated: T = 2*R*P needs P to divide "
                  "T/2 (T=" + std::to_string(c.T) + ", P=" + std::to_string(c.P) + ")");
    else if (c.epsilon < 0)
      c.epsilon = c.dist.support(c.dist.m() - 1) / 1000000000;
  }
  if (c.auction != AuctionKind::kFse && c.epsilon < 0) c.epsilon = Rational(0);
  if (c.auction == AuctionKind::kUniformDeclining &&
      e.schedule_spec.kind == ScheduleSpec::Kind::kNone)
    schema::err(errors, "$.schedule",
                "the declining-reserve auction needs a schedule");
  if (c.value_mode == ValueMode::kFixed &&
      static_cast<int>(c.fixed_values.size()) != c.n)
    schema::err(errors, "$.fixed_values",
                "fixed value mode needs one value index per buyer");
  if (!errors->empty()) return out;
  out.config = std::move(e);
  return out;
}

// expand the schedule descriptor into the engine's per-round reserve list
inline void materialize_schedule(ExperimentConfig* e) {
  SimulationConfig& c = e->sim;
  if (c.auction != AuctionKind::kUniformDeclining) return;
  const ScheduleSpec& s = e->schedule_spec;
  switch (s.kind) {
    case ScheduleSpec::Kind::kConstant:
      c.schedule.assign(static_cast<size_t>(c.T), s.reserve);
      break;
    case ScheduleSpec::Kind::kFromLp:
      c.schedule = reserve_schedule_from_lp<Rational>(c.dist, c.n, c.T, s.x);
      break;
    case ScheduleSpec::Kind::kExplicit: {
      if (s.values.empty())
        throw std::invalid_argument("explicit schedule must not be empty");
      c.schedule.resize(static_cast<size_t>(c.T));
      for (long long t = 0; t < c.T; ++t)
        c.schedule[static_cast<size_t>(t)] =
            s.values[static_cast<size_t>(t) % s.values.size()];
      break;
    }
    case ScheduleSpec::Kind::kNone:
      break;
  }
}

// ---------------------------------------------------------------------------
// trace emission

// plot-ready table, one row per step: step, per-buyer values/arms, winner,
// per-buyer payments, then running revenue / welfare / per-buyer utility
inline void write_trace_csv(std::ostream& os, const SimulationTrace& tr,
                            const ValueDistribution& d) {
  if (!tr.has_rounds)
    throw std::invalid_argument("trace has no per-round rows to export");
  const int n = tr.n;
  os << "t";
  for (int b = 0; b < n; ++b) os << ",value_" << b;
  for (int b = 0; b < n; ++b) os << ",arm_" << b;
  os << ",winner";
  for (int b = 0; b < n; ++b) os << ",payment_" << b;
  os << ",revenue,welfare";
  for (int b = 0; b < n; ++b) os << ",utility_" << b;
  os << "\n";
  double revenue = 0, welfare = 0;
  std::vector<double> utility(n, 0.0);
  for (long long t = 0; t < tr.T; ++t) {
    os << t;
    for (int b = 0; b < n; ++b)
      os << ',' << d.support_d(tr.row_value[t * n + b]);
    for (int b = 0; b < n; ++b) os << ',' << tr.row_arm[t * n + b];
    const int w = tr.row_winner[t];
    os << ',' << w;
    const double pay = tr.row_payment[t];
    for (int b = 0; b < n; ++b) os << ',' << (b == w ? pay : 0.0);
    if (w >= 0) {
      revenue += pay;
      const double v = d.support_d(tr.row_value[t * n + w]);
      welfare += v;
      utility[w] += v - pay;
    }
    os << ',' << revenue << ',' << welfare;
    for (int b = 0; b < n; ++b) os << ',' << utility[b];
    os << "\n";
  }
}

// ---------------------------------------------------------------------------
// run summaries

inline ojson phase_report_json(const SimulationTrace& tr) {
  ojson arr = ojson::array();
  for (size_t i = 0; i < tr.phases.size(); ++i) {
    const PhaseStats& ph = tr.phases[i];
    ojson p;
    p["phase"] = i + 1;
    p["rounds"] = ph.rounds;
    p["revenue"] = ph.revenue;
    p["welfare"] = ph.welfare;
    p["sales"] = ph.sales;
    p["intended_rate"] =
        ph.buyer_rounds ? static_cast<double>(ph.intended_pulls) /
                              static_cast<double>(ph.buyer_rounds)
                        : 0.0;
    p["highest_wins_rate"] =
        ph.unique_max_rounds ? static_cast<double>(ph.highest_wins) /
                                   static_cast<double>(ph.unique_max_rounds)
                             : 0.0;
    ojson ub = ojson::array();
    for (const auto& u : ph.utility_by_buyer) ub.push_back(frac_str(u));
    p["utility_by_buyer"] = std::move(ub);
    p["utility_by_value"] = ph.utility_by_value;
    arr.push_back(std::move(p));
  }
  return arr;
}

inline ojson trial_summary_json(const SimulationTrace& tr) {
  ojson j;
  j["seed"] = tr.seed;
  j["rounds"] = tr.T;
  j["revenue"] = frac_str(tr.revenue_exact);
  j["revenue_float"] = to_double(tr.revenue_exact);
  j["welfare"] = frac_str(tr.welfare_exact);
  j["welfare_float"] = to_double(tr.welfare_exact);
  ojson ue = ojson::array(), uf = ojson::array(), rg = ojson::array();
  for (int b = 0; b < tr.n; ++b) {
    ue.push_back(frac_str(tr.utility_exact[b]));
    uf.push_back(to_double(tr.utility_exact[b]));
    rg.push_back(tr.T > 0 ? regret(tr, b) : 0.0);
  }
  j["utility"] = std::move(ue);
  j["utility_float"] = std::move(uf);
  j["regret"] = std::move(rg);
  j["accounting_identity_all_prefixes"] = tr.identity_all_prefixes;
  j["counterfactual_alloc_mismatches"] = tr.cf_alloc_mismatches;
  j["counterfactual_payment_max_err"] = tr.cf_payment_max_err;
  if (tr.kind == AuctionKind::kFse) {
    j["P"] = tr.P;
    j["R"] = tr.R;
    j["phase_report"] = phase_report_json(tr);
  }
  return j;
}

inline ojson simulate_summary_json(const ExperimentConfig& e,
                                   const std::vector<SimulationTrace>& trials) {
  ojson j;
  j["format"] = 1;
  j["config"] = experiment_to_json(e);
  j["trials"] = static_cast<int>(trials.size());
  double rev = 0, wel = 0;
  ojson arr = ojson::array();
  for (const auto& tr : trials) {
    rev += to_double(tr.revenue_exact);
    wel += to_double(tr.welfare_exact);
    arr.push_back(trial_summary_json(tr));
  }
  if (!trials.empty()) {
    j["mean_revenue"] = rev / static_cast<double>(trials.size());
    j["mean_welfare"] = wel / static_cast<double>(trials.size());
  }
  j["runs"] = std::move(arr);
  return j;
}

// ---------------------------------------------------------------------------
// LP solutions and verification reports

template <class S>
ojson lp_solution_json(const std::string& problem, const LpSolution<S>& sol,
                       bool rational) {
  ojson j;
  j["format"] = 1;
  j["problem"] = problem;
  j["numeric"] = rational ? "rational" : "float";
  j["status"] = to_string(sol.status);
  if (sol.status != LpStatus::kOptimal) return j;
  if (rational) j["objective"] = to_fraction_string(Rational(sol.objective));
  j["objective_float"] = to_double(sol.objective);
  if (!sol.value_only) {
    ojson x = ojson::array(), u = ojson::array();
    for (const auto& v : sol.x) {
      if (rational) x.push_back(to_fraction_string(Rational(v)));
      else x.push_back(to_double(v));
    }
    for (const auto& v : sol.u) {
      if (rational) u.push_back(to_fraction_string(Rational(v)));
      else u.push_back(to_double(v));
    }
    j["x"] = std::move(x);
    j["u"] = std::move(u);
  } else {
    j["value_only"] = true;
  }
  return j;
}

inline ojson verification_report_json(const VerificationReport& rep) {
  ojson j;
  j["format"] = 1;
  j["claim"] = rep.claim;
  j["pass"] = rep.pass;
  ojson checks = ojson::array();
  for (const auto& c : rep.checks) {
    ojson e;
    e["description"] = c.description;
    e["lhs"] = frac_str(c.lhs);
    e["rhs"] = frac_str(c.rhs);
    e["relation"] = c.strict ? ">" : ">=";
    e["holds"] = c.holds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

}  // namespace noregret

#endif  // NOREGRET_JSON_IO_HPP_
