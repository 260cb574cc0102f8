#ifndef NOREGRET_ENGINE_HPP_
#define NOREGRET_ENGINE_HPP_

// repeated-auction simulator: draws buyer values, runs learning or scripted
// buyers against a mechanism for T rounds, and produces traces with exact
// revenue/welfare/utility accounting, full counterfactual cumulative-payoff
// tables, per-phase reports, and sigma snapshots for mean-based audits.
//
// determinism: every random draw is a pure function of (seed, purpose,
// round, buyer), so a trace is reproducible regardless of scheduling; the
// counterfactual tables reuse the realized rounds' tie priorities and
// lottery draws, so re-resolving a round under a different own arm is
// exactly coupled to what actually happened.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "noregret/auctions.hpp"
#include "noregret/core.hpp"
#include "noregret/distribution.hpp"
#include "noregret/learners.hpp"
#include "noregret/rational.hpp"
#include "noregret/rng.hpp"

namespace noregret {

enum class AuctionKind { kFse, kSpaReserve, kUniformDeclining, kNull };

inline const char* to_string(AuctionKind k) {
  switch (k) {
    case AuctionKind::kFse: return "fse";
    case AuctionKind::kSpaReserve: return "spa_reserve";
    case AuctionKind::kUniformDeclining: return "uniform_declining";
    case AuctionKind::kNull: return "null";
  }
  return "?";
}

enum class BuyerKind {
  kLearner,
  kScriptedIntended,  // always pulls the intended arm (phased auction only)
  kScriptedTruthful,  // bid ladder: always bids own value
  kScriptedFixedArm,
  kScriptedWorstArm,  // pulls the argmin-sigma arm: mean-based negative control
};

struct BuyerSpec {
  BuyerKind kind = BuyerKind::kLearner;
  LearnerConfig learner;
  int fixed_arm = 0;
};

enum class ValueMode { kIid, kFixed };

struct SimulationConfig {
  ValueDistribution dist = uniform4();
  int n = 2;
  long long T = 0;
  AuctionKind auction = AuctionKind::kFse;
  int P = 0;                        // phased auction
  Rational epsilon = Rational(-1);  // <0: mechanism default
  double welfare_delta = 0;
  Rational reserve = Rational(0);   // second-price reserve
  std::vector<Rational> schedule;   // declining reserves (uniform auction)
  std::vector<BuyerSpec> buyers;    // size n, or size 1 shared
  std::uint64_t seed = 1;
  int trials = 1;
  bool record_sigma = true;
  long long snapshot_every = 0;  // 0: ceil(T/1000)
  bool record_rounds = true;
  ValueMode value_mode = ValueMode::kIid;
  std::vector<int> fixed_values;  // per-buyer support index when kFixed
};

struct PhaseStats {
  double revenue = 0;
  double welfare = 0;
  std::vector<double> utility_by_value;
  std::vector<Rational> utility_by_buyer;
  long long intended_pulls = 0;
  long long buyer_rounds = 0;
  long long rounds = 0;
  long long sales = 0;
  long long unique_max_rounds = 0;
  long long highest_wins = 0;
};

struct SigmaSnapshot {
  long long after_round = 0;          // rounds observed so far
  std::vector<float> sigma;           // [buyer][context][arm]
};

struct SimulationTrace {
  // instance echo
  int n = 0;
  long long T = 0;
  int m = 0;
  int K = 0;  // arm count including the null arm
  AuctionKind kind = AuctionKind::kNull;
  int P = 0;
  long long R = 0;
  Rational epsilon;
  double norm_B = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> arm_labels;
  std::vector<double> gamma;          // per buyer (learners; 0 otherwise)
  std::vector<double> learning_rate;  // per buyer
  std::vector<std::string> buyer_kind;

  // per-round rows (when recorded)
  bool has_rounds = false;
  std::vector<std::int8_t> row_value;    // [t*n + b]
  std::vector<std::int16_t> row_arm;     // [t*n + b]
  std::vector<std::int8_t> row_winner;   // [t], -1 none
  std::vector<double> row_payment;       // [t] winner's payment
  std::vector<float> row_gap;            // [t*n + b] pulled arm's sigma gap

  // exact aggregates and the prefix accounting identity
  Rational revenue_exact;
  Rational welfare_exact;
  std::vector<Rational> utility_exact;  // [b]
  bool identity_all_prefixes = true;
  long long identity_first_violation = -1;

  // counterfactual/realized consistency (allocation must match exactly;
  // payments within floating-point reconstruction error)
  long long cf_alloc_mismatches = 0;
  double cf_payment_max_err = 0;

  // cumulative payoff tables, original units
  std::vector<double> H_end;      // [b][c][a]
  std::vector<double> Htilde_end; // [b][c][a], rounds with realized c only
  std::vector<double> H_phase;    // [phase 0..P][b][c][a] (phased auction)
  std::vector<double> realized_utility_d;  // [b]

  // conditional estimators
  std::vector<long long> ctx_rounds;  // [b][c]
  std::vector<long long> ctx_wins;    // [b][c]
  std::vector<double> ctx_util;       // [b][c]
  std::vector<Rational> ctx_util_exact;  // [b][c]
  std::vector<long long> cf_wins;     // [b][a] counterfactual win counts

  std::vector<PhaseStats> phases;
  std::vector<SigmaSnapshot> sigma_snapshots;
  long long snapshot_every = 0;
  long long tie_surcharge_zero_rounds = 0;

  size_t hidx(int b, int c, int a) const {
    return (static_cast<size_t>(b) * m + c) * K + a;
  }
  double H(int b, int c, int a) const { return H_end[hidx(b, c, a)]; }
  double Htilde(int b, int c, int a) const {
    return Htilde_end[hidx(b, c, a)];
  }
  // H at the start of 1-based phase tau (phased auction traces)
  double H_at_phase_start(int tau, int b, int c, int a) const {
    return H_phase[(static_cast<size_t>(tau) - 1) * n * m * K +
                   hidx(b, c, a)];
  }
};

namespace detail {

// per-round, per-buyer counterfactual resolution shared by the realized and
// hypothetical paths. opponents' bids are fixed; own bid sweeps the arms.
struct OpponentView {
  double top = -1;       // highest opponent bid (-1: none)
  int top_count = 0;     // opponents at that bid
  double second = 0;     // highest opponent bid strictly below top
  std::uint64_t top_priority = 0;  // max priority among top opponents
  int qualifying = 0;              // opponents meeting the reserve (ladder)
  std::uint64_t qual_priority = 0; // max priority among them
};

inline OpponentView opponent_view(const std::vector<double>& bids,
                                  const std::vector<std::uint64_t>& prio,
                                  int self, double reserve,
                                  bool reserve_filter) {
  OpponentView v;
  const int n = static_cast<int>(bids.size());
  for (int o = 0; o < n; ++o) {
    if (o == self) continue;
    double b = bids[o];
    if (b < 0) continue;
    if (reserve_filter && b < reserve) continue;
    ++v.qualifying;
    v.qual_priority = std::max(v.qual_priority, prio[o]);
    if (b > v.top) {
      if (v.top > v.second) v.second = v.top;
      v.top = b;
      v.top_count = 1;
      v.top_priority = prio[o];
    } else if (b == v.top) {
      ++v.top_count;
      v.top_priority = std::max(v.top_priority, prio[o]);
    } else if (b > v.second) {
      v.second = b;
    }
  }
  return v;
}

}  // namespace detail

// the simulator; one instance runs one trial deterministically from its seed
class Engine {
 public:
  explicit Engine(SimulationConfig cfg) : cfg_(std::move(cfg)) { init(); }

  // the phased auction resolves each value draw twice — steps 2u and 2u+1
  // share the profile, the tie-break priorities and the lottery draw, and
  // differ only in the payment rule — so a buyer on its intended arm nets
  // exactly zero (plus the discount) over the pair. other auctions resolve
  // one step per draw.
  SimulationTrace run() {
    SimulationTrace tr;
    init_trace(&tr);
    std::vector<int> pulls(cfg_.n, 0);
    std::vector<int> ctx(cfg_.n, 0);
    std::vector<std::uint64_t> prio(cfg_.n, 0);
    std::vector<double> bids_d(cfg_.n, -1);
    // reusable normalized reward matrix [context][arm]
    std::vector<std::vector<double>> r_norm(
        m_, std::vector<double>(K_, 0.0));
    std::vector<double> win_arm(K_, 0.0), pay_arm(K_, 0.0);
    std::vector<double> pay_two(K_, 0.0);
    const int span = steps_per_unit();
    const long long units = cfg_.T / span;
    RoundOutcome out[2];

    for (long long u = 0; u < units; ++u) {
      const int tau = is_fse() ? static_cast<int>(u / fse_->R) + 1 : 0;
      const Rational* reserve_r = nullptr;
      if (cfg_.auction == AuctionKind::kSpaReserve) reserve_r = &cfg_.reserve;
      if (cfg_.auction == AuctionKind::kUniformDeclining)
        reserve_r = &cfg_.schedule[static_cast<size_t>(u)];
      const double reserve_d = reserve_r ? to_double(*reserve_r) : 0.0;

      // one value draw and one pull per buyer per unit
      for (int b = 0; b < cfg_.n; ++b) {
        ctx[b] = cfg_.value_mode == ValueMode::kFixed
                     ? cfg_.fixed_values[b]
                     : cfg_.dist.draw_index(uniform01(
                           cfg_.seed, rng_purpose::kValue, u, b));
      }
      for (int b = 0; b < cfg_.n; ++b) pulls[b] = select(b, ctx[b], u, tau);
      RoundRng rrng{cfg_.seed, static_cast<std::uint64_t>(u)};
      if (is_fse()) {
        out[0] = fse_round(*fse_, tau, Half::kFirst, pulls, rrng);
        out[1] = fse_round(*fse_, tau, Half::kSecond, pulls, rrng);
      } else {
        out[0] = resolve(tau, Half::kFirst, pulls, reserve_r, rrng);
      }
      // per-buyer priorities for the coupled counterfactuals
      for (int b = 0; b < cfg_.n; ++b) prio[b] = rrng.priority(b);
      for (int b = 0; b < cfg_.n; ++b)
        bids_d[b] = is_fse() ? fse_bid_d(pulls[b], tau)
                             : ladder_bid_d(pulls[b]);

      for (int s = 0; s < span; ++s) {
        const long long t = u * span + s;
        update_exact_accounting(tr, out[s], ctx, t);
        update_phase_stats(tr, out[s], ctx, pulls, tau);
        record_rows(tr, out[s], ctx, pulls, t);
        if (out[s].tie_surcharge_zero) ++tr.tie_surcharge_zero_rounds;
      }

      // counterfactual tables and observations, one table per unit with
      // every step of the unit folded in
      const double lottery_u = rrng.lottery_u();
      for (int b = 0; b < cfg_.n; ++b) {
        counterfactual_arms(b, tau, Half::kFirst, reserve_d, bids_d, prio,
                            lottery_u, &win_arm, &pay_arm);
        audit_consistency(tr, out[0], b, pulls[b], win_arm, pay_arm);
        if (span == 2) {
          // allocations match the first step (same priorities and lottery);
          // only the surcharge changes the payment column
          counterfactual_arms(b, tau, Half::kSecond, reserve_d, bids_d, prio,
                              lottery_u, &win_arm, &pay_two);
          audit_consistency(tr, out[1], b, pulls[b], win_arm, pay_two);
          for (int a = 0; a < K_; ++a) pay_arm[a] += pay_two[a];
        }
        accumulate_tables(tr, b, ctx[b], win_arm, pay_arm, span);
        // realized unit utility from the counterfactual row, so the table
        // row and the realized utility agree bit for bit
        const double r_real =
            span * win_arm[pulls[b]] * cfg_.dist.support_d(ctx[b]) -
            pay_arm[pulls[b]];
        tr.realized_utility_d[b] += r_real;
        tr.ctx_util[b * m_ + ctx[b]] += r_real;
        tr.ctx_rounds[b * m_ + ctx[b]] += span;
        if (learner_[b]) {
          if (tr.has_rounds) {
            const float g = static_cast<float>(
                learner_[b]->gap_to_best(ctx[b], pulls[b]));
            for (int s = 0; s < span; ++s)
              tr.row_gap[(u * span + s) * cfg_.n + b] = g;
          }
          for (int c = 0; c < m_; ++c)
            for (int a = 0; a < K_; ++a)
              r_norm[c][a] =
                  (span * win_arm[a] * cfg_.dist.support_d(c) - pay_arm[a]) /
                  tr.norm_B;
          learner_[b]->observe(r_norm, static_cast<int>(u) + 1);
        }
      }
      maybe_snapshot(tr, u * span + span - 1);
      if (is_fse() && (u + 1) % fse_->R == 0)
        snapshot_phase_table(tr, static_cast<int>((u + 1) / fse_->R));
    }
    return tr;
  }

  const FseConfig* fse_config() const {
    return fse_ ? &*fse_ : nullptr;
  }

 private:
  bool is_fse() const { return cfg_.auction == AuctionKind::kFse; }
  int steps_per_unit() const { return is_fse() ? 2 : 1; }

  void init() {
    if (cfg_.n < 1) throw std::invalid_argument("engine: n >= 1");
    if (cfg_.T < 1) throw std::invalid_argument("engine: T >= 1");
    if (cfg_.T > std::numeric_limits<int>::max())
      throw std::invalid_argument("engine: horizon exceeds supported range");
    m_ = cfg_.dist.m();
    if (cfg_.buyers.empty()) cfg_.buyers.assign(1, BuyerSpec{});
    if (static_cast<int>(cfg_.buyers.size()) == 1 && cfg_.n > 1)
      cfg_.buyers.assign(cfg_.n, cfg_.buyers[0]);
    if (static_cast<int>(cfg_.buyers.size()) != cfg_.n)
      throw std::invalid_argument("engine: one buyer spec per buyer");
    if (cfg_.value_mode == ValueMode::kFixed) {
      if (static_cast<int>(cfg_.fixed_values.size()) != cfg_.n)
        throw std::invalid_argument("engine: fixed values per buyer");
      for (int v : cfg_.fixed_values)
        if (v < 0 || v >= m_)
          throw std::invalid_argument("engine: fixed value out of range");
    }
    switch (cfg_.auction) {
      case AuctionKind::kFse: {
        Rational eps = cfg_.epsilon;
        fse_ = make_fse_config(cfg_.dist, cfg_.n, cfg_.T, cfg_.P, eps,
                               cfg_.welfare_delta);
        cfg_.epsilon = fse_->epsilon;
        K_ = cfg_.P + 1;
        labels_.assign(1, 0.0);
        for (int i = 1; i <= cfg_.P; ++i) labels_.push_back(fse_->label_d(i));
        // per-phase arm bids (double): -1 dormant, support for active,
        // retired sentinel above the top value
        bid_by_phase_.assign(static_cast<size_t>(cfg_.P + 1) * K_, -1.0);
        for (int tau = 1; tau <= cfg_.P; ++tau)
          for (int a = 0; a < K_; ++a) {
            auto st = arm_status(*fse_, a, tau);
            double v = -1;
            if (st.kind == ArmKind::kActive)
              v = cfg_.dist.support_d(st.bid_index);
            else if (st.kind == ArmKind::kRetired)
              v = to_double(fse_->retired_bid());
            bid_by_phase_[static_cast<size_t>(tau) * K_ + a] = v;
          }
        break;
      }
      case AuctionKind::kSpaReserve:
      case AuctionKind::kUniformDeclining:
      case AuctionKind::kNull: {
        if (cfg_.epsilon < 0) cfg_.epsilon = Rational(0);
        K_ = m_ + 1;
        labels_.assign(1, 0.0);
        for (int j = 0; j < m_; ++j) labels_.push_back(cfg_.dist.support_d(j));
        if (cfg_.auction == AuctionKind::kUniformDeclining &&
            static_cast<long long>(cfg_.schedule.size()) != cfg_.T)
          throw std::invalid_argument("engine: schedule length must be T");
        break;
      }
    }
    eps_d_ = to_double(cfg_.epsilon);
    retired_bid_d_ = is_fse() ? to_double(fse_->retired_bid()) : -1;
    two_wm_d_ = 2 * cfg_.dist.support_d(m_ - 1);
    // learners
    learner_.resize(cfg_.n);
    std::vector<double> ctx_values(m_);
    for (int j = 0; j < m_; ++j) ctx_values[j] = cfg_.dist.support_d(j);
    for (int b = 0; b < cfg_.n; ++b) {
      const BuyerSpec& spec = cfg_.buyers[b];
      if (spec.kind == BuyerKind::kScriptedIntended && !is_fse())
        throw std::invalid_argument(
            "engine: intended-arm script needs the phased auction");
      if (spec.kind == BuyerKind::kLearner ||
          spec.kind == BuyerKind::kScriptedWorstArm) {
        LearnerConfig lc = spec.learner;
        if (spec.kind == BuyerKind::kScriptedWorstArm) {
          lc = LearnerConfig{};
          lc.algo = Algo::kFtl;
        }
        // the learner's horizon counts selection units, not steps
        learner_[b] = std::make_unique<LearnerState>(
            ArmSet(labels_), ctx_values,
            static_cast<int>(cfg_.T / steps_per_unit()), lc,
            derive(cfg_.seed, rng_purpose::kSelect, 0xb0 + b));
      }
      if (spec.kind == BuyerKind::kScriptedFixedArm &&
          (spec.fixed_arm < 0 || spec.fixed_arm >= K_))
        throw std::invalid_argument("engine: fixed arm out of range");
    }
  }

  void init_trace(SimulationTrace* tr) const {
    tr->n = cfg_.n;
    tr->T = cfg_.T;
    tr->m = m_;
    tr->K = K_;
    tr->kind = cfg_.auction;
    tr->P = is_fse() ? cfg_.P : 0;
    tr->R = is_fse() ? fse_->R : 0;
    tr->epsilon = cfg_.epsilon;
    tr->seed = cfg_.seed;
    tr->arm_labels = labels_;
    tr->norm_B = *std::max_element(labels_.begin(), labels_.end()) +
                 cfg_.dist.support_d(m_ - 1);
    tr->utility_exact.assign(cfg_.n, Rational(0));
    tr->realized_utility_d.assign(cfg_.n, 0.0);
    tr->H_end.assign(static_cast<size_t>(cfg_.n) * m_ * K_, 0.0);
    tr->Htilde_end.assign(static_cast<size_t>(cfg_.n) * m_ * K_, 0.0);
    if (is_fse())
      tr->H_phase.assign(static_cast<size_t>(cfg_.P) * cfg_.n * m_ * K_, 0.0);
    tr->ctx_rounds.assign(static_cast<size_t>(cfg_.n) * m_, 0);
    tr->ctx_wins.assign(static_cast<size_t>(cfg_.n) * m_, 0);
    tr->ctx_util.assign(static_cast<size_t>(cfg_.n) * m_, 0.0);
    tr->ctx_util_exact.assign(static_cast<size_t>(cfg_.n) * m_, Rational(0));
    tr->cf_wins.assign(static_cast<size_t>(cfg_.n) * K_, 0);
    if (is_fse()) {
      tr->phases.resize(cfg_.P);
      for (auto& ph : tr->phases) {
        ph.utility_by_value.assign(m_, 0.0);
        ph.utility_by_buyer.assign(cfg_.n, Rational(0));
      }
    }
    if (cfg_.record_rounds) {
      tr->has_rounds = true;
      tr->row_value.assign(static_cast<size_t>(cfg_.T) * cfg_.n, 0);
      tr->row_arm.assign(static_cast<size_t>(cfg_.T) * cfg_.n, 0);
      tr->row_winner.assign(cfg_.T, -1);
      tr->row_payment.assign(cfg_.T, 0.0);
      tr->row_gap.assign(static_cast<size_t>(cfg_.T) * cfg_.n, 0.0f);
    }
    tr->snapshot_every =
        cfg_.snapshot_every > 0 ? cfg_.snapshot_every
                                : (cfg_.T + 999) / 1000;
    for (int b = 0; b < cfg_.n; ++b) {
      if (learner_[b]) {
        tr->gamma.push_back(learner_[b]->config().gamma);
        tr->learning_rate.push_back(learner_[b]->config().learning_rate);
      } else {
        tr->gamma.push_back(0);
        tr->learning_rate.push_back(0);
      }
      switch (cfg_.buyers[b].kind) {
        case BuyerKind::kLearner:
          tr->buyer_kind.push_back(to_string(cfg_.buyers[b].learner.algo));
          break;
        case BuyerKind::kScriptedIntended:
          tr->buyer_kind.push_back("scripted_intended");
          break;
        case BuyerKind::kScriptedTruthful:
          tr->buyer_kind.push_back("scripted_truthful");
          break;
        case BuyerKind::kScriptedFixedArm:
          tr->buyer_kind.push_back("scripted_fixed");
          break;
        case BuyerKind::kScriptedWorstArm:
          tr->buyer_kind.push_back("scripted_worst");
          break;
      }
    }
  }

  int select(int b, int context, long long t, int tau) {
    const BuyerSpec& spec = cfg_.buyers[b];
    switch (spec.kind) {
      case BuyerKind::kLearner:
        return learner_[b]->select_arm(context, static_cast<int>(t) + 1);
      case BuyerKind::kScriptedIntended:
        return intended_arm(*fse_, context, tau);
      case BuyerKind::kScriptedTruthful:
        return context + 1;
      case BuyerKind::kScriptedFixedArm:
        return spec.fixed_arm;
      case BuyerKind::kScriptedWorstArm: {
        const auto& row = learner_[b]->sigma_row(context);
        int arg = 0;
        for (int a = 1; a < K_; ++a)
          if (row[a] < row[arg]) arg = a;
        return arg;
      }
    }
    return 0;
  }

  RoundOutcome resolve(int tau, Half half, const std::vector<int>& pulls,
                       const Rational* reserve, const RoundRng& rrng) {
    switch (cfg_.auction) {
      case AuctionKind::kFse:
        return fse_round(*fse_, tau, half, pulls, rrng);
      case AuctionKind::kSpaReserve:
      case AuctionKind::kUniformDeclining: {
        std::vector<Rational> bids(cfg_.n, Rational(-1));
        for (int b = 0; b < cfg_.n; ++b)
          if (pulls[b] > 0) bids[b] = cfg_.dist.support(pulls[b] - 1);
        if (cfg_.auction == AuctionKind::kSpaReserve)
          return spa_reserve_round(*reserve, bids, rrng, cfg_.epsilon);
        return uniform_pay_bid_round(*reserve, bids, rrng, cfg_.epsilon);
      }
      case AuctionKind::kNull: {
        RoundOutcome out;
        out.allocation.assign(cfg_.n, 0);
        out.payments.assign(cfg_.n, Rational(0));
        out.payments_d.assign(cfg_.n, 0.0);
        out.submitted_bids.assign(cfg_.n, -1.0);
        return out;
      }
    }
    throw std::logic_error("unreachable");
  }

  double fse_bid_d(int arm, int tau) const {
    return bid_by_phase_[static_cast<size_t>(tau) * K_ + arm];
  }
  double ladder_bid_d(int arm) const {
    return arm == 0 ? -1.0 : cfg_.dist.support_d(arm - 1);
  }

  // fills win/pay (original units) per own arm for this round, coupled to
  // the realized priorities and lottery draw
  void counterfactual_arms(int b, int tau, Half half, double reserve,
                           const std::vector<double>& bids,
                           const std::vector<std::uint64_t>& prio,
                           double lottery_u, std::vector<double>* win,
                           std::vector<double>* pay) const {
    std::fill(win->begin(), win->end(), 0.0);
    std::fill(pay->begin(), pay->end(), 0.0);
    if (cfg_.auction == AuctionKind::kNull) return;
    const bool ladder = !is_fse();
    const bool setup = is_fse() && tau < m_;
    const double wtau = setup ? cfg_.dist.support_d(tau - 1) : 0.0;
    const double lot_ratio =
        setup ? to_double(cfg_.dist.prob(tau - 1) / cfg_.dist.tail(tau - 1))
              : 1.0;
    const auto ov = detail::opponent_view(bids, prio, b, reserve, ladder);
    const bool uniform_mode = cfg_.auction == AuctionKind::kUniformDeclining;
    for (int a = 0; a < K_; ++a) {
      const double beta = is_fse() ? fse_bid_d(a, tau) : ladder_bid_d(a);
      if (beta < 0) continue;             // no participation
      if (ladder && beta < reserve) continue;
      bool w;
      double second;
      int tied_with_me;
      if (uniform_mode) {
        // uniform winner among all qualifying bids
        w = ov.qualifying == 0 || prio[b] > ov.qual_priority;
        second = 0;
        tied_with_me = 1;
      } else if (beta > ov.top) {
        w = true;
        second = std::max(ov.top, 0.0);
        tied_with_me = 1;
      } else if (beta == ov.top) {
        w = prio[b] > ov.top_priority;
        second = beta;
        tied_with_me = ov.top_count + 1;
      } else {
        continue;  // outbid
      }
      if (setup && w) {
        const double top_now = std::max(beta, std::max(ov.top, 0.0));
        if (top_now == wtau) {
          const double p = std::pow(lot_ratio, tied_with_me - 1);
          w = lottery_u < p;
        }
      }
      if (!w) continue;
      (*win)[a] = 1.0;
      double charge;
      if (is_fse() && beta == retired_bid_d_) {
        charge = two_wm_d_;
      } else if (uniform_mode) {
        charge = beta;
      } else if (ladder) {
        charge = std::max(second, reserve);
      } else {
        charge = half == Half::kSecond ? 2 * beta - second : second;
      }
      (*pay)[a] = charge - eps_d_;
    }
  }

  void audit_consistency(SimulationTrace& tr, const RoundOutcome& out, int b,
                         int realized_arm, const std::vector<double>& win,
                         const std::vector<double>& pay) const {
    const bool won_real = out.winner == b;
    const bool won_cf = win[realized_arm] > 0;
    if (won_real != won_cf) ++tr.cf_alloc_mismatches;
    if (won_real) {
      double err = std::fabs(pay[realized_arm] - out.payments_d[b]);
      tr.cf_payment_max_err = std::max(tr.cf_payment_max_err, err);
    }
  }

  // fold one unit into the cumulative tables; win is per step, pay is the
  // unit total, so the win * value term scales by the step count
  void accumulate_tables(SimulationTrace& tr, int b, int context,
                         const std::vector<double>& win,
                         const std::vector<double>& pay, int span) const {
    double* h = &tr.H_end[tr.hidx(b, 0, 0)];
    for (int c = 0; c < m_; ++c) {
      const double v = cfg_.dist.support_d(c);
      double* row = h + static_cast<size_t>(c) * K_;
      for (int a = 0; a < K_; ++a) row[a] += span * win[a] * v - pay[a];
    }
    double* ht = &tr.Htilde_end[tr.hidx(b, context, 0)];
    const double vr = cfg_.dist.support_d(context);
    for (int a = 0; a < K_; ++a) ht[a] += span * win[a] * vr - pay[a];
    long long* cw = &tr.cf_wins[static_cast<size_t>(b) * K_];
    for (int a = 0; a < K_; ++a)
      if (win[a] > 0) cw[a] += span;
  }

  void update_exact_accounting(SimulationTrace& tr, const RoundOutcome& out,
                               const std::vector<int>& ctx, long long t) {
    Rational util_sum(0);
    for (int b = 0; b < cfg_.n; ++b) {
      tr.revenue_exact += out.payments[b];
      Rational u = -out.payments[b];
      if (out.allocation[b]) {
        tr.welfare_exact += cfg_.dist.support(ctx[b]);
        u += cfg_.dist.support(ctx[b]);
      }
      tr.utility_exact[b] += u;
      tr.ctx_util_exact[b * m_ + ctx[b]] += u;
      if (out.allocation[b]) ++tr.ctx_wins[b * m_ + ctx[b]];
    }
    for (int b = 0; b < cfg_.n; ++b) util_sum += tr.utility_exact[b];
    if (tr.identity_all_prefixes &&
        tr.revenue_exact + util_sum != tr.welfare_exact) {
      tr.identity_all_prefixes = false;
      tr.identity_first_violation = t;
    }
  }

  void update_phase_stats(SimulationTrace& tr, const RoundOutcome& out,
                          const std::vector<int>& ctx,
                          const std::vector<int>& pulls, int tau) {
    if (!is_fse()) return;
    PhaseStats& ph = tr.phases[tau - 1];
    ++ph.rounds;
    for (int b = 0; b < cfg_.n; ++b) {
      ++ph.buyer_rounds;
      if (pulls[b] == intended_arm(*fse_, ctx[b], tau)) ++ph.intended_pulls;
      ph.revenue += out.payments_d[b];
      Rational u = out.allocation[b]
                       ? Rational(cfg_.dist.support(ctx[b]) - out.payments[b])
                       : Rational(-out.payments[b]);
      ph.utility_by_buyer[b] += u;
      ph.utility_by_value[ctx[b]] += to_double(u);
    }
    if (out.winner >= 0) {
      ++ph.sales;
      ph.welfare += cfg_.dist.support_d(ctx[out.winner]);
    }
    int best = 0;
    bool unique = true;
    for (int b = 1; b < cfg_.n; ++b) {
      if (ctx[b] > ctx[best]) {
        best = b;
        unique = true;
      } else if (ctx[b] == ctx[best]) {
        unique = false;
      }
    }
    if (unique) {
      ++ph.unique_max_rounds;
      if (out.winner == best) ++ph.highest_wins;
    }
  }

  void record_rows(SimulationTrace& tr, const RoundOutcome& out,
                   const std::vector<int>& ctx, const std::vector<int>& pulls,
                   long long t) const {
    if (!tr.has_rounds) return;
    for (int b = 0; b < cfg_.n; ++b) {
      tr.row_value[t * cfg_.n + b] = static_cast<std::int8_t>(ctx[b]);
      tr.row_arm[t * cfg_.n + b] = static_cast<std::int16_t>(pulls[b]);
    }
    tr.row_winner[t] = static_cast<std::int8_t>(out.winner);
    tr.row_payment[t] =
        out.winner >= 0 ? out.payments_d[out.winner] : 0.0;
  }

  void maybe_snapshot(SimulationTrace& tr, long long t) const {
    if (!cfg_.record_sigma) return;
    if ((t + 1) % tr.snapshot_every != 0 && t + 1 != cfg_.T) return;
    SigmaSnapshot snap;
    snap.after_round = t + 1;
    snap.sigma.reserve(static_cast<size_t>(cfg_.n) * m_ * K_);
    for (int b = 0; b < cfg_.n; ++b)
      for (int c = 0; c < m_; ++c)
        for (int a = 0; a < K_; ++a)
          snap.sigma.push_back(
              learner_[b] ? static_cast<float>(learner_[b]->sigma(c, a))
                          : 0.0f);
    tr.sigma_snapshots.push_back(std::move(snap));
  }

  // H_phase slot tau-1 holds H at the start of 1-based phase tau; slot 0
  // (the start of phase 1) stays all-zero, and the end-of-run table lives
  // in H_end, so only interior boundaries are copied here
  void snapshot_phase_table(SimulationTrace& tr, int phases_done) const {
    if (phases_done >= cfg_.P) return;
    const size_t span = static_cast<size_t>(cfg_.n) * m_ * K_;
    std::copy(tr.H_end.begin(), tr.H_end.end(),
              tr.H_phase.begin() + span * phases_done);
  }

  SimulationConfig cfg_;
  std::optional<FseConfig> fse_;
  int m_ = 0;
  int K_ = 0;
  std::vector<double> labels_;
  std::vector<double> bid_by_phase_;
  std::vector<std::unique_ptr<LearnerState>> learner_;
  double eps_d_ = 0;
  double retired_bid_d_ = -1;
  double two_wm_d_ = 0;
};

inline SimulationTrace run(const SimulationConfig& cfg) {
  Engine e(cfg);
  return e.run();
}

// regret against the best fixed arm per context, holding opponents' realized
// bids and the mechanism randomness fixed; original units
inline double regret(const SimulationTrace& tr, int buyer) {
  double best_total = 0;
  for (int c = 0; c < tr.m; ++c) {
    double best = 0;  // the null arm guarantees 0
    for (int a = 0; a < tr.K; ++a)
      best = std::max(best, tr.Htilde(buyer, c, a));
    best_total += best;
  }
  return best_total - tr.realized_utility_d[buyer];
}

struct AuditReport {
  long long violations = 0;
  double frequency = 0;
  std::vector<long long> rounds;  // capped
};

// rounds where the pulled arm trailed the per-context leader by more than
// gamma * (number of selections) in cumulative (normalized) reward
inline AuditReport mean_based_audit(const SimulationTrace& tr, int buyer,
                                    double gamma) {
  if (!tr.has_rounds)
    throw std::invalid_argument("mean_based_audit: needs per-round rows");
  AuditReport rep;
  const long long units =
      tr.kind == AuctionKind::kFse ? tr.T / 2 : tr.T;
  const double threshold = gamma * static_cast<double>(units);
  for (long long t = 0; t < tr.T; ++t) {
    if (tr.row_gap[t * tr.n + buyer] > threshold) {
      ++rep.violations;
      if (rep.rounds.size() < 1000) rep.rounds.push_back(t);
    }
  }
  rep.frequency = static_cast<double>(rep.violations) /
                  static_cast<double>(tr.T);
  return rep;
}

struct XyuReport {
  std::vector<double> x;      // per value: realized win rate given context
  std::vector<double> u;      // per value: mean realized utility
  std::vector<double> y_arm;  // per arm: counterfactual always-pull win rate
  std::vector<double> y;      // per value (bid-ladder arms only)
};

inline XyuReport empirical_xyu(const SimulationTrace& tr, int buyer) {
  XyuReport rep;
  rep.x.assign(tr.m, 0);
  rep.u.assign(tr.m, 0);
  for (int c = 0; c < tr.m; ++c) {
    long long rounds = tr.ctx_rounds[buyer * tr.m + c];
    if (rounds == 0) continue;
    rep.x[c] = static_cast<double>(tr.ctx_wins[buyer * tr.m + c]) / rounds;
    rep.u[c] = tr.ctx_util[buyer * tr.m + c] / rounds;
  }
  rep.y_arm.assign(tr.K, 0);
  for (int a = 0; a < tr.K; ++a)
    rep.y_arm[a] = static_cast<double>(tr.cf_wins[buyer * tr.K + a]) /
                   static_cast<double>(tr.T);
  if (tr.kind != AuctionKind::kFse)
    rep.y.assign(rep.y_arm.begin() + 1, rep.y_arm.end());
  return rep;
}

// end-of-run cumulative counterfactual payoff table for one buyer,
// flattened [context][arm]; interior phase boundaries are available via
// SimulationTrace::H_at_phase_start
inline std::vector<double> counterfactual_table(const SimulationTrace& tr,
                                                int buyer) {
  const size_t off = tr.hidx(buyer, 0, 0);
  return std::vector<double>(
      tr.H_end.begin() + off,
      tr.H_end.begin() + off + static_cast<size_t>(tr.m) * tr.K);
}

}  // namespace noregret

#endif  // NOREGRET_ENGINE_HPP_
