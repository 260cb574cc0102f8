#ifndef NOREGRET_AUCTIONS_HPP_
#define NOREGRET_AUCTIONS_HPP_

// round-level mechanisms: the phased secondary auction with its arm
// lifecycle (dormant / active / retired), second-price with reserve, and
// pay-your-bid with a uniform winner among qualifying bids. all round
// resolutions are deterministic functions of (config, pulls, round key):
// ties use per-buyer hash priorities and lotteries reuse one uniform draw,
// so counterfactual re-resolution under a different own arm stays coupled
// to the realized randomness.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "noregret/core.hpp"
#include "noregret/distribution.hpp"
#include "noregret/lp.hpp"
#include "noregret/rational.hpp"
#include "noregret/rng.hpp"

namespace noregret {

enum class Half { kFirst, kSecond };

struct FseConfig {
  ValueDistribution dist;
  int n = 2;
  long long T = 0;
  int P = 0;
  long long R = 0;          // value draws per phase; T = 2 R P steps
  Rational epsilon;         // payment discount
  double welfare_delta = 0;  // optional welfare-loss target; 0 = unset

  int m() const { return dist.m(); }
  // arm labels: index 0 is the null arm, arms 1..P carry 2 w_m + i
  Rational label(int arm) const {
    if (arm == 0) return Rational(0);
    return 2 * dist.support(m() - 1) + arm;
  }
  double label_d(int arm) const { return to_double(label(arm)); }
  Rational retired_bid() const { return dist.support(m() - 1) + 1; }
  // each value draw is resolved twice (steps 2u and 2u+1) with the same
  // profile: once under the plain payment rule and once with the surcharge
  int phase_of_round(long long t) const {  // t is a 0-based step index
    return static_cast<int>(t / (2 * R)) + 1;
  }
  Half half_of_round(long long t) const {
    return (t % 2) == 0 ? Half::kFirst : Half::kSecond;
  }
};

inline FseConfig make_fse_config(ValueDistribution dist, int n, long long T,
                                 int P, Rational epsilon = Rational(-1),
                                 double welfare_delta = 0) {
  FseConfig cfg{std::move(dist), n, T, P, 0, Rational(0), welfare_delta};
  if (n < 1) throw std::invalid_argument("fse: need at least one buyer");
  if (P < cfg.m())
    throw std::invalid_argument("fse: P must be at least m");
  if (T <= 0 || T % (2LL * P) != 0)
    throw std::invalid_argument("fse: T must be a positive multiple of 2P");
  cfg.R = T / (2LL * P);
  if (epsilon < 0)
    epsilon = cfg.dist.support(cfg.m() - 1) / 1000000000;
  cfg.epsilon = epsilon;
  if (welfare_delta > 0 &&
      static_cast<double>(P) < static_cast<double>(cfg.m()) / welfare_delta)
    throw std::invalid_argument("fse: P below m over the welfare target");
  return cfg;
}

enum class ArmKind { kDormant, kActive, kRetired };

struct ArmStatus {
  ArmKind kind = ArmKind::kDormant;
  int bid_index = -1;  // 0-based support index when Active
};

// lifecycle: in phase tau, arm i carries age j = i - P + tau; ages below 1
// are dormant, ages 1..m are active bidding w_age, ages above m retired.
// the null arm (0) is permanently dormant.
inline ArmStatus arm_status(const FseConfig& cfg, int arm, int tau) {
  if (arm < 0 || arm > cfg.P) throw std::out_of_range("arm index");
  if (tau < 1 || tau > cfg.P) throw std::out_of_range("phase index");
  if (arm == 0) return {ArmKind::kDormant, -1};
  const int age = arm - cfg.P + tau;
  if (age < 1) return {ArmKind::kDormant, -1};
  if (age <= cfg.m()) return {ArmKind::kActive, age - 1};
  return {ArmKind::kRetired, -1};
}

// intended arm for a buyer whose value has 0-based index j in phase tau:
// the active arm bidding w_{min(j+1, tau)}
inline int intended_arm(const FseConfig& cfg, int value_index, int tau) {
  return cfg.P - tau + std::min(value_index + 1, tau);
}

struct RoundOutcome {
  int winner = -1;  // buyer index, -1 when no sale
  std::vector<char> allocation;
  std::vector<Rational> payments;
  std::vector<double> payments_d;
  std::vector<double> submitted_bids;  // -1 when not participating
  bool tie_surcharge_zero = false;  // top tie collapsed the surcharge to 0
  double lottery_prob = 1.0;  // tentative winner's conditional success prob
};

// per-round randomness: hash priorities decide ties (uniform over the tied
// set) and one uniform drives the setup lottery
struct RoundRng {
  std::uint64_t key = 0;
  std::uint64_t round = 0;
  std::uint64_t priority(int buyer) const {
    return derive(key, rng_purpose::kTieBreak, round, buyer);
  }
  double lottery_u() const {
    return uniform01(key, rng_purpose::kLottery, round);
  }
};

namespace detail {

inline int pick_by_priority(const std::vector<int>& tied,
                            const RoundRng& rng) {
  int best = tied.front();
  std::uint64_t best_p = rng.priority(best);
  for (size_t i = 1; i < tied.size(); ++i) {
    std::uint64_t p = rng.priority(tied[i]);
    if (p > best_p) {
      best = tied[i];
      best_p = p;
    }
  }
  return best;
}

}  // namespace detail

// resolve one round of the phased auction given everyone's pulled arm.
// main phases: uniform winner among top secondary bids; winner pays the
// second-highest bid, plus a surcharge 2(w_j - w_l) in the second half for
// active winners; retired winners pay the flat 2 w_m ceiling. setup phases:
// a tentative winner at top bid w_tau must also pass the lottery with
// success probability (q_tau / Q_tau)^{|S|-1}. every payment is reduced by
// the configured discount.
inline RoundOutcome fse_round(const FseConfig& cfg, int tau, Half half,
                              const std::vector<int>& pulls,
                              const RoundRng& rng) {
  if (static_cast<int>(pulls.size()) != cfg.n)
    throw std::invalid_argument("fse_round: one pull per buyer");
  const int n = cfg.n;
  RoundOutcome out;
  out.allocation.assign(n, 0);
  out.payments.assign(n, Rational(0));
  out.payments_d.assign(n, 0.0);
  out.submitted_bids.assign(n, -1.0);

  const bool setup = tau < cfg.m();
  std::vector<Rational> bid(n, Rational(-1));
  std::vector<ArmStatus> st(n);
  for (int b = 0; b < n; ++b) {
    st[b] = arm_status(cfg, pulls[b], tau);
    if (st[b].kind == ArmKind::kActive)
      bid[b] = cfg.dist.support(st[b].bid_index);
    else if (st[b].kind == ArmKind::kRetired)
      bid[b] = cfg.retired_bid();
    if (bid[b] >= 0) out.submitted_bids[b] = to_double(bid[b]);
  }

  Rational top(-1);
  for (int b = 0; b < n; ++b) top = std::max(top, bid[b]);
  if (top < 0) return out;  // no participants
  std::vector<int> S;
  Rational second(0);
  for (int b = 0; b < n; ++b) {
    if (bid[b] == top) {
      S.push_back(b);
    } else if (bid[b] > second) {
      second = bid[b];
    }
  }
  if (S.size() >= 2) second = top;

  int winner = detail::pick_by_priority(S, rng);
  if (setup) {
    // active bids never exceed w_tau during setup
    if (out.submitted_bids[winner] > cfg.dist.support_d(tau - 1))
      throw std::logic_error("fse_round: setup bid above the phase value");
    if (top == cfg.dist.support(tau - 1)) {
      double p = std::pow(
          to_double(cfg.dist.prob(tau - 1) / cfg.dist.tail(tau - 1)),
          static_cast<double>(S.size() - 1));
      out.lottery_prob = p;
      if (!(rng.lottery_u() < p)) return out;  // lottery failed: no sale
    }
  }

  out.winner = winner;
  out.allocation[winner] = 1;
  Rational pay;
  if (st[winner].kind == ArmKind::kRetired) {
    pay = 2 * cfg.dist.support(cfg.m() - 1);
  } else {
    pay = second;
    if (half == Half::kSecond) {
      pay += 2 * (bid[winner] - second);  // surcharge
      if (S.size() >= 2) out.tie_surcharge_zero = true;
    }
  }
  pay -= cfg.epsilon;
  out.payments[winner] = pay;
  out.payments_d[winner] = to_double(pay);
  return out;
}

// second-price auction with a reserve; bids below the reserve do not
// qualify. winner pays max(second qualifying bid, reserve) less epsilon.
inline RoundOutcome spa_reserve_round(const Rational& reserve,
                                      const std::vector<Rational>& bids,
                                      const RoundRng& rng,
                                      const Rational& epsilon = Rational(0)) {
  const int n = static_cast<int>(bids.size());
  RoundOutcome out;
  out.allocation.assign(n, 0);
  out.payments.assign(n, Rational(0));
  out.payments_d.assign(n, 0.0);
  out.submitted_bids.resize(n);
  for (int b = 0; b < n; ++b) out.submitted_bids[b] = to_double(bids[b]);
  Rational top(-1);
  for (int b = 0; b < n; ++b)
    if (bids[b] >= reserve) top = std::max(top, bids[b]);
  if (top < 0) return out;
  std::vector<int> S;
  Rational second(-1);
  for (int b = 0; b < n; ++b) {
    if (bids[b] < reserve) continue;
    if (bids[b] == top)
      S.push_back(b);
    else if (bids[b] > second)
      second = bids[b];
  }
  if (S.size() >= 2) second = top;
  int winner = detail::pick_by_priority(S, rng);
  Rational pay = std::max(second, reserve) - epsilon;
  out.winner = winner;
  out.allocation[winner] = 1;
  out.payments[winner] = pay;
  out.payments_d[winner] = to_double(pay);
  return out;
}

// pay-your-bid with a uniform winner among all bids meeting the reserve
inline RoundOutcome uniform_pay_bid_round(
    const Rational& reserve, const std::vector<Rational>& bids,
    const RoundRng& rng, const Rational& epsilon = Rational(0)) {
  const int n = static_cast<int>(bids.size());
  RoundOutcome out;
  out.allocation.assign(n, 0);
  out.payments.assign(n, Rational(0));
  out.payments_d.assign(n, 0.0);
  out.submitted_bids.resize(n);
  for (int b = 0; b < n; ++b) out.submitted_bids[b] = to_double(bids[b]);
  std::vector<int> S;
  for (int b = 0; b < n; ++b)
    if (bids[b] >= reserve) S.push_back(b);
  if (S.empty()) return out;
  int winner = detail::pick_by_priority(S, rng);
  Rational pay = bids[winner] - epsilon;
  out.winner = winner;
  out.allocation[winner] = 1;
  out.payments[winner] = pay;
  out.payments_d[winner] = to_double(pay);
  return out;
}

// declining per-round reserves realizing an interim allocation from the
// uniform-schedule program: weight lam_j = (x_j - x_{j-1}) / E_j of the
// horizon runs at reserve w_j, scheduled in decreasing-reserve order after
// an initial closed block (reserve above the top value). block boundaries
// round to integers in a way that conserves the total round count.
template <class S>
std::vector<Rational> reserve_schedule_from_lp(const ValueDistribution& d,
                                               int n, long long T,
                                               const std::vector<S>& x) {
  auto lam = schedule_weights_from_x<S>(d, n, x);  // validates the weights
  const int m = d.m();
  // boundary[j] = rounds (counted from the end) covered by reserves w_1..w_j
  std::vector<long long> boundary(m + 1, 0);
  double cum = 0;
  for (int j = 0; j < m; ++j) {
    cum += to_double(lam[j]);
    boundary[j + 1] = std::llround(cum * static_cast<double>(T));
  }
  std::vector<Rational> schedule;
  schedule.reserve(T);
  const Rational closed = d.support(m - 1) + 1;
  const long long closed_len = T - boundary[m];
  for (long long t = 0; t < closed_len; ++t) schedule.push_back(closed);
  for (int j = m - 1; j >= 0; --j) {
    const long long len = boundary[j + 1] - boundary[j];
    for (long long t = 0; t < len; ++t) schedule.push_back(d.support(j));
  }
  if (static_cast<long long>(schedule.size()) != T)
    throw std::logic_error("reserve schedule length mismatch");
  return schedule;
}

struct AuditResult {
  bool ok = true;
  std::string witness;
};

// generic sweep: expected allocation and payment must be nondecreasing in
// the own arm index with opponents held fixed
inline AuditResult monotonicity_audit_fn(
    int num_arms,
    const std::function<std::pair<Rational, Rational>(int)>& outcome) {
  AuditResult res;
  Rational prev_a(0), prev_p(0);
  bool first = true;
  for (int arm = 0; arm < num_arms; ++arm) {
    auto [a, p] = outcome(arm);
    if (!first && (a < prev_a || p < prev_p)) {
      res.ok = false;
      std::ostringstream os;
      os << "arm " << arm << ": allocation " << to_fraction_string(a)
         << " payment " << to_fraction_string(p) << " after allocation "
         << to_fraction_string(prev_a) << " payment "
         << to_fraction_string(prev_p);
      res.witness = os.str();
      return res;
    }
    prev_a = a;
    prev_p = p;
    first = false;
  }
  return res;
}

// exact expected outcome (allocation, payment) for one buyer in a phased-
// auction round, integrating over tie and lottery randomness
inline std::pair<Rational, Rational> fse_expected_outcome(
    const FseConfig& cfg, int tau, Half half, int own_buyer,
    const std::vector<int>& pulls) {
  const int n = cfg.n;
  std::vector<Rational> bid(n, Rational(-1));
  std::vector<ArmStatus> st(n);
  for (int b = 0; b < n; ++b) {
    st[b] = arm_status(cfg, pulls[b], tau);
    if (st[b].kind == ArmKind::kActive)
      bid[b] = cfg.dist.support(st[b].bid_index);
    else if (st[b].kind == ArmKind::kRetired)
      bid[b] = cfg.retired_bid();
  }
  if (bid[own_buyer] < 0) return {Rational(0), Rational(0)};
  Rational top(-1);
  for (int b = 0; b < n; ++b) top = std::max(top, bid[b]);
  if (bid[own_buyer] != top) return {Rational(0), Rational(0)};
  int tied = 0;
  Rational second(0);
  for (int b = 0; b < n; ++b) {
    if (bid[b] == top)
      ++tied;
    else if (bid[b] > second)
      second = bid[b];
  }
  if (tied >= 2) second = top;
  Rational alloc = Rational(1, tied);
  if (tau < cfg.m() && top == cfg.dist.support(tau - 1)) {
    Rational ratio = cfg.dist.prob(tau - 1) / cfg.dist.tail(tau - 1);
    alloc *= pow_int(ratio, tied - 1);
  }
  Rational pay;
  if (st[own_buyer].kind == ArmKind::kRetired) {
    pay = 2 * cfg.dist.support(cfg.m() - 1);
  } else {
    pay = second;
    if (half == Half::kSecond) pay += 2 * (bid[own_buyer] - second);
  }
  pay -= cfg.epsilon;
  return {alloc, alloc * pay};
}

inline AuditResult monotonicity_audit_fse(const FseConfig& cfg, int tau,
                                          Half half,
                                          const std::vector<int>& pulls,
                                          int own_buyer) {
  auto probe = pulls;
  return monotonicity_audit_fn(cfg.P + 1, [&](int arm) {
    probe[own_buyer] = arm;
    return fse_expected_outcome(cfg, tau, half, own_buyer, probe);
  });
}

// exact expected outcome for the bid-ladder mechanisms; own bid sweeps the
// null arm (no participation) then the support values
inline std::pair<Rational, Rational> bid_mech_expected_outcome(
    bool pay_own_bid, const Rational& reserve,
    const std::vector<Rational>& bids, int own_buyer, const Rational& own_bid,
    const Rational& epsilon) {
  const int n = static_cast<int>(bids.size());
  if (own_bid < reserve) return {Rational(0), Rational(0)};
  if (pay_own_bid) {
    int q = 0;
    for (int b = 0; b < n; ++b)
      if (b != own_buyer && bids[b] >= reserve) ++q;
    Rational alloc(1, q + 1);
    return {alloc, alloc * (own_bid - epsilon)};
  }
  Rational top = own_bid;
  for (int b = 0; b < n; ++b)
    if (b != own_buyer && bids[b] >= reserve) top = std::max(top, bids[b]);
  if (own_bid < top) return {Rational(0), Rational(0)};
  int tied = 1;
  Rational second(-1);
  for (int b = 0; b < n; ++b) {
    if (b == own_buyer || bids[b] < reserve) continue;
    if (bids[b] == top)
      ++tied;
    else if (bids[b] > second)
      second = bids[b];
  }
  if (tied >= 2) second = top;
  Rational alloc(1, tied);
  Rational pay = std::max(second, reserve) - epsilon;
  return {alloc, alloc * pay};
}

inline AuditResult monotonicity_audit_bids(bool pay_own_bid,
                                           const Rational& reserve,
                                           const ValueDistribution& d,
                                           const std::vector<Rational>& bids,
                                           int own_buyer,
                                           const Rational& epsilon = Rational(0)) {
  return monotonicity_audit_fn(d.m() + 1, [&](int arm) {
    Rational own = arm == 0 ? Rational(-1) : d.support(arm - 1);
    return bid_mech_expected_outcome(pay_own_bid, reserve, bids, own_buyer,
                                     own, epsilon);
  });
}

}  // namespace noregret

#endif  // NOREGRET_AUCTIONS_HPP_
