#ifndef NOREGRET_LEARNERS_HPP_
#define NOREGRET_LEARNERS_HPP_

// contextual no-regret bidding algorithms: multiplicative weights,
// follow-the-leader, and follow-the-perturbed-leader, each keeping one
// cumulative-reward vector per context value. optional recency bias
// (per-round geometric scaling) and a switching-limited wrapper that runs
// multiplicative weights over enumerated switching strategies.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noregret/distribution.hpp"
#include "noregret/rng.hpp"

namespace noregret {

enum class Algo { kMw, kFtl, kFtpl };
enum class Feedback { kExperts, kBandit };

inline const char* to_string(Algo a) {
  switch (a) {
    case Algo::kMw: return "mw";
    case Algo::kFtl: return "ftl";
    case Algo::kFtpl: return "ftpl";
  }
  return "?";
}

// bid arms available to one buyer; index 0 is always the null arm (label 0)
struct ArmSet {
  std::vector<double> labels;

  explicit ArmSet(std::vector<double> l) : labels(std::move(l)) {
    if (labels.empty() || labels[0] != 0.0)
      throw std::invalid_argument("ArmSet: index 0 must be the null arm");
    for (size_t i = 1; i < labels.size(); ++i) {
      if (labels[i] <= 0.0)
        throw std::invalid_argument("ArmSet: labels must be positive");
      for (size_t j = 1; j < i; ++j)
        if (labels[i] == labels[j])
          throw std::invalid_argument("ArmSet: labels must be distinct");
    }
  }

  // null arm plus one arm per support value
  static ArmSet from_support(const ValueDistribution& d) {
    std::vector<double> l = {0.0};
    for (int j = 0; j < d.m(); ++j) l.push_back(d.support_d(j));
    return ArmSet(std::move(l));
  }

  int size() const { return static_cast<int>(labels.size()); }
};

struct LearnerConfig {
  Algo algo = Algo::kMw;
  bool clever = false;
  double gamma = -1.0;          // <=0: default T^{-1/4}
  double learning_rate = -1.0;  // <=0: default sqrt(ln K / T)
  double recency_eta = 1.0;     // >= 1; 1 disables recency bias
  int k_switch = -1;            // < 0: wrapper absent
  Feedback feedback = Feedback::kExperts;
};

// one switching strategy: segments (start_round, arm), starts strictly
// increasing, first start is round 1
struct MetaArm {
  std::vector<std::pair<int, int>> segments;

  int arm_at(int round) const {
    int arm = segments.front().second;
    for (const auto& [start, a] : segments) {
      if (start > round) break;
      arm = a;
    }
    return arm;
  }
  int switches() const { return static_cast<int>(segments.size()) - 1; }
};

struct MetaCount {
  long long count = 0;
  bool saturated = false;
};

// sum_{i=0..k} m(m-1)^i C(T,i), saturating at the int64 ceiling
inline MetaCount meta_arm_count(long long m, long long T, int k) {
  if (k > T - 1) throw std::invalid_argument("meta_arm_count: k > T-1");
  if (k < 0 || m < 1) throw std::invalid_argument("meta_arm_count: bad args");
  namespace mp = boost::multiprecision;
  mp::cpp_int total = 0;
  for (int i = 0; i <= k; ++i) {
    mp::cpp_int term = m;
    for (int j = 0; j < i; ++j) term *= (m - 1);
    // C(T, i)
    mp::cpp_int binom = 1;
    for (int j = 0; j < i; ++j) {
      binom *= (T - j);
      binom /= (j + 1);
    }
    total += term * binom;
  }
  MetaCount out;
  const mp::cpp_int cap = std::numeric_limits<long long>::max();
  if (total > cap) {
    out.count = std::numeric_limits<long long>::max();
    out.saturated = true;
  } else {
    out.count = static_cast<long long>(total);
  }
  return out;
}

// explicit strategy enumeration; guarded to k <= 2 and small products
inline std::vector<MetaArm> enumerate_meta_arms(int num_arms, int T, int k) {
  if (k < 0 || k > 2)
    throw std::invalid_argument("enumerate_meta_arms: k must be 0..2");
  auto count = meta_arm_count(num_arms, T, k);
  if (count.saturated || count.count > 2000000)
    throw std::invalid_argument("enumerate_meta_arms: too many strategies");
  std::vector<MetaArm> out;
  for (int a = 0; a < num_arms; ++a) out.push_back({{{1, a}}});
  if (k >= 1) {
    for (int a = 0; a < num_arms; ++a)
      for (int r = 1; r <= T; ++r)
        for (int b = 0; b < num_arms; ++b) {
          if (b == a) continue;
          out.push_back({{{1, a}, {r, b}}});
        }
  }
  if (k >= 2) {
    for (int a = 0; a < num_arms; ++a)
      for (int r1 = 1; r1 <= T; ++r1)
        for (int b = 0; b < num_arms; ++b) {
          if (b == a) continue;
          for (int r2 = r1 + 1; r2 <= T; ++r2)
            for (int c = 0; c < num_arms; ++c) {
              if (c == b) continue;
              out.push_back({{{1, a}, {r1, b}, {r2, c}}});
            }
        }
  }
  return out;
}

// cumulative-reward learner over one arm set, one weight vector per context
class LearnerState {
 public:
  LearnerState(ArmSet arms, std::vector<double> context_values, int horizon,
               LearnerConfig cfg, std::uint64_t key)
      : arms_(std::move(arms)),
        context_values_(std::move(context_values)),
        horizon_(horizon),
        cfg_(cfg),
        key_(key) {
    if (horizon_ < 1) throw std::invalid_argument("LearnerState: T >= 1");
    if (cfg_.recency_eta < 1.0)
      throw std::invalid_argument("LearnerState: recency_eta >= 1");
    const int K = arms_.size();
    if (cfg_.gamma <= 0.0) cfg_.gamma = std::pow(horizon_, -0.25);
    if (cfg_.learning_rate <= 0.0)
      cfg_.learning_rate = std::sqrt(std::log(std::max(2, K)) / horizon_);
    sigma_.assign(context_values_.size(), std::vector<double>(K, 0.0));
    if (cfg_.k_switch >= 0) {
      metas_ = enumerate_meta_arms(K, horizon_, cfg_.k_switch);
      meta_sigma_.assign(context_values_.size(),
                         std::vector<double>(metas_.size(), 0.0));
    }
  }

  int num_arms() const { return arms_.size(); }
  int num_contexts() const { return static_cast<int>(context_values_.size()); }
  const ArmSet& arms() const { return arms_; }
  const LearnerConfig& config() const { return cfg_; }
  double sigma(int context, int arm) const { return sigma_[context][arm]; }
  const std::vector<double>& sigma_row(int context) const {
    return sigma_[context];
  }
  double recency_scale() const { return scale_; }
  int rounds_seen() const { return round_; }

  bool selectable(int context, int arm) const {
    if (!cfg_.clever) return true;
    return arms_.labels[arm] <= context_values_[context];
  }

  // gap to the per-context running max for the audit, before this round's
  // rewards are observed
  double gap_to_best(int context, int arm) const {
    double best = -std::numeric_limits<double>::infinity();
    for (double s : sigma_[context]) best = std::max(best, s);
    return best - sigma_[context][arm];
  }

  int select_arm(int context, int round) {
    if (round != round_ + 1)
      throw std::logic_error("select_arm: round out of order");
    check_context(context);
    if (cfg_.k_switch >= 0) return select_meta(context, round);
    const int K = arms_.size();
    int best = -1;
    double best_score = 0.0;
    for (int a = 0; a < K; ++a) {
      if (!selectable(context, a)) continue;
      double score = 0.0;
      switch (cfg_.algo) {
        case Algo::kFtl:
          // deterministic argmax; ties go to the highest-indexed arm
          score = sigma_[context][a];
          if (best >= 0 && score == best_score) best = a;
          break;
        case Algo::kMw:
          // Gumbel-max trick: exact softmax(rate * sigma) sample
          score = cfg_.learning_rate * sigma_[context][a] +
                  gumbel(key_, rng_purpose::kSelect, round, a);
          break;
        case Algo::kFtpl: {
          double u = uniform01(key_, rng_purpose::kSelect, round, a);
          if (u <= 0.0) u = std::numeric_limits<double>::min();
          score = sigma_[context][a] - std::log(u) / cfg_.learning_rate;
          break;
        }
      }
      if (best < 0 || score > best_score) {
        best = a;
        best_score = score;
      }
    }
    return best < 0 ? 0 : best;  // all masked: the null arm
  }

  // rewards[context][arm], already normalized by the caller; full-information
  void observe(const std::vector<std::vector<double>>& rewards, int round) {
    if (round != round_ + 1)
      throw std::logic_error("observe: round out of order");
    if (static_cast<int>(rewards.size()) != num_contexts())
      throw std::invalid_argument("observe: context count mismatch");
    for (const auto& row : rewards)
      if (static_cast<int>(row.size()) != arms_.size())
        throw std::invalid_argument("observe: arm count mismatch");
    scale_ *= cfg_.recency_eta;  // round t stores eta^t * reward
    for (int c = 0; c < num_contexts(); ++c)
      for (int a = 0; a < arms_.size(); ++a)
        sigma_[c][a] += scale_ * rewards[c][a];
    if (cfg_.k_switch >= 0)
      for (int c = 0; c < num_contexts(); ++c)
        for (size_t s = 0; s < metas_.size(); ++s)
          meta_sigma_[c][s] += scale_ * rewards[c][metas_[s].arm_at(round)];
    ++round_;
  }

 private:
  void check_context(int c) const {
    if (c < 0 || c >= num_contexts())
      throw std::out_of_range("context index");
  }

  int select_meta(int context, int round) {
    // multiplicative weights over switching strategies (masking by the
    // strategy's current arm keeps clever mode honest)
    int best = -1;
    double best_score = 0.0;
    for (size_t s = 0; s < metas_.size(); ++s) {
      const int arm_now = metas_[s].arm_at(round);
      if (!selectable(context, arm_now)) continue;
      double score = cfg_.learning_rate * meta_sigma_[context][s] +
                     gumbel(key_, rng_purpose::kSelect, round, s);
      if (best < 0 || score > best_score) {
        best = static_cast<int>(s);
        best_score = score;
      }
    }
    return best < 0 ? 0 : metas_[best].arm_at(round);
  }

  ArmSet arms_;
  std::vector<double> context_values_;
  int horizon_;
  LearnerConfig cfg_;
  std::uint64_t key_;
  std::vector<std::vector<double>> sigma_;
  std::vector<MetaArm> metas_;
  std::vector<std::vector<double>> meta_sigma_;
  double scale_ = 1.0;
  int round_ = 0;
};

}  // namespace noregret

#endif  // NOREGRET_LEARNERS_HPP_
