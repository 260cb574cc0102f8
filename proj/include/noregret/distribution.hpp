#ifndef NOREGRET_DISTRIBUTION_HPP_
#define NOREGRET_DISTRIBUTION_HPP_

// finite value distribution: strictly increasing positive support w_1..w_m
// with probabilities q_j > 0 summing to one. stored exactly; double views
// are cached for the simulation hot path.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "noregret/rational.hpp"

namespace noregret {

class ValueDistribution {
 public:
  ValueDistribution(std::vector<Rational> support, std::vector<Rational> probs)
      : support_(std::move(support)), probs_(std::move(probs)) {
    validate();
    support_d_.reserve(support_.size());
    probs_d_.reserve(probs_.size());
    cdf_le_d_.reserve(probs_.size());
    Rational run = 0;
    for (size_t j = 0; j < support_.size(); ++j) {
      support_d_.push_back(to_double(support_[j]));
      probs_d_.push_back(to_double(probs_[j]));
      run += probs_[j];
      cdf_le_.push_back(run);
      cdf_le_d_.push_back(to_double(run));
    }
  }

  static ValueDistribution uniform(std::vector<Rational> support) {
    const long long m = static_cast<long long>(support.size());
    return ValueDistribution(std::move(support),
                             std::vector<Rational>(m, Rational(1, m)));
  }

  int m() const { return static_cast<int>(support_.size()); }

  // exact accessors (0-based index)
  const Rational& support(int j) const { return support_[check(j)]; }
  const Rational& prob(int j) const { return probs_[check(j)]; }
  const std::vector<Rational>& support() const { return support_; }
  const std::vector<Rational>& probs() const { return probs_; }

  double support_d(int j) const { return support_d_[check(j)]; }
  double prob_d(int j) const { return probs_d_[check(j)]; }

  // P(v < w_j) and P(v <= w_j)
  Rational cdf_below(int j) const {
    check(j);
    return j == 0 ? Rational(0) : cdf_le_[j - 1];
  }
  Rational cdf_le(int j) const { return cdf_le_[check(j)]; }

  // upper tail Q_j = P(v >= w_j)
  Rational tail(int j) const { return Rational(1) - cdf_below(j); }

  // inverse-cdf draw from a uniform in [0,1)
  int draw_index(double u) const {
    auto it = std::upper_bound(cdf_le_d_.begin(), cdf_le_d_.end(), u);
    int j = static_cast<int>(it - cdf_le_d_.begin());
    return std::min(j, m() - 1);
  }

  bool operator==(const ValueDistribution& o) const {
    return support_ == o.support_ && probs_ == o.probs_;
  }

 private:
  int check(int j) const {
    if (j < 0 || j >= m()) throw std::out_of_range("value index");
    return j;
  }

  void validate() const {
    if (support_.empty()) throw std::invalid_argument("empty support");
    if (support_.size() != probs_.size())
      throw std::invalid_argument("support/probs size mismatch");
    if (support_[0] <= 0)
      throw std::invalid_argument("support must be positive");
    for (size_t j = 1; j < support_.size(); ++j)
      if (support_[j] <= support_[j - 1])
        throw std::invalid_argument("support must be strictly increasing");
    Rational total = 0;
    for (const auto& q : probs_) {
      if (q <= 0) throw std::invalid_argument("probabilities must be > 0");
      total += q;
    }
    if (total != 1) throw std::invalid_argument("probabilities must sum to 1");
  }

  std::vector<Rational> support_;
  std::vector<Rational> probs_;
  std::vector<Rational> cdf_le_;
  std::vector<double> support_d_;
  std::vector<double> probs_d_;
  std::vector<double> cdf_le_d_;
};

// the four-point uniform reference distribution used across examples
inline ValueDistribution uniform4() {
  return ValueDistribution::uniform(
      {Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)});
}

}  // namespace noregret

#endif  // NOREGRET_DISTRIBUTION_HPP_
