#ifndef NOREGRET_CORE_HPP_
#define NOREGRET_CORE_HPP_

// interim quantities for n i.i.d. buyers with a finite value distribution:
// second-price allocation/payment tables, the harmonic tie-sharing factor,
// the optimal-revenue linear program, and feasibility checks for interim
// allocation rules (fast level-set test plus an explicit per-profile
// feasibility oracle used to validate it).

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "noregret/distribution.hpp"
#include "noregret/rational.hpp"
#include "noregret/simplex.hpp"

namespace noregret {

template <class S>
S binomial(int n, int k) {
  if (k < 0 || k > n) return S(0);
  S r(1);
  for (int i = 0; i < k; ++i) {
    r *= scalar_traits<S>::from_int(n - i);
    r /= scalar_traits<S>::from_int(i + 1);
  }
  return r;
}

template <class S>
S pow_int(S base, int e) {
  S r(1);
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

namespace detail {
template <class S>
S sup(const ValueDistribution& d, int j) {
  return scalar_traits<S>::from_rational(d.support(j));
}
template <class S>
S prob(const ValueDistribution& d, int j) {
  return scalar_traits<S>::from_rational(d.prob(j));
}
template <class S>
S cdf_below(const ValueDistribution& d, int j) {
  return scalar_traits<S>::from_rational(d.cdf_below(j));
}
template <class S>
S cdf_le(const ValueDistribution& d, int j) {
  return scalar_traits<S>::from_rational(d.cdf_le(j));
}
}  // namespace detail

// E[max of n i.i.d. draws]
template <class S>
S expected_max(const ValueDistribution& d, int n) {
  if (n < 1) throw std::invalid_argument("expected_max: n >= 1");
  S total(0);
  for (int j = 0; j < d.m(); ++j) {
    S hi = pow_int(detail::cdf_le<S>(d, j), n);
    S lo = pow_int(detail::cdf_below<S>(d, j), n);
    total += detail::sup<S>(d, j) * (hi - lo);
  }
  return total;
}

// interim win probability of a truthful buyer with value w_i in a
// second-price auction with uniform tie splitting among n buyers
template <class S>
S x_vcg(const ValueDistribution& d, int n, int i) {
  S lo = detail::cdf_below<S>(d, i);
  S q = detail::prob<S>(d, i);
  S total(0);
  for (int k = 0; k < n; ++k) {
    total += binomial<S>(n - 1, k) * pow_int(q, k) *
             pow_int(lo, n - 1 - k) / scalar_traits<S>::from_int(k + 1);
  }
  return total;
}

// interim expected payment of that buyer (unconditional)
template <class S>
S p_vcg(const ValueDistribution& d, int n, int i) {
  S lo = detail::cdf_below<S>(d, i);
  S q = detail::prob<S>(d, i);
  S total(0);
  // k >= 1 opponents tie at w_i, the rest strictly below: win 1/(k+1), pay w_i
  for (int k = 1; k < n; ++k) {
    total += binomial<S>(n - 1, k) * pow_int(q, k) *
             pow_int(lo, n - 1 - k) * detail::sup<S>(d, i) /
             scalar_traits<S>::from_int(k + 1);
  }
  // opponents' max is exactly w_j < w_i: win outright, pay w_j
  for (int j = 0; j < i; ++j) {
    S hi = pow_int(detail::cdf_le<S>(d, j), n - 1);
    S lj = pow_int(detail::cdf_below<S>(d, j), n - 1);
    total += detail::sup<S>(d, j) * (hi - lj);
  }
  return total;
}

// E[1/(1+B)] with B ~ Binomial(n-1, qS): the expected share of a sale
// split uniformly among bidders tied on a mass-qS event
template <class S>
S e_harmonic(S qS, int n) {
  if (n < 1) throw std::invalid_argument("e_harmonic: n >= 1");
  if (!(qS > S(0)))
    throw std::invalid_argument("e_harmonic: qS must be positive");
  return (S(1) - pow_int(S(1) - qS, n)) / (scalar_traits<S>::from_int(n) * qS);
}

// feasibility of an interim allocation rule x (win probability by value):
// sort values by x descending and require, for every prefix A,
//   n * sum_{A} q_j x_j <= 1 - (1 - q(A))^n .
// checking only these level sets is exact because the bound is concave in
// the prefix mass while the left side is linear under the sort order.
template <class S>
bool border_satisfied(const ValueDistribution& d, int n,
                      const std::vector<S>& x, S slack = S(0)) {
  if (static_cast<int>(x.size()) != d.m())
    throw std::invalid_argument("border_satisfied: x size mismatch");
  for (const S& v : x)
    if (v < S(0) - slack || v > S(1) + slack) return false;
  std::vector<int> order(d.m());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return x[a] > x[b]; });
  S served(0), mass(0);
  const S nn = scalar_traits<S>::from_int(n);
  for (int idx : order) {
    S q = detail::prob<S>(d, idx);
    served += nn * q * x[idx];
    mass += q;
    if (served > S(1) - pow_int(S(1) - mass, n) + slack) return false;
  }
  return true;
}

namespace detail {

// occupancy vectors: all ways to place k identical balls into m bins
inline std::vector<std::vector<int>> occupancies(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(m, 0);
  std::function<void(int, int)> rec = [&](int bin, int left) {
    if (bin == m - 1) {
      cur[bin] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[bin] = c;
      rec(bin + 1, left - c);
    }
  };
  if (m > 0) rec(0, k);
  return out;
}

inline Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational multiset_prob(const ValueDistribution& d,
                              const std::vector<int>& counts) {
  int k = std::accumulate(counts.begin(), counts.end(), 0);
  Rational p = factorial(k);
  for (int j = 0; j < d.m(); ++j) {
    p /= factorial(counts[j]);
    p *= pow_int(d.prob(j), counts[j]);
  }
  return p;
}

}  // namespace detail

// explicit feasibility oracle: does a symmetric auction exist whose interim
// win probabilities equal x? solved as an exact feasibility program over
// per-profile allocations a(value, opponent multiset). exponential in m and
// n; intended for small validation instances.
inline bool border_oracle(const ValueDistribution& d, int n,
                          const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != d.m())
    throw std::invalid_argument("border_oracle: x size mismatch");
  for (const auto& v : x)
    if (v < 0 || v > 1) return false;
  const int m = d.m();
  const auto opp = detail::occupancies(m, n - 1);
  // variable index: a(j, o) for value j, opponent multiset o
  auto vid = [&](int j, size_t o) { return j * opp.size() + o; };
  const size_t nvars = static_cast<size_t>(m) * opp.size();
  std::vector<std::vector<Rational>> rows;
  std::vector<Rel> rels;
  std::vector<Rational> rhs;
  // per-profile: total allocation over the n buyers at most one
  for (const auto& prof : detail::occupancies(m, n)) {
    std::vector<Rational> row(nvars, 0);
    for (int j = 0; j < m; ++j) {
      if (prof[j] == 0) continue;
      std::vector<int> rest = prof;
      rest[j] -= 1;
      size_t o = std::find(opp.begin(), opp.end(), rest) - opp.begin();
      row[vid(j, o)] = prof[j];
    }
    rows.push_back(std::move(row));
    rels.push_back(Rel::kLe);
    rhs.push_back(1);
  }
  // interim match: E_o[a(j, o)] = x_j
  for (int j = 0; j < m; ++j) {
    std::vector<Rational> row(nvars, 0);
    for (size_t o = 0; o < opp.size(); ++o)
      row[vid(j, o)] = detail::multiset_prob(d, opp[o]);
    rows.push_back(std::move(row));
    rels.push_back(Rel::kEq);
    rhs.push_back(x[j]);
  }
  std::vector<Rational> zero(nvars, 0);
  auto res = solve_lp<Rational>(zero, rows, rels, rhs);
  return res.status == LpStatus::kOptimal;
}

// optimal auction revenue (total across the n buyers) as a linear program
// over interim allocations x and utilities u: maximize n*sum q_i(w_i x_i-u_i)
// subject to pairwise incentive constraints u_i >= u_j + (w_i-w_j)x_j,
// monotone x, and the interim feasibility bounds.
template <class S>
S myerson_revenue(const ValueDistribution& d, int n) {
  const int m = d.m();
  const size_t nvars = 2 * static_cast<size_t>(m);  // x_0..x_{m-1}, u_...
  std::vector<S> c(nvars, S(0));
  const S nn = scalar_traits<S>::from_int(n);
  for (int i = 0; i < m; ++i) {
    c[i] = nn * detail::prob<S>(d, i) * detail::sup<S>(d, i);
    c[m + i] = -nn * detail::prob<S>(d, i);
  }
  std::vector<std::vector<S>> rows;
  std::vector<Rel> rels;
  std::vector<S> rhs;
  auto add = [&](std::vector<S> row, Rel rel, S b) {
    rows.push_back(std::move(row));
    rels.push_back(rel);
    rhs.push_back(b);
  };
  // u_i - u_j - (w_i - w_j) x_j >= 0 for all i != j
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      std::vector<S> row(nvars, S(0));
      row[m + i] = S(1);
      row[m + j] = S(-1);
      row[j] = -(detail::sup<S>(d, i) - detail::sup<S>(d, j));
      add(std::move(row), Rel::kGe, S(0));
    }
  // monotone x
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<S> row(nvars, S(0));
    row[i + 1] = S(1);
    row[i] = S(-1);
    add(std::move(row), Rel::kGe, S(0));
  }
  // interim feasibility on upper sets (sufficient under monotone x)
  for (int j = 0; j < m; ++j) {
    std::vector<S> row(nvars, S(0));
    S mass(0);
    for (int l = j; l < m; ++l) {
      row[l] = nn * detail::prob<S>(d, l);
      mass += detail::prob<S>(d, l);
    }
    add(std::move(row), Rel::kLe, S(1) - pow_int(S(1) - mass, n));
  }
  auto res = solve_lp<S>(c, rows, rels, rhs);
  if (res.status != LpStatus::kOptimal)
    throw std::runtime_error("myerson_revenue: solver failed");
  return res.objective;
}

// P(max of n draws = w_i and second-highest = w_j), j <= i; n >= 2
template <class S>
S prob_top_second(const ValueDistribution& d, int n, int i, int j) {
  if (j > i) return S(0);
  S qi = detail::prob<S>(d, i);
  if (j == i) {
    // at least two draws at w_i, rest below
    S lo = detail::cdf_below<S>(d, i);
    S le = detail::cdf_le<S>(d, i);
    // P(all <= w_i) - P(exactly one at w_i) - P(none at w_i)
    return pow_int(le, n) -
           scalar_traits<S>::from_int(n) * qi * pow_int(lo, n - 1) -
           pow_int(lo, n);
  }
  // exactly one draw at w_i, others <= w_j with at least one at w_j
  S lej = detail::cdf_le<S>(d, j);
  S loj = detail::cdf_below<S>(d, j);
  return scalar_traits<S>::from_int(n) * qi *
         (pow_int(lej, n - 1) - pow_int(loj, n - 1));
}

// revenue of a second-price auction with reserve r among n buyers
template <class S>
S spa_reserve_revenue(const ValueDistribution& d, int n, const S& reserve) {
  S total(0);
  if (n == 1) {
    for (int i = 0; i < d.m(); ++i)
      if (!(detail::sup<S>(d, i) < reserve)) total += detail::prob<S>(d, i);
    return total * reserve;
  }
  // winner pays max(reserve, second-highest value) when top value >= reserve
  for (int i = 0; i < d.m(); ++i) {
    if (detail::sup<S>(d, i) < reserve) continue;
    for (int j = 0; j <= i; ++j) {
      S p = prob_top_second<S>(d, n, i, j);
      S pay = detail::sup<S>(d, j);
      if (pay < reserve) pay = reserve;
      total += p * pay;
    }
  }
  return total;
}

// best fixed-reserve second-price revenue over reserves in the support,
// returned with the maximizing reserve value
template <class S>
std::pair<S, S> best_spa_reserve(const ValueDistribution& d, int n) {
  S best_rev(-1), best_res(0);
  for (int r = 0; r < d.m(); ++r) {
    S rev = spa_reserve_revenue<S>(d, n, detail::sup<S>(d, r));
    if (rev > best_rev) {
      best_rev = rev;
      best_res = detail::sup<S>(d, r);
    }
  }
  return {best_rev, best_res};
}

}  // namespace noregret

#endif  // NOREGRET_CORE_HPP_
