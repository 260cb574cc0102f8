#ifndef NOREGRET_LP_HPP_
#define NOREGRET_LP_HPP_

// the clever-buyer program hierarchy: the base program over (x, u), the
// interim-feasible variant, the uniform-schedule reduction, and the exact
// greedy multiplier construction whose value matches the base program by
// duality. all solvers maximize per-buyer revenue sum_i q_i (w_i x_i - u_i).

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "noregret/core.hpp"
#include "noregret/distribution.hpp"
#include "noregret/rational.hpp"
#include "noregret/simplex.hpp"

namespace noregret {

template <class S>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  S objective{};
  std::vector<S> x;
  std::vector<S> u;
  bool value_only = false;  // true when produced by the dual construction
};

// smallest utilities compatible with the deviation constraints given x
template <class S>
std::vector<S> tight_utilities(const ValueDistribution& d,
                               const std::vector<S>& x) {
  const int m = d.m();
  std::vector<S> u(m, S(0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      S cand = (detail::sup<S>(d, i) - detail::sup<S>(d, j)) * x[j];
      if (cand > u[i]) u[i] = cand;
    }
  return u;
}

namespace detail {

// shared rows: u_i >= (w_i - w_j) x_j for j < i, and x nondecreasing.
// variable layout: x_0..x_{m-1}, u_0..u_{m-1}.
template <class S>
void add_deviation_rows(const ValueDistribution& d, SimplexSolver<S>* s) {
  const int m = d.m();
  const size_t nv = 2 * static_cast<size_t>(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      std::vector<S> row(nv, S(0));
      row[m + i] = S(1);
      row[j] = -(sup<S>(d, i) - sup<S>(d, j));
      s->add_row(std::move(row), Rel::kGe, S(0));
    }
  for (int i = 0; i + 1 < m; ++i) {
    std::vector<S> row(nv, S(0));
    row[i + 1] = S(1);
    row[i] = S(-1);
    s->add_row(std::move(row), Rel::kGe, S(0));
  }
}

template <class S>
std::vector<S> revenue_objective(const ValueDistribution& d) {
  const int m = d.m();
  std::vector<S> c(2 * static_cast<size_t>(m), S(0));
  for (int i = 0; i < m; ++i) {
    c[i] = prob<S>(d, i) * sup<S>(d, i);
    c[m + i] = -prob<S>(d, i);
  }
  return c;
}

template <class S>
LpSolution<S> run_xy_solver(const ValueDistribution& d, SimplexSolver<S>&& s) {
  const int m = d.m();
  auto res = s.solve();
  LpSolution<S> out;
  out.status = res.status;
  if (res.status != LpStatus::kOptimal) return out;
  out.objective = res.objective;
  out.x.assign(res.x.begin(), res.x.begin() + m);
  out.u.assign(res.x.begin() + m, res.x.end());
  return out;
}

}  // namespace detail

// multiplier table produced by the greedy construction, plus the adjusted
// values phi it induces
template <class S>
struct FillResult {
  std::vector<std::vector<S>> lam;  // lam[k][i], lower triangular
  std::vector<S> phis;
};

// phi(i) = w_i - sum_{k>=i} (q_k/q_i)(w_k - w_i) lam[k][i]
template <class S>
S phi(const ValueDistribution& d, const std::vector<std::vector<S>>& lam,
      int i) {
  S total = detail::sup<S>(d, i);
  for (int k = i; k < d.m(); ++k)
    total -= (detail::prob<S>(d, k) / detail::prob<S>(d, i)) *
             (detail::sup<S>(d, k) - detail::sup<S>(d, i)) * lam[k][i];
  return total;
}

// row by row, pour each row's unit budget onto the smallest index whose
// adjusted value is still positive; the pour rate is (q_k/q_i)(w_k - w_i).
// pours onto the diagonal absorb budget without changing any phi.
template <class S>
FillResult<S> fill_low_to_high(const ValueDistribution& d) {
  const int m = d.m();
  FillResult<S> r;
  r.lam.assign(m, std::vector<S>(m, S(0)));
  r.phis.resize(m);
  for (int i = 0; i < m; ++i) r.phis[i] = detail::sup<S>(d, i);
  int ptr = 0;
  for (int k = 0; k < m; ++k) {
    S budget(1);
    while (budget > S(0)) {
      while (ptr < m && !(r.phis[ptr] > S(0))) ++ptr;
      int i = std::min(ptr, k);
      if (i >= k) {
        r.lam[k][k] += budget;
        budget = S(0);
        continue;
      }
      S rate = (detail::prob<S>(d, k) / detail::prob<S>(d, i)) *
               (detail::sup<S>(d, k) - detail::sup<S>(d, i));
      S need = r.phis[i] / rate;
      if (need <= budget) {
        r.lam[k][i] += need;
        r.phis[i] = S(0);  // assign exactly so float residue cannot stall
        budget -= need;
      } else {
        r.lam[k][i] += budget;
        r.phis[i] -= rate * budget;
        budget = S(0);
      }
    }
  }
  return r;
}

// value of the relaxed program at these multipliers: serve positive phi
template <class S>
S lagrangian_value(const ValueDistribution& d, const std::vector<S>& phis) {
  S total(0);
  for (int i = 0; i < d.m(); ++i)
    if (phis[i] > S(0)) total += detail::prob<S>(d, i) * phis[i];
  return total;
}

// base program: deviation rows plus the box x <= 1
template <class S>
LpSolution<S> solve_single_lp_simplex(const ValueDistribution& d) {
  const int m = d.m();
  SimplexSolver<S> s(detail::revenue_objective<S>(d));
  detail::add_deviation_rows(d, &s);
  for (int i = 0; i < m; ++i) {
    std::vector<S> row(2 * static_cast<size_t>(m), S(0));
    row[i] = S(1);
    s.add_row(std::move(row), Rel::kLe, S(1));
  }
  return detail::run_xy_solver(d, std::move(s));
}

// dispatch: small instances solve the program directly; large ones use the
// greedy multiplier construction, whose value equals the program optimum by
// strong duality (the optimizer itself is not reconstructed)
template <class S>
LpSolution<S> solve_single_lp(const ValueDistribution& d) {
  if (d.m() <= 40) return solve_single_lp_simplex<S>(d);
  auto fill = fill_low_to_high<S>(d);
  LpSolution<S> out;
  out.status = LpStatus::kOptimal;
  out.objective = lagrangian_value(d, fill.phis);
  out.value_only = true;
  return out;
}

// interim-feasible variant: deviation rows plus upper-set feasibility
// (suffix form is exact because x is constrained monotone)
template <class S>
LpSolution<S> solve_border_lp(const ValueDistribution& d, int n) {
  const int m = d.m();
  SimplexSolver<S> s(detail::revenue_objective<S>(d));
  detail::add_deviation_rows(d, &s);
  const S nn = scalar_traits<S>::from_int(n);
  for (int j = 0; j < m; ++j) {
    std::vector<S> row(2 * static_cast<size_t>(m), S(0));
    S mass(0);
    for (int l = j; l < m; ++l) {
      row[l] = nn * detail::prob<S>(d, l);
      mass += detail::prob<S>(d, l);
    }
    s.add_row(std::move(row), Rel::kLe, S(1) - pow_int(S(1) - mass, n));
  }
  return detail::run_xy_solver(d, std::move(s));
}

// uniform-schedule reduction: x_j must be expressible as sum_{i<=j} lam_i E_i
// with lam >= 0, sum lam <= 1, where E_j is the tie-sharing factor of the
// upper set at w_j. eliminating lam leaves one aggregate row over x.
// objective is per-buyer; total revenue across n buyers is n times it.
template <class S>
LpSolution<S> solve_reduced_uniform_lp(const ValueDistribution& d, int n) {
  const int m = d.m();
  SimplexSolver<S> s(detail::revenue_objective<S>(d));
  detail::add_deviation_rows(d, &s);
  std::vector<S> einv(m + 1, S(0));  // 1/E_j, with 1/E_{m+1} := 0
  for (int j = 0; j < m; ++j) {
    S tail = scalar_traits<S>::from_rational(d.tail(j));
    einv[j] = S(1) / e_harmonic<S>(tail, n);
  }
  std::vector<S> row(2 * static_cast<size_t>(m), S(0));
  for (int j = 0; j < m; ++j) row[j] = einv[j] - einv[j + 1];
  s.add_row(std::move(row), Rel::kLe, S(1));
  return detail::run_xy_solver(d, std::move(s));
}

// schedule weights recovered from a reduced-LP solution: lam_j proportional
// to the increments of x in units of E_j
template <class S>
std::vector<S> schedule_weights_from_x(const ValueDistribution& d, int n,
                                       const std::vector<S>& x) {
  const int m = d.m();
  if (static_cast<int>(x.size()) != m)
    throw std::invalid_argument("schedule_weights_from_x: size mismatch");
  const S tol = scalar_traits<S>::exact ? S(0) : S(1e-9);
  std::vector<S> lam(m, S(0));
  S prev(0), total(0);
  for (int j = 0; j < m; ++j) {
    S inc = x[j] - prev;
    if (inc < -tol) throw std::invalid_argument("x must be nondecreasing");
    if (inc < S(0)) inc = S(0);
    S tail = scalar_traits<S>::from_rational(d.tail(j));
    lam[j] = inc / e_harmonic<S>(tail, n);
    prev = x[j];
    total += lam[j];
  }
  if (total > S(1) + tol)
    throw std::invalid_argument("schedule weights exceed unit mass");
  return lam;
}

template <class S>
struct LambdaReport {
  bool positive_phi = true;       // property 1: phi(i) >= 0 for all i
  bool no_crossing = true;        // property 2: no i<j<k<l with
                                  //   lam[l][i] > 0 and lam[k][j] > 0
  bool lowest_first = true;       // property 3: lam[k][i] > 0 only when no
                                  //   j < i has q_j phi_j > 0
  bool phi_monotone = true;
  std::vector<S> phis;
  std::string witness;
};

template <class S>
LambdaReport<S> check_lambda_properties(
    const ValueDistribution& d, const std::vector<std::vector<S>>& lam) {
  const int m = d.m();
  LambdaReport<S> rep;
  rep.phis.resize(m);
  for (int i = 0; i < m; ++i) rep.phis[i] = phi(d, lam, i);
  auto note = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };
  for (int i = 0; i < m; ++i)
    if (rep.phis[i] < S(0)) {
      rep.positive_phi = false;
      note("phi negative at index " + std::to_string(i + 1));
    }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
          if (lam[l][i] > S(0) && lam[k][j] > S(0)) {
            rep.no_crossing = false;
            note("crossing at (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                 std::to_string(l + 1) + ")");
          }
  for (int k = 0; k < m; ++k)
    for (int i = 0; i <= k; ++i) {
      if (!(lam[k][i] > S(0))) continue;
      for (int j = 0; j < i; ++j)
        if (detail::prob<S>(d, j) * rep.phis[j] > S(0)) {
          rep.lowest_first = false;
          note("mass at (" + std::to_string(k + 1) + "," +
               std::to_string(i + 1) + ") above positive phi at " +
               std::to_string(j + 1));
        }
    }
  for (int i = 0; i + 1 < m; ++i)
    if (rep.phis[i] > rep.phis[i + 1]) {
      rep.phi_monotone = false;
      note("phi decreasing at index " + std::to_string(i + 1));
    }
  return rep;
}

// discrete analogue of the hazard-style sufficiency bound with H = w_m:
// F(w_j) (H - w_j) >= F(w_i) (H - w_i) for all j < i
inline bool regularity_check(const ValueDistribution& d) {
  const int m = d.m();
  if (m < 2) throw std::invalid_argument("regularity_check: need m >= 2");
  const Rational H = d.support(m - 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j) {
      Rational lhs = d.cdf_le(j) * (H - d.support(j));
      Rational rhs = d.cdf_le(i) * (H - d.support(i));
      if (lhs < rhs) return false;
    }
  return true;
}

struct SlprevResult {
  double value = 0;
  double phi_boundary = 0;  // smallest support value with positive phi
  int m = 0;
};

// revenue of the base program on the discretized equal-revenue curve
// truncated at H: support grid over [1, H], F(v) = 1 - 1/v, atom at H.
// a geometric grid keeps the support size bounded as H grows.
inline SlprevResult slprev_equal_revenue(double H, int grid_points) {
  if (!(H > 1.0)) throw std::invalid_argument("slprev: H must exceed 1");
  if (grid_points < 2 || grid_points > 5000)
    throw std::invalid_argument("slprev: grid size out of range (2..5000)");
  const int m = grid_points;
  std::vector<double> w(m), q(m);
  const double step = std::pow(H, 1.0 / (m - 1));
  for (int j = 0; j < m; ++j) w[j] = std::pow(step, j);
  w[m - 1] = H;
  for (int j = 0; j + 1 < m; ++j) q[j] = 1.0 / w[j] - 1.0 / w[j + 1];
  q[m - 1] = 1.0 / H;
  // collapse any zero-width cells (can occur for tiny H with coarse grids)
  std::vector<Rational> ws, qs;
  for (int j = 0; j < m; ++j) {
    if (q[j] <= 0) continue;
    ws.push_back(Rational(w[j]));
    qs.push_back(Rational(q[j]));
  }
  Rational total = 0;
  for (const auto& p : qs) total += p;
  qs.back() += Rational(1) - total;  // absorb grid rounding into the atom
  ValueDistribution dist(std::move(ws), std::move(qs));
  auto fill = fill_low_to_high<double>(dist);
  SlprevResult out;
  out.m = dist.m();
  out.value = lagrangian_value(dist, fill.phis);
  out.phi_boundary = dist.support_d(dist.m() - 1);
  for (int j = 0; j < dist.m(); ++j)
    if (fill.phis[j] > 0) {
      out.phi_boundary = dist.support_d(j);
      break;
    }
  return out;
}

}  // namespace noregret

#endif  // NOREGRET_LP_HPP_
