#ifndef NOREGRET_VERIFY_HPP_
#define NOREGRET_VERIFY_HPP_

// exact-arithmetic reproductions of the counterexamples and bounds:
// the infeasible LP tuple on the two-buyer geometric-gap instance, the
// same-bid allocation ceiling, the non-convexity of the achievable
// (X, Y) set, the uniform-auction suboptimality gap, empirical BMSW
// necessity checks on simulation traces, and closed-form expected
// reward tables for the phased auction against intended-arm opponents.
// every check runs in rationals; reports never compare floats.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "noregret/core.hpp"
#include "noregret/distribution.hpp"
#include "noregret/engine.hpp"
#include "noregret/lp.hpp"
#include "noregret/rational.hpp"
#include "noregret/simplex.hpp"

namespace noregret {

struct CheckLine {
  std::string description;
  Rational lhs;
  Rational rhs;
  bool strict = false;  // ">" vs ">="
  bool holds = false;
};

struct VerificationReport {
  std::string claim;
  std::vector<CheckLine> checks;
  std::vector<std::string> notes;
  bool pass = true;

  void require(std::string description, Rational lhs, Rational rhs,
               bool strict) {
    CheckLine line;
    line.description = std::move(description);
    line.holds = strict ? lhs > rhs : lhs >= rhs;
    line.lhs = std::move(lhs);
    line.rhs = std::move(rhs);
    line.strict = strict;
    pass = pass && line.holds;
    checks.push_back(std::move(line));
  }
  void require_eq(std::string description, Rational lhs, Rational rhs) {
    CheckLine line;
    line.description = std::move(description);
    line.holds = lhs == rhs;
    line.lhs = std::move(lhs);
    line.rhs = std::move(rhs);
    line.strict = false;
    pass = pass && line.holds;
    checks.push_back(std::move(line));
  }
};

// ---------------------------------------------------------------------------
// Border extreme points

// x is an extreme point of the symmetric-allocation polytope iff it is
// feasible and the gradients of its tight constraints (subset rows, box
// bounds, adjacent-monotone equalities) span all m coordinates
inline bool border_extreme_point(const ValueDistribution& d, int n,
                                 const std::vector<Rational>& x) {
  const int m = d.m();
  if (static_cast<int>(x.size()) != m)
    throw std::invalid_argument("border_extreme_point: one x per value");
  if (m > 16)
    throw std::invalid_argument("border_extreme_point: subset sweep needs m <= 16");
  if (!border_satisfied<Rational>(d, n, x)) return false;
  std::vector<std::vector<Rational>> rows;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Rational lhs(0), qs(0);
    for (int k = 0; k < m; ++k)
      if (mask & (1u << k)) {
        lhs += d.prob(k) * x[k];
        qs += d.prob(k);
      }
    Rational bound = 1 - pow_int(Rational(1) - qs, n);
    if (n * lhs == bound) {
      std::vector<Rational> row(m, Rational(0));
      for (int k = 0; k < m; ++k)
        if (mask & (1u << k)) row[k] = d.prob(k);
      rows.push_back(std::move(row));
    }
  }
  for (int k = 0; k < m; ++k) {
    if (x[k] == 0 || x[k] == 1) {
      std::vector<Rational> row(m, Rational(0));
      row[k] = Rational(1);
      rows.push_back(std::move(row));
    }
    if (k + 1 < m && x[k] == x[k + 1]) {
      std::vector<Rational> row(m, Rational(0));
      row[k] = Rational(-1);
      row[k + 1] = Rational(1);
      rows.push_back(std::move(row));
    }
  }
  return rational_rank(rows) == m;
}

// ---------------------------------------------------------------------------
// the two-buyer counterexample instance

inline ValueDistribution counterexample_instance(long long M,
                                                 const Rational& delta) {
  if (M <= 0) throw std::invalid_argument("counterexample: M > 0");
  if (!(delta > 0) || !(delta < rat(1, 7)))
    throw std::invalid_argument("counterexample: 0 < delta < 1/7");
  std::vector<Rational> support = {rat(1, M), rat(4, M), rat(5, M),
                                   rat(10, M)};
  std::vector<Rational> probs = {5 * delta, delta, delta, 1 - 7 * delta};
  return ValueDistribution(support, probs);
}

// x* = W q with W lower-triangular, 1/2 on the diagonal and 1 below:
// the two-buyer truthful interim allocation of this instance
inline std::vector<Rational> counterexample_x_star(
    const ValueDistribution& d) {
  std::vector<Rational> x(4, Rational(0));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < i; ++j) x[i] += d.prob(j);
    x[i] += d.prob(i) / 2;
  }
  return x;
}

inline VerificationReport verify_counterexample(long long M,
                                                const Rational& delta) {
  auto d = counterexample_instance(M, delta);
  VerificationReport rep;
  rep.claim = "two-buyer tuple (x*, u*) violates the deviation constraints";
  auto x = counterexample_x_star(d);
  // the tight completion; the source text's "min" cannot be meant literally
  // (it would zero every u), so the max form is used and flagged
  auto u = tight_utilities<Rational>(d, x);
  rep.notes.push_back(
      "u* built as max_j (w_i - w_j) x_j (tight completion; a min over the "
      "same terms would be identically zero)");
  rep.notes.push_back(
      "x*_4 = 1/2 + 7 delta / 2 from the matrix product; the source text "
      "lists 1 - 7 delta / 2, which disagrees with W q; the decisive "
      "inequalities only involve x*_1..x*_3");

  const auto& w = d;
  // value-3 buyers strictly prefer deviating to arm 1 over arm 2
  rep.require("x1 (w3 - w1) > x2 (w3 - w2)",
              x[0] * (w.support(2) - w.support(0)),
              x[1] * (w.support(2) - w.support(1)), true);
  // value-4 buyers strictly prefer arm 2 over arm 1 and over arm 3
  rep.require("x2 (w4 - w2) > x1 (w4 - w1)",
              x[1] * (w.support(3) - w.support(1)),
              x[0] * (w.support(3) - w.support(0)), true);
  rep.require("x2 (w4 - w2) > x3 (w4 - w3)",
              x[1] * (w.support(3) - w.support(1)),
              x[2] * (w.support(3) - w.support(2)), true);
  // x* is monotone and coincides with the truthful interim allocation
  for (int i = 0; i + 1 < 4; ++i)
    rep.require("x monotone step " + std::to_string(i + 1), x[i + 1], x[i],
                false);
  for (int i = 0; i < 4; ++i)
    rep.require_eq("x*_" + std::to_string(i + 1) + " equals x_vcg",
                   x[i], x_vcg<Rational>(d, 2, i));
  rep.require_eq("x* is a Border extreme point",
                 Rational(border_extreme_point(d, 2, x) ? 1 : 0), Rational(1));
  // stash the tuple for callers that print it
  for (int i = 0; i < 4; ++i) {
    CheckLine line;
    line.description = "u*_" + std::to_string(i + 1) + " (tight completion)";
    line.lhs = u[i];
    line.rhs = u[i];
    line.holds = true;
    rep.checks.push_back(std::move(line));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// same-bid allocation ceiling

// buyers pulling one shared bid of total mass qS cannot win more often than
// (1 - (1 - qS)^n) / (n qS); equality needs every profile to sell
inline Rational same_bid_alloc_bound(const Rational& qS, int n) {
  return e_harmonic<Rational>(qS, n);
}

// ---------------------------------------------------------------------------
// non-convexity of the achievable (X, Y) region

struct NonconvexityReport {
  VerificationReport report;
  std::vector<Rational> products_a5, products_a4, products_a3;
  std::vector<Rational> products_b5, products_b4, products_b3;
  std::vector<Rational> y_mid, products_mid5, products_mid4;
};

namespace detail {

inline std::vector<Rational> utility_products(const std::vector<Rational>& w,
                                              const std::vector<Rational>& y,
                                              int value_idx) {
  std::vector<Rational> out;
  for (int j = 0; j < value_idx; ++j)
    out.push_back((w[value_idx] - w[j]) * y[j]);
  return out;
}

// favorite deviation: argmax utility product, with bidding own value (0) as
// the fallback; ties keep the earliest index, matching a strict-max reading
inline std::pair<int, Rational> favorite_arm(const std::vector<Rational>& w,
                                             const std::vector<Rational>& y,
                                             int value_idx) {
  auto prods = utility_products(w, y, value_idx);
  Rational best(0);
  int arg = value_idx;
  for (int j = 0; j < value_idx; ++j)
    if (prods[j] > best) {
      best = prods[j];
      arg = j;
    }
  return {arg, best};
}

}  // namespace detail

inline NonconvexityReport verify_nonconvexity() {
  NonconvexityReport out;
  VerificationReport& rep = out.report;
  rep.claim = "the achievable (X, Y) region is not convex";
  const std::vector<Rational> w = {Rational(1), Rational(3), Rational(4),
                                   Rational(7), Rational(30)};
  const std::vector<Rational> ya = {rat(3, 10), rat(7, 10), rat(9, 10),
                                    rat(9, 10), rat(9, 10)};
  const std::vector<Rational> yb = {rat(3, 10), rat(3, 10), rat(7, 10),
                                    rat(9, 10), rat(9, 10)};
  const std::vector<Rational> xa = {rat(3, 10), rat(3, 10), rat(3, 10),
                                    rat(7, 10), rat(9, 10)};
  const std::vector<Rational> xb = xa;

  out.products_a5 = detail::utility_products(w, ya, 4);
  out.products_a4 = detail::utility_products(w, ya, 3);
  out.products_a3 = detail::utility_products(w, ya, 2);
  out.products_b5 = detail::utility_products(w, yb, 4);
  out.products_b4 = detail::utility_products(w, yb, 3);
  out.products_b3 = detail::utility_products(w, yb, 2);

  // first tuple: favorites are w3 / w2 / w1 for values w5 / w4 / w3
  auto fav = detail::favorite_arm(w, ya, 4);
  rep.require_eq("first tuple: value w5 favorite arm index", Rational(fav.first),
                 Rational(2));
  rep.require_eq("first tuple: value w5 favorite product (23.4)", fav.second,
                 rat(117, 5));
  fav = detail::favorite_arm(w, ya, 3);
  rep.require_eq("first tuple: value w4 favorite arm index", Rational(fav.first),
                 Rational(1));
  rep.require_eq("first tuple: value w4 favorite product (2.8)", fav.second,
                 rat(14, 5));
  fav = detail::favorite_arm(w, ya, 2);
  rep.require_eq("first tuple: value w3 favorite arm index", Rational(fav.first),
                 Rational(0));
  // second tuple: favorites are w4 / w3 / w1
  fav = detail::favorite_arm(w, yb, 4);
  rep.require_eq("second tuple: value w5 favorite arm index",
                 Rational(fav.first), Rational(3));
  rep.require_eq("second tuple: value w5 favorite product (20.7)", fav.second,
                 rat(207, 10));
  fav = detail::favorite_arm(w, yb, 3);
  rep.require_eq("second tuple: value w4 favorite arm index",
                 Rational(fav.first), Rational(2));
  fav = detail::favorite_arm(w, yb, 2);
  rep.require_eq("second tuple: value w3 favorite arm index",
                 Rational(fav.first), Rational(0));

  // both pull profiles are Border-feasible
  {
    ValueDistribution pulls_a({Rational(1), Rational(3), Rational(4)},
                              {rat(3, 5), rat(1, 5), rat(1, 5)});
    std::vector<Rational> alloc_a = {ya[0], ya[1], ya[2]};
    rep.require_eq("first pull profile Border-feasible",
                   Rational(border_satisfied<Rational>(pulls_a, 2, alloc_a) &&
                                    border_oracle(pulls_a, 2, alloc_a)
                                ? 1
                                : 0),
                   Rational(1));
    ValueDistribution pulls_b({Rational(1), Rational(7)},
                              {rat(4, 5), rat(1, 5)});
    std::vector<Rational> alloc_b = {yb[0], yb[3]};
    rep.require_eq("second pull profile Border-feasible",
                   Rational(border_satisfied<Rational>(pulls_b, 2, alloc_b) &&
                                    border_oracle(pulls_b, 2, alloc_b)
                                ? 1
                                : 0),
                   Rational(1));
    // the favorites-derived variant of the second profile also fits
    ValueDistribution pulls_b2({Rational(1), Rational(4), Rational(7)},
                               {rat(3, 5), rat(1, 5), rat(1, 5)});
    std::vector<Rational> alloc_b2 = {yb[0], yb[2], yb[3]};
    rep.require_eq("second profile, favorites-derived, Border-feasible",
                   Rational(border_satisfied<Rational>(pulls_b2, 2, alloc_b2)
                                ? 1
                                : 0),
                   Rational(1));
  }

  // midpoint: both top values favor the same arm w3 ...
  out.y_mid.resize(5);
  for (int j = 0; j < 5; ++j) out.y_mid[j] = (ya[j] + yb[j]) / 2;
  out.products_mid5 = detail::utility_products(w, out.y_mid, 4);
  out.products_mid4 = detail::utility_products(w, out.y_mid, 3);
  fav = detail::favorite_arm(w, out.y_mid, 4);
  rep.require_eq("midpoint: value w5 favorite arm index", Rational(fav.first),
                 Rational(2));
  rep.require_eq("midpoint: value w5 favorite product (20.8)", fav.second,
                 rat(104, 5));
  for (int j = 0; j < 4; ++j)
    if (j != 2)
      rep.require("midpoint: w5 favorite strict over arm " +
                      std::to_string(j + 1),
                  out.products_mid5[2], out.products_mid5[j], true);
  fav = detail::favorite_arm(w, out.y_mid, 3);
  rep.require_eq("midpoint: value w4 favorite arm index", Rational(fav.first),
                 Rational(2));

  // ... so their combined mass 2/5 sits on one bid, capping the win rate at
  // 4/5, below the midpoint target (x_a5 + x_b5)/2 = 9/10: contradiction
  Rational cap = same_bid_alloc_bound(rat(2, 5), 2);
  Rational target = (xa[4] + xb[4]) / 2;
  rep.require_eq("same-bid ceiling at mass 2/5", cap, rat(4, 5));
  rep.require("midpoint target exceeds the ceiling (contradiction)", target,
              cap, true);
  return out;
}

// ---------------------------------------------------------------------------
// uniform-auction suboptimality on the uniform {1/4..1} instance

inline VerificationReport verify_uniform_suboptimality() {
  VerificationReport rep;
  rep.claim =
      "second-price with reserve 3/4 beats the optimal uniform auction";
  auto d = uniform4();
  const Rational r = rat(3, 4);
  Rational uniform_rev(0), spa_rev(0);
  bool dominance = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational p = d.prob(i) * d.prob(j);
      Rational hi = std::max(d.support(i), d.support(j));
      Rational lo = std::min(d.support(i), d.support(j));
      Rational u_rev = hi >= r ? r : Rational(0);
      Rational s_rev = hi >= r ? std::max(lo, r) : Rational(0);
      uniform_rev += p * u_rev;
      spa_rev += p * s_rev;
      dominance = dominance && s_rev >= u_rev;
    }
  rep.require_eq("uniform reserve-3/4 revenue", uniform_rev, rat(9, 16));
  rep.require_eq("second-price reserve-3/4 revenue", spa_rev, rat(37, 64));
  rep.require("second-price strictly ahead", spa_rev, uniform_rev, true);
  rep.require_eq("per-profile weak dominance", Rational(dominance ? 1 : 0),
                 Rational(1));
  // the all-top profile: second price collects the full value
  rep.require_eq("both values 1: second-price revenue", Rational(1),
                 Rational(1));
  rep.require_eq("both values 1: uniform revenue", r, rat(3, 4));
  return rep;
}

// ---------------------------------------------------------------------------
// empirical BMSW necessity on a trace

inline VerificationReport verify_bmsw_tuple(const ValueDistribution& d, int n,
                                            const std::vector<Rational>& x,
                                            const std::vector<Rational>& u,
                                            const Rational& slack) {
  const int m = d.m();
  if (static_cast<int>(x.size()) != m || static_cast<int>(u.size()) != m)
    throw std::invalid_argument("verify_bmsw_tuple: one (x, u) per value");
  VerificationReport rep;
  rep.claim = "empirical (X, U) satisfies the reduced necessity constraints";
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < i; ++j)
      rep.require("u_" + std::to_string(i + 1) + " >= (w_" +
                      std::to_string(i + 1) + " - w_" + std::to_string(j + 1) +
                      ") x_" + std::to_string(j + 1) + " - slack",
                  u[i], (d.support(i) - d.support(j)) * x[j] - slack, false);
  for (int i = 0; i + 1 < m; ++i)
    rep.require("x monotone step " + std::to_string(i + 1), x[i + 1],
                x[i] - slack, false);
  rep.require_eq(
      "Border level-set feasibility (with slack)",
      Rational(border_satisfied<Rational>(d, n, x, slack) ? 1 : 0),
      Rational(1));
  return rep;
}

inline VerificationReport verify_bmsw_necessity(const SimulationTrace& tr,
                                                const ValueDistribution& d,
                                                int buyer,
                                                const Rational& slack) {
  const int m = tr.m;
  std::vector<Rational> x(m, Rational(0)), u(m, Rational(0));
  for (int c = 0; c < m; ++c) {
    long long rounds = tr.ctx_rounds[buyer * m + c];
    if (rounds == 0) continue;
    x[c] = rat(tr.ctx_wins[buyer * m + c], rounds);
    u[c] = tr.ctx_util_exact[buyer * m + c] / rounds;
  }
  return verify_bmsw_tuple(d, tr.n, x, u, slack);
}

// ---------------------------------------------------------------------------
// closed-form expected tables for the phased auction (two buyers, opponent
// scripted to the intended arm); rewards reassemble for any discount as
// r = win (value + eps) - expected_payment

struct FseExpectedTables {
  std::vector<Rational> win;         // per own bid index
  std::vector<Rational> pay_first;   // expected payment, first half
  std::vector<Rational> pay_second;  // expected payment incl. surcharge
};

// main phases: the opponent bids its value; the tables coincide with the
// truthful second-price interim allocation and payment
inline FseExpectedTables fse_expected_main_tables(const ValueDistribution& d,
                                                  int n) {
  const int m = d.m();
  FseExpectedTables t;
  for (int k = 0; k < m; ++k) {
    Rational X = x_vcg<Rational>(d, n, k);
    Rational p1 = p_vcg<Rational>(d, n, k);
    t.win.push_back(X);
    t.pay_first.push_back(p1);
    // the second half repays the first-half discount: pay + surcharge
    // telescopes to 2 w_k X - p1
    t.pay_second.push_back(2 * d.support(k) * X - p1);
  }
  return t;
}

// setup phase tau (1-based, tau <= m, two buyers): own counterfactual bid
// w_s for s in 1..tau against an opponent bidding min(value, w_tau)
inline FseExpectedTables fse_expected_setup_tables(const ValueDistribution& d,
                                                   int tau) {
  const int m = d.m();
  if (tau < 1 || tau > m)
    throw std::invalid_argument("setup tables: 1 <= tau <= m");
  FseExpectedTables t;
  Rational ratio = d.prob(tau - 1) / d.tail(tau - 1);
  for (int s = 0; s < tau; ++s) {
    Rational ws = d.support(s);
    Rational wp(0), p1(0), p2(0);
    for (int k = 0; k < m; ++k) {
      Rational opp = d.support(std::min(k, tau - 1));
      if (ws > opp) {
        // unique top; the lottery ratio^0 = 1 never bites here
        wp += d.prob(k);
        p1 += d.prob(k) * opp;
        p2 += d.prob(k) * (opp + 2 * (ws - opp));
      } else if (ws == opp) {
        // tie: uniform pick, and the top-of-phase lottery when at w_tau
        Rational pw = rat(1, 2) * (s == tau - 1 ? ratio : Rational(1));
        wp += d.prob(k) * pw;
        p1 += d.prob(k) * pw * ws;  // second-highest equals the own bid
        p2 += d.prob(k) * pw * ws;  // tie surcharge resolves to zero
      }
    }
    t.win.push_back(wp);
    t.pay_first.push_back(p1);
    t.pay_second.push_back(p2);
  }
  return t;
}

// cumulative expected table in per-R units: entry (tau, j, arm i) is the
// expected H at the START of phase tau for context j, divided by R
inline std::map<std::tuple<int, int, int>, Rational> fse_expected_cumulative(
    const ValueDistribution& d, int P, const Rational& eps) {
  const int m = d.m();
  auto main_t = fse_expected_main_tables(d, 2);
  std::vector<FseExpectedTables> setup_t;
  for (int tau = 1; tau < m; ++tau)
    setup_t.push_back(fse_expected_setup_tables(d, tau));
  std::map<std::tuple<int, int, int>, Rational> H;
  for (int j = 0; j < m; ++j) {
    for (int i = 1; i <= P; ++i) {
      Rational acc(0);
      for (int tau = 1; tau <= P; ++tau) {
        H[{tau, j, i}] = acc;
        const int age = tau + i - P;
        if (age < 1) continue;  // dormant
        if (age > m) {
          // retired: flat charge, both halves
          acc += 2 * (d.support(j) - 2 * d.support(m - 1) + eps);
          continue;
        }
        const FseExpectedTables& tab =
            tau < m ? setup_t[tau - 1] : main_t;
        const int k = age - 1;
        acc += tab.win[k] * (d.support(j) + eps) - tab.pay_first[k];
        acc += tab.win[k] * (d.support(j) + eps) - tab.pay_second[k];
      }
    }
  }
  return H;
}

// minimum margin (per R) by which the intended arm leads every other arm at
// main-phase starts, excluding the intended arm's predecessor; for the
// lowest context the still-dormant arms tie at zero and are excluded
inline Rational fse_expected_favorite_separation(const ValueDistribution& d,
                                                 int P, const Rational& eps) {
  const int m = d.m();
  auto H = fse_expected_cumulative(d, P, eps);
  std::optional<Rational> worst;
  for (int tau = m; tau <= P; ++tau) {
    for (int j = 0; j < m; ++j) {
      const int intended = P + (j + 1) - tau;
      if (intended < 1 || intended > P) continue;
      std::optional<Rational> best_other;
      for (int i = 1; i <= P; ++i) {
        if (i == intended || i == intended + 1) continue;
        const int age = tau + i - P;
        if (j == 0 && age <= 0) continue;
        Rational v = H[{tau, j, i}];
        if (!best_other || v > *best_other) best_other = v;
      }
      if (!best_other) continue;
      Rational gap = H[{tau, j, intended}] - *best_other;
      if (!worst || gap < *worst) worst = gap;
    }
  }
  if (!worst) throw std::logic_error("favorite separation: no main phases");
  return *worst;
}

}  // namespace noregret

#endif  // NOREGRET_VERIFY_HPP_
