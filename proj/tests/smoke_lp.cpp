// throwaway smoke for the LP module against frozen oracle values
#include <cassert>
#include <cmath>
#include <cstdio>

#include "noregret/lp.hpp"

using namespace noregret;

int main() {
  auto d = uniform4();

  auto single = solve_single_lp<Rational>(d);
  assert(single.status == LpStatus::kOptimal);
  assert(single.objective == rat(13, 32));
  assert(single.u == tight_utilities(d, single.x));

  auto border = solve_border_lp<Rational>(d, 2);
  assert(border.objective == rat(81, 256));
  assert(border.u == tight_utilities(d, border.x));

  auto reduced = solve_reduced_uniform_lp<Rational>(d, 2);
  assert(reduced.objective == rat(9, 32));
  std::vector<Rational> rx = {rat(0), rat(0), rat(3, 4), rat(3, 4)};
  assert(reduced.x == rx);
  // schedule weights: increments over E; E_3 = e_harmonic(1/2, 2) = 3/4
  auto lam = schedule_weights_from_x<Rational>(d, 2, reduced.x);
  assert(lam[0] == 0 && lam[1] == 0 && lam[3] == 0);
  assert(lam[2] == rat(3, 4) / e_harmonic<Rational>(rat(1, 2), 2));
  assert(lam[2] == rat(1));

  // border >= reduced on the same instance
  assert(border.objective >= reduced.objective);

  // fill on the reference instance
  ValueDistribution remark({rat(1), rat(9), rat(10), rat(15)},
                           {rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)});
  auto fill = fill_low_to_high<Rational>(remark);
  assert(fill.lam[0][0] == rat(1));
  assert(fill.lam[1][0] == rat(1, 8));
  assert(fill.lam[1][1] == rat(7, 8));
  assert(fill.lam[2][1] == rat(1));
  assert(fill.lam[3][1] == rat(1));
  std::vector<Rational> ph = {rat(0), rat(2), rat(10), rat(15)};
  assert(fill.phis == ph);
  assert(lagrangian_value(remark, fill.phis) == rat(27, 4));
  auto rem_single = solve_single_lp<Rational>(remark);
  assert(rem_single.objective == rat(27, 4));
  auto rep = check_lambda_properties(remark, fill.lam);
  assert(rep.positive_phi && rep.no_crossing && rep.lowest_first &&
         rep.phi_monotone);
  assert(rep.witness.empty());

  // crafted crossing violation
  {
    auto bad = fill.lam;
    bad[3][0] = rat(1, 2);
    bad[2][1] = rat(1, 2);
    auto r2 = check_lambda_properties(remark, bad);
    assert(!r2.no_crossing);
  }

  // regularity
  assert(!regularity_check(remark));
  ValueDistribution reg2({rat(1), rat(2)}, {rat(1, 2), rat(1, 2)});
  assert(regularity_check(reg2));

  // equal-revenue curve
  auto tiny = slprev_equal_revenue(2.0, 8);
  assert(tiny.value >= 1.0 - 1e-9);
  auto big = slprev_equal_revenue(1e4, 2000);
  double target = std::log(std::log(1e4) + 1.0);
  std::printf("slprev(1e4, 2000) = %.6f target %.6f boundary %.1f g %.1f\n",
              big.value, target, big.phi_boundary,
              1e4 / (std::log(1e4) + 1));
  assert(std::fabs(big.value - target) <= 0.10 * target);
  auto mid = slprev_equal_revenue(1e3, 1500);
  auto low = slprev_equal_revenue(1e2, 1000);
  assert(low.value < mid.value && mid.value < big.value);

  std::puts("lp smoke: all assertions passed");
  return 0;
}
