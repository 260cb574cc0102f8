// throwaway compile/behavior smoke for the foundation headers
#include <cassert>
#include <cstdio>

#include "noregret/core.hpp"
#include "noregret/distribution.hpp"
#include "noregret/rational.hpp"
#include "noregret/rng.hpp"
#include "noregret/simplex.hpp"

using namespace noregret;

int main() {
  // rational helpers
  assert(to_fraction_string(rat(19, 32)) == "19/32");
  assert(parse_rational("3/4") == rat(3, 4));
  assert(parse_rational("0.25") == rat(1, 4));
  assert(parse_rational("-7") == rat(-7));

  // rng determinism
  assert(derive(1, 2, 3) == derive(1, 2, 3));
  assert(derive(1, 2, 3) != derive(1, 3, 2));
  double u = uniform01(42, 1, 2, 3);
  assert(u >= 0.0 && u < 1.0);
  for (int i = 0; i < 1000; ++i) {
    auto v = uniform_below(7, 9, i);
    assert(v < 7);
  }

  // distribution
  auto d = uniform4();
  assert(d.m() == 4);
  assert(d.cdf_below(0) == 0);
  assert(d.cdf_le(3) == 1);
  assert(d.tail(2) == rat(1, 2));
  assert(d.draw_index(0.0) == 0);
  assert(d.draw_index(0.26) == 1);
  assert(d.draw_index(0.999) == 3);

  // simplex: max 3x+2y st x+y<=4, x+3y<=6 -> (4,0) obj 12
  {
    auto r = solve_lp<Rational>({rat(3), rat(2)},
                                {{rat(1), rat(1)}, {rat(1), rat(3)}},
                                {Rel::kLe, Rel::kLe}, {rat(4), rat(6)});
    assert(r.status == LpStatus::kOptimal);
    assert(r.objective == rat(12));
  }
  // infeasible: x <= 1, x >= 2
  {
    auto r = solve_lp<Rational>({rat(1)}, {{rat(1)}, {rat(1)}},
                                {Rel::kLe, Rel::kGe}, {rat(1), rat(2)});
    assert(r.status == LpStatus::kInfeasible);
  }
  // unbounded: max x st x >= 1
  {
    auto r = solve_lp<Rational>({rat(1)}, {{rat(1)}}, {Rel::kGe}, {rat(1)});
    assert(r.status == LpStatus::kUnbounded);
  }
  // float mode
  {
    auto r = solve_lp<double>({3.0, 2.0}, {{1.0, 1.0}, {1.0, 3.0}},
                              {Rel::kLe, Rel::kLe}, {4.0, 6.0});
    assert(r.status == LpStatus::kOptimal);
    assert(r.objective > 11.999999 && r.objective < 12.000001);
  }

  // core formulas vs hand values
  assert((expected_max<Rational>(d, 2)) == rat(25, 32));
  assert((x_vcg<Rational>(d, 2, 0)) == rat(1, 8));
  assert((x_vcg<Rational>(d, 2, 3)) == rat(7, 8));
  assert((p_vcg<Rational>(d, 2, 0)) == rat(1, 32));
  assert((p_vcg<Rational>(d, 2, 3)) == rat(1, 2));
  assert((e_harmonic<Rational>(rat(2, 5), 2)) == rat(4, 5));
  assert((myerson_revenue<Rational>(d, 1)) == rat(3, 8));
  assert((myerson_revenue<Rational>(d, 2)) == rat(19, 32));
  auto [rev, res] = best_spa_reserve<Rational>(d, 2);
  assert(rev == rat(37, 64));
  assert(res == rat(3, 4));
  // border: second-price interim is feasible, all-ones is not
  {
    std::vector<Rational> xv;
    for (int i = 0; i < 4; ++i) xv.push_back(x_vcg<Rational>(d, 2, i));
    assert(border_satisfied<Rational>(d, 2, xv));
    assert(border_oracle(d, 2, xv));
    std::vector<Rational> ones(4, rat(1));
    assert(!border_satisfied<Rational>(d, 2, ones));
    assert(!border_oracle(d, 2, ones));
    // the trap instance that suffix-only checks miss
    ValueDistribution two({rat(1, 2), rat(1)}, {rat(1, 2), rat(1, 2)});
    std::vector<Rational> trap = {rat(1), rat(0)};
    assert(!border_satisfied<Rational>(two, 2, trap));
    assert(!border_oracle(two, 2, trap));
  }
  std::puts("foundation smoke: all assertions passed");
  return 0;
}
