// throwaway smoke for the auctions module
#include <cassert>
#include <cstdio>

#include "noregret/auctions.hpp"
#include "noregret/learners.hpp"

using namespace noregret;

int main() {
  auto d = uniform4();
  // P=40, T=80 (R=1) keeps phase arithmetic small for status checks
  auto cfg = make_fse_config(d, 2, 80, 40, rat(0));

  // lifecycle
  assert(arm_status(cfg, 40, 1).kind == ArmKind::kActive);
  assert(arm_status(cfg, 40, 1).bid_index == 0);
  for (int i = 1; i < 40; ++i)
    assert(arm_status(cfg, i, 1).kind == ArmKind::kDormant);
  assert(arm_status(cfg, 0, 7).kind == ArmKind::kDormant);
  // tau=5: b_P retired; b_{P-1}..b_{P-4} active with bids w_4..w_1
  assert(arm_status(cfg, 40, 5).kind == ArmKind::kRetired);
  assert(arm_status(cfg, 39, 5).bid_index == 3);
  assert(arm_status(cfg, 36, 5).bid_index == 0);
  assert(arm_status(cfg, 35, 5).kind == ArmKind::kDormant);

  // intended arms: tau=1 all values at b_P; main tau: b_{P-tau+j+1}
  for (int j = 0; j < 4; ++j) assert(intended_arm(cfg, j, 1) == 40);
  assert(intended_arm(cfg, 0, 5) == 36);
  assert(intended_arm(cfg, 3, 5) == 39);

  // main-phase round: buyer0 active w_3 (arm 38 at tau=5), buyer1 active w_1
  {
    RoundRng rng{123, 7};
    auto out = fse_round(cfg, 5, Half::kFirst, {38, 36}, rng);
    assert(out.winner == 0);
    assert(out.payments[0] == rat(1, 4));  // second price w_1
    auto out2 = fse_round(cfg, 5, Half::kSecond, {38, 36}, rng);
    assert(out2.payments[0] == rat(3, 2) - rat(1, 4));  // 2 w_3 - w_1
    assert(!out2.tie_surcharge_zero);
  }
  // retired winner pays the flat ceiling
  {
    RoundRng rng{123, 8};
    auto out = fse_round(cfg, 5, Half::kSecond, {40, 36}, rng);
    assert(out.winner == 0);
    assert(out.payments[0] == rat(2));
  }
  // setup tau=1: both pull b_P; lottery probability = q_1/Q_1 = 1/4;
  // per-buyer win frequency ~ 1/8 = x_vcg(w_1)
  {
    int wins = 0, sales = 0;
    const int N = 200000;
    for (int t = 0; t < N; ++t) {
      RoundRng rng{999, static_cast<std::uint64_t>(t)};
      auto out = fse_round(cfg, 1, Half::kFirst, {40, 40}, rng);
      assert(out.lottery_prob == 0.25);
      if (out.winner >= 0) {
        ++sales;
        if (out.winner == 0) ++wins;
        assert(out.payments[out.winner] == rat(1, 4));  // tie pays own bid
      }
      auto out2 = fse_round(cfg, 1, Half::kSecond, {40, 40}, rng);
      if (out2.winner >= 0) {
        assert(out2.payments[out2.winner] == rat(1, 4));  // tie: no surcharge
        assert(out2.tie_surcharge_zero);
      }
    }
    double f = static_cast<double>(wins) / N;
    double fs = static_cast<double>(sales) / N;
    std::printf("setup tau=1: win freq %.4f (expect .125), sale %.4f (.25)\n",
                f, fs);
    assert(f > 0.120 && f < 0.130);
    assert(fs > 0.243 && fs < 0.257);
  }
  // exact expectation agrees
  {
    auto [a, p] = fse_expected_outcome(cfg, 1, Half::kFirst, 0, {40, 40});
    assert(a == rat(1, 8));
    assert(p == rat(1, 8) * rat(1, 4));
  }

  // spa rounds
  {
    RoundRng rng{5, 1};
    auto out = spa_reserve_round(rat(3, 4), {rat(1), rat(3, 4)}, rng);
    assert(out.winner == 0 && out.payments[0] == rat(3, 4));
    auto tie = spa_reserve_round(rat(3, 4), {rat(1), rat(1)}, rng);
    assert(tie.winner >= 0 && tie.payments[tie.winner] == rat(1));
    auto none = spa_reserve_round(rat(3, 4), {rat(1, 2), rat(1, 4)}, rng);
    assert(none.winner == -1);
  }
  // uniform pay-bid
  {
    int w0 = 0;
    for (int t = 0; t < 40000; ++t) {
      RoundRng rng{77, static_cast<std::uint64_t>(t)};
      auto out = uniform_pay_bid_round(rat(3, 4), {rat(1), rat(3, 4)}, rng);
      assert(out.winner >= 0);
      assert(out.payments[out.winner] ==
             (out.winner == 0 ? rat(1) : rat(3, 4)));
      if (out.winner == 0) ++w0;
    }
    double f = w0 / 40000.0;
    assert(f > 0.485 && f < 0.515);
  }

  // reserve schedule: x = [0,0,3/4,3/4] -> constant reserve 3/4
  {
    std::vector<Rational> x = {rat(0), rat(0), rat(3, 4), rat(3, 4)};
    auto sched = reserve_schedule_from_lp<Rational>(d, 2, 100, x);
    assert(static_cast<int>(sched.size()) == 100);
    for (const auto& r : sched) assert(r == rat(3, 4));
    std::vector<Rational> zero(4, rat(0));
    auto closed = reserve_schedule_from_lp<Rational>(d, 2, 10, zero);
    for (const auto& r : closed) assert(r == rat(2));  // above w_m: no sale
    // nonincreasing property on a mixed schedule
    std::vector<Rational> xm = {rat(1, 16), rat(1, 16), rat(1, 2), rat(1, 2)};
    auto mix = reserve_schedule_from_lp<Rational>(d, 2, 1000, xm);
    for (size_t t = 1; t < mix.size(); ++t) assert(mix[t] <= mix[t - 1]);
  }

  // monotonicity audits
  {
    for (int tau : {1, 2, 3, 5, 20, 40})
      for (auto half : {Half::kFirst, Half::kSecond})
        for (int opp : {0, 36, 37, 40}) {
          auto res = monotonicity_audit_fse(cfg, tau, half, {0, opp}, 0);
          if (!res.ok)
            std::printf("fse audit fail tau=%d half=%d opp=%d: %s\n", tau,
                        static_cast<int>(half), opp, res.witness.c_str());
          assert(res.ok);
        }
    auto spa_ok = monotonicity_audit_bids(false, rat(3, 4), d,
                                          {rat(-1), rat(1, 2)}, 0);
    assert(spa_ok.ok);
    auto uni_ok = monotonicity_audit_bids(true, rat(3, 4), d,
                                          {rat(-1), rat(1)}, 0);
    assert(uni_ok.ok);
    // negative control: payment decreasing in the arm index
    auto broken = monotonicity_audit_fn(3, [](int arm) {
      return std::make_pair(rat(arm, 3), rat(2 - arm));
    });
    assert(!broken.ok && !broken.witness.empty());
  }

  // config validation
  {
    bool threw = false;
    try {
      make_fse_config(d, 2, 81, 40);
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    assert(threw);
    threw = false;
    try {
      make_fse_config(d, 2, 12, 3);  // P < m
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    assert(threw);
    threw = false;
    try {
      make_fse_config(d, 2, 800, 40, rat(0), 0.2);  // needs P >= 4/0.2 = 20
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    assert(!threw);
    try {
      make_fse_config(d, 2, 800, 8, rat(0), 0.2);  // 8 < 20
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    assert(threw);
  }

  // labels
  assert(cfg.label(1) == rat(3));
  assert(cfg.label(40) == rat(42));
  assert(cfg.retired_bid() == rat(2));

  std::puts("auctions smoke: all assertions passed");
  return 0;
}
