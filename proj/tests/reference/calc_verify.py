"""Counterexample arithmetic reference: infeasible LP tuple, same-bid
allocation ceiling, non-convexity tables, uniform-auction suboptimality.
All exact fractions.
"""

from fractions import Fraction as F

import calc_core
import calc_border

W_MAT = [
    [F(1, 2), F(0), F(0), F(0)],
    [F(1), F(1, 2), F(0), F(0)],
    [F(1), F(1), F(1, 2), F(0)],
    [F(1), F(1), F(1), F(1, 2)],
]


def counterexample_instance(M, delta):
    support = [F(1, M), F(4, M), F(5, M), F(10, M)]
    probs = [5 * delta, delta, delta, 1 - 7 * delta]
    return support, probs


def x_star(probs):
    return [sum(W_MAT[i][j] * probs[j] for j in range(4)) for i in range(4)]


def u_star(support, x):
    """Tight completion of the regret constraints (the text's min is a typo:
    the tuple only satisfies u_i >= (w_i - w_j) x_j with the max form)."""
    return [
        max([F(0)] + [(support[i] - support[j]) * x[j] for j in range(i)])
        for i in range(4)
    ]


def counterexample_inequalities(support, x):
    w = support
    return [
        (x[0] * (w[2] - w[0]), x[1] * (w[2] - w[1])),
        (x[1] * (w[3] - w[1]), x[0] * (w[3] - w[0])),
        (x[1] * (w[3] - w[1]), x[2] * (w[3] - w[2])),
    ]


def same_bid_alloc_bound(qS, n):
    return (1 - (1 - qS) ** n) / (n * qS)


NONCONVEX_W = [F(1), F(3), F(4), F(7), F(30)]
NONCONVEX_Q = [F(1, 5)] * 5
Y_A = [F(3, 10), F(7, 10), F(9, 10), F(9, 10), F(9, 10)]
X_A = [F(3, 10), F(3, 10), F(3, 10), F(7, 10), F(9, 10)]
Y_B = [F(3, 10), F(3, 10), F(7, 10), F(9, 10), F(9, 10)]
X_B = X_A


def utility_products(w, y, value_idx):
    """(w_value - w_arm) * y_arm for arms strictly below the value."""
    return [(w[value_idx] - w[j]) * y[j] for j in range(value_idx)]


def favorite_arm(w, y, value_idx):
    prods = utility_products(w, y, value_idx)
    best, arg = F(0), value_idx  # bidding own value yields 0
    for j, p in enumerate(prods):
        if p > best:
            best, arg = p, j
    return arg, best


def values():
    out = []
    for name, delta in (("Delta100th", F(1, 100)), ("Delta20th", F(1, 20)),
                        ("Delta10th", F(1, 10))):
        sup, pr = counterexample_instance(10, delta)
        xs = x_star(pr)
        us = u_star(sup, xs)
        out.append((f"CounterexampleXstar{name}", xs))
        out.append((f"CounterexampleUstar{name}", us))
        ineq = counterexample_inequalities(sup, xs)
        out.append((f"CounterexampleIneqLhs{name}", [a for a, b in ineq]))
        out.append((f"CounterexampleIneqRhs{name}", [b for a, b in ineq]))
    out.append(("SameBidBoundTwoFifthsN2", same_bid_alloc_bound(F(2, 5), 2)))
    out.append(("SameBidBoundOneFifthN2", same_bid_alloc_bound(F(1, 5), 2)))

    w = NONCONVEX_W
    out.append(("NonconvexProductsA5", utility_products(w, Y_A, 4)))
    out.append(("NonconvexProductsA4", utility_products(w, Y_A, 3)))
    out.append(("NonconvexProductsA3", utility_products(w, Y_A, 2)))
    out.append(("NonconvexProductsB5", utility_products(w, Y_B, 4)))
    out.append(("NonconvexProductsB4", utility_products(w, Y_B, 3)))
    out.append(("NonconvexProductsB3", utility_products(w, Y_B, 2)))
    y_mid = [(a + b) / 2 for a, b in zip(Y_A, Y_B)]
    out.append(("NonconvexMidY", y_mid))
    out.append(("NonconvexMidProducts5", utility_products(w, y_mid, 4)))
    out.append(("NonconvexMidProducts4", utility_products(w, y_mid, 3)))
    out.append(("UniformReserveRevUniform4", uniform_reserve_revenue()))
    return out


def uniform_reserve_revenue():
    """Reserve-3/4 pay-your-bid uniform revenue, clever 0-mean-based bids."""
    sup4, pr4 = calc_core.UNIFORM4
    r = F(3, 4)
    rev = F(0)
    for i, vi in enumerate(sup4):
        for j, vj in enumerate(sup4):
            if max(vi, vj) >= r:
                rev += pr4[i] * pr4[j] * r
    return rev


if __name__ == "__main__":
    sup, pr = counterexample_instance(10, F(1, 10))
    xs = x_star(pr)
    assert xs == [F(1, 4), F(11, 20), F(13, 20), F(17, 20)], xs
    # x* coincides with the two-buyer truthful second-price interim allocation
    assert xs == [calc_core.x_vcg(sup, pr, 2, i) for i in range(4)]
    assert calc_border.border_level_set_check(pr, xs, 2)
    ineq = counterexample_inequalities(sup, xs)
    d = F(1, 10)
    assert ineq[0] == (10 * d / 10, F(11, 2) * d / 10)
    assert ineq[1] == (33 * d / 10, F(45, 2) * d / 10)
    assert ineq[2] == (33 * d / 10, F(65, 2) * d / 10)
    for lhs, rhs in ineq:
        assert lhs > rhs
    us = u_star(sup, xs)
    assert us[3] == xs[1] * (sup[3] - sup[1]), us  # argmax at j=2
    # monotone x* needs delta <= 1/6; all swept deltas qualify
    for dd in (F(1, 100), F(1, 20), F(1, 10)):
        s2, p2 = counterexample_instance(10, dd)
        xs2 = x_star(p2)
        assert all(xs2[i] <= xs2[i + 1] for i in range(3))
        for lhs, rhs in counterexample_inequalities(s2, xs2):
            assert lhs > rhs

    assert same_bid_alloc_bound(F(2, 5), 2) == F(4, 5)
    assert same_bid_alloc_bound(F(1, 5), 2) == F(9, 10)
    assert same_bid_alloc_bound(F(1), 3) == F(1, 3)

    w = NONCONVEX_W
    a5 = utility_products(w, Y_A, 4)
    assert a5 == [F(87, 10), F(189, 10), F(117, 5), F(207, 10)], a5
    assert favorite_arm(w, Y_A, 4) == (2, F(117, 5))          # arm w_3, 23.4
    assert favorite_arm(w, Y_A, 3) == (1, F(14, 5))           # arm w_2, 2.8
    assert favorite_arm(w, Y_A, 2) == (0, F(9, 10))           # arm w_1, 0.9
    b5 = utility_products(w, Y_B, 4)
    assert b5 == [F(87, 10), F(81, 10), F(91, 5), F(207, 10)], b5
    assert favorite_arm(w, Y_B, 4) == (3, F(207, 10))         # arm w_4, 20.7
    assert favorite_arm(w, Y_B, 3) == (2, F(21, 10))          # arm w_3, 2.1
    assert favorite_arm(w, Y_B, 2) == (0, F(9, 10))

    # pull distributions: a-side favorites; b-side as the text states it
    pulls_a = ([F(3, 5), F(1, 5), F(1, 5)], [Y_A[0], Y_A[1], Y_A[2]])
    pulls_b_text = ([F(4, 5), F(1, 5)], [Y_B[0], Y_B[3]])
    pulls_b_fav = ([F(3, 5), F(1, 5), F(1, 5)], [Y_B[0], Y_B[2], Y_B[3]])
    assert calc_border.border_level_set_check(*pulls_a, 2)
    assert calc_border.border_level_set_check(*pulls_b_text, 2)
    assert calc_border.border_level_set_check(*pulls_b_fav, 2)
    assert calc_border.border_oracle(*pulls_a, 2)
    assert calc_border.border_oracle(*pulls_b_text, 2)

    y_mid = [(a + b) / 2 for a, b in zip(Y_A, Y_B)]
    assert y_mid == [F(3, 10), F(1, 2), F(4, 5), F(9, 10), F(9, 10)]
    m5 = utility_products(w, y_mid, 4)
    assert m5 == [F(87, 10), F(27, 2), F(104, 5), F(207, 10)], m5
    assert favorite_arm(w, y_mid, 4) == (2, F(104, 5))        # 20.8 strict max
    assert favorite_arm(w, y_mid, 3) == (2, F(12, 5))         # w_4 also likes w_3
    # both top values on the same arm: ceiling 4/5 < required 9/10
    assert same_bid_alloc_bound(F(2, 5), 2) < (X_A[4] + X_B[4]) / 2

    # uniform-auction suboptimality at reserve 3/4 on uniform {1/4..1}
    sup4, pr4 = calc_core.UNIFORM4
    r = F(3, 4)
    uniform_rev = F(0)
    spa_rev = F(0)
    dominance = True
    for i, vi in enumerate(sup4):
        for j, vj in enumerate(sup4):
            p = pr4[i] * pr4[j]
            hi, lo = max(vi, vj), min(vi, vj)
            # clever 0-mean-based buyers bid the reserve when value >= r
            u_rev = r if hi >= r else F(0)
            s_rev = max(lo, r) if hi >= r else F(0)
            uniform_rev += p * u_rev
            spa_rev += p * s_rev
            dominance = dominance and (s_rev >= u_rev)
    assert uniform_rev == F(9, 16), uniform_rev
    assert spa_rev == F(37, 64), spa_rev
    assert spa_rev > uniform_rev and dominance
    print("calc_verify ok")
    for name, val in values():
        print(" ", name, "=", val)
