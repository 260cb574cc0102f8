"""Closed-form auction quantities on small instances, exact fractions.

Independent reference for the C++ core module: expected maxima, second-price
win probabilities and payments, harmonic allocation factors, optimal-revenue
LP, and best reserve-price enumeration.
"""

from fractions import Fraction as F
from math import comb

import exact_simplex

UNIFORM4 = ([F(1, 4), F(1, 2), F(3, 4), F(1)], [F(1, 4)] * 4)


def cdf_below(probs, i):
    """P(value < w_i), 0-indexed i."""
    return sum(probs[:i], F(0))


def cdf_le(probs, i):
    return sum(probs[: i + 1], F(0))


def expected_max(support, probs, n):
    total = F(0)
    for i, w in enumerate(support):
        total += w * (cdf_le(probs, i) ** n - cdf_below(probs, i) ** n)
    return total


def x_vcg(support, probs, n, i):
    """Win prob of truthful bid w_i vs n-1 iid draws, uniform tie-break."""
    lo = cdf_below(probs, i)
    q = probs[i]
    return sum(
        F(comb(n - 1, k)) * q**k * lo ** (n - 1 - k) / (k + 1)
        for k in range(n)
    )


def p_vcg(support, probs, n, i):
    """Expected second-price payment of truthful bid w_i (includes win prob)."""
    lo = cdf_below(probs, i)
    q = probs[i]
    # ties at w_i: pay w_i when winning among k+1 tied bidders
    total = sum(
        F(comb(n - 1, k)) * q**k * lo ** (n - 1 - k) * support[i] / (k + 1)
        for k in range(1, n)
    )
    # highest opponent strictly below, at w_j: pay w_j
    for j in range(i):
        hi_le = cdf_le(probs, j) ** (n - 1)
        hi_lt = cdf_below(probs, j) ** (n - 1)
        total += support[j] * (hi_le - hi_lt)
    return total


def e_harmonic(qS, n):
    """E[1/(1+Binomial(n-1, qS))] -- expected share among same-bid rivals."""
    return sum(
        F(comb(n - 1, k)) * qS**k * (1 - qS) ** (n - 1 - k) / (k + 1)
        for k in range(n)
    )


def myerson_lp(support, probs, n):
    """Optimal truthful total revenue: envelope IC + IR + monotone + Border."""
    m = len(support)
    # variables: x_0..x_{m-1}, u_0..u_{m-1}
    nv = 2 * m
    c = [n * probs[i] * support[i] for i in range(m)] + [
        -n * probs[i] for i in range(m)
    ]
    rows = []
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            # u_i - u_j - (w_i - w_j) x_j >= 0
            coeffs = [F(0)] * nv
            coeffs[m + i] += 1
            coeffs[m + j] -= 1
            coeffs[j] -= support[i] - support[j]
            rows.append((coeffs, ">=", F(0)))
    for i in range(m - 1):
        coeffs = [F(0)] * nv
        coeffs[i + 1] += 1
        coeffs[i] -= 1
        rows.append((coeffs, ">=", F(0)))
    for j in range(m):  # Border on value suffixes (x monotone at optimum)
        coeffs = [F(0)] * nv
        qs = F(0)
        for l in range(j, m):
            coeffs[l] = n * probs[l]
            qs += probs[l]
        rows.append((coeffs, "<=", 1 - (1 - qs) ** n))
    res = exact_simplex.solve(c, rows)
    assert res.status == "optimal", res
    return res.objective, res.x[:m], res.x[m:]


def best_spa_reserve(support, probs, n=2):
    """Best second-price-with-reserve revenue by full enumeration (n=2)."""
    assert n == 2
    best = F(0), None
    for r in support:
        rev = F(0)
        for i, vi in enumerate(support):
            for j, vj in enumerate(support):
                hi, lo = max(vi, vj), min(vi, vj)
                if hi >= r:
                    rev += probs[i] * probs[j] * max(lo, r)
        if rev > best[0]:
            best = rev, r
    return best


def setup_phase_win_probs(support, probs, tau):
    """Unconditional per-buyer win prob in FSE setup phase tau (1-indexed),
    n=2, everyone pulling intended arms (bid min(value, w_tau))."""
    m = len(support)
    out = []
    for j in range(m):  # buyer's value index, 0-indexed
        bid_j = min(j, tau - 1)
        win = F(0)
        q_tau = probs[tau - 1]
        Q_tau = sum(probs[tau - 1 :], F(0))
        for k in range(m):  # opponent value
            bid_k = min(k, tau - 1)
            if bid_j > bid_k:
                win += probs[k]  # sole top bidder always wins (s <= tau)
            elif bid_j == bid_k:
                if bid_j == tau - 1:
                    win += probs[k] * F(1, 2) * (q_tau / Q_tau)
                else:
                    win += probs[k] * F(1, 2)
        out.append(win)
    return out


def values():
    sup, pr = UNIFORM4
    out = []
    emax = [expected_max(sup, pr, n) for n in (1, 2, 3, 4)]
    out.append(("ExpectedMaxUniform4", emax))
    out.append(("XvcgUniform4N2", [x_vcg(sup, pr, 2, i) for i in range(4)]))
    out.append(("XvcgUniform4N3", [x_vcg(sup, pr, 3, i) for i in range(4)]))
    out.append(("PvcgUniform4N2", [p_vcg(sup, pr, 2, i) for i in range(4)]))
    out.append(("EharmUniform4N2", [e_harmonic(sum(pr[i:], F(0)), 2) for i in range(4)]))
    mye2, _, _ = myerson_lp(sup, pr, 2)
    mye1, _, _ = myerson_lp(sup, pr, 1)
    out.append(("MyersonUniform4N1", mye1))
    out.append(("MyersonUniform4N2", mye2))
    spa_rev, spa_r = best_spa_reserve(sup, pr)
    out.append(("BestSpaRevUniform4N2", spa_rev))
    out.append(("BestSpaReserveUniform4N2", spa_r))
    out.append(("SetupPhase1WinProbsUniform4N2", setup_phase_win_probs(sup, pr, 1)))
    out.append(("SetupPhase2WinProbsUniform4N2", setup_phase_win_probs(sup, pr, 2)))
    out.append(("SetupPhase3WinProbsUniform4N2", setup_phase_win_probs(sup, pr, 3)))
    return out


if __name__ == "__main__":
    sup, pr = UNIFORM4
    assert expected_max(sup, pr, 1) == F(5, 8)
    assert expected_max(sup, pr, 2) == F(25, 32)
    assert [x_vcg(sup, pr, 2, i) for i in range(4)] == [
        F(1, 8), F(3, 8), F(5, 8), F(7, 8)]
    assert p_vcg(sup, pr, 2, 1) == F(1, 8)
    assert p_vcg([F(7, 10)], [F(1)], 2, 0) == F(7, 20)
    assert x_vcg([F(7, 10)], [F(1)], 2, 0) == F(1, 2)
    assert e_harmonic(F(1, 2), 2) == F(3, 4)
    assert e_harmonic(F(1), 2) == F(1, 2)
    # n * sum q x_vcg = 1 for every n (always allocates)
    for n in (1, 2, 3, 4):
        assert n * sum(pr[i] * x_vcg(sup, pr, n, i) for i in range(4)) == 1
    mye1, x1, u1 = myerson_lp(sup, pr, 1)
    assert mye1 == F(3, 8), mye1
    mye2, x2, u2 = myerson_lp(sup, pr, 2)
    assert mye2 == F(19, 32), mye2
    assert best_spa_reserve(sup, pr) == (F(37, 64), F(3, 4))
    assert myerson_lp([F(7, 10)], [F(1)], 3)[0] == F(7, 10)
    w1 = setup_phase_win_probs(sup, pr, 1)
    assert w1 == [F(1, 8)] * 4, w1  # everyone bids w_1; each wins 1/8
    w2 = setup_phase_win_probs(sup, pr, 2)
    assert w2 == [F(1, 8), F(3, 8), F(3, 8), F(3, 8)], w2
    # setup win prob matches the second-price win prob at the submitted bid
    w3 = setup_phase_win_probs(sup, pr, 3)
    assert w3 == [F(1, 8), F(3, 8), F(5, 8), F(5, 8)], w3
    print("calc_core ok:", values())
