"""Independent reference values for the C++ tests.

Brute force, mpmath and scipy only; nothing here imports or mirrors the C++
code. Run `python3 gen_oracles.py > ../unit/oracle_values.hpp`.
"""
import itertools
import math

import mpmath as mp
from scipy.stats import binom

mp.mp.dps = 40


def levels_spin(nv, edges, q, cost):
    out = {}
    for s in itertools.product(range(q), repeat=nv):
        h = sum(cost(s[u], s[v]) for u, v in edges)
        out[h] = out.get(h, 0) + 1
    return [out.get(i, 0) for i in range(max(out) + 1)]


def matchings_by_size(nv, edges):
    out = {}
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            vs = [x for e in sub for x in e]
            if len(vs) == len(set(vs)):
                out[r] = out.get(r, 0) + 1
    return [out.get(i, 0) for i in range(max(out) + 1)]


def hardcore_levels(nv, edges):
    # subsets, H = edges inside; weight 1
    out = {}
    for s in itertools.product((0, 1), repeat=nv):
        h = sum(1 for u, v in edges if s[u] and s[v])
        out[h] = out.get(h, 0) + 1
    return [out.get(i, 0) for i in range(max(out) + 1)]


def grid(side):
    e = []
    for r in range(side):
        for c in range(side):
            v = r * side + c
            if c + 1 < side:
                e.append((v, v + 1))
            if r + 1 < side:
                e.append((v, v + side))
    return e


def cycle(n):
    return [(i, (i + 1) % n) for i in range(n)]


def path(n):
    return [(i, i + 1) for i in range(n - 1)]


def chromatic_dc(nv, edges, k):
    """Deletion-contraction: P(G) = P(G - e) - P(G / e)."""
    edges = {tuple(sorted(e)) for e in edges}
    if not edges:
        return k ** nv
    u, v = next(iter(edges))
    rest = edges - {(u, v)}
    contracted = set()
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        if a != b:
            contracted.add(tuple(sorted((a, b))))
    # relabel to keep vertex ids dense
    verts = sorted({x for e in contracted for x in e} | set(range(nv)) - {v})
    idx = {x: i for i, x in enumerate(verts)}
    contracted = {(idx[a], idx[b]) for a, b in contracted}
    return chromatic_dc(nv, rest, k) - chromatic_dc(nv - 1, contracted, k)


def pl_breakpoints(f, gamma, tol=mp.mpf("1e-15")):
    bps = [mp.mpf(0)]
    g = mp.mpf(0)
    while g < gamma:
        r = lambda y: f((g + y) / 2) - (f(g) + f(y)) / 2 + 1
        if r(gamma) >= 0:
            g = gamma
        else:
            lo, hi = g, gamma
            while hi - lo > tol:
                mid = (lo + hi) / 2
                if r(mid) >= 0:
                    lo = mid
                else:
                    hi = mid
            g = lo
        bps.append(g)
    return bps


def arr(xs):
    return "{" + ", ".join(repr(float(x)) if isinstance(x, (float, mp.mpf)) else str(x) for x in xs) + "}"


def main():
    print("#pragma once")
    print("// Generated by tests/oracles/gen_oracles.py (brute force / mpmath / scipy).")
    print("// Do not edit by hand.\n")
    print("#include <cstdint>\n#include <utility>\n#include <vector>\n")
    print("namespace oracle {\n")

    tri = levels_spin(3, cycle(3), 3, lambda a, b: a == b)
    print(f"inline const std::vector<double> kTriangle3ColorLevels = {arr(tri)};")
    c5 = levels_spin(5, cycle(5), 3, lambda a, b: a == b)
    print(f"inline const std::vector<double> kC5_3ColorLevels = {arr(c5)};")
    g33 = grid(3)
    print(f"inline constexpr std::int64_t kGrid3x3Chromatic3 = {chromatic_dc(9, g33, 3)};")
    pet = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    print(f"inline constexpr std::int64_t kPetersenChromatic3 = {chromatic_dc(10, pet, 3)};")
    print(f"inline const std::vector<std::pair<int, int>> kPetersenEdges = {{{', '.join('{%d, %d}' % e for e in pet)}}};")

    ising2 = levels_spin(4, grid(2), 2, lambda a, b: a != b)
    print(f"inline const std::vector<double> kIsing2x2Levels = {arr(ising2)};")
    z1 = mp.fsum(mp.e ** (-sum(s[u] != s[v] for u, v in grid(2))) for s in itertools.product((0, 1), repeat=4))
    print(f"inline constexpr double kIsing2x2ZAt1 = {float(z1)!r};")
    ising3 = levels_spin(9, grid(3), 2, lambda a, b: a != b)
    print(f"inline const std::vector<double> kIsing3x3Levels = {arr(ising3)};")

    print(f"inline const std::vector<double> kP3MatchingLevels = {arr(matchings_by_size(3, path(3)))};")
    print(f"inline const std::vector<double> kC6MatchingLevels = {arr(matchings_by_size(6, cycle(6)))};")
    print(f"inline const std::vector<double> kGrid3x3MatchingLevels = {arr(matchings_by_size(9, g33))};")
    print(f"inline const std::vector<double> kP3HardcoreLevels = {arr(hardcore_levels(3, path(3)))};")
    print(f"inline const std::vector<double> kC5HardcoreLevels = {arr(hardcore_levels(5, cycle(5)))};")
    # hard-core at fugacity 2 on P3: sum over independent sets of 2^|S|
    zl = sum(2 ** sum(s) for s in itertools.product((0, 1), repeat=3) if not any(s[u] and s[v] for u, v in path(3)))
    print(f"inline constexpr double kP3HardcoreFugacity2 = {zl};")

    # softplus curve 20 ln(1+e^-x)
    f = lambda x: 20 * mp.log(1 + mp.e ** (-x))
    gamma = mp.findroot(lambda x: f(x) - 1, 3)
    bps = pl_breakpoints(f, gamma)
    print(f"inline constexpr double kSoftplusGamma = {float(gamma)!r};")
    print(f"inline const std::vector<double> kSoftplusBreakpoints = {arr(bps)};")
    fp = lambda x: -20 / (1 + mp.e ** x)
    bound = 1 + mp.sqrt((f(0) - f(gamma)) * mp.log(fp(0) / fp(gamma)))
    print(f"inline constexpr double kSoftplusPieceBound = {float(bound)!r};")

    # Non-adaptive lower bound witness, n=100, ln A=20, B=e^2
    def lb(n, la, B):
        L = mp.log(mp.e ** la - 1)
        l4b = mp.log(4 * B)
        b, steps = mp.mpf(0), 0
        while True:
            ks = [k for k in range(1, n + 1) if L - b * k > l4b]
            if not ks:
                break
            b += l4b / max(ks)
            steps += 1
        return steps + 1, mp.log(n / mp.e) * (L / l4b - 1)

    length, bnd = lb(100, 20, mp.e ** 2)
    print(f"inline constexpr int kLowerBoundLength_100_20 = {length};")
    print(f"inline constexpr double kLowerBoundBound_100_20 = {float(bnd)!r};")

    # Greedy e^2 schedule on (1+e^-b)^n, mpmath bisection.
    def greedy_len(n, B):
        lz = lambda x: n * mp.log(1 + mp.e ** (-x))
        lb_ = mp.log(B)
        b, steps = mp.mpf(0), 0
        while lz(b) > lb_:
            ratio = lambda y: lz(2 * y - b) + lz(b) - 2 * lz(y)
            lo, hi = b, b + 1
            while ratio(hi) <= lb_:
                lo, hi = hi, b + 2 * (hi - b)
            while hi - lo > mp.mpf("1e-12"):
                mid = (lo + hi) / 2
                if ratio(mid) <= lb_:
                    lo = mid
                else:
                    hi = mid
            b = lo
            steps += 1
        return steps + 1

    for n in (100, 400):
        print(f"inline constexpr int kGreedyLengthBinomial{n} = {greedy_len(n, mp.e ** 2)};")

    print(f"inline constexpr double kMedianConfidence30 = {float(binom.sf(15, 30, 0.75))!r};")
    print(f"inline constexpr double kMedianConfidence5 = {float(binom.sf(2, 5, 0.75))!r};")
    print(f"inline constexpr double kKappa_1_1 = {float(mp.mpf(2) ** -20 / mp.mpf(512) ** 5)!r};")
    qb = mp.ceil(mp.mpf(10) ** 7 * 20 * (mp.log(100) + mp.log(20)) ** 5 * mp.log(10))
    print(f"inline constexpr double kQBudget_100_20_01 = {float(qb)!r};")
    # Z=(1,1): E[W] at b=0, b'=ln 2
    print(f"inline constexpr double kRatioZ11Ln2 = {float((1 + mp.mpf(1) / 2) / 2)!r};")
    print("\n}  // namespace oracle")


if __name__ == "__main__":
    main()
