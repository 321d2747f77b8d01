"""Combinatorics of monomial ideals, given by lists of exponent vectors.

These helpers treat a monomial ideal as the set of monomials divisible by at
least one generator.  They back the staircase computations used everywhere
else: normal-form bases, Hilbert series numerators, Krull dimension, colon
and saturation fast paths.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .polyring import Exponents, exp_deg, exp_divides, exp_gcd, exp_lcm, exp_sub


def minimalize(gens: Iterable[Exponents]) -> tuple[Exponents, ...]:
    """Minimal generators: drop every monomial divisible by another one."""
    gs = sorted(set(tuple(g) for g in gens), key=lambda e: (sum(e), e))
    out: list[Exponents] = []
    for g in gs:
        if not any(exp_divides(h, g) for h in out):
            out.append(g)
    return tuple(out)


def member(e: Exponents, gens: Sequence[Exponents]) -> bool:
    """Is x^e in the ideal generated by gens?"""
    return any(exp_divides(g, e) for g in gens)


def colon_by_monomial(gens: Sequence[Exponents], u: Exponents) -> tuple[Exponents, ...]:
    """Minimal generators of (gens) : x^u."""
    return minimalize(exp_sub(g, exp_gcd(g, u)) for g in gens)


def intersect(gens1: Sequence[Exponents], gens2: Sequence[Exponents]) -> tuple[Exponents, ...]:
    """Minimal generators of the intersection of two monomial ideals."""
    return minimalize(exp_lcm(a, b) for a in gens1 for b in gens2)


def colon_by_ideal(gens: Sequence[Exponents], divisors: Sequence[Exponents]) -> tuple[Exponents, ...]:
    """(gens) : (divisors) for monomial data, via intersection of colons."""
    if not divisors:
        raise ValueError("colon by the zero ideal")
    out = colon_by_monomial(gens, divisors[0])
    for u in divisors[1:]:
        out = intersect(out, colon_by_monomial(gens, u))
    return out


def saturate_by_variable(gens: Sequence[Exponents], t: int) -> tuple[Exponents, ...]:
    """(gens) : x_t^infinity -- zero out the t-th exponent of each generator."""
    return minimalize(tuple(0 if i == t else x for i, x in enumerate(g)) for g in gens)


def saturate_irrelevant(gens: Sequence[Exponents], nvars: int) -> tuple[Exponents, ...]:
    """Saturation with respect to (x_1, ..., x_N): the intersection of the
    single-variable saturations of the original ideal."""
    gens = minimalize(gens)
    out = saturate_by_variable(gens, 0)
    for t in range(1, nvars):
        out = intersect(out, saturate_by_variable(gens, t))
    return minimalize(out)


def std_monomials(gens: Sequence[Exponents], nvars: int, dmax: int) -> list[list[Exponents]]:
    """Standard monomials (those outside the ideal), listed degree by degree.

    Returns a list of length dmax+1; entry d is the sorted basis of the
    degree-d piece of the quotient.  Built incrementally: every standard
    monomial of degree d+1 is x_t times a standard one of degree d.
    """
    gens = minimalize(gens)
    out: list[list[Exponents]] = []
    zero = (0,) * nvars
    cur = [] if member(zero, gens) else [zero]
    out.append(cur)
    for _ in range(dmax):
        nxt = set()
        for e in cur:
            for t in range(nvars):
                m = e[:t] + (e[t] + 1,) + e[t + 1:]
                if m not in nxt and not member(m, gens):
                    nxt.add(m)
        cur = sorted(nxt)
        out.append(cur)
    return out


def quotient_dimension(gens: Sequence[Exponents], nvars: int) -> int:
    """Krull dimension of S/(gens).

    Equals the largest size of a variable subset T such that no generator is
    supported inside T; the complement of such a T is a vertex cover of the
    supports.
    """
    gens = minimalize(gens)
    if not gens:
        return nvars
    if any(sum(g) == 0 for g in gens):
        return -1  # unit ideal: the quotient is the zero ring
    supports = [frozenset(i for i, x in enumerate(g) if x) for g in gens]
    for size in range(nvars, -1, -1):
        for T in combinations(range(nvars), size):
            Tset = set(T)
            if all(not s <= Tset for s in supports):
                return size
    return 0


def lcm_closure(gens: Sequence[Exponents], limit: int = 500_000) -> set[Exponents]:
    """All lcms of subsets of gens (the join closure under componentwise max)."""
    gens = minimalize(gens)
    closure: set[Exponents] = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                j = exp_lcm(a, g)
                if j not in closure:
                    closure.add(j)
                    nxt.append(j)
                    if len(closure) > limit:
                        raise RuntimeError("lcm closure too large")
        frontier = nxt
    return closure


# ---------------------------------------------------------------------------
# Hilbert series numerator
# ---------------------------------------------------------------------------

def _poly_sub_shifted(a: dict[int, int], b: dict[int, int], shift: int) -> dict[int, int]:
    out = dict(a)
    for d, c in b.items():
        nd = d + shift
        nc = out.get(nd, 0) - c
        if nc:
            out[nd] = nc
        else:
            out.pop(nd, None)
    return out


def hilbert_numerator(gens: Sequence[Exponents], nvars: int) -> dict[int, int]:
    """Numerator K(z) of the Hilbert series of S/(gens), as degree -> coeff.

    HS_{S/J}(z) = K(z) / (1-z)^N.  Computed by splitting off one generator u:
    with J = J' + (u) there is an exact sequence identifying K(S/J) with
    K(S/J') - z^deg(u) * K(S/(J':u)).  Pairwise-coprime generators short-cut
    to a product of (1 - z^d) factors.
    """
    memo: dict[tuple[Exponents, ...], dict[int, int]] = {}

    def run(gs: tuple[Exponents, ...]) -> dict[int, int]:
        if not gs:
            return {0: 1}
        if any(sum(g) == 0 for g in gs):
            return {}
        if gs in memo:
            return memo[gs]
        supports = [frozenset(i for i, x in enumerate(g) if x) for g in gs]
        if all(supports[i].isdisjoint(supports[j]) for i in range(len(gs)) for j in range(i + 1, len(gs))):
            out = {0: 1}
            for g in gs:
                out = _poly_sub_shifted(out, out, sum(g))
            memo[gs] = out
            return out
        u = gs[-1]
        rest = gs[:-1]
        a = run(rest)
        b = run(minimalize(colon_by_monomial(rest, u)))
        out = _poly_sub_shifted(a, b, sum(u))
        memo[gs] = out
        return out

    ordered = tuple(sorted(minimalize(gens), key=lambda e: (sum(e), e)))
    return run(ordered)


def hilbert_function(gens: Sequence[Exponents], nvars: int, d: int) -> int:
    """dim_k of the degree-d piece of S/(gens), from the series numerator."""
    from math import comb

    if d < 0:
        return 0
    K = hilbert_numerator(gens, nvars)
    return sum(c * comb(d - j + nvars - 1, nvars - 1) for j, c in K.items() if j <= d)


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    from math import comb

    result = 1
    while n or k:
        nd, kd = n % p, k % p
        if kd > nd:
            return 0
        result = (result * comb(nd, kd)) % p
        n //= p
        k //= p
    return result
