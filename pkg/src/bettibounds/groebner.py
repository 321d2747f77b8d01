"""Buchberger machinery: S-polynomials, division, iterations, Groebner bases,
initial ideals, colon ideals and saturation.

Two entry points coexist on purpose.  ``buchberger_iteration`` is the literal
one-round procedure (all S-pairs of the current list, divide, keep nonzero
remainders) whose output-size behaviour the verifier measures; it supports a
degree cap so that a truncated initial ideal can be produced by finitely many
rounds.  ``groebner_basis`` is the workhorse: a pair-queue Buchberger with
the product criterion (switchable off for faithful benchmarking) followed by
interreduction to the unique reduced basis.
"""

from __future__ import annotations

import heapq
from itertools import combinations
from typing import Iterable, Sequence

from . import monomials
from .linalg import rank_mod_p
from .polyring import (
    GREVLEX,
    Exponents,
    MonomialOrder,
    Poly,
    PolyRing,
    exp_deg,
    exp_divides,
    exp_gcd,
    exp_lcm,
    exp_sub,
)


class Ideal:
    """A homogeneous ideal given by a finite list of generators.

    Generators are stored monic (grevlex-normalized), nonzero and validated
    homogeneous.  The empty list is allowed and denotes the zero ideal.
    """

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: PolyRing, gens: Iterable[Poly]):
        stored: list[Poly] = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero:
                continue
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g!r}")
            stored.append(g.monic(GREVLEX))
        self.ring = ring
        self.gens = tuple(stored)
        self._cache: dict = {}

    # -- constructors ---------------------------------------------------------

    @classmethod
    def monomial(cls, ring: PolyRing, exps: Iterable[Exponents]) -> "Ideal":
        return cls(ring, [ring.monomial(e) for e in exps])

    # -- inspection -------------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def monomial_exponents(self) -> tuple[Exponents, ...]:
        if not self.is_monomial:
            raise ValueError("not a monomial ideal")
        return tuple(next(iter(g.terms)) for g in self.gens)

    def num_generators(self) -> int:
        return len(self.gens)

    def max_generator_degree(self) -> int:
        return max((g.degree() for g in self.gens), default=0)

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and self.ring == other.ring and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((self.ring, self.gens))

    def __repr__(self) -> str:
        inner = ", ".join(repr(g)[5:-1] for g in self.gens) or "0"
        return f"Ideal({inner})"


class GBasis:
    """A (possibly degree-truncated) Groebner basis.

    With ``truncation_degree=None`` the elements are a full reduced Groebner
    basis.  Otherwise their leading monomials generate the initial ideal in
    every degree up to the truncation degree only.
    """

    __slots__ = ("elements", "order", "truncation_degree")

    def __init__(self, elements: Sequence[Poly], order: MonomialOrder, truncation_degree: int | None = None):
        self.elements = tuple(elements)
        self.order = order
        self.truncation_degree = truncation_degree

    def leading_monomials(self) -> tuple[Exponents, ...]:
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


# ---------------------------------------------------------------------------
# division with remainder
# ---------------------------------------------------------------------------

_W = 16
_FMASK = (1 << _W) - 1
_PACK_LIMIT = 1 << 13  # headroom: field sums stay clear of the guard bits


def _packed_key_fn(order: MonomialOrder, shifts: tuple[int, ...]):
    """Monomial-order key on packed exponents, as a single integer.

    Bigger key = bigger monomial.  Returns None for orders the packed engine
    does not know, in which case the reducer falls back to tuple arithmetic.
    """
    if order.name == "lex":
        return lambda raw: raw  # big-endian packing compares lexicographically
    if order.name == "grevlex":
        def key(raw: int) -> int:
            vals = [(raw >> s) & _FMASK for s in shifts]
            k = sum(vals)
            for x in reversed(vals):
                k = (k << _W) | (_FMASK - x)
            return k
        return key
    if order.name == "elim+grevlex":
        def key(raw: int) -> int:
            vals = [(raw >> s) & _FMASK for s in shifts]
            k = (vals[0] << (2 * _W)) | sum(vals[1:])
            for x in reversed(vals[1:]):
                k = (k << _W) | (_FMASK - x)
            return k
        return key
    return None


class _Reducer:
    """Division engine for a fixed divisor list.

    Exponent vectors are packed into single integers (16 bits per variable),
    so a monomial product is one addition and a divisibility test is one
    guarded subtraction.  Falls back to tuple arithmetic for exotic orders
    or out-of-range exponents.

    Standard expression contract: every quotient term q satisfies
    in(q * g_t) <= in(f), and no monomial of the remainder is divisible by
    any in(g_t).  Ties between applicable divisors go to the lowest index.
    """

    def __init__(self, ring: PolyRing, order: MonomialOrder):
        self.ring = ring
        self.order = order
        self.p = ring.char
        n = ring.nvars
        self.shifts = tuple(_W * (n - 1 - i) for i in range(n))
        self.guards = 0
        for s in self.shifts:
            self.guards |= 1 << (s + _W - 1)
        self.keyfn = _packed_key_fn(order, self.shifts)
        self.lms: list[int] = []
        self.tails: list[list[tuple[int, int]]] = []
        self.slow_divisors: list[Poly] = []
        self.slow_lms: list[Exponents] = []

    # -- packing ---------------------------------------------------------------

    def pack(self, e: Exponents) -> int:
        v = 0
        for x, s in zip(e, self.shifts):
            if x >= _PACK_LIMIT:
                raise OverflowError("exponent too large for the packed reducer")
            v |= x << s
        return v

    def unpack(self, raw: int) -> Exponents:
        return tuple((raw >> s) & _FMASK for s in self.shifts)

    # -- divisors ----------------------------------------------------------------

    def add_divisor(self, g: Poly) -> None:
        lm = g.leading_monomial(self.order)
        self.slow_divisors.append(g)
        self.slow_lms.append(lm)
        if self.keyfn is not None:
            self.lms.append(self.pack(lm))
            self.tails.append([(self.pack(e), c) for e, c in g.terms.items() if e != lm])

    def __len__(self) -> int:
        return len(self.slow_divisors)

    # -- reduction -----------------------------------------------------------------

    def reduce(self, fterms, want_quotients: bool = False, skip: int | None = None):
        """(quotient dicts or None, remainder dict), exponent-tuple keyed."""
        if self.keyfn is None:
            return self._reduce_slow(fterms, want_quotients, skip)
        try:
            return self._reduce_packed(fterms, want_quotients, skip)
        except OverflowError:
            return self._reduce_slow(fterms, want_quotients, skip)

    def _reduce_packed(self, fterms, want_quotients: bool, skip: int | None):
        p = self.p
        keyfn = self.keyfn
        guards = self.guards
        lms = self.lms
        tails = self.tails
        nq = len(lms)
        work: dict[int, int] = {}
        for e, c in fterms.items():
            work[self.pack(e)] = c
        heap = [(-keyfn(m), m) for m in work]
        heapq.heapify(heap)
        push = heapq.heappush
        pop = heapq.heappop
        rem: dict[int, int] = {}
        quots: list[dict[int, int]] | None = [dict() for _ in range(nq)] if want_quotients else None

        while heap:
            _, m = pop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            mg = m | guards
            hit = -1
            for t in range(nq):
                if t != skip and (mg - lms[t]) & guards == guards:
                    hit = t
                    break
            if hit < 0:
                rem[m] = c
                continue
            q = m - lms[hit]
            if quots is not None:
                qd = quots[hit]
                qd[q] = (qd.get(q, 0) + c) % p
            for e, gc in tails[hit]:
                me = q + e
                if me & guards:
                    raise OverflowError("exponent growth exceeded packed fields")
                cur = work.get(me)
                if cur is None:
                    nc = (-c * gc) % p
                    if nc:
                        work[me] = nc
                        push(heap, (-keyfn(me), me))
                else:
                    nc = (cur - c * gc) % p
                    if nc:
                        work[me] = nc
                    else:
                        del work[me]
        unpack = self.unpack
        rem_t = {unpack(m): c for m, c in rem.items()}
        if quots is None:
            return None, rem_t
        return [{unpack(q): c for q, c in qd.items()} for qd in quots], rem_t

    def _reduce_slow(self, fterms, want_quotients: bool, skip: int | None):
        p = self.p
        key = self.order.key
        keycache: dict = {}

        def negkey(m):
            k = keycache.get(m)
            if k is None:
                k = tuple(-x for x in key(m))
                keycache[m] = k
            return k

        divisors = self.slow_divisors
        lms = self.slow_lms
        work = dict(fterms)
        heap = [(negkey(m), m) for m in work]
        heapq.heapify(heap)
        push = heapq.heappush
        pop = heapq.heappop
        rem: dict[Exponents, int] = {}
        quots = [dict() for _ in divisors] if want_quotients else None

        while heap:
            _, m = pop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            hit = -1
            for t, lm in enumerate(lms):
                if t == skip:
                    continue
                for a, b in zip(lm, m):
                    if a > b:
                        break
                else:
                    hit = t
                    break
            if hit < 0:
                rem[m] = c
                continue
            lm = lms[hit]
            q = exp_sub(m, lm)
            if quots is not None:
                qd = quots[hit]
                qd[q] = (qd.get(q, 0) + c) % p
            for e, gc in divisors[hit].terms.items():
                if e == lm:
                    continue
                me = tuple(x + y for x, y in zip(q, e))
                cur = work.get(me)
                if cur is None:
                    nc = (-c * gc) % p
                    if nc:
                        work[me] = nc
                        push(heap, (negkey(me), me))
                else:
                    nc = (cur - c * gc) % p
                    if nc:
                        work[me] = nc
                    else:
                        del work[me]
        return quots, rem


def _make_reducer(divisors: Sequence[Poly], order: MonomialOrder) -> _Reducer:
    if not divisors:
        raise ValueError("empty divisor list")
    red = _Reducer(divisors[0].ring, order)
    for g in divisors:
        red.add_divisor(g)
    return red


def _reduce(f: Poly, divisors: Sequence[Poly], order: MonomialOrder, want_quotients: bool):
    ring = f.ring
    if not divisors:
        return ([] if want_quotients else None), f
    quots, rem = _make_reducer(divisors, order).reduce(f.terms, want_quotients)
    r = Poly(ring, rem, _normalized=True)
    if quots is None:
        return None, r
    qs = [Poly(ring, qd, _normalized=True) for qd in quots]
    return qs, r


def divide(f: Poly, divisors: Sequence[Poly], order: MonomialOrder = GREVLEX) -> tuple[list[Poly], Poly]:
    """Division algorithm: f = sum q_t * g_t + r as a standard expression."""
    for g in divisors:
        if g.is_zero:
            raise ValueError("zero divisor polynomial")
        if g.leading_coeff(order) != 1:
            raise ValueError("divisors must be monic")
    qs, r = _reduce(f, divisors, order, want_quotients=True)
    return qs, r


def normal_form(f: Poly, divisors: Sequence[Poly], order: MonomialOrder = GREVLEX) -> Poly:
    """Remainder of f on division by the (monic) divisors."""
    _, r = _reduce(f, divisors, order, want_quotients=False)
    return r


# ---------------------------------------------------------------------------
# S-polynomials and the literal iteration
# ---------------------------------------------------------------------------

def s_polynomial(f: Poly, g: Poly, order: MonomialOrder = GREVLEX) -> Poly:
    """(in(g)/gcd) * f - (in(f)/gcd) * g for monic f, g."""
    if f.is_zero or g.is_zero:
        raise ValueError("S-polynomial of the zero polynomial")
    if f.leading_coeff(order) != 1 or g.leading_coeff(order) != 1:
        raise ValueError("S-polynomial inputs must be monic")
    lf = f.leading_monomial(order)
    lg = g.leading_monomial(order)
    gcd = exp_gcd(lf, lg)
    return f.mul_term(1, exp_sub(lg, gcd)) - g.mul_term(1, exp_sub(lf, gcd))


def buchberger_iteration(
    basis: Sequence[Poly],
    order: MonomialOrder = GREVLEX,
    degree_cap: int | None = None,
    use_criterion: bool = False,
) -> list[Poly]:
    """One round: all S-pairs of ``basis``; returns the inputs plus the
    nonzero remainders, made monic.

    Remainders are accumulated into the divisor list as the round proceeds
    (pairs in index order, i < j lexicographic, for reproducibility), so
    that S-polynomials with coinciding leading monomials separate within a
    single round; without this, inputs sharing a leading monomial could
    stall the truncation guarantee.  With ``degree_cap`` set, inputs of
    larger degree are dropped and S-pairs whose S-polynomial degree exceeds
    the cap are skipped.  The output never exceeds n*(n+1)/2 <= n^2
    polynomials for n inputs.
    """
    polys = [g.monic(order) for g in basis if not g.is_zero]
    if degree_cap is not None:
        for g in polys:
            if not g.is_homogeneous():
                raise ValueError("degree-capped iteration needs homogeneous input")
        polys = [g for g in polys if g.degree() <= degree_cap]

    out = list(polys)
    seen = set(out)
    lms = [g.leading_monomial(order) for g in polys]
    for i, j in combinations(range(len(polys)), 2):
        if use_criterion and exp_gcd(lms[i], lms[j]) == (0,) * len(lms[i]):
            continue
        if degree_cap is not None and exp_deg(exp_lcm(lms[i], lms[j])) > degree_cap:
            continue
        s = s_polynomial(polys[i], polys[j], order)
        if s.is_zero:
            continue
        r = normal_form(s, out, order)
        if not r.is_zero:
            r = r.monic(order)
            if r not in seen:
                seen.add(r)
                out.append(r)
    return out


def truncated_initial_generators(I: Ideal, order: MonomialOrder, delta: int) -> GBasis:
    """delta-1 capped iterations starting from the generators of degree <= delta.

    The leading monomials of the result generate in(I) in all degrees up to
    delta.
    """
    if delta < 1:
        raise ValueError("truncation degree must be >= 1")
    cur: list[Poly] = []
    seen = set()
    for g in I.gens:
        if g.degree() <= delta:
            m = g.monic(order)
            if m not in seen:
                seen.add(m)
                cur.append(m)
    for _ in range(delta - 1):
        cur = buchberger_iteration(cur, order, degree_cap=delta)
    return GBasis(cur, order, truncation_degree=delta)


# ---------------------------------------------------------------------------
# full Groebner bases
# ---------------------------------------------------------------------------

def _interreduce(G: Sequence[Poly], order: MonomialOrder) -> list[Poly]:
    """Reduced basis: minimal leading monomials, fully tail-reduced, monic,
    sorted by increasing leading monomial."""
    uniq = sorted(set(g.monic(order) for g in G if not g.is_zero), key=lambda g: order.key(g.leading_monomial(order)))
    if not uniq:
        return []
    ring = uniq[0].ring
    minimal: list[Poly] = []
    min_lms: list[Exponents] = []
    for g in uniq:
        lm = g.leading_monomial(order)
        if not any(exp_divides(h, lm) for h in min_lms):
            minimal.append(g)
            min_lms.append(lm)
    if len(minimal) == 1:
        return minimal
    red = _make_reducer(minimal, order)
    out = []
    for i, g in enumerate(minimal):
        _, rem = red.reduce(g.terms, skip=i)
        out.append(Poly(ring, rem, _normalized=True).monic(order))
    out.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return out


def _buchberger(polys: Sequence[Poly], order: MonomialOrder, use_criterion: bool) -> list[Poly]:
    """Pair-queue Buchberger (normal selection: smallest pair lcm first)."""
    G: list[Poly] = []
    seen = set()
    for g in polys:
        if not g.is_zero:
            m = g.monic(order)
            if m not in seen:
                seen.add(m)
                G.append(m)
    if not G:
        return []
    ring = G[0].ring
    red = _make_reducer(G, order)
    lms = list(red.slow_lms)
    pairs: list[tuple[tuple[int, ...], int, int]] = []
    for i, j in combinations(range(len(G)), 2):
        heapq.heappush(pairs, (order.key(exp_lcm(lms[i], lms[j])), i, j))

    zero_exp = (0,) * ring.nvars
    while pairs:
        _, i, j = heapq.heappop(pairs)
        if use_criterion and exp_gcd(lms[i], lms[j]) == zero_exp:
            continue
        s = s_polynomial(G[i], G[j], order)
        if s.is_zero:
            continue
        _, rem = red.reduce(s.terms)
        if not rem:
            continue
        r = Poly(ring, rem, _normalized=True).monic(order)
        G.append(r)
        red.add_divisor(r)
        lms.append(r.leading_monomial(order))
        k = len(G) - 1
        for t in range(k):
            heapq.heappush(pairs, (order.key(exp_lcm(lms[t], lms[k])), t, k))
    return _interreduce(G, order)


def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX, use_criterion: bool = True) -> GBasis:
    """The reduced Groebner basis of I (auto-reduced, monic, canonical)."""
    if I.is_zero:
        return GBasis((), order)
    return GBasis(_buchberger(I.gens, order, use_criterion), order)


def reduced_gb(I: Ideal, order: MonomialOrder = GREVLEX) -> GBasis:
    """Cached reduced Groebner basis of I."""
    key = ("gb", order.name)
    gb = I._cache.get(key)
    if gb is None:
        gb = groebner_basis(I, order)
        I._cache[key] = gb
    return gb


def initial_exponents(I: Ideal, order: MonomialOrder = GREVLEX) -> tuple[Exponents, ...]:
    """Minimal generating exponents of the initial ideal in_order(I)."""
    return monomials.minimalize(reduced_gb(I, order).leading_monomials())


def contains_poly(I: Ideal, f: Poly, order: MonomialOrder = GREVLEX) -> bool:
    if f.is_zero:
        return True
    gb = reduced_gb(I, order)
    if not gb.elements:
        return False
    return normal_form(f, gb.elements, order).is_zero


def contains_ideal(I: Ideal, J: Ideal) -> bool:
    """Is J a subset of I?"""
    return all(contains_poly(I, g) for g in J.gens)


def ideals_equal(I: Ideal, J: Ideal) -> bool:
    """Mathematical equality, via canonical reduced Groebner bases."""
    if I.ring != J.ring:
        raise ValueError("ideals in different rings")
    return reduced_gb(I, GREVLEX).elements == reduced_gb(J, GREVLEX).elements


# ---------------------------------------------------------------------------
# Hilbert data of a homogeneous ideal (through its initial ideal)
# ---------------------------------------------------------------------------

def hilbert_numerator_of(I: Ideal) -> dict[int, int]:
    """Numerator of the Hilbert series of S/I (grevlex staircase)."""
    key = "hilbnum"
    out = I._cache.get(key)
    if out is None:
        out = monomials.hilbert_numerator(initial_exponents(I), I.ring.nvars)
        I._cache[key] = out
    return out


def quotient_hilbert_function(I: Ideal, d: int) -> int:
    """dim_k (S/I)_d."""
    return monomials.hilbert_function(initial_exponents(I), I.ring.nvars, d)


def quotient_dimension(I: Ideal) -> int:
    """Krull dimension of S/I (order-insensitive; computed on the staircase)."""
    return monomials.quotient_dimension(initial_exponents(I), I.ring.nvars)


def homogeneous_component_dim(I: Ideal, d: int) -> int:
    """dim_k I_d by straight row reduction of the span of monomial multiples.

    Independent of any Groebner computation; used as a cross-check oracle.
    """
    from math import comb

    ring = I.ring
    rows = []
    mono_index: dict[Exponents, int] = {}

    def monos_of_degree(n, deg):
        # all exponent vectors of total degree deg
        if n == 1:
            yield (deg,)
            return
        for first in range(deg + 1):
            for rest in monos_of_degree(n - 1, deg - first):
                yield (first,) + rest

    all_monos = list(monos_of_degree(ring.nvars, d))
    for idx, m in enumerate(all_monos):
        mono_index[m] = idx
    for g in I.gens:
        gd = g.degree()
        if gd > d:
            continue
        for m in monos_of_degree(ring.nvars, d - gd):
            row = [0] * len(all_monos)
            for e, c in g.terms.items():
                row[mono_index[tuple(x + y for x, y in zip(e, m))]] = c
            rows.append(row)
    if not rows:
        return 0
    return rank_mod_p(rows, ring.char)


# ---------------------------------------------------------------------------
# linear sections and Hilbert-certified regularity
# ---------------------------------------------------------------------------

def substitute_linear_form(I: Ideal, ell: Poly) -> Ideal:
    """The image of I in S/(ell) = k[remaining variables].

    ell must be a nonzero linear form; the variable with the largest index
    among those appearing in ell is eliminated.
    """
    ring = I.ring
    if ell.ring != ring or ell.is_zero or ell.degree() != 1:
        raise ValueError("need a nonzero linear form in the same ring")
    if ring.nvars == 1:
        raise ValueError("cannot eliminate the last variable")
    p = ring.char
    coeffs = [0] * ring.nvars
    for e, c in ell.terms.items():
        coeffs[e.index(1)] = c
    k = max(i for i, c in enumerate(coeffs) if c)
    inv = pow(coeffs[k], p - 2, p)
    small = PolyRing(ring.nvars - 1, p, tuple(n for i, n in enumerate(ring.names) if i != k))
    # x_k -> -inv * sum_{j != k} c_j x_j, indices shifted past k
    image = small.linear_form([(-inv * c) % p for i, c in enumerate(coeffs) if i != k])
    powers: dict[int, Poly] = {0: small.one(), 1: image}

    def img_pow(n: int) -> Poly:
        if n not in powers:
            powers[n] = img_pow(n - 1) * image
        return powers[n]

    new_gens = []
    for g in I.gens:
        acc = small.zero()
        for e, c in g.terms.items():
            base = tuple(x for i, x in enumerate(e) if i != k)
            acc = acc + img_pow(e[k]).mul_term(c, base)
        new_gens.append(acc)
    return Ideal(small, new_gens)


def form_regularity(I: Ideal, ell: Poly) -> tuple[bool, bool]:
    """(regular, filter_regular) verdicts for a linear form on S/I.

    Certified through Hilbert series numerators: with K the numerator of S/I
    over N variables and K' the numerator of S/(I + ell) over N-1 variables,
    ell is regular iff K' == K, and filter regular iff K' - K is divisible by
    (1-z)^(N-1), i.e. the annihilator of ell has finite length.
    """
    regular, filter_regular, _ = form_regularity_with_image(I, ell)
    return regular, filter_regular


def form_regularity_with_image(I: Ideal, ell: Poly) -> tuple[bool, bool, Ideal | None]:
    """As ``form_regularity`` but also hands back the substituted ideal, so
    callers that accept the form can keep its cached staircase data."""
    ring = I.ring
    if ell.is_zero or ell.degree() != 1:
        raise ValueError("need a nonzero linear form")
    K = hilbert_numerator_of(I)
    if ring.nvars == 1:
        # S/I has finite length (or I = 0); any nonzero form is filter regular
        return I.is_zero, True, None
    J = substitute_linear_form(I, ell)
    K2 = hilbert_numerator_of(J)
    if K2 == K:
        return True, True, J
    diff = dict(K2)
    for d, c in K.items():
        nc = diff.get(d, 0) - c
        if nc:
            diff[d] = nc
        else:
            diff.pop(d, None)
    # divide by (1-z)^(N-1); division by (1-z) is partial summation
    for _ in range(ring.nvars - 1):
        if not diff:
            break
        total = sum(diff.values())
        if total != 0:
            return False, False, J
        acc = 0
        out: dict[int, int] = {}
        for d in range(max(diff) + 1):
            acc += diff.get(d, 0)
            if acc:
                out[d] = acc
        diff = out
    return False, True, J


# ---------------------------------------------------------------------------
# colon ideals and saturation
# ---------------------------------------------------------------------------

def _elim_order(base: MonomialOrder) -> MonomialOrder:
    return MonomialOrder(f"elim+{base.name}", lambda e: (e[0],) + base.key(e[1:]))


def _lift(f: Poly, big: PolyRing, tdeg: int) -> Poly:
    return Poly(big, {(tdeg,) + e: c for e, c in f.terms.items()}, _normalized=True)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    """I intersect J via one auxiliary variable of internal degree zero."""
    ring = I.ring
    if J.ring != ring:
        raise ValueError("ideals in different rings")
    if I.is_zero or J.is_zero:
        return Ideal(ring, [])
    if I.is_monomial and J.is_monomial:
        gens = monomials.intersect(I.monomial_exponents(), J.monomial_exponents())
        return Ideal.monomial(ring, gens)
    big = PolyRing(ring.nvars + 1, ring.char, ("_t",) + ring.names)
    polys = [_lift(f, big, 1) for f in I.gens]
    one_minus_t = Poly(big, {(0,) * big.nvars: 1, (1,) + (0,) * ring.nvars: -1})
    polys += [one_minus_t * _lift(g, big, 0) for g in J.gens]
    gb = _buchberger(polys, _elim_order(GREVLEX), use_criterion=True)
    kept = []
    for g in gb:
        if all(e[0] == 0 for e in g.terms):
            kept.append(Poly(ring, {e[1:]: c for e, c in g.terms.items()}, _normalized=True))
    return Ideal(ring, kept)


def ideal_quotient(I: Ideal, f: Poly) -> Ideal:
    """I : (f) = {g : g*f in I}, computed as (I intersect (f)) / f."""
    if f.is_zero:
        raise ValueError("colon by zero")
    ring = I.ring
    if I.is_zero:
        return Ideal(ring, [])
    if f.degree() == 0:
        return I
    if I.is_monomial and f.is_monomial():
        u = next(iter(f.terms))
        return Ideal.monomial(ring, monomials.colon_by_monomial(I.monomial_exponents(), u))
    inter = ideal_intersection(I, Ideal(ring, [f]))
    fm = f.monic(GREVLEX)
    gens = []
    for g in inter.gens:
        qs, r = divide(g, [fm], GREVLEX)
        if not r.is_zero:
            raise AssertionError("intersection element not divisible by f")
        gens.append(qs[0])
    out = Ideal(ring, gens)
    return Ideal(ring, reduced_gb(out, GREVLEX).elements)


def ideal_quotient_ideal(I: Ideal, J: Ideal) -> Ideal:
    """I : J = intersection over generators f of J of I : (f)."""
    if J.is_zero:
        raise ValueError("colon by the zero ideal")
    if I.is_monomial and J.is_monomial:
        gens = monomials.colon_by_ideal(I.monomial_exponents(), J.monomial_exponents())
        return Ideal.monomial(I.ring, gens)
    out: Ideal | None = None
    for f in J.gens:
        q = ideal_quotient(I, f)
        out = q if out is None else ideal_intersection(out, q)
    assert out is not None
    return Ideal(I.ring, reduced_gb(out, GREVLEX).elements)


def saturation(I: Ideal, J: Ideal) -> Ideal:
    """Stable value of I : J : J : ... (Noetherian, so this terminates)."""
    if J.is_zero:
        raise ValueError("saturation by the zero ideal")
    if any(g.degree() == 0 for g in J.gens):
        return I
    if I.is_monomial and J.is_monomial:
        jexps = J.monomial_exponents()
        if all(sum(e) == 1 for e in jexps) and {e.index(1) for e in jexps} == set(range(I.ring.nvars)):
            # saturation with respect to the irrelevant ideal, combinatorially
            gens = monomials.saturate_irrelevant(I.monomial_exponents(), I.ring.nvars)
            return Ideal.monomial(I.ring, gens)
    cur = I
    while True:
        nxt = ideal_quotient_ideal(cur, J)
        if ideals_equal(nxt, cur):
            return cur
        cur = nxt


def irrelevant_ideal(ring: PolyRing) -> Ideal:
    return Ideal(ring, ring.variables())


# ---------------------------------------------------------------------------
# normal-form bases of S/I, degree by degree
# ---------------------------------------------------------------------------

class QuotientBasis:
    """Standard-monomial bases of S/I with normal-form arithmetic.

    The degree-d piece of S/I is spanned by the monomials of degree d outside
    the initial ideal; every monomial rewrites to a vector over that basis by
    division against the reduced Groebner basis.
    """

    def __init__(self, I: Ideal, order: MonomialOrder = GREVLEX):
        self.ring = I.ring
        self.order = order
        gb = reduced_gb(I, order)
        self.gb = list(gb.elements)
        self.lms = [g.leading_monomial(order) for g in self.gb]
        self.staircase = monomials.minimalize(self.lms)
        self._std: list[list[Exponents]] = []
        self._idx: list[dict[Exponents, int]] = []
        self._nf: dict[Exponents, dict[Exponents, int]] = {}

    def _extend(self, d: int) -> None:
        while len(self._std) <= d:
            have = len(self._std)
            if have == 0:
                zero = (0,) * self.ring.nvars
                level = [] if monomials.member(zero, self.staircase) else [zero]
            else:
                prev = self._std[have - 1]
                nxt = set()
                for e in prev:
                    for t in range(self.ring.nvars):
                        m = e[:t] + (e[t] + 1,) + e[t + 1:]
                        if m not in nxt and not monomials.member(m, self.staircase):
                            nxt.add(m)
                level = sorted(nxt)
            self._std.append(level)
            self._idx.append({m: i for i, m in enumerate(level)})

    def std(self, d: int) -> list[Exponents]:
        if d < 0:
            return []
        self._extend(d)
        return self._std[d]

    def index(self, d: int) -> dict[Exponents, int]:
        self._extend(d)
        return self._idx[d]

    def dim(self, d: int) -> int:
        return len(self.std(d))

    def nf_monomial(self, m: Exponents) -> dict[Exponents, int]:
        """Normal form of the monomial x^m as {standard monomial: coeff}."""
        cached = self._nf.get(m)
        if cached is not None:
            return cached
        p = self.ring.char
        stack = [m]
        while stack:
            cur = stack[-1]
            if cur in self._nf:
                stack.pop()
                continue
            div = next((i for i, lm in enumerate(self.lms) if exp_divides(lm, cur)), None)
            if div is None:
                self._nf[cur] = {cur: 1}
                stack.pop()
                continue
            q = exp_sub(cur, self.lms[div])
            deps = []
            tail = []
            for e, c in self.gb[div].terms.items():
                if e == self.lms[div]:
                    continue
                me = tuple(x + y for x, y in zip(q, e))
                tail.append((me, c))
                if me not in self._nf:
                    deps.append(me)
            if deps:
                stack.extend(deps)
                continue
            out: dict[Exponents, int] = {}
            for me, c in tail:
                for sm, sc in self._nf[me].items():
                    nc = (out.get(sm, 0) - c * sc) % p
                    if nc:
                        out[sm] = nc
                    else:
                        out.pop(sm, None)
            self._nf[cur] = out
            stack.pop()
        return self._nf[m]

    def mult_columns(self, t: int, d: int) -> list[dict[int, int]]:
        """Multiplication by x_t from degree d to d+1, one sparse column per
        standard monomial of degree d (entries indexed into std(d+1))."""
        idx_up = self.index(d + 1)
        cols = []
        for u in self.std(d):
            m = u[:t] + (u[t] + 1,) + u[t + 1:]
            vec = self.nf_monomial(m)
            cols.append({idx_up[sm]: c for sm, c in vec.items()})
        return cols
