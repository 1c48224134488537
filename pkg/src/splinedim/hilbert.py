"""Hilbert series machinery for homogeneous ideals of Q[x_1..x_n].

The Hilbert series of S/I is N(t)/(1-t)^n where the numerator N comes from
the lead-term ideal of any Groebner basis of I. N is computed by the standard
pivot recursion on monomial ideals: for a variable v,

    N(M) = N(M + <v>) + t * N(M : v),

with base cases for the zero ideal, the unit ideal, and ideals generated by
pure powers of distinct variables. Everything downstream (Hilbert function,
Hilbert polynomial, multiplicity, postulation number) is exact integer or
rational arithmetic on N.
"""

from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq, mpz

from .groebner import GREVLEX, Ideal
from .linalg import rank
from .poly import Poly


def binom(m: int, k: int):
    """C(m, k) as the honest degree-k polynomial in m, exact for any integer m."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    num = mpz(1)
    for i in range(k):
        num *= m - i
    den = mpz(1)
    for i in range(2, k + 1):
        den *= i
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("binomial was not an integer")
    return int(q)


def binom_count(m: int, k: int):
    """C(m, k) as a cardinality: zero for m < 0 (and for 0 <= m < k)."""
    if m < 0:
        return 0
    return binom(m, k)


def _minimalize(exps):
    """Drop exponents divisible by another; keep one copy of duplicates."""
    uniq = sorted(set(exps), key=lambda e: (sum(e), e))
    out = []
    for e in uniq:
        if not any(all(a <= b for a, b in zip(m, e)) for m in out):
            out.append(e)
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _numerator(exps, nvars) -> List[int]:
    exps = _minimalize(exps)
    if not exps:
        return [1]
    if all(x == 0 for x in exps[0]):
        return [0]
    # pure powers of distinct variables: N = prod (1 - t^e)
    supports = [tuple(i for i, x in enumerate(e) if x) for e in exps]
    if all(len(s) == 1 for s in supports) and len({s[0] for s in supports}) == len(exps):
        n = [1]
        for e in exps:
            n = _poly_mul(n, [1] + [0] * (sum(e) - 1) + [-1])
        return n
    # pivot on the most frequent variable among non-pure-power generators
    counts = [0] * nvars
    for e, s in zip(exps, supports):
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    v = counts.index(max(counts))
    pivot = tuple(1 if i == v else 0 for i in range(nvars))
    added = _numerator([pivot] + [e for e in exps if e[v] == 0], nvars)
    colon = _numerator([e[:v] + (max(e[v] - 1, 0),) + e[v + 1:] for e in exps], nvars)
    out = [0] * max(len(added), len(colon) + 1)
    for i, c in enumerate(added):
        out[i] += c
    for i, c in enumerate(colon):
        out[i + 1] += c
    while out and out[-1] == 0:
        out.pop()
    return out or [0]


def numerator_from_exponents(exps: Sequence[Tuple[int, ...]], nvars: int) -> Tuple[int, ...]:
    """Hilbert series numerator of S/M for the monomial ideal M = <exps>."""
    return tuple(_numerator(list(exps), nvars))


class HilbertData:
    """Hilbert series data for S/I, exact. valid_to limits capped computations."""

    def __init__(self, numerator: Sequence[int], nvars: int, valid_to: Optional[int] = None):
        num = list(numerator)
        while num and num[-1] == 0:
            num.pop()
        self.numerator: Tuple[int, ...] = tuple(num)
        self.nvars = nvars
        self.valid_to = valid_to
        # factor (1-t)^k out of N to find the pole order of the series at t=1;
        # q = (1-t)*h has h_i = sum of q_0..q_i, so divide by partial sums
        q = list(self.numerator)
        k = 0
        while q and sum(q) == 0:
            out = []
            acc = 0
            for c in q[:-1]:
                acc += c
                out.append(acc)
            q = out
            while q and q[-1] == 0:
                q.pop()
            k += 1
        self.reduced: Tuple[int, ...] = tuple(q)
        self.dimension = 0 if not q else nvars - k

    def hilbert_function(self, d: int) -> int:
        if d < 0:
            return 0
        if self.valid_to is not None and d > self.valid_to:
            raise ValueError(f"capped Hilbert data is only valid through degree {self.valid_to}")
        n = self.nvars
        return sum(
            c * binom_count(d - k + n - 1, n - 1)
            for k, c in enumerate(self.numerator)
            if c
        )

    def hp_coeffs(self) -> Tuple[mpq, ...]:
        """Hilbert polynomial coefficients, constant term first."""
        self._require_full()
        n = self.nvars
        coeffs = [mpq(0)] * n
        for k, c in enumerate(self.numerator):
            if not c:
                continue
            for i, a in enumerate(_binom_poly(n - 1 - k, n - 1)):
                # C(d - k + n - 1, n - 1) expanded in d, shifted by -k
                coeffs[i] += c * a
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def hilbert_polynomial(self, d: int) -> int:
        self._require_full()
        n = self.nvars
        return sum(c * binom(d - k + n - 1, n - 1) for k, c in enumerate(self.numerator) if c)

    def multiplicity(self) -> Optional[int]:
        """Constant value of the Hilbert polynomial when it is constant:
        the degree of the zero-dimensional scheme (0 for the empty scheme).
        Returns None when the quotient is positive-dimensional as a scheme."""
        self._require_full()
        if self.dimension >= 2:
            return None
        if self.dimension <= 0:
            return 0
        return int(sum(self.reduced))

    def postulation(self) -> int:
        """Largest d >= 0 with HF(d) != HP(d); -1 if they agree everywhere."""
        self._require_full()
        worst = -1
        for d in range(len(self.numerator)):
            if self.hilbert_function(d) != self.hilbert_polynomial(d):
                worst = d
        return worst

    def _require_full(self):
        if self.valid_to is not None:
            raise ValueError("this query needs an uncapped Groebner basis")


@lru_cache(maxsize=None)
def _binom_poly(shift: int, k: int) -> Tuple[mpq, ...]:
    """Coefficients (constant first) of C(d + shift, k) as a polynomial in d."""
    coeffs = [mpq(1)]
    for i in range(k):
        # multiply by (d + shift - i)
        nxt = [mpq(0)] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] += c * (shift - i)
            nxt[j + 1] += c
        coeffs = nxt
    fact = mpz(1)
    for i in range(2, k + 1):
        fact *= i
    return tuple(c / fact for c in coeffs)


def hilbert_data(ideal: Ideal, degree_cap: Optional[int] = None) -> HilbertData:
    """HilbertData of S/ideal. Full results are cached on the ideal."""
    if not ideal.is_homogeneous():
        raise ValueError("Hilbert series need a homogeneous ideal")
    if degree_cap is None:
        if ideal._hilbert_cache is not None:
            return ideal._hilbert_cache
        exps = ideal.leading_exponents(GREVLEX)
        data = HilbertData(numerator_from_exponents(exps, len(ideal.vars)), len(ideal.vars))
        ideal._hilbert_cache = data
        return data
    if ideal._hilbert_cache is not None:
        return ideal._hilbert_cache
    gb = ideal.groebner_basis(GREVLEX, degree_cap=degree_cap)
    if ideal._gb_cache.get((GREVLEX.name, None)) is gb:
        # the cap never bit, so this is full data
        return hilbert_data(ideal)
    exps = [g.leading_term(GREVLEX)[0] for g in gb]
    return HilbertData(
        numerator_from_exponents(exps, len(ideal.vars)), len(ideal.vars), valid_to=degree_cap
    )


def hilbert_function(ideal: Ideal, d: int, degree_cap: Optional[int] = None) -> int:
    return hilbert_data(ideal, degree_cap).hilbert_function(d)


def hilbert_polynomial_coeffs(ideal: Ideal) -> Tuple[mpq, ...]:
    return hilbert_data(ideal).hp_coeffs()


def postulation_number(ideal: Ideal) -> int:
    return hilbert_data(ideal).postulation()


def multiplicity(ideal: Ideal) -> Optional[int]:
    """See HilbertData.multiplicity: None means positive-dimensional."""
    return hilbert_data(ideal).multiplicity()


def _monomials(nvars: int, d: int):
    if nvars == 1:
        yield (d,)
        return
    for i in range(d + 1):
        for rest in _monomials(nvars - 1, d - i):
            yield (i,) + rest


def graded_piece_dimension(ideal: Ideal, d: int) -> int:
    """dim of the degree-d piece of the ideal itself."""
    n = len(ideal.vars)
    return binom_count(d + n - 1, n - 1) - hilbert_function(ideal, d)


def _span_rank(polys: Sequence[Poly], nvars: int, d: int) -> int:
    cols = list(_monomials(nvars, d))
    index = {e: i for i, e in enumerate(cols)}
    rows = []
    for p in polys:
        row = [0] * len(cols)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return rank(rows, len(cols))


def _piece_spanning_set(gb: Sequence[Poly], variables, d: int) -> List[Poly]:
    out = []
    for g in gb:
        dg = g.degree()
        if dg > d:
            continue
        for m in _monomials(len(variables), d - dg):
            out.append(Poly(variables, {m: 1}) * g)
    return out


def minimal_generator_degrees(ideal: Ideal) -> Tuple[int, ...]:
    """Degrees (with multiplicity) of a minimal homogeneous generating set.

    In degree d the count of new minimal generators is
    dim I_d - dim (S_1 * I_{d-1}); beyond the largest degree among the given
    generators there are none.
    """
    if not ideal.is_homogeneous():
        raise ValueError("minimal generator degrees need a homogeneous ideal")
    if not ideal.gens:
        return ()
    gb = ideal.groebner_basis(GREVLEX)
    n = len(ideal.vars)
    dmax = max(g.degree() for g in ideal.gens)
    vars_polys = [Poly.var(v, ideal.vars) for v in ideal.vars]
    out = []
    for d in range(dmax + 1):
        dim_d = graded_piece_dimension(ideal, d)
        if dim_d == 0:
            continue
        below = _piece_spanning_set(gb, ideal.vars, d - 1) if d else []
        bumped = [v * p for p in below for v in vars_polys]
        dim_bump = _span_rank(bumped, n, d) if bumped else 0
        out.extend([d] * (dim_d - dim_bump))
    return tuple(out)


def syzygy_degrees_codim2(ideal: Ideal) -> Tuple[int, ...]:
    """First-syzygy degrees for an ideal of Q[u, v] (free resolutions there
    have length one, so the numerator determines them from the generator
    degrees: N(t) = 1 - sum t^gen + sum t^syz)."""
    if len(ideal.vars) != 2:
        raise ValueError("this extraction is for ideals in two variables")
    gens = minimal_generator_degrees(ideal)
    num = hilbert_data(ideal).numerator
    series = list(num)
    # sum t^syz = N(t) - 1 + sum t^gen, coefficientwise
    size = max(len(series), max(gens, default=0) + 1, 1)
    acc = [0] * size
    for i, c in enumerate(series):
        acc[i] += c
    acc[0] -= 1
    for g in gens:
        acc[g] += 1
    out = []
    for dstep, c in enumerate(acc):
        if c < 0:
            raise ArithmeticError("inconsistent syzygy degree extraction")
        out.extend([dstep] * c)
    return tuple(out)
