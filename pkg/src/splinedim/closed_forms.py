"""Closed-form dimension formulas for a single interior vertex.

Resolution data for ideals of powers of distinct linear forms, the resulting
Hilbert functions and polynomials for pencil and distinct-tangent
configurations, postulation numbers, validity thresholds, and a
linkage-based Hilbert function for three curves at smoothness zero.
Everything is plain integer/rational arithmetic in the combinatorial data
(edge degrees, smoothness), so it evaluates instantly at parameter sizes far
beyond what a Groebner basis run can reach.

Formulas evaluate unconditionally.  Whether a value is guaranteed to be the
true dimension for a concrete configuration is a separate question, answered
by `low_power_applicable` and `tangent_cone_estimate` together with the
classification of the configuration.
"""

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

from gmpy2 import mpq

from .groebner import Ideal, colon_ideal, colon_poly
from .hilbert import (_binom_poly, binom, binom_count, hilbert_data,
                      minimal_generator_degrees, syzygy_degrees_codim2)
from .poly import Poly, VARS_XY, VARS_XYZ


@dataclass(frozen=True)
class PowerResolutionData:
    """Minimal free resolution data of R/<L_1^(r+1), ..., L_t^(r+1)> for
    t >= 2 distinct linear forms in two variables: t generators in degree
    r+1 and t-1 syzygies, s1 of degree r+1+a and s2 of degree r+2+a."""

    t: int
    r: int
    a: int
    s1: int
    s2: int
    regularity: int


def power_resolution(t: int, r: int) -> PowerResolutionData:
    """Resolution data for t powers L_i^(r+1) of distinct linear forms.

    Callers keep t <= r+2; only that many such powers can be linearly
    independent, so a larger t cannot be a minimal generator count.
    """
    if t < 2:
        raise ValueError("need at least two distinct linear forms")
    if r < 0:
        raise ValueError("smoothness must be nonnegative")
    a, m = divmod(r + 1, t - 1)
    ceil_ratio = a + (1 if m else 0)
    return PowerResolutionData(t=t, r=r, a=a, s1=t - 1 - m, s2=m,
                               regularity=r + ceil_ratio - 1)


def multiplicity_linear_powers(t: int, r: int) -> int:
    """Length of S/<L_1^(r+1), ..., L_t^(r+1)> for t distinct linear forms."""
    a = power_resolution(t, r).a
    return int(binom(a + r + 2, 2) - t * binom(a + 1, 2))


def linear_powers_hilbert_function(t: int, r: int, d: int) -> int:
    """Hilbert function of S/<L_1^(r+1), ..., L_t^(r+1)> in three variables.

    Alternating sum of the graded free modules in the resolution, so it is
    exact in every degree, not just asymptotically.
    """
    pr = power_resolution(t, r)
    return int(binom_count(d + 2, 2) - t * binom_count(d - r + 1, 2)
               + pr.s1 * binom_count(d - r - pr.a + 1, 2)
               + pr.s2 * binom_count(d - r - pr.a, 2))


@dataclass(frozen=True)
class PencilStructure:
    """Spline module structure when all edge curves lie in a single pencil.

    N edges of common degree n with s distinct curves among them, smoothness
    r.  The module is free with one summand per entry of summand_degrees;
    that multiset determines the Hilbert function in every degree, the
    polynomial, and the postulation number.  multiplicity is the length of
    the vertex scheme S/J.
    """

    N: int
    s: int
    n: int
    r: int
    t: int
    a: int
    s1: int
    s2: int
    summand_degrees: Tuple[int, ...]
    hp_coefficients: Tuple[mpq, ...]
    multiplicity: int
    postulation: int

    def hilbert_function(self, d: int) -> int:
        return sum(binom_count(d - k + 2, 2) for k in self.summand_degrees)

    def hilbert_polynomial(self, d: int) -> int:
        return int(sum(binom(d - k + 2, 2) for k in self.summand_degrees))


def pencil_structure(N: int, s: int, n: int, r: int) -> PencilStructure:
    """Free structure of the spline module for a pencil configuration."""
    if s < 2:
        raise ValueError("a pencil configuration needs at least two distinct members")
    if N < s:
        raise ValueError("N counts all edges, so N >= s")
    if n < 1:
        raise ValueError("curve degree must be positive")
    if r < 0:
        raise ValueError("smoothness must be nonnegative")
    t = min(s, r + 2)
    pr = power_resolution(t, r)
    degrees = ((0,) + ((r + 1) * n,) * (N - t)
               + ((r + 1 + pr.a) * n,) * pr.s1
               + ((r + 2 + pr.a) * n,) * pr.s2)
    coeffs = [mpq(0)] * 3
    for k in degrees:
        for i, c in enumerate(_binom_poly(2 - k, 2)):
            coeffs[i] += c
    ceil_ratio = pr.a + (1 if pr.s2 else 0)
    return PencilStructure(
        N=N, s=s, n=n, r=r, t=t, a=pr.a, s1=pr.s1, s2=pr.s2,
        summand_degrees=tuple(sorted(degrees)),
        hp_coefficients=tuple(coeffs),
        multiplicity=n * n * multiplicity_linear_powers(t, r),
        postulation=(r + 1 + ceil_ratio) * n - 3,
    )


@dataclass(frozen=True)
class DistinctTangentData:
    """Hilbert polynomial of the spline module when the edge curves meet the
    vertex with pairwise distinct tangents and share no other zero.

    Exact for all d at or beyond the validity_thresholds values;
    multiplicity is the length of the vertex scheme S/J.
    """

    degrees: Tuple[int, ...]
    r: int
    t: int
    a: int
    multiplicity: int
    hp_coefficients: Tuple[mpq, ...]

    def hilbert_polynomial(self, d: int) -> int:
        total = self.multiplicity + sum(
            binom(d - (self.r + 1) * n + 2, 2) for n in self.degrees)
        return int(total)


def distinct_tangent_hp(degrees: Sequence[int], r: int) -> DistinctTangentData:
    """Spline Hilbert polynomial for a distinct-tangent configuration."""
    degrees = tuple(int(n) for n in degrees)
    if len(degrees) < 2:
        raise ValueError("need at least two edges")
    if any(n < 1 for n in degrees):
        raise ValueError("curve degrees must be positive")
    if r < 0:
        raise ValueError("smoothness must be nonnegative")
    t = min(len(degrees), r + 2)
    pr = power_resolution(t, r)
    mult = multiplicity_linear_powers(t, r)
    coeffs = [mpq(mult), mpq(0), mpq(0)]
    for n in degrees:
        for i, c in enumerate(_binom_poly(2 - (r + 1) * n, 2)):
            coeffs[i] += c
    return DistinctTangentData(degrees=degrees, r=r, t=t, a=pr.a,
                               multiplicity=mult,
                               hp_coefficients=tuple(coeffs))


def validity_thresholds(degrees: Sequence[int], r: int) -> dict:
    """Degrees from which distinct_tangent_hp is guaranteed exact.

    'general' applies to any number of edges; the sharper 'three_curve'
    bound exists only for exactly three edges (None otherwise).
    """
    degrees = tuple(int(n) for n in degrees)
    if not degrees or any(n < 1 for n in degrees):
        raise ValueError("curve degrees must be positive")
    if r < 0:
        raise ValueError("smoothness must be nonnegative")
    general = 3 * max(degrees) * (r + 1) - 2
    three = (sum(degrees) - 1) * (r + 1) - 2 if len(degrees) == 3 else None
    return {"general": general, "three_curve": three}


def low_power_applicable(t: int, r: int) -> bool:
    """Whether t distinct tangent directions suffice at smoothness r for the
    tangent-line powers to cut out the vertex scheme exactly (the saturation
    of J is then generated by the powers of the distinct tangents)."""
    if t < 1:
        raise ValueError("need a positive tangent count")
    if r < 0:
        raise ValueError("smoothness must be nonnegative")
    return 2 * t >= r + 3


def linked_hilbert_function(n1: int, n2: int, n3: int, d: int) -> int:
    """Hilbert function of S/J at smoothness zero by linkage.

    Assumes G1 and G2 meet in n1*n2 distinct points and G3 passes through
    the vertex but through none of the other common points; then J is linked
    to the ideal of the residual points through the complete intersection
    K = <G1, G2>, whose Hilbert function is known in closed form.
    """
    if min(n1, n2, n3) < 1:
        raise ValueError("curve degrees must be positive")
    if d < 0:
        return 0
    if d > n1 + n2 + n3 - 3:
        return 1

    def ci(e):
        return (binom_count(e + 2, 2) - binom_count(e - n1 + 2, 2)
                - binom_count(e - n2 + 2, 2) + binom_count(e - n1 - n2 + 2, 2))

    return ci(d) - ci(d - n3)


def cayley_bacharach_dim(K: Ideal, gamma: Poly, d: int) -> int:
    """Dimension of ((K : gamma) / K)_d for a two-generator complete
    intersection K, via duality with the residual ideal K'' = (K : (K : gamma)).

    The socle degree is s = deg(g1) + deg(g2) - 3 and the duality value
    mult(S/K'') - dim(S/K'')_{s-d} is cross-checked against the directly
    computed difference of Hilbert functions before being returned.
    """
    if len(K.gens) != 2:
        raise ValueError("K must be given by its two complete-intersection generators")
    if gamma in K:
        raise ValueError("gamma lies in K, so the linkage degenerates")
    hd_K = hilbert_data(K)
    if hd_K.dimension != 1:
        raise ValueError("K must define a finite scheme in the plane")
    s = K.gens[0].degree() + K.gens[1].degree() - 3
    Kp = colon_poly(K, gamma)
    Kpp = colon_ideal(K, Kp)
    hd = hilbert_data(Kpp)
    mult = hd.multiplicity()
    if mult is None:
        raise ArithmeticError("residual ideal is not a finite scheme")
    value = mult - hd.hilbert_function(s - d)
    direct = hd_K.hilbert_function(d) - hilbert_data(Kp).hilbert_function(d)
    if value != direct:
        raise ArithmeticError(
            "duality value disagrees with the direct Hilbert function difference")
    return value


@dataclass(frozen=True)
class TangentConeEstimate:
    """Multiplicity estimate from the ideal I of the generators' z-leading
    forms.

    The estimate equals the true multiplicity of S/J whenever `applicable`:
    the leading forms must minimally generate I, the plane quotient must
    have finite length, and the second-syzygy degrees of I may spread by at
    most 2.  Off hypothesis the estimate can genuinely differ.
    """

    leading_forms: Tuple[Poly, ...]
    presented_degrees: Tuple[int, ...]
    generator_degrees: Tuple[int, ...]
    syzygy_degrees: Tuple[int, ...]
    spread: Optional[int]
    minimally_generated: bool
    applicable: bool
    multiplicity: Optional[int]


def tangent_cone_estimate(gens) -> TangentConeEstimate:
    """Estimate the vertex multiplicity from z-leading forms of generators.

    Accepts an Ideal or an iterable of homogeneous polynomials in x, y, z.
    For each generator the coefficient form of the highest z power is taken;
    together these span the tangent-cone ideal in the plane.
    """
    if isinstance(gens, Ideal):
        gens = gens.gens
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    forms = []
    for g in gens:
        if g.vars != VARS_XYZ:
            raise ValueError("generators must live in the ring with variables x, y, z")
        if not g.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        c = max(e[2] for e in g.terms)
        f = Poly(VARS_XY, {(e[0], e[1]): q for e, q in g.terms.items() if e[2] == c})
        if f.degree() == 0:
            raise ValueError("a generator does not vanish at the vertex")
        forms.append(f)
    plane = Ideal(forms)
    presented = tuple(sorted(f.degree() for f in forms))
    mingens = minimal_generator_degrees(plane)
    # the forms generate by construction, so count equality means minimality
    minimal = len(mingens) == len(forms)
    hd = hilbert_data(plane)
    finite = hd.dimension <= 0
    syz: Tuple[int, ...] = ()
    spread = None
    mult = None
    if finite:
        syz = syzygy_degrees_codim2(plane)
        spread = max(syz) - min(syz) if syz else 0
        # S/I is a cylinder over the plane scheme, so its multiplicity is
        # the plane colength
        mult = sum(hd.hilbert_function(j) for j in range(len(hd.numerator) + 1))
    applicable = minimal and finite and spread is not None and spread <= 2
    return TangentConeEstimate(
        leading_forms=tuple(forms),
        presented_degrees=presented,
        generator_degrees=mingens,
        syzygy_degrees=syz,
        spread=spread,
        minimally_generated=minimal,
        applicable=applicable,
        multiplicity=mult,
    )
