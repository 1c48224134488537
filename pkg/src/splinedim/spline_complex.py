"""Single-interior-vertex semialgebraic cell complexes and their splines.

A star complex has N >= 2 edges given by homogeneous forms in Q[x,y,z] that
vanish at the vertex [0:0:1], in cyclic order; face i is the sector between
edges i and i+1 (mod N). A degree-d spline is a tuple of degree-d forms, one
per face, whose difference across edge tau is divisible by G_tau^(r_tau+1)
(the Wang smoothness criterion).

Two independent dimension computations are provided. dim_formula assembles
the dimension from binomial counts plus the Hilbert function of the ideal
J = <G_tau^(r_tau+1)> (Groebner route). dim_kernel never touches Groebner
bases of J: it sets up the exact linear system on the per-face coefficient
vectors and finds the kernel dimension by fraction-free rank computation,
reducing only modulo one principal ideal at a time.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .groebner import GREVLEX, Ideal, is_member, normal_form, saturate_irrelevant
from .groebner import _normal_form_terms, _prep  # shared engine internals
from .hilbert import binom_count, hilbert_data, _binom_poly, _monomials
from .linalg import nullspace, rank
from .poly import (
    Poly,
    VARS_XY,
    VARS_XYZ,
    change_vars,
    content_free,
    homogenize,
    linear_part_at_vertex,
    shift_origin,
    to_string,
)


class StarValidationError(ValueError):
    """Raised when a proposed star complex is ill-formed; lists all violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


@dataclass(frozen=True)
class Edge:
    form: Poly
    smoothness: int


class StarComplex:
    """Edges in cyclic order around the single interior vertex [0:0:1]."""

    def __init__(self, edges: Sequence[Edge]):
        violations = []
        edges = tuple(edges)
        if len(edges) < 2:
            violations.append("a star complex needs at least 2 edges")
        for i, e in enumerate(edges):
            g = e.form
            label = f"edge {i + 1}"
            if g.vars != VARS_XYZ:
                violations.append(f"{label}: form must live in Q[x,y,z]")
                continue
            if g.is_zero():
                violations.append(f"{label}: form is zero")
                continue
            if not g.is_homogeneous():
                violations.append(f"{label}: form is not homogeneous")
                continue
            n = g.degree()
            if g.coefficient((0, 0, n)) != 0:
                violations.append(f"{label}: form does not vanish at the vertex [0:0:1]")
            if e.smoothness < 0:
                violations.append(f"{label}: smoothness must be nonnegative")
            if all(e_[2] > 0 for e_ in g.terms):
                warnings.warn(f"{label}: form is divisible by z (component at infinity)")
        if not violations and len(edges) >= 2:
            for i in range(len(edges)):
                a = edges[i].form
                b = edges[(i + 1) % len(edges)].form
                if len(edges) == 2 and i == 1:
                    break  # the same pair both times
                if content_free(a) == content_free(b):
                    violations.append(
                        f"edges {i + 1} and {(i + 1) % len(edges) + 1} are proportional "
                        "(a face would be bounded twice by the same curve)"
                    )
        if violations:
            raise StarValidationError(violations)
        self.edges = edges
        self._power_cache = {}
        self._ideal_cache = {}

    @property
    def N(self) -> int:
        return len(self.edges)

    @property
    def forms(self) -> Tuple[Poly, ...]:
        return tuple(e.form for e in self.edges)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(e.form.degree() for e in self.edges)

    @property
    def smoothness(self) -> Tuple[int, ...]:
        return tuple(e.smoothness for e in self.edges)

    def uniform_smoothness(self) -> Optional[int]:
        values = set(self.smoothness)
        return values.pop() if len(values) == 1 else None

    def with_smoothness(self, r: int) -> "StarComplex":
        return StarComplex([Edge(e.form, r) for e in self.edges])

    def power(self, i: int, m: int) -> Poly:
        hit = self._power_cache.get((i, m))
        if hit is None:
            hit = self.edges[i].form ** m
            self._power_cache[(i, m)] = hit
        return hit

    def __repr__(self):
        inside = ", ".join(
            f"({to_string(e.form)}, r={e.smoothness})" for e in self.edges
        )
        return f"StarComplex({inside})"


def validate_star(edges) -> StarComplex:
    """Build a StarComplex from (form, smoothness) pairs or Edge objects."""
    built = []
    for e in edges:
        if isinstance(e, Edge):
            built.append(e)
        else:
            form, r = e
            built.append(Edge(form, int(r)))
    return StarComplex(built)


def star_from_affine(curves: Sequence[Poly], smoothness, vertex=(0, 0)) -> StarComplex:
    """Homogenize affine curves in x, y, moving the given vertex to the origin."""
    if isinstance(smoothness, int):
        smoothness = [smoothness] * len(curves)
    if len(smoothness) != len(curves):
        raise ValueError("one smoothness value per curve (or a single integer)")
    violations = []
    forms = []
    for i, c in enumerate(curves):
        if c.vars != VARS_XY:
            c = change_vars(c, VARS_XY)
        moved = shift_origin(c, vertex) if tuple(vertex) != (0, 0) else c
        if moved.constant_term() != 0:
            violations.append(f"edge {i + 1}: curve does not pass through the vertex")
            continue
        forms.append(homogenize(moved))
    if violations:
        raise StarValidationError(violations)
    return validate_star(list(zip(forms, smoothness)))


def star_ideal(C: StarComplex, r: Optional[int] = None) -> Ideal:
    """J(v) = <G_tau^(r_tau+1)>, with r overriding every edge when given."""
    ms = tuple((r + 1 if r is not None else e.smoothness + 1) for e in C.edges)
    hit = C._ideal_cache.get(ms)
    if hit is None:
        hit = Ideal([C.power(i, m) for i, m in enumerate(ms)], VARS_XYZ)
        C._ideal_cache[ms] = hit
    return hit


def is_spline(C: StarComplex, parts: Sequence[Poly]) -> bool:
    """Wang criterion: every adjacent difference divisible by G_tau^(r_tau+1)."""
    parts = list(parts)
    if len(parts) != C.N:
        raise ValueError(f"expected {C.N} face polynomials, got {len(parts)}")
    degs = {p.degree() for p in parts if not p.is_zero()}
    if len(degs) > 1:
        raise ValueError("face polynomials must share one degree")
    if any(not p.is_homogeneous() for p in parts):
        raise ValueError("face polynomials must be homogeneous")
    for i in range(C.N):
        diff = parts[i] - parts[i - 1]
        power = C.power(i, C.edges[i].smoothness + 1)
        if not normal_form(diff, [power], GREVLEX).is_zero():
            return False
    return True


def dim_formula(C: StarComplex, r: Optional[int], d: int) -> int:
    """dim of the degree-d spline space by the ideal-theoretic route:
    sum of C(d - (r+1)n_tau + 2, 2) over edges plus dim (S/J(v))_d.
    Counting binomials (zero below the threshold) throughout."""
    if d < 0:
        return 0
    if r is None:
        r = C.uniform_smoothness()
        if r is None:
            raise ValueError(
                "dim_formula needs one uniform smoothness; use dim_kernel for mixed r"
            )
    J = star_ideal(C, r)
    total = hilbert_data(J).hilbert_function(d)
    for e in C.edges:
        total += binom_count(d - (r + 1) * e.form.degree() + 2, 2)
    return total


def dim_kernel(C: StarComplex, d: int) -> int:
    """dim of the degree-d spline space from the literal kernel, by exact rank.

    The unknowns are the N per-face coefficient vectors; each edge imposes
    F_i = F_{i-1} modulo G_i^(m_i) in degree d. Eliminating the telescoping
    differences leaves one block-matrix rank over the cheapest edge's
    standard monomials; no Groebner basis of J(v) is involved.
    """
    if d < 0:
        return 0
    ms = [e.smoothness + 1 for e in C.edges]
    ns = C.degrees
    total_monos = binom_count(d + 2, 2)
    # the wrap-around edge: pick the one with the smallest power degree
    i0 = min(range(C.N), key=lambda i: ms[i] * ns[i])
    p0 = C.power(i0, ms[i0])
    key = GREVLEX.key
    p0_terms = _prep(p0, key)
    lead0 = p0_terms[0][1]

    dim = total_monos  # one unconstrained face after eliminating differences
    columns = []
    std = [e for e in _monomials(3, d) if not all(a >= b for a, b in zip(e, lead0))]
    std_index = {e: j for j, e in enumerate(std)}
    for i in range(C.N):
        if i == i0:
            continue
        piece = binom_count(d - ms[i] * ns[i] + 2, 2)
        dim += piece
        if piece == 0:
            continue
        gi_terms = _prep(C.power(i, ms[i]), key)
        for mu in _monomials(3, d - ms[i] * ns[i]):
            shifted = []
            for _, e, c in gi_terms:
                e2 = (e[0] + mu[0], e[1] + mu[1], e[2] + mu[2])
                shifted.append((key(e2), e2, c))
            rem, _ = _normal_form_terms(shifted, [p0_terms], key)
            row = [0] * len(std)
            for _, e, c in rem:
                row[std_index[e]] = c
            columns.append(row)
    if columns:
        dim -= rank(columns, len(std))
    return dim


def _nf_fraction(terms, reducers, key):
    rem, scale = _normal_form_terms(terms, reducers, key)
    return {e: mpq(c) / scale for _, e, c in rem}


def spline_basis(C: StarComplex, d: int) -> List[Tuple[Poly, ...]]:
    """An exact basis of the degree-d spline space, one form per face.

    Builds the full edge-difference system and extracts its nullspace; the
    count always equals dim_kernel.
    """
    if d < 0:
        return []
    monos = list(_monomials(3, d))
    m_index = {e: j for j, e in enumerate(monos)}
    nm = len(monos)
    key = GREVLEX.key
    rows = []
    for i in range(C.N):
        power = C.power(i, C.edges[i].smoothness + 1)
        p_terms = _prep(power, key)
        lead = p_terms[0][1]
        std = [e for e in monos if not all(a >= b for a, b in zip(e, lead))]
        std_index = {e: j for j, e in enumerate(std)}
        block = [[mpq(0)] * (C.N * nm) for _ in std]
        for e in monos:
            col = m_index[e]
            nf = _nf_fraction([(key(e), e, 1)], [p_terms], key)
            for mono, c in nf.items():
                j = std_index[mono]
                block[j][i * nm + col] += c
                block[j][((i - 1) % C.N) * nm + col] -= c
        rows.extend(block)
    if rows:
        vectors = nullspace(rows, C.N * nm)
    else:
        vectors = [
            [mpq(1) if k == j else mpq(0) for k in range(C.N * nm)]
            for j in range(C.N * nm)
        ]
    out = []
    for v in vectors:
        parts = []
        for i in range(C.N):
            parts.append(Poly(VARS_XYZ, {e: v[i * nm + j] for e, j in m_index.items()}))
        out.append(tuple(parts))
    return out


def _spline_vector(parts: Sequence[Poly], d: int, monos, m_index):
    nm = len(monos)
    v = [mpq(0)] * (len(parts) * nm)
    for i, p in enumerate(parts):
        for e, c in p.terms.items():
            v[i * nm + m_index[e]] = c
    return v


def generator_degrees(C: StarComplex, r: int, d_max: int) -> Tuple[int, ...]:
    """Degrees of minimal module generators of the spline module up to d_max.

    A minimal generator in degree d is a spline outside the span of
    {variable * lower-degree spline}; counts come from exact ranks.
    """
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    Cr = C.with_smoothness(r)
    var_polys = [Poly.var(v, VARS_XYZ) for v in VARS_XYZ]
    out = []
    prev_basis: List[Tuple[Poly, ...]] = []
    for d in range(d_max + 1):
        basis = spline_basis(Cr, d)
        monos = list(_monomials(3, d))
        m_index = {e: j for j, e in enumerate(monos)}
        bumped = []
        for parts in prev_basis:
            for v in var_polys:
                moved = tuple(v * p for p in parts)
                bumped.append(_spline_vector(moved, d, monos, m_index))
        rk = rank(bumped, Cr.N * len(monos)) if bumped else 0
        out.extend([d] * (len(basis) - rk))
        prev_basis = basis
    return tuple(out)


@dataclass(frozen=True)
class Configuration:
    """Classification of a star complex's edge-form geometry."""

    kind: str  # "Pencil" | "DistinctTangent" | "Other"
    degrees: Tuple[int, ...]
    pencil: Optional[Tuple[int, int, int]] = None  # (N, s, n)
    tangents: Optional[Tuple[Poly, ...]] = None
    diagnostics: Tuple[str, ...] = ()

    def describe(self) -> str:
        if self.kind == "Pencil":
            N, s, n = self.pencil
            return f"Pencil N={N} s={s} n={n}"
        if self.kind == "DistinctTangent":
            return "DistinctTangent, degrees " + ",".join(str(n) for n in self.degrees)
        return "Other: " + "; ".join(self.diagnostics)


def classify_configuration(C: StarComplex) -> Configuration:
    """Pencil / DistinctTangent / Other, with exact certificate computations.

    Pencil: equal degrees, all forms in the span of two members that share no
    common factor (checked through the Krull dimension of S modulo the pair).
    DistinctTangent: nonzero pairwise-distinct tangent lines at the vertex and
    no common zeros beyond the vertex (checked through the saturation of the
    edge-form ideal). Pencils are preferred when both sets of hypotheses hold.
    """
    forms = C.forms
    degrees = C.degrees
    diagnostics = []

    if len(set(degrees)) == 1:
        n = degrees[0]
        basis_monos = list(_monomials(3, n))
        idx = {e: j for j, e in enumerate(basis_monos)}
        rows = []
        for g in forms:
            row = [mpq(0)] * len(basis_monos)
            for e, c in g.terms.items():
                row[idx[e]] = c
            rows.append(row)
        span = rank(rows, len(basis_monos))
        if span <= 2:
            # two independent members; the first form plus the first
            # non-proportional one
            first = content_free(forms[0])
            other = next(
                (g for g in forms[1:] if content_free(g) != first), None
            )
            if other is None:
                diagnostics.append("all edge forms are proportional")
            else:
                pair = Ideal([forms[0], other], VARS_XYZ)
                if hilbert_data(pair).dimension <= 1:
                    s = len({content_free(g) for g in forms})
                    return Configuration(
                        "Pencil", degrees, pencil=(C.N, s, n)
                    )
                diagnostics.append("pencil span has a fixed common component")

    tangents = [linear_part_at_vertex(g) for g in forms]
    if any(t.is_zero() for t in tangents):
        for i, t in enumerate(tangents):
            if t.is_zero():
                diagnostics.append(
                    f"edge {i + 1} has no tangent line at the vertex (linear part vanishes)"
                )
        return Configuration("Other", degrees, diagnostics=tuple(diagnostics))
    groups = {}
    for i, t in enumerate(tangents):
        groups.setdefault(content_free(t), []).append(i)
    repeated = {t: g for t, g in groups.items() if len(g) > 1}
    if repeated:
        for t, g in sorted(repeated.items(), key=lambda kv: kv[1]):
            edge_list = ",".join(str(i + 1) for i in g)
            diagnostics.append(f"repeated tangent {to_string(t)} (edges {edge_list})")
        return Configuration("Other", degrees, diagnostics=tuple(diagnostics))

    sat = saturate_irrelevant(Ideal(list(forms), VARS_XYZ))
    hd = hilbert_data(sat)
    if hd.dimension >= 2:
        diagnostics.append("common zero locus of the edge forms is positive-dimensional")
        return Configuration("Other", degrees, diagnostics=tuple(diagnostics))
    mult = hd.multiplicity()
    xs = Poly.var("x", VARS_XYZ) ** mult
    ys = Poly.var("y", VARS_XYZ) ** mult
    if not (is_member(xs, sat) and is_member(ys, sat)):
        diagnostics.append("edge forms share zeros besides the vertex")
        return Configuration("Other", degrees, diagnostics=tuple(diagnostics))
    return Configuration("DistinctTangent", degrees, tangents=tuple(tangents))


@dataclass(frozen=True)
class SplineSeries:
    """Hilbert data of the spline module at one uniform smoothness."""

    degrees: Tuple[int, ...]
    r: int
    hp_coefficients: Tuple[mpq, ...]
    postulation: int
    multiplicity_value: Optional[int]

    def hilbert_polynomial(self, d: int):
        acc = mpq(0)
        for i, c in enumerate(self.hp_coefficients):
            acc += c * mpq(d) ** i
        return acc


def spline_series(C: StarComplex, r: int) -> SplineSeries:
    """Assembled Hilbert polynomial / postulation of the spline module."""
    J = star_ideal(C, r)
    hd = hilbert_data(J)
    m = r + 1
    coeffs = list(hd.hp_coeffs()) + [mpq(0)] * 3
    coeffs = coeffs[:3]
    for n in C.degrees:
        for i, a in enumerate(_binom_poly(2 - m * n, 2)):
            coeffs[i] += a
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()

    def hf(d):
        return dim_formula(C, r, d)

    def hp(d):
        return sum(c * mpq(d) ** i for i, c in enumerate(coeffs))

    scan_to = max(len(hd.numerator) - 1, max(m * n for n in C.degrees), 0)
    post = -1
    for d in range(scan_to + 1):
        if hf(d) != hp(d):
            post = d
    mult = hd.multiplicity() if hd.dimension <= 1 else None
    return SplineSeries(C.degrees, r, tuple(coeffs), post, mult)
