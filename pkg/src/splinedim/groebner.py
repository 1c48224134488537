"""Buchberger's algorithm and ideal operations over Q.

The engine works fraction-free: polynomials enter a computation as primitive
integer term lists (content removed, positive leading coefficient) sorted
descending under the active order, and every reduction step removes content
again, which keeps coefficient growth in check. Reduced Groebner bases are
returned with that same normalization (integer coefficients, content 1,
positive leading coefficient), which is canonical, so equal ideals have
identical reduced bases.

Pair management uses the normal selection strategy (smallest lcm first) with
Buchberger's coprimality and chain criteria. Saturation and intersection go
through the usual auxiliary-variable eliminations; single-variable saturation
of homogeneous ideals uses the reverse-lex stripping shortcut.
"""

from __future__ import annotations

from heapq import heappop, heappush
from typing import Iterable, List, Optional, Sequence, Tuple

from gmpy2 import gcd as zgcd
from gmpy2 import mpq, mpz

from .orders import Order, eliminate_last, grevlex, grevlex_cheapest, weight_refined
from .poly import Poly, change_vars, content_free, initial_form

GREVLEX = grevlex()

# internal term lists: [(order_key, exponent, mpz coefficient)], sorted descending


def _prep(p: Poly, key) -> list:
    q = content_free(p)
    return sorted(
        ((key(e), e, mpz(c.numerator)) for e, c in q.terms.items()), reverse=True
    )


def _to_poly(terms, variables) -> Poly:
    return Poly(variables, {e: mpq(c) for _, e, c in terms})


def _divides(e1, e2) -> bool:
    for a, b in zip(e1, e2):
        if a > b:
            return False
    return True


def _lcm(e1, e2):
    return tuple(a if a > b else b for a, b in zip(e1, e2))


def _combine(f, cf, g, cg, mono, key):
    """cf*f - cg*(x^mono * g), both term lists sorted descending."""
    gs = []
    for _, e, c in g:
        e2 = tuple(a + b for a, b in zip(e, mono))
        gs.append((key(e2), e2, c))
    out = []
    i = j = 0
    nf, ng = len(f), len(gs)
    while i < nf and j < ng:
        kf = f[i][0]
        kg = gs[j][0]
        if kf > kg:
            out.append((kf, f[i][1], cf * f[i][2]))
            i += 1
        elif kf < kg:
            out.append((kg, gs[j][1], -cg * gs[j][2]))
            j += 1
        else:
            c = cf * f[i][2] - cg * gs[j][2]
            if c:
                out.append((kf, f[i][1], c))
            i += 1
            j += 1
    while i < nf:
        out.append((f[i][0], f[i][1], cf * f[i][2]))
        i += 1
    while j < ng:
        out.append((gs[j][0], gs[j][1], -cg * gs[j][2]))
        j += 1
    return out


def _remove_content(terms):
    if not terms:
        return terms
    g = mpz(0)
    for _, _, c in terms:
        g = zgcd(g, c)
        if g == 1:
            break
    if terms[0][2] < 0:
        g = -g
    if g == 1:
        return terms
    return [(k, e, c // g) for k, e, c in terms]


def _normal_form_terms(f, reducers, key):
    """Full normal form of term list f against reducers.

    reducers: list of term lists. Returns (remainder, scale) with
    remainder = scale * (f mod reducers), remainder primitive; scale is a
    positive rational bookkeeping factor so callers needing Q-linearity can
    divide it back out.
    """
    work = list(f)
    scale = mpq(1)
    i = 0
    while i < len(work):
        _, e0, c0 = work[i]
        hit = None
        for red in reducers:
            if _divides(red[0][1], e0):
                hit = red
                break
        if hit is None:
            i += 1
            continue
        lc = hit[0][2]
        g = zgcd(c0, lc)
        cf = lc // g
        cg = c0 // g
        if cf < 0:
            cf, cg = -cf, -cg
        mono = tuple(a - b for a, b in zip(e0, hit[0][1]))
        prefix = [(k, e, c * cf) for k, e, c in work[:i]]
        tail = _combine(work[i:], cf, hit, cg, mono, key)
        scale = scale * cf
        work = prefix + tail
        if work:
            g_all = mpz(0)
            for _, _, c in work:
                g_all = zgcd(g_all, c)
                if g_all == 1:
                    break
            if g_all > 1:
                work = [(k, e, c // g_all) for k, e, c in work]
                scale = scale / g_all
    if work and work[0][2] < 0:
        work = [(k, e, -c) for k, e, c in work]
        scale = -scale
    return work, scale


def _spoly(f, g, key):
    ef, cf0 = f[0][1], f[0][2]
    eg, cg0 = g[0][1], g[0][2]
    L = _lcm(ef, eg)
    d = zgcd(cf0, cg0)
    # (cg0/d) * x^(L-ef) * f  -  (cf0/d) * x^(L-eg) * g
    mf = tuple(a - b for a, b in zip(L, ef))
    shifted = []
    for _, e, c in f:
        e2 = tuple(a + b for a, b in zip(e, mf))
        shifted.append((key(e2), e2, c))
    mg = tuple(a - b for a, b in zip(L, eg))
    return _combine(shifted, cg0 // d, g, cf0 // d, mg, key)


def _buchberger_terms(polys: Sequence[Poly], order: Order, degree_cap=None):
    key = order.key
    basis = []
    for p in polys:
        t = _prep(p, key)
        if t:
            basis.append(t)
    basis.sort(key=lambda t: t[0][0])
    truncated = False
    if not basis:
        return [], truncated

    pending = set()
    heap = []

    def push_pair(i, j):
        nonlocal truncated
        ei = basis[i][0][1]
        ej = basis[j][0][1]
        L = _lcm(ei, ej)
        if all(a + b == l for a, b, l in zip(ei, ej, L)):
            return  # coprime leading monomials: S-polynomial reduces to zero
        if degree_cap is not None and sum(L) > degree_cap:
            truncated = True
            return
        pending.add((i, j))
        heappush(heap, (sum(L), key(L), i, j))

    for j in range(len(basis)):
        for i in range(j):
            push_pair(i, j)

    while heap:
        _, _, i, j = heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        L = _lcm(basis[i][0][1], basis[j][0][1])
        skip = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if _divides(basis[k][0][1], L):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik not in pending and pjk not in pending:
                    skip = True
                    break
        if skip:
            continue
        s = _spoly(basis[i], basis[j], key)
        rem, _ = _normal_form_terms(s, basis, key)
        if rem:
            basis.append(_remove_content(rem))
            new = len(basis) - 1
            for k in range(new):
                push_pair(k, new)
    return basis, truncated


def _reduce_basis(basis, key):
    """Minimal + tail-reduced + normalized: the reduced Groebner basis."""
    if not basis:
        return []
    by_lead = sorted(basis, key=lambda t: t[0][0])
    minimal = []
    for t in by_lead:
        if not any(_divides(m[0][1], t[0][1]) for m in minimal):
            minimal.append(t)
    reduced = []
    for idx, t in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        rem, _ = _normal_form_terms(t, others, key) if others else (t, mpq(1))
        reduced.append(_remove_content(rem))
    reduced.sort(key=lambda t: t[0][0])
    return reduced


class Ideal:
    """An ideal of Q[variables] given by generators; Groebner bases cached."""

    def __init__(self, gens: Iterable[Poly], variables: Optional[Tuple[str, ...]] = None):
        gens = list(gens)
        if not all(isinstance(g, Poly) for g in gens):
            raise TypeError("ideal generators must be Poly instances")
        if variables is None:
            if not gens:
                raise ValueError("need variables for an ideal with no generators")
            variables = gens[0].vars
        variables = tuple(variables)
        for g in gens:
            if g.vars != variables:
                raise ValueError("all generators must share one variable tuple")
        self.vars = variables
        self.gens: Tuple[Poly, ...] = tuple(g for g in gens if not g.is_zero())
        self._gb_cache = {}
        self._hilbert_cache = None

    def __repr__(self):
        inside = ", ".join(str(g) for g in self.gens) or "0"
        return f"Ideal({inside})"

    def groebner_basis(self, order: Order = GREVLEX, degree_cap=None) -> Tuple[Poly, ...]:
        """Reduced Groebner basis (primitive integer normalization).

        With degree_cap set, pairs above the cap are dropped; for homogeneous
        input the result has the correct leading terms up to the cap. Capped
        bases are cached separately and never reused as full bases.
        """
        cache_key = (order.name, degree_cap)
        hit = self._gb_cache.get(cache_key)
        if hit is not None:
            return hit
        if degree_cap is not None:
            full = self._gb_cache.get((order.name, None))
            if full is not None:
                return full
        basis, truncated = _buchberger_terms(self.gens, order, degree_cap)
        reduced = _reduce_basis(basis, order.key)
        gb = tuple(_to_poly(t, self.vars) for t in reduced)
        if degree_cap is not None and not truncated:
            # the cap never bit; this is a genuine full basis
            self._gb_cache[(order.name, None)] = gb
        self._gb_cache[cache_key] = gb
        return gb

    def leading_exponents(self, order: Order = GREVLEX, degree_cap=None):
        return [g.leading_term(order)[0] for g in self.groebner_basis(order, degree_cap)]

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def contains(self, f: Poly) -> bool:
        return normal_form(f, self).is_zero()

    def __contains__(self, f: Poly) -> bool:
        return self.contains(f)


def normal_form(f: Poly, ideal_or_gb, order: Order = GREVLEX) -> Poly:
    """The unique remainder of f modulo the reduced Groebner basis."""
    if isinstance(ideal_or_gb, Ideal):
        if f.vars != ideal_or_gb.vars:
            raise ValueError("variable mismatch")
        gb = ideal_or_gb.groebner_basis(order)
    else:
        gb = tuple(ideal_or_gb)
    key = order.key
    reducers = [_prep(g, key) for g in gb if not g.is_zero()]
    # run the integer engine on the content-cleared polynomial, then undo
    fprim = _prep(f, key)
    if not fprim:
        return Poly.zero(f.vars)
    rem, scale = _normal_form_terms(fprim, reducers, key)
    if not rem:
        return Poly.zero(f.vars)
    # f = content * fprim (same support), so NF(f) = (content/scale) * rem
    content = f.terms[fprim[0][1]] / fprim[0][2]
    return Poly(f.vars, {e: content / scale * c for _, e, c in rem})


def is_member(f: Poly, ideal: Ideal, order: Order = GREVLEX) -> bool:
    return normal_form(f, ideal, order).is_zero()


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    if a.vars != b.vars:
        raise ValueError("variable mismatch")
    return a.groebner_basis() == b.groebner_basis()


def exact_divide(g: Poly, f: Poly, order: Order = GREVLEX) -> Poly:
    """Quotient q with g = q*f; raises ValueError if f does not divide g."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if g.is_zero():
        return Poly.zero(g.vars)
    key = order.key
    ef, cf = f.leading_term(order)
    rem = g
    qterms = {}
    while not rem.is_zero():
        e, c = rem.leading_term(order)
        mono = tuple(a - b for a, b in zip(e, ef))
        if any(a < 0 for a in mono):
            raise ValueError("not an exact multiple")
        coeff = c / cf
        qterms[mono] = coeff
        rem = rem - Poly(g.vars, {mono: coeff}) * f
    return Poly(g.vars, qterms)


def elimination_ideal(gens: Sequence[Poly], aux_vars, keep: int) -> List[Poly]:
    """Generators of <gens> ∩ Q[first keep variables]."""
    order = eliminate_last(keep)
    work = Ideal(list(gens), aux_vars)
    gb = work.groebner_basis(order)
    kept = []
    for g in gb:
        if all(all(x == 0 for x in e[keep:]) for e in g.terms):
            kept.append(change_vars(g, aux_vars[:keep]))
    return kept


def intersect(a: Ideal, b: Ideal) -> Ideal:
    """a ∩ b via the auxiliary-variable elimination t*a + (1-t)*b."""
    if a.vars != b.vars:
        raise ValueError("variable mismatch")
    if not a.gens:
        return a
    if not b.gens:
        return b
    aux = a.vars + ("t_",) if "t" in a.vars else a.vars + ("t",)
    t = Poly.var(aux[-1], aux)
    one = Poly.const(1, aux)
    gens = [t * change_vars(g, aux) for g in a.gens]
    gens += [(one - t) * change_vars(g, aux) for g in b.gens]
    kept = elimination_ideal(gens, aux, len(a.vars))
    return Ideal(kept, a.vars)


def colon_poly(a: Ideal, f: Poly) -> Ideal:
    """(a : f) for a single polynomial f."""
    if f.vars != a.vars:
        raise ValueError("variable mismatch")
    if f.is_zero():
        raise ValueError("colon by zero")
    meet = intersect(a, Ideal([f], a.vars))
    return Ideal([exact_divide(g, f) for g in meet.gens], a.vars)


def colon_ideal(a: Ideal, b: Ideal) -> Ideal:
    """(a : b) = intersection of (a : g) over generators g of b."""
    if not b.gens:
        raise ValueError("colon by the zero ideal")
    result = None
    for g in b.gens:
        part = colon_poly(a, g)
        result = part if result is None else intersect(result, part)
    return result


def saturate(a: Ideal, f: Poly) -> Ideal:
    """(a : f^inf) via the Rabinowitsch-style generator 1 - t*f."""
    if f.vars != a.vars:
        raise ValueError("variable mismatch")
    if f.is_zero():
        raise ValueError("saturation by zero")
    if f.degree() == 0:
        return a
    aux = a.vars + ("t_",) if "t" in a.vars else a.vars + ("t",)
    t = Poly.var(aux[-1], aux)
    one = Poly.const(1, aux)
    gens = [change_vars(g, aux) for g in a.gens]
    gens.append(one - t * change_vars(f, aux))
    kept = elimination_ideal(gens, aux, len(a.vars))
    return Ideal(kept, a.vars)


def saturate_variable(a: Ideal, var: str) -> Ideal:
    """(a : var^inf) for a homogeneous ideal, by reverse-lex stripping.

    In a grevlex order where var sits in the cheapest slot, dividing each
    reduced-basis element by the highest power of var dividing it generates
    the saturation.
    """
    if not a.is_homogeneous():
        raise ValueError("variable saturation shortcut needs a homogeneous ideal")
    idx = a.vars.index(var)
    order = grevlex_cheapest(idx, len(a.vars))
    gb = a.groebner_basis(order)
    stripped = []
    for g in gb:
        k = min(e[idx] for e in g.terms)
        if k == 0:
            stripped.append(g)
        else:
            stripped.append(
                Poly(a.vars, {e[:idx] + (e[idx] - k,) + e[idx + 1:]: c for e, c in g.terms.items()})
            )
    return Ideal(stripped, a.vars)


def saturate_irrelevant(a: Ideal, assume_vertex_support: bool = False) -> Ideal:
    """(a : <x,y,z>^inf), the saturation at the irrelevant maximal ideal.

    With assume_vertex_support=True the caller asserts the projective
    support lies in {[0:0:1]}, where saturating at z alone already gives the
    full saturation; the general path intersects the three single-variable
    saturations.
    """
    if assume_vertex_support:
        return saturate_variable(a, "z")
    parts = [saturate_variable(a, v) for v in a.vars]
    result = parts[0]
    for part in parts[1:]:
        result = intersect(result, part)
    return result


def initial_ideal(a: Ideal, w: Tuple[int, ...]) -> Ideal:
    """in_w(a) for homogeneous a: generated by initial forms of a w-refined GB."""
    if not a.is_homogeneous():
        raise ValueError("initial ideals are computed for homogeneous ideals only")
    if len(w) != len(a.vars):
        raise ValueError("weight vector length mismatch")
    order = weight_refined(tuple(w))
    gb = a.groebner_basis(order)
    return Ideal([initial_form(g, tuple(w)) for g in gb], a.vars)
