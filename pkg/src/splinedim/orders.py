"""Monomial orders on exponent tuples.

An order is a named key function: monomial m is larger than m' exactly when
key(m) > key(m') as Python tuples. All orders here are total on the monomials
of any fixed degree; grevlex, lex and nonnegative-weight refinements are
global (1 is the unique minimal monomial), which is what Buchberger needs on
inhomogeneous input. Weight refinements with negative entries and block
elimination orders are only ever applied to homogeneous ideals, where
reduction stays inside one graded piece.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Tuple

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class Order:
    name: str
    key: Callable[[Exponent], tuple] = field(compare=False)

    def __repr__(self):
        return f"Order({self.name})"


def _grevlex_key(e: Exponent) -> tuple:
    # higher total degree wins; ties broken against the later variables
    return (sum(e), tuple(-c for c in reversed(e)))


def grevlex() -> Order:
    """Graded reverse lexicographic order, first variable largest."""
    return Order("grevlex", _grevlex_key)


def lex() -> Order:
    """Lexicographic order, first variable largest."""
    return Order("lex", lambda e: tuple(e))


def weight_refined(w: Tuple[int, ...]) -> Order:
    """Compare by the weight vector w first, break ties by grevlex.

    Initial forms with respect to w are the terms of largest w-weight, so
    the leading term under this order lies in the w-initial form.
    """
    wt = tuple(int(c) for c in w)

    def key(e: Exponent) -> tuple:
        return (sum(a * b for a, b in zip(wt, e)), _grevlex_key(e))

    return Order("weight:" + ",".join(str(c) for c in wt), key)


def eliminate_last(n_keep: int) -> Order:
    """Block order eliminating every variable after the first n_keep.

    The trailing block dominates, so a Groebner basis element free of the
    trailing variables has all its terms in the kept block; collecting those
    elements yields the elimination ideal.
    """

    def key(e: Exponent) -> tuple:
        return (_grevlex_key(e[n_keep:]), _grevlex_key(e[:n_keep]))

    return Order(f"elim-after:{n_keep}", key)


def grevlex_cheapest(index: int, nvars: int) -> Order:
    """Grevlex with the given variable moved to the cheapest (last) slot.

    Used for single-variable saturation of homogeneous ideals: in the
    reduced Groebner basis under this order, dividing each element by the
    highest power of that variable dividing it generates (I : var^inf).
    """
    rest = [i for i in range(nvars) if i != index]
    perm = rest + [index]

    def key(e: Exponent) -> tuple:
        return _grevlex_key(tuple(e[i] for i in perm))

    return Order(f"grevlex-cheapest:{index}", key)
