"""Sparse multivariate polynomials over Q with exact rational coefficients.

Terms are stored as a dict from exponent tuples to nonzero gmpy2.mpq
coefficients. Every polynomial carries its variable tuple (e.g. ("x", "y",
"z")); mixing variable tuples in arithmetic is an error, conversion is
explicit via change_vars. Instances are treated as immutable: no method
mutates terms after construction.

The string form uses explicit '*' between factors, '^' for powers and
rational coefficients written p/q; parse() accepts exactly that grammar
(no implicit multiplication, unary minus only at the start of an
expression or after '(').
"""

from __future__ import annotations

from math import gcd
from typing import Dict, Iterable, Tuple

from gmpy2 import mpq, mpz

Exponent = Tuple[int, ...]

VARS_XY = ("x", "y")
VARS_XYZ = ("x", "y", "z")
VARS_XYZT = ("x", "y", "z", "t")


class ParseError(ValueError):
    """Syntax or vocabulary error in a polynomial string; carries position."""

    def __init__(self, message: str, text: str, pos: int):
        self.pos = pos
        super().__init__(f"{message} (at position {pos} in {text!r})")


def _q(c) -> mpq:
    if isinstance(c, float):
        raise TypeError("float coefficients are not exact; pass int, str or mpq")
    return mpq(c)


class Poly:
    """Immutable sparse polynomial over Q in a fixed variable tuple."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Tuple[str, ...], terms: Dict[Exponent, mpq]):
        object.__setattr__(self, "vars", tuple(variables))
        object.__setattr__(self, "terms", {e: c for e, c in terms.items() if c != 0})
        object.__setattr__(self, "_hash", None)

    # ----- constructors -----

    @staticmethod
    def zero(variables=VARS_XYZ) -> "Poly":
        return Poly(variables, {})

    @staticmethod
    def const(c, variables=VARS_XYZ) -> "Poly":
        c = _q(c)
        n = len(variables)
        return Poly(variables, {(0,) * n: c} if c != 0 else {})

    @staticmethod
    def var(name: str, variables=VARS_XYZ) -> "Poly":
        i = variables.index(name)
        e = tuple(1 if j == i else 0 for j in range(len(variables)))
        return Poly(variables, {e: mpq(1)})

    @staticmethod
    def from_terms(pairs: Iterable[Tuple[Exponent, object]], variables=VARS_XYZ) -> "Poly":
        acc: Dict[Exponent, mpq] = {}
        for e, c in pairs:
            e = tuple(int(a) for a in e)
            acc[e] = acc.get(e, mpq(0)) + _q(c)
        return Poly(variables, acc)

    # ----- basic queries -----

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, e: Exponent) -> mpq:
        return self.terms.get(tuple(e), mpq(0))

    def constant_term(self) -> mpq:
        return self.terms.get((0,) * len(self.vars), mpq(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    # ----- arithmetic -----

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return Poly.const(other, self.vars)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = acc.get(e)
            if s is None:
                acc[e] = c
            else:
                s = s + c
                if s == 0:
                    del acc[e]
                else:
                    acc[e] = s
        return Poly(self.vars, acc)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return (-self) + self._coerce(other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _q(other)
            if c == 0:
                return Poly(self.vars, {})
            return Poly(self.vars, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            # iterate over the smaller support outside
            self, other = other, self
        acc: Dict[Exponent, mpq] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = acc.get(e)
                acc[e] = c1 * c2 if s is None else s + c1 * c2
        return Poly(self.vars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base2 = base * base if n > 1 else base
            base = base2
            n >>= 1
        return result

    # ----- structure -----

    def leading_term(self, order) -> Tuple[Exponent, mpq]:
        """(exponent, coefficient) of the largest monomial; error on zero."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def sorted_terms(self, order) -> list:
        return sorted(self.terms.items(), key=lambda item: order.key(item[0]), reverse=True)

    def homogeneous_components(self) -> Dict[int, "Poly"]:
        comps: Dict[int, Dict[Exponent, mpq]] = {}
        for e, c in self.terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: Poly(self.vars, t) for d, t in sorted(comps.items())}

    def evaluate(self, values) -> mpq:
        """Evaluate at a point given as a sequence of exact values."""
        vals = [_q(v) for v in values]
        if len(vals) != len(self.vars):
            raise ValueError("wrong number of values")
        total = mpq(0)
        for e, c in self.terms.items():
            term = c
            for v, a in zip(vals, e):
                if a:
                    term = term * v**a
            total += term
        return total

    # ----- printing -----

    def __str__(self) -> str:
        return to_string(self)

    def __repr__(self) -> str:
        return f"Poly({to_string(self)!r}, vars={self.vars})"


def change_vars(p: Poly, variables: Tuple[str, ...]) -> Poly:
    """Re-express p in another variable tuple (by name).

    Variables of p missing from the target must not occur in any term.
    """
    variables = tuple(variables)
    pos = {name: i for i, name in enumerate(variables)}
    n = len(variables)
    acc: Dict[Exponent, mpq] = {}
    for e, c in p.terms.items():
        new = [0] * n
        for name, a in zip(p.vars, e):
            if a == 0:
                continue
            if name not in pos:
                raise ValueError(f"polynomial uses {name}, absent from {variables}")
            new[pos[name]] = a
        acc[tuple(new)] = acc.get(tuple(new), mpq(0)) + c
    return Poly(variables, acc)


def homogenize(p: Poly, var: str = "z") -> Poly:
    """Homogenize with a new cheapest variable appended to the tuple.

    homogenize(x^2 + y) = x^2 + y*z in ("x","y","z"). The zero polynomial
    homogenizes to zero. p must not already use var.
    """
    if var in p.vars:
        use = p.vars.index(var)
        if any(e[use] for e in p.terms):
            raise ValueError(f"polynomial already involves {var}")
        q = change_vars(p, tuple(v for v in p.vars if v != var))
        return homogenize(q, var)
    variables = p.vars + (var,)
    d = p.degree()
    acc = {}
    for e, c in p.terms.items():
        acc[e + (d - sum(e),)] = c
    return Poly(variables, acc)


def dehomogenize(p: Poly, var: str = "z") -> Poly:
    """Set var = 1 and drop it from the variable tuple."""
    i = p.vars.index(var)
    variables = tuple(v for j, v in enumerate(p.vars) if j != i)
    acc: Dict[Exponent, mpq] = {}
    for e, c in p.terms.items():
        new = e[:i] + e[i + 1:]
        s = acc.get(new)
        acc[new] = c if s is None else s + c
    return Poly(variables, acc)


def initial_form(p: Poly, w: Tuple[int, ...]) -> Poly:
    """Sum of the terms of maximal w-weight (the w-initial form)."""
    if not p.terms:
        return p
    if len(w) != len(p.vars):
        raise ValueError("weight vector length mismatch")
    best = max(sum(a * b for a, b in zip(w, e)) for e in p.terms)
    return Poly(
        p.vars,
        {e: c for e, c in p.terms.items() if sum(a * b for a, b in zip(w, e)) == best},
    )


def linear_part_at_vertex(p: Poly) -> Poly:
    """Linear form L with p = L*z^(n-1) + (terms of lower z-order).

    p must be homogeneous in ("x","y","z") and vanish at [0:0:1] (no z^n
    term). Returns a polynomial in the same variables, of degree <= 1 in
    x, y and degree 0 in z; zero when the curve is singular at the vertex.
    """
    if p.vars != VARS_XYZ:
        raise ValueError("expected a polynomial in (x, y, z)")
    if not p.is_homogeneous():
        raise ValueError("expected a homogeneous form")
    n = p.degree()
    if n < 1:
        raise ValueError("expected a form of positive degree")
    if p.coefficient((0, 0, n)) != 0:
        raise ValueError("form does not vanish at the vertex [0:0:1]")
    acc = {}
    for (a, b, c), coef in p.terms.items():
        if c == n - 1:
            acc[(a, b, 0)] = coef
    return Poly(VARS_XYZ, acc)


def shift_origin(p: Poly, point) -> Poly:
    """Substitute x -> x + a, y -> y + b, moving the point (a, b) to (0, 0).

    p is an affine curve in ("x", "y"); point is a pair of exact values.
    """
    if p.vars != VARS_XY:
        raise ValueError("expected a polynomial in (x, y)")
    a, b = (_q(v) for v in point)
    x = Poly.var("x", VARS_XY) + Poly.const(a, VARS_XY)
    y = Poly.var("y", VARS_XY) + Poly.const(b, VARS_XY)
    result = Poly.zero(VARS_XY)
    # exponent-by-exponent expansion; inputs are low degree
    xpow = {0: Poly.const(1, VARS_XY)}
    ypow = {0: Poly.const(1, VARS_XY)}
    for (i, j), c in sorted(p.terms.items()):
        if i not in xpow:
            xpow[i] = x**i
        if j not in ypow:
            ypow[j] = y**j
        result = result + xpow[i] * ypow[j] * c
    return result


def content_free(p: Poly) -> Poly:
    """Scale to integer coefficients with content 1 and positive grevlex lead."""
    from . import orders as _orders

    if not p.terms:
        return p
    den = mpz(1)
    for c in p.terms.values():
        den = den * c.denominator // gcd(int(den), int(c.denominator))
    scaled = {e: c * den for e, c in p.terms.items()}
    num_gcd = mpz(0)
    for c in scaled.values():
        num_gcd = gcd(int(num_gcd), int(c.numerator))
    lead = max(p.terms, key=_orders._grevlex_key)
    sign = 1 if scaled[lead] > 0 else -1
    return Poly(p.vars, {e: mpq(c.numerator * sign, num_gcd) for e, c in scaled.items()})


# ----- parsing -----

_TOKEN_KINDS = ("INT", "VAR", "OP", "END")


def _tokenize(text: str, variables: Tuple[str, ...]):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            name = text[i:j]
            if name not in variables:
                raise ParseError(
                    f"unknown variable {name!r} (allowed: {', '.join(variables)})",
                    text, i,
                )
            tokens.append(("VAR", name, i))
            i = j
            continue
        if ch in "+-*/^()":
            tokens.append(("OP", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", text, i)
    tokens.append(("END", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: Tuple[str, ...]):
        self.text = text
        self.vars = tuple(variables)
        self.tokens = _tokenize(text, self.vars)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def parse(self) -> Poly:
        p = self.expr()
        kind, val, _ = self.peek()
        if kind != "END":
            self.fail(f"unexpected {val!r} after expression")
        return p

    def expr(self) -> Poly:
        # unary minus permitted only here (expression head, incl. after '(')
        negate = False
        kind, val, _ = self.peek()
        if kind == "OP" and val == "-":
            self.advance()
            negate = True
        p = self.term()
        if negate:
            p = -p
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val in "+-":
                self.advance()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Poly:
        p = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "OP" and val == "*":
                self.advance()
                p = p * self.factor()
            elif kind in ("INT", "VAR") or (kind == "OP" and val == "("):
                self.fail("implicit multiplication is not allowed; use '*'")
            else:
                return p

    def factor(self) -> Poly:
        kind, val, start = self.peek()
        if kind == "INT":
            self.advance()
            num = int(val)
            kind2, val2, _ = self.peek()
            if kind2 == "OP" and val2 == "/":
                self.advance()
                kind3, val3, _ = self.peek()
                if kind3 != "INT":
                    self.fail("expected a positive integer denominator")
                self.advance()
                den = int(val3)
                if den == 0:
                    raise ParseError("zero denominator", self.text, start)
                return Poly.const(mpq(num, den), self.vars)
            return Poly.const(num, self.vars)
        if kind == "VAR":
            self.advance()
            p = Poly.var(val, self.vars)
            kind2, val2, _ = self.peek()
            if kind2 == "OP" and val2 == "^":
                self.advance()
                kind3, val3, pos3 = self.peek()
                if kind3 != "INT":
                    self.fail("exponent must be a nonnegative integer")
                self.advance()
                p = p ** int(val3)
            elif kind2 == "OP" and val2 == "/":
                self.fail("division is only allowed inside rational coefficients like 3/2")
            return p
        if kind == "OP" and val == "(":
            self.advance()
            p = self.expr()
            kind2, val2, _ = self.peek()
            if not (kind2 == "OP" and val2 == ")"):
                self.fail("expected ')'")
            self.advance()
            kind3, val3, _ = self.peek()
            if kind3 == "OP" and val3 == "/":
                self.fail("division is only allowed inside rational coefficients like 3/2")
            return p
        self.fail(f"expected a coefficient, variable or '(', found {val or 'end of input'!r}")


def parse(text: str, variables: Tuple[str, ...] = VARS_XYZ) -> Poly:
    """Parse a polynomial string into the given variable tuple."""
    return _Parser(text, variables).parse()


def _monomial_str(variables, e) -> str:
    parts = []
    for name, a in zip(variables, e):
        if a == 1:
            parts.append(name)
        elif a > 1:
            parts.append(f"{name}^{a}")
    return "*".join(parts)


def to_string(p: Poly) -> str:
    """Canonical string: grevlex-descending terms, explicit '*' and '^'."""
    from . import orders as _orders

    if not p.terms:
        return "0"
    pieces = []
    for e, c in sorted(p.terms.items(), key=lambda t: _orders._grevlex_key(t[0]), reverse=True):
        mono = _monomial_str(p.vars, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{mag}*{mono}"
        else:
            body = str(mag)
        pieces.append(("-" if c < 0 else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
