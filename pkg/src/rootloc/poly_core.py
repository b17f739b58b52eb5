"""Exact-rational univariate polynomials.

Coefficients are stored leading-first: ``coeffs[0]`` is a_0 in
p(z) = a_0 z^n + a_1 z^(n-1) + ... + a_n. The zero polynomial has empty
coefficients and degree -1.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import BothZero, ParseError, PreconditionError

Rational = Fraction


def to_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass int, str or Fraction")
    return Fraction(x)


@dataclass(frozen=True)
class Polynomial:
    coeffs: tuple

    def __post_init__(self):
        cs = [to_rational(c) for c in self.coeffs]
        i = 0
        while i < len(cs) and cs[i] == 0:
            i += 1
        object.__setattr__(self, "coeffs", tuple(cs[i:]))

    # construction helpers
    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, deg, c=1):
        return cls((c,) + (0,) * deg)

    @classmethod
    def from_ascending(cls, cs):
        return cls(tuple(reversed(list(cs))))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def coef(self, i: int) -> Fraction:
        """a_i in leading-first indexing; 0 outside 0..degree."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def power_coef(self, k: int) -> Fraction:
        """Coefficient of z^k."""
        return self.coef(self.degree - k)

    def padded(self, n: int) -> tuple:
        """Coefficients padded with leading zeros to length n+1 (b_0..b_n)."""
        if self.degree > n:
            raise ValueError("degree exceeds padding length")
        return (Fraction(0),) * (n - self.degree) + self.coeffs

    def ascending(self) -> tuple:
        return tuple(reversed(self.coeffs))

    # arithmetic
    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return add(self, -_coerce(other))

    def __rsub__(self, other):
        return add(_coerce(other), -self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = Polynomial.const(1)
        for _ in range(e):
            out = mul(out, self)
        return out

    def __divmod__(self, other):
        return divmod_poly(self, _coerce(other))

    def __floordiv__(self, other):
        return divmod_poly(self, _coerce(other))[0]

    def __mod__(self, other):
        return divmod_poly(self, _coerce(other))[1]

    def __call__(self, x):
        return evaluate(self, x)

    def scale(self, c) -> "Polynomial":
        c = to_rational(c)
        return Polynomial(tuple(c * a for a in self.coeffs))

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(1 / self.lead)

    def __str__(self):
        return format_poly(self)


def _coerce(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.const(x)


def poly(*coeffs) -> Polynomial:
    """Shorthand: poly(1, -3, 2) is z^2 - 3z + 2."""
    return Polynomial(tuple(coeffs))


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    n = max(len(p.coeffs), len(q.coeffs))
    a = (Fraction(0),) * (n - len(p.coeffs)) + p.coeffs
    b = (Fraction(0),) * (n - len(q.coeffs)) + q.coeffs
    return Polynomial(tuple(x + y for x, y in zip(a, b)))


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    if p.is_zero() or q.is_zero():
        return Polynomial.zero()
    out = [Fraction(0)] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                out[i + j] += a * b
    return Polynomial(tuple(out))


def divmod_poly(p: Polynomial, d: Polynomial):
    if d.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p.coeffs)
    dn = d.degree
    if p.degree < dn:
        return Polynomial.zero(), p
    quot = [Fraction(0)] * (p.degree - dn + 1)
    inv = 1 / d.lead
    for i in range(len(quot)):
        c = rem[i] * inv
        quot[i] = c
        if c:
            for j in range(1, dn + 1):
                rem[i + j] -= c * d.coeffs[j]
        rem[i] = Fraction(0)
    return Polynomial(tuple(quot)), Polynomial(tuple(rem[len(quot):]))


def exact_div(p: Polynomial, d: Polynomial) -> Polynomial:
    q, r = divmod_poly(p, d)
    if not r.is_zero():
        raise ArithmeticError("division is not exact")
    return q


def derivative(p: Polynomial) -> Polynomial:
    n = p.degree
    return Polynomial(tuple((n - i) * c for i, c in enumerate(p.coeffs[:-1])))


def evaluate(p: Polynomial, x) -> Fraction:
    """Horner evaluation at a rational point."""
    x = to_rational(x)
    acc = Fraction(0)
    for c in p.coeffs:
        acc = acc * x + c
    return acc


def reflect(p: Polynomial) -> Polynomial:
    """p(-z)."""
    n = p.degree
    return Polynomial(tuple(c if (n - i) % 2 == 0 else -c for i, c in enumerate(p.coeffs)))


def substitute_square(p: Polynomial) -> Polynomial:
    """p(z^2)."""
    if p.is_zero():
        return p
    out = []
    for c in p.coeffs:
        out.extend([c, Fraction(0)])
    return Polynomial(tuple(out[:-1]))


def shift_up(p: Polynomial, k: int = 1) -> Polynomial:
    """z^k p(z)."""
    if p.is_zero():
        return p
    return Polynomial(p.coeffs + (Fraction(0),) * k)


def split_even_odd(p: Polynomial):
    """Return (p0, p1) with p(z) = p0(z^2) + z p1(z^2)."""
    asc = p.ascending()
    p0 = Polynomial.from_ascending(asc[0::2])
    p1 = Polynomial.from_ascending(asc[1::2])
    return p0, p1


def compose_square_pair(p: Polynomial, q: Polynomial) -> Polynomial:
    """h(z) = p(z^2) + z q(z^2)."""
    return add(substitute_square(p), shift_up(substitute_square(q)))


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean remainder chain."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    a, b = p, q
    while not b.is_zero():
        a, b = b, divmod_poly(a, b)[1]
    return a.monic()


def multiplicity(p: Polynomial, x) -> int:
    """Multiplicity of x as a root of a nonzero p."""
    if p.is_zero():
        raise PreconditionError("zero polynomial has no finite root multiplicity")
    lin = poly(1, -to_rational(x))
    k = 0
    while True:
        qq, r = divmod_poly(p, lin)
        if not r.is_zero():
            return k
        p = qq
        k += 1


def squarefree_factors(p: Polynomial):
    """Yun decomposition: list of (factor, multiplicity) with monic factors."""
    if p.degree < 1:
        return []
    out = []
    a = p.monic()
    b = derivative(a)
    c = gcd(a, b)
    w = exact_div(a, c)
    i = 1
    while w.degree > 0:
        y = gcd(w, c)
        z = exact_div(w, y)
        if z.degree > 0:
            out.append((z, i))
        i += 1
        w = y
        c = exact_div(c, y)
    return out


# ---- root specifications (oracle construction) ----

@dataclass(frozen=True)
class RootSpec:
    """Known root data: lead * prod (z - r)^m * prod (z^2 + b z + c)^m."""

    rational_roots: tuple = ()      # ((root, mult), ...)
    quadratic_factors: tuple = ()   # ((b, c, mult), ...)
    leading: Fraction = Fraction(1)

    def __post_init__(self):
        rr = tuple((to_rational(r), int(m)) for r, m in self.rational_roots)
        qf = tuple((to_rational(b), to_rational(c), int(m)) for b, c, m in self.quadratic_factors)
        lead = to_rational(self.leading)
        if lead == 0:
            raise ValueError("leading coefficient must be nonzero")
        for _, m in rr:
            if m < 1:
                raise ValueError("multiplicities must be positive")
        for b, c, m in qf:
            if m < 1:
                raise ValueError("multiplicities must be positive")
            if b * b - 4 * c >= 0:
                raise ValueError(f"quadratic z^2+({b})z+({c}) has real roots")
        object.__setattr__(self, "rational_roots", rr)
        object.__setattr__(self, "quadratic_factors", qf)
        object.__setattr__(self, "leading", lead)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.rational_roots) + 2 * sum(m for *_, m in self.quadratic_factors)

    def distinct_real_roots(self):
        return sorted({r for r, _ in self.rational_roots})


def from_root_spec(spec: RootSpec) -> Polynomial:
    out = Polynomial.const(spec.leading)
    for r, m in spec.rational_roots:
        out = out * poly(1, -r) ** m
    for b, c, m in spec.quadratic_factors:
        out = out * poly(1, b, c) ** m
    return out


# ---- text formats ----

_TOKEN = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(tok: str) -> Fraction:
    tok = tok.strip()
    if not _TOKEN.match(tok):
        raise ParseError(f"bad rational token {tok!r}")
    if "/" in tok and int(tok.split("/")[1]) == 0:
        raise ParseError("zero denominator")
    return Fraction(tok)


def parse_rationals(text: str):
    toks = text.split()
    return [parse_rational(t) for t in toks]


def parse_poly(text: str) -> Polynomial:
    """Whitespace-separated rationals, leading coefficient first."""
    vals = parse_rationals(text)
    if not vals:
        raise ParseError("empty polynomial")
    return Polynomial(tuple(vals))


def format_rational(x) -> str:
    x = to_rational(x)
    return f"{x.numerator}/{x.denominator}"


def format_coeffs(p: Polynomial) -> str:
    return " ".join(str(c) for c in p.coeffs) if p.coeffs else "0"


def format_poly(p: Polynomial, var: str = "z") -> str:
    if p.is_zero():
        return "0"
    terms = []
    n = p.degree
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        k = n - i
        sgn = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sgn, body))
    s = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sgn, body in terms[1:]:
        s += f" {sgn} {body}"
    return s


def parse_root_spec(line: str) -> RootSpec:
    """Parse `lead; r1^m1, r2^m2; (b,c)^m, ...`. Empty fields allowed."""
    parts = [x.strip() for x in line.split(";")]
    if len(parts) != 3:
        raise ParseError("root spec needs three ';'-separated fields")
    try:
        lead = parse_rational(parts[0])
        roots = []
        if parts[1]:
            for item in parts[1].split(","):
                item = item.strip()
                r, _, m = item.partition("^")
                roots.append((parse_rational(r), int(m) if m else 1))
        quads = []
        if parts[2]:
            for item in re.findall(r"\(([^)]*)\)(?:\^(\d+))?", parts[2]):
                b, c = item[0].split(",")
                quads.append((parse_rational(b), parse_rational(c), int(item[1]) if item[1] else 1))
        return RootSpec(tuple(roots), tuple(quads), lead)
    except (ValueError, IndexError) as e:
        raise ParseError(str(e)) from e


def format_root_spec(spec: RootSpec) -> str:
    roots = ", ".join(f"{r}^{m}" for r, m in spec.rational_roots)
    quads = ", ".join(f"({b},{c})^{m}" for b, c, m in spec.quadratic_factors)
    return f"{spec.leading}; {roots}; {quads}"


def sign(x) -> int:
    return (x > 0) - (x < 0)


def coeff_list(ps: Iterable[Polynomial]) -> list:
    return [p.coeffs for p in ps]


def as_poly(x) -> Polynomial:
    """Accept a Polynomial, a coefficient sequence, or coefficient text."""
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, str):
        return parse_poly(x)
    if isinstance(x, Sequence):
        return Polynomial(tuple(x))
    return Polynomial.const(x)
