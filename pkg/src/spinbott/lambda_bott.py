"""Lambda-ring engine: Adams operations, Bott classes, and the square root.

K-classes come in two shapes with a one-way conversion between them:

* ``LineExpr`` -- integer combinations of Laurent monomials in formal line
  symbols L1..Lr, where the splitting principle is literal arithmetic;
* ``LambdaVector`` -- a rank n together with the exterior powers
  (lam^1..lam^n) in some exact coefficient ring.

On these the module computes Adams operations (exponent scaling on lines,
Newton recursion on lambda vectors), the multiplicative Bott class (line
product form and cyclotomic product form with Galois descent), the square
root of the Bott class on self-dual even-rank classes, the corrected
class, and the closed sphere-coefficient formulas checked against the
truncated-ring evaluation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .config import DEFAULT_CAPS, Caps
from .rings import (Cyclotomic, NotAUnitError, TruncatedPoly, _format_terms,
                    _split_terms, euler_phi)


class NotEffectiveError(ValueError):
    """Operation needs nonnegative integer coefficients; route the input
    through the virtual (truncated-ring) evaluation instead."""


class FormulaMismatchError(ArithmeticError):
    """The two sphere-computation paths disagree."""


def _strip(exps) -> tuple:
    exps = list(exps)
    while exps and exps[-1] == 0:
        exps.pop()
    return tuple(exps)


class LineExpr:
    """Linear combination of Laurent monomials in line symbols L1, L2, ..."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[_strip(exps)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("LineExpr values are immutable")

    @classmethod
    def scalar(cls, c) -> "LineExpr":
        return cls({(): c})

    @classmethod
    def symbol(cls, i: int) -> "LineExpr":
        """L_i, 1-based."""
        if i < 1:
            raise ValueError("line symbols are 1-based")
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, exps, c=1) -> "LineExpr":
        return cls({tuple(exps): c})

    def _match(self, other):
        if isinstance(other, LineExpr):
            return other
        if isinstance(other, (int, Fraction)):
            return LineExpr.scalar(other)
        return NotImplemented

    def __add__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return LineExpr(terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return LineExpr({e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LineExpr({e: c * other for e, c in self.terms.items()})
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(self.nsymbols, o.nsymbols)
        left = [(e + (0,) * (n - len(e)), c) for e, c in self.terms.items()]
        right = [(e + (0,) * (n - len(e)), c) for e, c in o.terms.items()]
        terms: dict = {}
        for e1, c1 in left:
            for e2, c2 in right:
                e = tuple(map(int.__add__, e1, e2))
                acc = terms.get(e)
                terms[e] = c1 * c2 if acc is None else acc + c1 * c2
        return LineExpr(terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers of general expressions")
        out = LineExpr.scalar(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LineExpr.scalar(other)
        if not isinstance(other, LineExpr):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def nsymbols(self) -> int:
        return max((len(e) for e in self.terms), default=0)

    def is_effective(self) -> bool:
        return all(c > 0 and c.denominator == 1 for c in self.terms.values())

    def monomials(self):
        """(exponent tuple, multiplicity) pairs; effective input only."""
        if not self.is_effective():
            raise NotEffectiveError("expression has negative or fractional coefficients")
        return [(e, int(c)) for e, c in sorted(self.terms.items())]

    def rank(self) -> Fraction:
        """Sum of coefficients (virtual rank after L_i -> 1)."""
        return sum(self.terms.values(), Fraction(0))

    def __repr__(self):
        return f"LineExpr({format_line_expr(self)!r})"

    def __str__(self):
        return format_line_expr(self)


@dataclass(frozen=True)
class LambdaVector:
    """Rank n plus the exterior powers lam^1..lam^n in an exact ring."""

    rank: int
    lams: tuple

    def __post_init__(self):
        if self.rank < 0 or len(self.lams) != self.rank:
            raise ValueError("need exactly rank many lambda values")
        object.__setattr__(self, "lams", tuple(self.lams))

    def lam(self, j: int):
        if j == 0:
            return 1
        return self.lams[j - 1] if 1 <= j <= self.rank else 0

    @property
    def delta(self):
        """(-1)^n lam^n, the discriminant-like unit of the class."""
        top = self.lam(self.rank)
        return top if self.rank % 2 == 0 else -top

    def is_self_dual(self) -> bool:
        """lam^j = lam^(n-j) for all j (with lam^0 = 1)."""
        n = self.rank
        if self.lam(n) != 1:
            return False
        return all(self.lam(j) == self.lam(n - j) for j in range(1, n))


def trivial_lambda_vector(n: int) -> LambdaVector:
    """Lambda vector of the trivial rank-n class: binomial coefficients."""
    from math import comb
    return LambdaVector(n, tuple(Fraction(comb(n, j)) for j in range(1, n + 1)))


def line_to_lambda(x: LineExpr) -> LambdaVector:
    """Elementary-symmetric expansion of an effective sum of line monomials."""
    monos = []
    for exps, mult in x.monomials():
        monos.extend([exps] * mult)
    elems = [LineExpr.scalar(1)]
    for exps in monos:  # multiply out prod (1 + t M)
        m = LineExpr.monomial(exps)
        nxt = [elems[0]]
        for j in range(1, len(elems) + 1):
            prev = elems[j] if j < len(elems) else LineExpr.scalar(0)
            nxt.append(prev + elems[j - 1] * m)
        elems = nxt
    return LambdaVector(len(monos), tuple(elems[1:]))


# -- Adams operations ---------------------------------------------------------

def adams_lines(x: LineExpr, k: int) -> LineExpr:
    """psi^k on line combinations: every monomial exponent scaled by k."""
    if k < 1:
        raise ValueError("k must be positive")
    return LineExpr({_strip(tuple(e * k for e in exps)): c
                     for exps, c in x.terms.items()})


def adams_newton(v: LambdaVector, k: int):
    """psi^k from lam^1..lam^k by the Newton recursion.

    psi^1 = lam^1 and, for k >= 2,
    psi^k = lam^1 psi^(k-1) - lam^2 psi^(k-2) + ... + (-1)^k lam^(k-1) psi^1
            + (-1)^(k-1) k lam^k.
    """
    if k < 1:
        raise ValueError("k must be positive")
    psi: list = [None, v.lam(1)]
    for i in range(2, k + 1):
        acc = 0
        for j in range(1, i):
            term = v.lam(j)
            if term and psi[i - j]:
                acc = acc + (term * psi[i - j] if j % 2 == 1 else -(term * psi[i - j]))
        top = v.lam(i)
        if top:
            acc = acc + (i * top if i % 2 == 1 else -(i * top))
        psi.append(acc)
    return psi[k]


# -- Bott classes -------------------------------------------------------------

def bott_lines(x: LineExpr, k: int) -> LineExpr:
    """Multiplicative class with value 1 + M + ... + M^(k-1) on each line monomial."""
    if k < 1:
        raise ValueError("k must be positive")
    out = LineExpr.scalar(1)
    for exps, mult in x.monomials():
        m = LineExpr.monomial(exps)
        factor = LineExpr.scalar(0)
        for t in range(k):
            factor = factor + m ** t
        out = out * factor ** mult
    return out


def bott_virtual(x: LineExpr, k: int, nvars: int | None = None,
                 images: dict | None = None, caps: Caps = DEFAULT_CAPS) -> TruncatedPoly:
    """Bott class of a virtual line combination, in the truncated ring.

    Line symbols map to units of Q[x1..xr]/(xi^2) (default L_i -> 1 + x_i),
    so negative multiplicities become exact inverses.
    """
    if k < 1:
        raise ValueError("k must be positive")
    r = nvars if nvars is not None else max(x.nsymbols, 1)
    if images is None:
        images = {i: TruncatedPoly.const(r, 1) + TruncatedPoly.var(r, i, caps=caps)
                  for i in range(1, r + 1)}

    def image_of(exps) -> TruncatedPoly:
        out = TruncatedPoly.const(r, 1, caps=caps)
        for i, e in enumerate(exps, start=1):
            if e:
                if i not in images:
                    raise ValueError(f"no image for line symbol L{i}")
                out = out * images[i] ** e
        return out

    result = TruncatedPoly.const(r, 1, caps=caps)
    for exps, c in sorted(x.terms.items()):
        if c.denominator != 1:
            raise NotEffectiveError("virtual evaluation needs integer multiplicities")
        m = image_of(exps)
        if not m.is_unit():
            raise NotAUnitError("a line symbol maps to a non-unit of the ambient ring")
        factor = TruncatedPoly.const(r, 0, caps=caps)
        for t in range(k):
            factor = factor + m ** t
        result = result * factor ** int(c)
    return result


def _ring_one(values):
    for v in values:
        if not isinstance(v, (int, Fraction)):
            return v * 0 + 1
    return Fraction(1)


def _eval_at_minus_zeta(v: LambdaVector, k: int, r: int, caps: Caps):
    """G(-z^r) = sum_j lam^j (-1)^j w^(rj), with ring coefficients."""
    phi = euler_phi(k)
    one = _ring_one(v.lams)
    zero = one * 0
    acc = [zero] * phi
    for j in range(v.rank + 1):
        val = one if j == 0 else v.lam(j)
        if not val:
            continue
        zvec = Cyclotomic.zeta(k, (r * j) % k, caps=caps).coeffs
        for t, c in enumerate(zvec):
            if c:
                acc[t] = acc[t] + (val * c if j % 2 == 0 else -(val * c))
    return Cyclotomic(k, acc, caps=caps)


def bott_cyclotomic(v: LambdaVector, k: int, caps: Caps = DEFAULT_CAPS):
    """The Bott class as the product of G(-z^r) over r = 1..k-1, descended.

    The product is Galois-invariant, so the descent to the base ring must
    succeed; failure signals inconsistent input or a genuine bug.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    prod = Cyclotomic.from_const(k, _ring_one(v.lams), caps=caps)
    for r in range(1, k):
        prod = prod * _eval_at_minus_zeta(v, k, r, caps)
    return prod.descend()


@dataclass(frozen=True)
class SerreSqrt:
    """Square root of the Bott class; sign_ambiguous marks a skipped
    normalization sign (the exponent n(k-1)/4 was not an integer)."""

    value: object
    sign_ambiguous: bool


def serre_sqrt(v: LambdaVector, k: int, caps: Caps = DEFAULT_CAPS) -> SerreSqrt:
    """Galois-invariant square root of the Bott class of a self-dual class.

    value = (-1)^(n(k-1)/4) * prod_{r=1..(k-1)/2} G(-z^r) z^(-nr/2),
    which squares to the Bott class.  Requires k odd and v self-dual of
    even rank; when n(k-1)/4 is not an integer the sign is omitted and the
    result is flagged.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be odd and at least 3")
    n = v.rank
    if n % 2:
        raise ValueError("rank must be even")
    if not v.is_self_dual():
        raise ValueError("lambda vector is not self-dual")
    prod = Cyclotomic.from_const(k, _ring_one(v.lams), caps=caps)
    for r in range(1, (k - 1) // 2 + 1):
        prod = prod * _eval_at_minus_zeta(v, k, r, caps)
        prod = prod * Cyclotomic.zeta(k, (-n * r // 2) % k, caps=caps)
    ambiguous = (n * (k - 1)) % 4 != 0
    if not ambiguous and (n * (k - 1) // 4) % 2 == 1:
        prod = -prod
    return SerreSqrt(prod.descend(), ambiguous)


def corrected_bott(rho_k, v: LambdaVector, k: int, caps: Caps = DEFAULT_CAPS):
    """The corrected class rho_k / sqrt of the Bott class of the underlying
    module; its square is one on the classes where it is defined."""
    root = serre_sqrt(v, k, caps=caps).value
    if isinstance(root, (int, Fraction)):
        if root == 0:
            raise NotAUnitError("square root vanishes")
        return Fraction(rho_k) / Fraction(root)
    raise NotAUnitError("corrected class only implemented over rational values")


# -- sphere formulas ----------------------------------------------------------

def sum_of_powers(r: int, k: int) -> int:
    return sum(j ** r for j in range(1, k))


def sphere_formula(r: int, k: int, caps: Caps = DEFAULT_CAPS) -> Fraction:
    """Sphere coefficient: 1 + [1 + 2^r + ... + (k-1)^r] / k^r on the top class.

    Path one expands the Bott class of the product line symbol L1...Lr in
    the truncated ring (a k-term geometric series of binomial products)
    and normalizes its top coefficient by k^r, the value of the class on
    the rank companion.  Path two is the closed power sum.  The two must
    agree exactly; a mismatch raises.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if k < 2:
        raise ValueError("k must be at least 2")
    f = bott_virtual(LineExpr.monomial((1,) * r), k, nvars=r, caps=caps)
    top = (1 << r) - 1
    coeff = f.coefficient(top) / Fraction(k) ** r
    expect = Fraction(sum_of_powers(r, k), k ** r)
    if coeff != expect or f.constant_term() != k:
        raise FormulaMismatchError(
            f"truncated-ring coefficient {coeff} differs from closed form {expect}")
    return coeff


# -- textual grammar ----------------------------------------------------------

def format_line_expr(x: LineExpr) -> str:
    def var_of(exps):
        parts = []
        for i, e in enumerate(exps, start=1):
            if e == 0:
                continue
            parts.append(f"L{i}" if e == 1 else f"L{i}^{e}")
        return "*".join(parts)

    keys = sorted(x.terms)
    return _format_terms([(e, x.terms[e]) for e in keys], var_of)


_LINE_RE = re.compile(r"^L(\d+)(?:\^(-?\d+))?$")


def parse_line_expr(s: str) -> LineExpr:
    terms: dict[tuple, Fraction] = {}
    for sign, term in _split_terms(s):
        coeff = Fraction(sign)
        exps: dict[int, int] = {}
        for f in (p.strip() for p in term.split("*")):
            m = _LINE_RE.match(f)
            if m:
                i = int(m.group(1))
                e = int(m.group(2)) if m.group(2) else 1
                exps[i] = exps.get(i, 0) + e
            else:
                coeff *= Fraction(f)
        top = max(exps, default=0)
        key = _strip(tuple(exps.get(i, 0) for i in range(1, top + 1)))
        terms[key] = terms.get(key, Fraction(0)) + coeff
    return LineExpr(terms)
