"""Exact coefficient domains: rationals, cyclotomic integers, truncated polynomials.

Rationals are `fractions.Fraction` throughout (always reduced, positive
denominator).  The two structured domains live here:

* ``Cyclotomic`` -- the ring Z(w) = Z[x]/(Phi_k(x)) and its rational
  extension, stored reduced mod Phi_k so equality is syntactic.
* ``TruncatedPoly`` -- Q[x1..xr]/(xi^2), the nilpotent ring where virtual
  Bott classes are evaluated.

Both are immutable; every operation is a pure function.  Cyclotomic
coefficients are Fractions by default but may be elements of any exact
commutative ring implementing +, -, * (with int and with each other),
since reduction mod the monic integer polynomial Phi_k only ever scales
coefficients by integers.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .config import DEFAULT_CAPS, CapExceededError, Caps


class RingMismatchError(ValueError):
    """Operands belong to distinct rings (order or arity disagrees)."""


class NotAUnitError(ZeroDivisionError):
    """Inversion attempted on a non-unit."""


class GaloisActionError(ValueError):
    """w -> w^j is not a Galois element (j shares a factor with the order)."""


class DescentError(ValueError):
    """Element is not Galois-invariant, so it has no rational image.

    ``violating`` is the first exponent j with galois(j) != identity.
    """

    def __init__(self, order: int, violating: int):
        super().__init__(f"not fixed by w -> w^{violating} in order {order}")
        self.order = order
        self.violating = violating


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, divisor monic.
    num = list(num)
    deg_d = len(den) - 1
    out = [0] * (len(num) - deg_d)
    for i in range(len(out) - 1, -1, -1):
        c = num[i + deg_d]
        out[i] = c
        if c:
            for t, d in enumerate(den):
                num[i + t] -= c * d
    if any(num):
        raise ArithmeticError("non-exact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(k: int) -> tuple[int, ...]:
    """Coefficients of Phi_k, lowest degree first (monic, integral)."""
    if k < 1:
        raise ValueError("order must be positive")
    if k == 1:
        return (-1, 1)
    num = [-1] + [0] * (k - 1) + [1]  # x^k - 1
    for d in range(1, k):
        if k % d == 0:
            num = _poly_divexact(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def euler_phi(k: int) -> int:
    return len(cyclotomic_polynomial(k)) - 1


def _coerce(c):
    return Fraction(c) if isinstance(c, int) else c


def _reduce_mod_phi(order: int, dense: list) -> list:
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    dense = [_coerce(c) for c in dense]
    while len(dense) > deg:
        top = dense.pop()
        if top:
            base = len(dense) - deg
            for t in range(deg):
                if phi[t]:
                    dense[base + t] = dense[base + t] - top * phi[t]
    if dense:
        zero = dense[0] * 0
    else:
        zero = Fraction(0)
    while len(dense) < deg:
        dense.append(zero)
    return dense


class Cyclotomic:
    """An element of Omega_k (x) R, reduced mod Phi_k.

    ``coeffs`` always has length phi(k); entry i is the coordinate of w^i.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs, caps: Caps = DEFAULT_CAPS):
        if order < 1:
            raise ValueError("order must be positive")
        if order > caps.max_k:
            raise CapExceededError(f"cyclotomic order {order} exceeds cap {caps.max_k}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(_reduce_mod_phi(order, list(coeffs))))

    def __setattr__(self, *_):
        raise AttributeError("Cyclotomic values are immutable")

    @classmethod
    def from_const(cls, order: int, c, caps: Caps = DEFAULT_CAPS) -> "Cyclotomic":
        return cls(order, [c], caps=caps)

    @classmethod
    def zeta(cls, order: int, power: int = 1, caps: Caps = DEFAULT_CAPS) -> "Cyclotomic":
        """w^power, reduced."""
        power %= order
        return cls(order, [0] * power + [1], caps=caps)

    # -- ring structure ---------------------------------------------------

    def _match(self, other) -> "Cyclotomic":
        if isinstance(other, Cyclotomic):
            if other.order != self.order:
                raise RingMismatchError(
                    f"cyclotomic orders differ: {self.order} vs {other.order}")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.from_const(self.order, other)
        return NotImplemented

    def __add__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, [a + b for a, b in zip(self.coeffs, o.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyclotomic(self.order, [a - b for a, b in zip(self.coeffs, o.coeffs)])

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __neg__(self):
        return Cyclotomic(self.order, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.order, [a * other for a in self.coeffs])
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        n = len(self.coeffs)
        dense = [self.coeffs[0] * 0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        dense[i + j] = dense[i + j] + a * b
        return Cyclotomic(self.order, dense)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise NotAUnitError("negative cyclotomic powers are not supported")
        out = Cyclotomic.from_const(self.order, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_const(self.order, other)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return any(bool(c) for c in self.coeffs)

    # -- Galois structure --------------------------------------------------

    def galois(self, j: int) -> "Cyclotomic":
        """Image under w -> w^j; requires gcd(j, order) = 1."""
        k = self.order
        if gcd(j, k) != 1:
            raise GaloisActionError(f"w -> w^{j} is not invertible mod {k}")
        j %= k
        if j == 1:
            return self
        dense = [self.coeffs[0] * 0] * k
        for i, c in enumerate(self.coeffs):
            if c:
                dense[(i * j) % k] = dense[(i * j) % k] + c
        return Cyclotomic(k, dense)

    def is_constant(self) -> bool:
        return not any(bool(c) for c in self.coeffs[1:])

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.coeffs[0]

    def descend(self):
        """The rational (base-ring) value of a Galois-invariant element.

        Checks invariance under every generator w -> w^j of the Galois
        group; raises DescentError carrying the first violating j.
        """
        k = self.order
        for j in range(2, k):
            if gcd(j, k) == 1 and self.galois(j) != self:
                raise DescentError(k, j)
        if not self.is_constant():
            # Cannot happen over a torsion-free base ring; guards bugs.
            raise DescentError(k, 1)
        return self.coeffs[0]

    def __repr__(self):
        return f"Cyclotomic({format_cyclotomic(self)!r})"

    def __str__(self):
        return format_cyclotomic(self)


def cyclotomic_mul(a: Cyclotomic, b: Cyclotomic) -> Cyclotomic:
    return a * b


def galois_act(a: Cyclotomic, j: int) -> Cyclotomic:
    return a.galois(j)


def cyclotomic_descend(a: Cyclotomic):
    return a.descend()


# -- text format: "1 - 2*w + w^2@3" ---------------------------------------

def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def _format_terms(pairs, var_of) -> str:
    # pairs: (key, Fraction coefficient); var_of maps key -> monomial text ('' for 1)
    parts = []
    for key, c in pairs:
        if not c:
            continue
        mono = var_of(key)
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if mono and c == 1:
            body = mono
        elif mono:
            body = f"{format_rational(c)}*{mono}"
        else:
            body = format_rational(c)
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _split_terms(s: str):
    # split into (sign, term) pairs; a sign right after '^' is an exponent
    s = s.strip()
    if not s:
        raise ValueError("empty expression")
    out = []
    sign, buf, prev = 1, [], ""
    for ch in s:
        if ch in "+-" and prev != "^":
            body = "".join(buf).strip()
            if body:
                out.append((sign, body))
            sign = -1 if ch == "-" else 1
            buf = []
        else:
            buf.append(ch)
        if not ch.isspace():
            prev = ch
    body = "".join(buf).strip()
    if body:
        out.append((sign, body))
    if not out:
        raise ValueError("empty expression")
    return out


def format_cyclotomic(a: Cyclotomic) -> str:
    def var_of(i):
        if i == 0:
            return ""
        return "w" if i == 1 else f"w^{i}"

    body = _format_terms(list(enumerate(a.coeffs)), var_of)
    return f"{body}@{a.order}"


def parse_cyclotomic(s: str, caps: Caps = DEFAULT_CAPS) -> Cyclotomic:
    if "@" not in s:
        raise ValueError(f"missing '@order' in cyclotomic literal: {s!r}")
    body, order_s = s.rsplit("@", 1)
    order = int(order_s)
    coeffs: dict[int, Fraction] = {}
    for sign, term in _split_terms(body):
        factors = [f.strip() for f in term.split("*")]
        coeff = Fraction(sign)
        power = 0
        for f in factors:
            if f.startswith("w"):
                power += int(f[2:]) if f.startswith("w^") else 1
            else:
                coeff *= Fraction(f)
        coeffs[power] = coeffs.get(power, Fraction(0)) + coeff
    top = max(coeffs, default=0)
    dense = [coeffs.get(i, Fraction(0)) for i in range(top + 1)]
    return Cyclotomic(order, dense, caps=caps)


class TruncatedPoly:
    """Element of Q[x1..xr]/(xi^2): sparse map variable-bitmask -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None, caps: Caps = DEFAULT_CAPS):
        if nvars < 0:
            raise ValueError("variable count must be nonnegative")
        if nvars > caps.max_vars:
            raise CapExceededError(f"{nvars} variables exceeds cap {caps.max_vars}")
        clean: dict[int, Fraction] = {}
        for mask, c in (terms or {}).items():
            if mask >> nvars:
                raise ValueError(f"term mask {mask:#x} outside {nvars} variables")
            c = Fraction(c)
            if c:
                clean[mask] = c
        object.__setattr__(self, "nvars", nvars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *_):
        raise AttributeError("TruncatedPoly values are immutable")

    @classmethod
    def const(cls, nvars: int, c, caps: Caps = DEFAULT_CAPS) -> "TruncatedPoly":
        return cls(nvars, {0: Fraction(c)}, caps=caps)

    @classmethod
    def var(cls, nvars: int, i: int, caps: Caps = DEFAULT_CAPS) -> "TruncatedPoly":
        """x_i, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"x{i} out of range for {nvars} variables")
        return cls(nvars, {1 << (i - 1): Fraction(1)}, caps=caps)

    def _match(self, other) -> "TruncatedPoly":
        if isinstance(other, TruncatedPoly):
            if other.nvars != self.nvars:
                raise RingMismatchError(
                    f"variable counts differ: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedPoly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for mask, c in o.terms.items():
            terms[mask] = terms.get(mask, Fraction(0)) + c
        return TruncatedPoly(self.nvars, terms)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TruncatedPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        terms: dict[int, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                if m1 & m2:
                    continue  # repeated variable: xi^2 = 0
                m = m1 | m2
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return TruncatedPoly(self.nvars, terms)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        out = TruncatedPoly.const(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedPoly.const(self.nvars, other)
        if not isinstance(other, TruncatedPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(0, Fraction(0))

    def coefficient(self, mask: int) -> Fraction:
        return self.terms.get(mask, Fraction(0))

    def is_unit(self) -> bool:
        return bool(self.constant_term())

    def invert(self) -> "TruncatedPoly":
        """Exact inverse via the finite geometric series.

        Valid exactly when the constant term is nonzero: the rest is
        nilpotent with vanishing (nvars+1)-st power.
        """
        c = self.constant_term()
        if not c:
            raise NotAUnitError("zero constant term has no inverse")
        n = self - c  # nilpotent part
        out = TruncatedPoly.const(self.nvars, 0)
        power = TruncatedPoly.const(self.nvars, 1)
        for i in range(self.nvars + 1):
            out = out + power * (Fraction(-1) ** i / c ** (i + 1))
            power = power * n
            if not power:
                break
        return out

    def __repr__(self):
        return f"TruncatedPoly({self.nvars}, {format_truncated(self)!r})"

    def __str__(self):
        return format_truncated(self)


def trunc_mul(a: TruncatedPoly, b: TruncatedPoly) -> TruncatedPoly:
    return a * b


def trunc_invert(a: TruncatedPoly) -> TruncatedPoly:
    return a.invert()


def format_truncated(a: TruncatedPoly) -> str:
    def var_of(mask):
        return "*".join(f"x{i + 1}" for i in range(a.nvars) if mask >> i & 1)

    keys = sorted(a.terms, key=lambda m: (bin(m).count("1"), m))
    return _format_terms([(m, a.terms[m]) for m in keys], var_of)


_VAR_RE = re.compile(r"^x(\d+)$")


def parse_truncated(s: str, nvars: int, caps: Caps = DEFAULT_CAPS) -> TruncatedPoly:
    terms: dict[int, Fraction] = {}
    for sign, term in _split_terms(s):
        coeff = Fraction(sign)
        mask = 0
        for f in (p.strip() for p in term.split("*")):
            m = _VAR_RE.match(f)
            if m:
                i = int(m.group(1))
                if not 1 <= i <= nvars:
                    raise ValueError(f"x{i} out of range for {nvars} variables")
                bit = 1 << (i - 1)
                if mask & bit:
                    raise ValueError(f"repeated variable x{i} in one term")
                mask |= bit
            else:
                coeff *= Fraction(f)
        terms[mask] = terms.get(mask, Fraction(0)) + coeff
    return TruncatedPoly(nvars, terms, caps=caps)
