"""Diagonal quadratic forms over Q and their classical invariants.

Rank, discriminant square class, Hasse-Witt invariant through Hilbert
symbols, the orientability criterion with its square-root witness, and
the standard constructors (hyperbolic, scaling, diagonalization of a
Gram matrix).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import linalg

INF = "inf"  # the real place


class DegenerateFormError(ValueError):
    """The form (or scaling factor / Gram matrix) is singular."""


class InvalidPlaceError(ValueError):
    """Place is neither a prime nor the real place 'inf'."""


class IncompleteScanError(ValueError):
    """prime_bound misses a prime dividing some diagonal entry."""


@dataclass(frozen=True)
class QuadraticForm:
    """<a1, ..., an> with every ai a nonzero rational."""

    diag: tuple

    def __post_init__(self):
        entries = tuple(Fraction(a) for a in self.diag)
        if any(a == 0 for a in entries):
            raise DegenerateFormError("diagonal entries must be nonzero")
        object.__setattr__(self, "diag", entries)

    @property
    def rank(self) -> int:
        return len(self.diag)

    def __str__(self):
        return format_form(self)


def hyperbolic(m: int) -> QuadraticForm:
    """m hyperbolic planes, diagonalized: <1,-1> repeated m times."""
    if m < 1:
        raise ValueError("need at least one hyperbolic plane")
    return QuadraticForm((Fraction(1), Fraction(-1)) * m)


def scale(q: QuadraticForm, k) -> QuadraticForm:
    k = Fraction(k)
    if k == 0:
        raise DegenerateFormError("scaling by zero degenerates the form")
    return QuadraticForm(tuple(a * k for a in q.diag))


def orthogonal_sum(q1: QuadraticForm, q2: QuadraticForm) -> QuadraticForm:
    return QuadraticForm(q1.diag + q2.diag)


def discriminant(q: QuadraticForm) -> Fraction:
    out = Fraction(1)
    for a in q.diag:
        out *= a
    return out


# -- square classes ---------------------------------------------------------

def square_free_part(x) -> int:
    """The square-free integer representing the square class of x != 0."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("zero has no square class")
    n = x.numerator * x.denominator  # same class as x
    sign = -1 if n < 0 else 1
    n = abs(n)
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                out *= d
        d += 1 if d == 2 else 2
    return sign * out * n


def is_square(x) -> bool:
    x = Fraction(x)
    if x < 0:
        return False
    return (isqrt(x.numerator) ** 2 == x.numerator
            and isqrt(x.denominator) ** 2 == x.denominator)


def rational_sqrt(x) -> Fraction:
    x = Fraction(x)
    if not is_square(x):
        raise ValueError(f"{x} is not a rational square")
    return Fraction(isqrt(x.numerator), isqrt(x.denominator))


# -- diagonalization --------------------------------------------------------

def diagonalize(gram, want_basis: bool = False):
    """Diagonal form congruent to a symmetric nonsingular Gram matrix.

    Returns the QuadraticForm, or (form, B) with B^T gram B diagonal when
    ``want_basis`` is set.
    """
    n = len(gram)
    a = [[Fraction(x) for x in row] for row in gram]
    if any(len(row) != n for row in a):
        raise ValueError("Gram matrix must be square")
    for i in range(n):
        for j in range(i + 1, n):
            if a[i][j] != a[j][i]:
                raise ValueError("Gram matrix must be symmetric")
    if linalg.det(a) == 0:
        raise DegenerateFormError("singular Gram matrix")

    basis = linalg.identity(n)

    def add_col(dst, src, f):
        # basis change e_dst += f * e_src, applied congruently
        for t in range(n):
            a[t][dst] += f * a[t][src]
        for t in range(n):
            a[dst][t] += f * a[src][t]
        for t in range(n):
            basis[t][dst] += f * basis[t][src]

    def swap_col(i, j):
        for t in range(n):
            a[t][i], a[t][j] = a[t][j], a[t][i]
        for t in range(n):
            a[i][t], a[j][t] = a[j][t], a[i][t]
        for t in range(n):
            basis[t][i], basis[t][j] = basis[t][j], basis[t][i]

    for i in range(n):
        if a[i][i] == 0:
            j = next((t for t in range(i + 1, n) if a[t][t] != 0), None)
            if j is not None:
                swap_col(i, j)
            else:
                # all remaining diagonal zero; some off-diagonal is not
                j = next(t for t in range(i + 1, n) if a[i][t] != 0)
                add_col(i, j, Fraction(1))
        pivot = a[i][i]
        for j in range(i + 1, n):
            if a[i][j]:
                add_col(j, i, -a[i][j] / pivot)

    form = QuadraticForm(tuple(a[i][i] for i in range(n)))
    return (form, basis) if want_basis else form


# -- Hilbert symbols and Hasse-Witt ------------------------------------------

def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _check_place(p):
    if p == INF:
        return
    if not isinstance(p, int) or not _is_prime(p):
        raise InvalidPlaceError(f"{p!r} is neither a prime nor {INF!r}")


def _valuation(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(u: int, p: int) -> int:
    r = pow(u % p, (p - 1) // 2, p)
    return 1 if r == 1 else -1


def hilbert_symbol(a, b, p) -> int:
    """(a, b)_p: 1 iff z^2 = a x^2 + b y^2 has a nontrivial Q_p (or real) zero.

    Standard valuation / Legendre-symbol case analysis; depends only on
    the square classes of a and b.
    """
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    _check_place(p)
    if p == INF:
        return -1 if (a < 0 and b < 0) else 1
    # integers in the same square classes
    ai = a.numerator * a.denominator
    bi = b.numerator * b.denominator
    alpha, u = _valuation(abs(ai), p)
    beta, v = _valuation(abs(bi), p)
    u *= -1 if ai < 0 else 1
    v *= -1 if bi < 0 else 1
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
        return -1 if e % 2 else 1
    e = alpha * beta * (((p - 1) // 2) % 2)
    s = (-1) ** (e % 2)
    if beta % 2:
        s *= _legendre(u, p)
    if alpha % 2:
        s *= _legendre(v, p)
    return s


def hasse_witt(q: QuadraticForm, p) -> int:
    """Product of (a_i, a_j)_p over i < j."""
    out = 1
    d = q.diag
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            out *= hilbert_symbol(d[i], d[j], p)
    return out


@dataclass(frozen=True)
class BWTriple:
    """Rank parity, discriminant square class, places with Hasse-Witt -1."""

    rank_parity: int
    disc_class: int
    hasse_minus: tuple

    def to_json(self) -> dict:
        return {
            "rank_parity": self.rank_parity,
            "disc_class": self.disc_class,
            "hasse_minus": list(self.hasse_minus),
        }


def _primes_upto(n: int):
    sieve = bytearray([1]) * (n + 1) if n >= 0 else bytearray()
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for t in range(p * p, n + 1, p):
                sieve[t] = 0
    return out


def bw_class(q: QuadraticForm, prime_bound: int) -> BWTriple:
    """The (rank mod 2, disc class, Hasse-minus places) invariant triple.

    Scans the real place and every prime up to ``prime_bound``; the bound
    must cover all primes dividing any diagonal entry (checked), since the
    Hasse-Witt invariant is +1 at any other place.
    """
    support = set()
    for a in q.diag:
        for n in (abs(a.numerator), a.denominator):
            d = 2
            while d * d <= n:
                if n % d == 0:
                    support.add(d)
                    while n % d == 0:
                        n //= d
                d += 1 if d == 2 else 2
            if n > 1:
                support.add(n)
    missing = [p for p in support if p > prime_bound]
    if missing:
        raise IncompleteScanError(
            f"prime_bound {prime_bound} misses primes {sorted(missing)}")
    places = _primes_upto(max(prime_bound, 2))
    minus = [p for p in places if hasse_witt(q, p) == -1]
    if hasse_witt(q, INF) == -1:
        minus.append(INF)
    return BWTriple(q.rank % 2, square_free_part(discriminant(q)), tuple(minus))


# -- orientation -------------------------------------------------------------

def is_orientable(q: QuadraticForm):
    """(flag, witness): the form admits a volume element of square one.

    True iff the rank n is even and (-1)^(n(n-1)/2) * a1...an is a rational
    square; the witness s then satisfies s^2 * (-1)^(n(n-1)/2) * a1...an = 1,
    which is exactly the normalization making (s e1...en)^2 = 1.
    """
    n = q.rank
    if n % 2:
        return False, None
    d = discriminant(q)
    if n % 4 == 2:
        d = -d
    if not is_square(d):
        return False, None
    return True, 1 / rational_sqrt(d)


# -- textual form ------------------------------------------------------------

def format_form(q: QuadraticForm) -> str:
    def fr(x):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return ",".join(fr(a) for a in q.diag)


def parse_form(s: str) -> QuadraticForm:
    parts = [p.strip() for p in s.split(",") if p.strip()]
    if not parts:
        raise ValueError("empty form")
    return QuadraticForm(tuple(Fraction(p) for p in parts))
