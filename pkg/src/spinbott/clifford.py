"""Exact blade arithmetic in the Clifford algebra of a diagonal rational form.

Basis blades are indexed by bitmasks over the orthogonal basis e1..en;
the product sign is computed by popcount-based transposition counting and
contractions multiply by the diagonal coefficients.  On top of the ring
structure this module provides the reversal involution, spinorial norms,
Clifford-group membership with the induced orthogonal matrix, volume
elements, the top-coefficient bilinear forms on the even/odd parts, the
graded-tensor and untwisting isomorphism checks, and the lifting of
symmetric-group transpositions to even elements of square one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .config import DEFAULT_CAPS, CapExceededError, Caps
from .quadforms import QuadraticForm, format_form, is_orientable, scale
from .rings import _format_terms, _split_terms

_popcount = int.bit_count


class FormMismatchError(ValueError):
    """Operands live over different quadratic forms."""


class NotOrientableError(ValueError):
    """The form has no volume element of square one over Q."""


def _blade_sign(a: int, b: int) -> int:
    # (-1)^(number of index crossings when merging blade a with blade b)
    s = 0
    a >>= 1
    while a:
        s += _popcount(a & b)
        a >>= 1
    return -1 if s & 1 else 1


class CliffordElement:
    """Sparse element of C(V, q): map from blade bitmask to coefficient."""

    __slots__ = ("form", "coeffs")

    def __init__(self, form: QuadraticForm, coeffs=None, caps: Caps = DEFAULT_CAPS):
        if form.rank > caps.max_dim:
            raise CapExceededError(f"rank {form.rank} exceeds blade cap {caps.max_dim}")
        clean = {}
        top = 1 << form.rank
        for mask, c in (coeffs or {}).items():
            if not 0 <= mask < top:
                raise ValueError(f"blade mask {mask:#x} outside rank {form.rank}")
            c = Fraction(c) if isinstance(c, int) else c
            if c:
                clean[mask] = c
        object.__setattr__(self, "form", form)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, *_):
        raise AttributeError("CliffordElement values are immutable")

    @classmethod
    def scalar(cls, form: QuadraticForm, c) -> "CliffordElement":
        return cls(form, {0: c})

    @classmethod
    def generator(cls, form: QuadraticForm, i: int) -> "CliffordElement":
        """e_i, 1-based."""
        if not 1 <= i <= form.rank:
            raise ValueError(f"e{i} out of range for rank {form.rank}")
        return cls(form, {1 << (i - 1): 1})

    @classmethod
    def from_vector(cls, form: QuadraticForm, coords) -> "CliffordElement":
        return cls(form, {1 << i: c for i, c in enumerate(coords)})

    # -- ring structure ----------------------------------------------------

    def _match(self, other) -> "CliffordElement":
        if isinstance(other, CliffordElement):
            if other.form != self.form:
                raise FormMismatchError("elements live over different forms")
            return other
        if isinstance(other, (int, Fraction)):
            return CliffordElement.scalar(self.form, other)
        return NotImplemented

    def __add__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        coeffs = dict(self.coeffs)
        for m, c in o.coeffs.items():
            coeffs[m] = coeffs.get(m, Fraction(0)) + c
        return CliffordElement(self.form, coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CliffordElement(self.form, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CliffordElement(self.form, {m: c * other for m, c in self.coeffs.items()})
        o = self._match(other)
        if o is NotImplemented:
            return NotImplemented
        diag = self.form.diag
        coeffs: dict = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in o.coeffs.items():
                c = c1 * c2
                if _blade_sign(m1, m2) < 0:
                    c = -c
                common = m1 & m2
                while common:
                    low = common & -common
                    c = c * diag[low.bit_length() - 1]
                    common ^= low
                m = m1 ^ m2
                acc = coeffs.get(m)
                coeffs[m] = c if acc is None else acc + c
        return CliffordElement(self.form, coeffs)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("use inverse() for negative powers")
        out = CliffordElement.scalar(self.form, 1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CliffordElement.scalar(self.form, other)
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.form == other.form and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self):
        return bool(self.coeffs)

    # -- grading and involution ---------------------------------------------

    def degree(self):
        """0 or 1 for homogeneous elements, None otherwise (0 for zero)."""
        parities = {_popcount(m) & 1 for m in self.coeffs}
        if not parities:
            return 0
        if len(parities) > 1:
            return None
        return parities.pop()

    def is_homogeneous(self) -> bool:
        return self.degree() is not None

    def bar(self) -> "CliffordElement":
        """The reversal involution: fixes V, reverses blade factors."""
        out = {}
        for m, c in self.coeffs.items():
            r = _popcount(m)
            out[m] = -c if (r * (r - 1) // 2) & 1 else c
        return CliffordElement(self.form, out)

    def scalar_part(self):
        return self.coeffs.get(0, Fraction(0))

    def is_scalar(self) -> bool:
        return not any(m for m in self.coeffs)

    def coefficient(self, mask: int):
        return self.coeffs.get(mask, Fraction(0))

    def spinorial_norm(self):
        """N(a) = a * bar(a); raises if the product is not a scalar."""
        prod = self * self.bar()
        if not prod.is_scalar():
            raise ValueError("a * bar(a) is not a scalar: not a Clifford-group element")
        return prod.scalar_part()

    def inverse(self) -> "CliffordElement | None":
        """Two-sided inverse, or None when the element is not a unit.

        Clifford-group elements always have scalar a*bar(a), giving the
        cheap path; otherwise solve a x = 1 in the regular representation
        on the 2^n blade basis.
        """
        if not self.coeffs:
            return None
        nbar = self * self.bar()
        if nbar.is_scalar():
            s = nbar.scalar_part()
            if s:
                cand = self.bar() * (1 / Fraction(s))
                if (self * cand).coeffs == {0: Fraction(1)}:
                    return cand
        dim = 1 << self.form.rank
        cols = []
        for j in range(dim):
            img = self * CliffordElement(self.form, {j: 1})
            cols.append([img.coefficient(i) for i in range(dim)])
        mat = [[cols[j][i] for j in range(dim)] for i in range(dim)]
        rhs = [Fraction(1)] + [Fraction(0)] * (dim - 1)
        x = linalg.solve(mat, rhs)
        if x is None:
            return None
        cand = CliffordElement(self.form, {j: c for j, c in enumerate(x)})
        if (self * cand).coeffs != {0: Fraction(1)} or (cand * self).coeffs != {0: Fraction(1)}:
            return None
        return cand

    def __repr__(self):
        return f"CliffordElement({format_form(self.form)!r}, {format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def cl_mul(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return a * b


def bar(a: CliffordElement) -> CliffordElement:
    return a.bar()


def spinorial_norm(a: CliffordElement):
    return a.spinorial_norm()


# -- volume element ----------------------------------------------------------

def volume_element(q: QuadraticForm, caps: Caps = DEFAULT_CAPS) -> CliffordElement:
    """u = s e1...en with u^2 = 1, even, anticommuting with V.

    Exists exactly when the form is orientable; s is the orientation
    witness.
    """
    ok, s = is_orientable(q)
    if not ok:
        raise NotOrientableError(f"<{format_form(q)}> has no volume element over Q")
    return CliffordElement(q, {(1 << q.rank) - 1: s}, caps=caps)


# -- Clifford group membership ------------------------------------------------

@dataclass(frozen=True)
class OrthogonalMatrix:
    """A rational matrix preserving the given diagonal form."""

    entries: tuple
    form: QuadraticForm

    def __post_init__(self):
        n = self.form.rank
        m = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if len(m) != n or any(len(r) != n for r in m):
            raise ValueError("matrix size does not match the form rank")
        d = self.form.diag
        for i in range(n):
            for j in range(n):
                acc = Fraction(0)
                for t in range(n):
                    acc += m[t][i] * d[t] * m[t][j]
                if acc != (d[i] if i == j else 0):
                    raise ValueError("matrix does not preserve the form")
        object.__setattr__(self, "entries", m)


@dataclass(frozen=True)
class Membership:
    """Outcome of the Clifford-group test."""

    member: bool
    reason: str = ""
    degree: int | None = None
    matrix: OrthogonalMatrix | None = None
    norm: Fraction | None = None
    in_spin: bool = False


def clifford_group_test(a: CliffordElement) -> Membership:
    """Membership of a in the Clifford group, with the induced isometry.

    Checks homogeneity, invertibility and stability of V under twisted
    conjugation v -> (-1)^deg(a) a v a^-1; members also get their
    spinorial norm and the Spin flag (even of norm one).
    """
    deg = a.degree()
    if deg is None:
        return Membership(False, reason="not homogeneous")
    if not a.coeffs:
        return Membership(False, reason="zero is not invertible")
    inv = a.inverse()
    if inv is None:
        return Membership(False, reason="not invertible")
    n = a.form.rank
    sign = -1 if deg else 1
    cols = []
    for i in range(1, n + 1):
        img = a * CliffordElement.generator(a.form, i) * inv * sign
        if any(_popcount(m) != 1 for m in img.coeffs):
            return Membership(False, reason=f"conjugation moves e{i} outside V")
        cols.append([img.coefficient(1 << t) for t in range(n)])
    matrix = OrthogonalMatrix(tuple(zip(*cols)), a.form)  # raises if not orthogonal
    norm = a.spinorial_norm()
    return Membership(True, degree=deg, matrix=matrix, norm=norm,
                      in_spin=(deg == 0 and norm == 1))


# -- the even/odd top-coefficient bilinear forms ------------------------------

def parity_basis(q: QuadraticForm, parity: int) -> list[int]:
    return [m for m in range(1 << q.rank) if _popcount(m) & 1 == parity]


def phi_gram(q: QuadraticForm, parity: int) -> list:
    """Gram matrix of (a, b) -> s * top-blade coefficient of a b on C^parity.

    Symmetric for parity 0, antisymmetric for parity 1, nondegenerate in
    both cases; s is the orientation witness trivializing the top exterior
    power.
    """
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    ok, s = is_orientable(q)
    if not ok:
        raise NotOrientableError("the top power is only trivialized for orientable forms")
    basis = parity_basis(q, parity)
    top = (1 << q.rank) - 1
    out = []
    for m1 in basis:
        row = []
        for m2 in basis:
            prod = (CliffordElement(q, {m1: 1}) * CliffordElement(q, {m2: 1}))
            row.append(s * prod.coefficient(top))
        out.append(row)
    return out


# -- graded tensor decomposition ----------------------------------------------

def graded_tensor_check(q1: QuadraticForm, q2: QuadraticForm,
                        caps: Caps = DEFAULT_CAPS) -> bool:
    """Structure constants of C(V + W) match those of C(V) (x) C(W).

    The graded tensor multiplies with the Koszul sign
    (a (x) b)(c (x) d) = (-1)^(deg b deg c) (ac (x) bd); blades of the sum
    are identified with blade pairs, V factors first.
    """
    n1, n2 = q1.rank, q2.rank
    if n1 + n2 > caps.max_dim:
        raise CapExceededError(f"rank {n1 + n2} exceeds blade cap {caps.max_dim}")
    qsum = QuadraticForm(q1.diag + q2.diag)
    for a1 in range(1 << n1):
        for b1 in range(1 << n2):
            left = CliffordElement(qsum, {a1 | (b1 << n1): 1})
            for a2 in range(1 << n1):
                for b2 in range(1 << n2):
                    right = CliffordElement(qsum, {a2 | (b2 << n1): 1})
                    prod = left * right
                    # Koszul product of (a1 (x) b1)(a2 (x) b2)
                    pa = CliffordElement(q1, {a1: 1}) * CliffordElement(q1, {a2: 1})
                    pb = CliffordElement(q2, {b1: 1}) * CliffordElement(q2, {b2: 1})
                    koszul = -1 if (_popcount(b1) & _popcount(a2) & 1) else 1
                    expect: dict = {}
                    for ma, ca in pa.coeffs.items():
                        for mb, cb in pb.coeffs.items():
                            expect[ma | (mb << n1)] = ca * cb * koszul
                    if prod.coeffs != {m: c for m, c in expect.items() if c}:
                        return False
    return True


# -- untwisting: C(V + <1>^r) ~ C(V) (x) C^{0,r}, ungraded tensor -------------

@dataclass(frozen=True)
class UntwistIso:
    """Verified untwisting map onto the ungraded tensor with C^{0,r}.

    ``gen_images[i]`` is the image of the i-th source generator as a map
    (V-blade mask, extra-blade mask) -> coefficient; the first n entries
    are the original generators, the last r the adjoined unit ones.
    """

    form: QuadraticForm
    r: int
    gen_images: tuple
    relations_ok: bool
    bijective: bool


def untwist_iso(q: QuadraticForm, r: int, caps: Caps = DEFAULT_CAPS) -> UntwistIso:
    """Send v -> v (x) 1 and each new unit generator t -> u (x) t.

    The target multiplies without Koszul signs; u is the volume element,
    so the images anticommute as required and the map extends to an
    algebra isomorphism (checked on all generator relations and by a rank
    computation on the blade-pair basis).
    """
    if r < 1:
        raise ValueError("need at least one extra generator")
    n = q.rank
    if n + r > caps.max_dim:
        raise CapExceededError(f"rank {n + r} exceeds blade cap {caps.max_dim}")
    u = volume_element(q, caps=caps)
    ones = QuadraticForm((Fraction(1),) * r)

    # elements of C(V) (x) C^{0,r} as {(maskV, maskR): coeff}, ungraded product
    def tensor_mul(x, y):
        out: dict = {}
        for (mv1, mr1), c1 in x.items():
            for (mv2, mr2), c2 in y.items():
                pv = CliffordElement(q, {mv1: 1}) * CliffordElement(q, {mv2: 1})
                pr = CliffordElement(ones, {mr1: 1}) * CliffordElement(ones, {mr2: 1})
                for mv, cv in pv.coeffs.items():
                    for mr, cr in pr.coeffs.items():
                        key = (mv, mr)
                        out[key] = out.get(key, Fraction(0)) + c1 * c2 * cv * cr
        return {k: c for k, c in out.items() if c}

    gen_images = []
    src = QuadraticForm(q.diag + ones.diag)
    for i in range(n):
        gen_images.append({(1 << i, 0): Fraction(1)})
    for j in range(r):
        gen_images.append({(m, 1 << j): c for m, c in u.coeffs.items()})

    relations_ok = True
    for i in range(n + r):
        for j in range(n + r):
            prod = tensor_mul(gen_images[i], gen_images[j])
            if i == j:
                expect = {(0, 0): Fraction(src.diag[i])}
            else:
                back = tensor_mul(gen_images[j], gen_images[i])
                expect = {k: -c for k, c in back.items()}
            if prod != expect:
                relations_ok = False

    # image of every source blade, as a vector over the blade-pair basis
    dim = 1 << (n + r)
    index = {(mv, mr): mv | (mr << n) for mv in range(1 << n) for mr in range(1 << r)}
    mat = []
    for mask in range(dim):
        img = {(0, 0): Fraction(1)}
        for i in range(n + r):
            if mask >> i & 1:
                img = tensor_mul(img, gen_images[i])
        col = [Fraction(0)] * dim
        for key, c in img.items():
            col[index[key]] = c
        mat.append(col)
    bijective = linalg.rank(mat) == dim
    return UntwistIso(q, r, tuple(gen_images), relations_ok, bijective)


# -- lifting transpositions to the spinorial level -----------------------------

@dataclass
class SpinLift:
    """Lifted transposition generators in C(V^k) with their relation report."""

    form: QuadraticForm
    copies: int
    generators: list = field(default_factory=list)
    lambda_sign: Fraction = Fraction(1)
    squares_ok: bool = False
    braid_ok: bool = False
    commutation_ok: bool = False
    matrices_ok: bool = False
    norms: list = field(default_factory=list)
    in_spin: list = field(default_factory=list)

    @property
    def all_ok(self) -> bool:
        return self.squares_ok and self.braid_ok and self.commutation_ok and self.matrices_ok


def _swap_block_matrix(n: int, k: int, c: int) -> list:
    """Permutation matrix on V^k swapping coordinate blocks c and c+1 (0-based)."""
    size = n * k
    m = linalg.zeros(size, size)
    for t in range(size):
        blk, off = divmod(t, n)
        if blk == c:
            m[(c + 1) * n + off][t] = Fraction(1)
        elif blk == c + 1:
            m[c * n + off][t] = Fraction(1)
        else:
            m[t][t] = Fraction(1)
    return m


def braid_normalize(gens: list) -> tuple:
    """(corrected generators, sign): fix the braid defect of square-one lifts.

    The two braid words of consecutive lifts always agree up to a scalar
    of square one; when it is -1, replacing the even-indexed generators
    (1-based) by their negatives restores the relation.  The sign is read
    off the algebra, never assumed.
    """
    if len(gens) < 2:
        return list(gens), Fraction(1)
    x = gens[0] * gens[1] * gens[0]
    y = gens[1] * gens[0] * gens[1]
    mask, c = next(iter(y.coeffs.items()))
    lam = x.coefficient(mask) / c
    if x != y * lam or lam not in (1, -1):
        raise ArithmeticError("braid words are not proportional by a sign")
    if lam != 1:
        gens = [g * lam if (i + 1) % 2 == 0 else g for i, g in enumerate(gens)]
    return list(gens), Fraction(lam)


def spin_lift(q: QuadraticForm, k: int, caps: Caps = DEFAULT_CAPS) -> SpinLift:
    """Even square-one elements of C(V^k) inducing the adjacent swaps.

    Each generator is the volume element of the antidiagonal copy of
    (V, 2q) inside two adjacent summands.  The scalar relating the two
    braid words is computed from the algebra itself and, when it is -1,
    the even-indexed generators are corrected by it; all relations are
    then verified as exact algebra identities.
    """
    n = q.rank
    if k < 2:
        raise ValueError("need at least two copies")
    if n % 2:
        raise ValueError("rank must be even")
    ok, _ = is_orientable(q)
    if not ok:
        raise NotOrientableError("the form must be orientable")
    if n * k > caps.max_dim:
        raise CapExceededError(f"rank {n * k} exceeds blade cap {caps.max_dim}")

    big = QuadraticForm(q.diag * k)
    ok2, s2 = is_orientable(scale(q, 2))
    if not ok2:
        raise NotOrientableError("(V, 2q) must be orientable")

    def lifted_swap(c: int) -> CliffordElement:
        # volume element of the antidiagonal {(v, -v)} of copies c, c+1
        out = CliffordElement.scalar(big, s2)
        for j in range(n):
            vec = (CliffordElement.generator(big, c * n + j + 1)
                   - CliffordElement.generator(big, (c + 1) * n + j + 1))
            out = out * vec
        return out

    lift = SpinLift(q, k)
    gens, lift.lambda_sign = braid_normalize([lifted_swap(c) for c in range(k - 1)])
    lift.generators = gens

    one = CliffordElement.scalar(big, 1)
    lift.squares_ok = all(g * g == one for g in gens)
    lift.braid_ok = all(
        gens[i] * gens[i + 1] * gens[i] == gens[i + 1] * gens[i] * gens[i + 1]
        for i in range(len(gens) - 1))
    lift.commutation_ok = all(
        gens[i] * gens[j] == gens[j] * gens[i]
        for i in range(len(gens)) for j in range(i + 2, len(gens)))

    lift.matrices_ok = True
    for c, g in enumerate(gens):
        res = clifford_group_test(g)
        lift.norms.append(res.norm)
        lift.in_spin.append(res.in_spin)
        expect = _swap_block_matrix(n, k, c)
        if not (res.member and res.degree == 0
                and linalg.mat_eq([list(r) for r in res.matrix.entries], expect)):
            lift.matrices_ok = False
    return lift


# -- textual element format: "2*e1e3 - e2 + 1" ---------------------------------

def format_element(a: CliffordElement) -> str:
    def var_of(mask):
        return "".join(f"e{i + 1}" for i in range(a.form.rank) if mask >> i & 1)

    keys = sorted(a.coeffs, key=lambda m: (_popcount(m), m))
    return _format_terms([(m, a.coeffs[m]) for m in keys], var_of)


_BLADE_RE = re.compile(r"e(\d+)")


def parse_element(s: str, form: QuadraticForm, caps: Caps = DEFAULT_CAPS) -> CliffordElement:
    coeffs: dict[int, Fraction] = {}
    for sign, term in _split_terms(s):
        coeff = Fraction(sign)
        mask = 0
        for f in (p.strip() for p in term.split("*")):
            if f.startswith("e"):
                last = 0
                for m in _BLADE_RE.finditer(f):
                    if m.start() != last:
                        raise ValueError(f"cannot parse blade {f!r}")
                    i = int(m.group(1))
                    if not 1 <= i <= form.rank:
                        raise ValueError(f"e{i} out of range for rank {form.rank}")
                    bit = 1 << (i - 1)
                    if mask & bit:
                        raise ValueError(f"repeated generator e{i}")
                    mask |= bit
                    last = m.end()
                if last != len(f):
                    raise ValueError(f"cannot parse blade {f!r}")
            else:
                coeff *= Fraction(f)
        coeffs[mask] = coeffs.get(mask, Fraction(0)) + coeff
    return CliffordElement(form, coeffs, caps=caps)
