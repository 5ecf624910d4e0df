"""Explicit graded Clifford modules and the module-level Adams machinery.

The hyperbolic Clifford algebra acts on the exterior algebra by creation
and annihilation operators; twisting the top-right blocks by k turns the
same space into a module over the k-scaled form.  Tensor powers carry the
sign-twisted symmetric-group action (signs always derived from the
grading operators, never from tables), from which two Adams operations
are computed and compared: the eigenmodule decomposition of the cycle
operator over a cyclotomic extension, and the character-weighted isotypic
decomposition.  Reducing through the endomorphism presentation yields the
module-level Bott class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .clifford import CliffordElement, volume_element
from .config import DEFAULT_CAPS, CapExceededError, Caps
from .quadforms import QuadraticForm, hyperbolic, scale
from .rings import Cyclotomic


class PresentationError(ValueError):
    """Module dimensions are inconsistent with the supplied presentation."""


@dataclass(frozen=True)
class GradedModule:
    """A graded space E with odd generator matrices for a diagonal form.

    ``grading[i]`` is the degree (0 or 1) of the i-th basis vector; each
    generator exchanges the two blocks and squares to its diagonal
    coefficient.  The volume element must act as +1 on the even block and
    -1 on the odd block (the normalized choice of E).
    """

    form: QuadraticForm
    grading: tuple
    gens: tuple

    @property
    def dim(self) -> int:
        return len(self.grading)

    @property
    def dims(self) -> tuple:
        return (self.grading.count(0), self.grading.count(1))

    def grading_matrix(self):
        return linalg.diag([Fraction(-1) ** g for g in self.grading])

    def volume_matrix(self):
        """s gamma_1 ... gamma_n for the orientation witness s."""
        u = volume_element(self.form)
        return clifford_action_matrix(u, list(self.gens), self.dim)

    def validate(self) -> None:
        n = self.form.rank
        if len(self.gens) != n:
            raise PresentationError("need one generator per form entry")
        d = self.dim
        if self.dims[0] == 0 or self.dims[1] == 0:
            raise PresentationError("both graded blocks must be nonzero")
        ident = linalg.identity(d)
        for i, g in enumerate(self.gens):
            for r in range(d):
                for c in range(d):
                    if self.grading[r] == self.grading[c] and g[r][c]:
                        raise PresentationError(f"generator {i + 1} is not odd")
            if not linalg.mat_eq(linalg.mat_mul(g, g),
                                 linalg.mat_scale(ident, self.form.diag[i])):
                raise PresentationError(f"generator {i + 1} does not square to q_{i + 1}")
        for i in range(n):
            for j in range(i + 1, n):
                anti = linalg.mat_add(linalg.mat_mul(self.gens[i], self.gens[j]),
                                      linalg.mat_mul(self.gens[j], self.gens[i]))
                if any(any(x for x in row) for row in anti):
                    raise PresentationError(f"generators {i + 1},{j + 1} do not anticommute")
        if not linalg.mat_eq(self.volume_matrix(), self.grading_matrix()):
            raise PresentationError("volume element is not diag(1,-1) on E0+E1")


def clifford_action_matrix(elem, gen_mats, dim):
    """Image of a Clifford element under e_i -> gen_mats[i-1]."""
    acc = linalg.zeros(dim)
    for mask, coeff in elem.coeffs.items():
        m = linalg.identity(dim)
        i = 0
        mm = mask
        while mm:
            if mm & 1:
                m = linalg.mat_mul(m, gen_mats[i])
            mm >>= 1
            i += 1
        acc = linalg.mat_add(acc, linalg.mat_scale(m, coeff))
    return acc


def spinor_rep(m: int, caps: Caps = DEFAULT_CAPS) -> GradedModule:
    """C(H(Q^m)) acting on the exterior algebra of Q^m.

    Basis vectors are subsets of the m modes; the +1 generator of the
    i-th hyperbolic pair acts as creation + annihilation, the -1 generator
    as creation - annihilation.
    """
    if m < 1:
        raise ValueError("need at least one hyperbolic pair")
    dim = 1 << m
    if dim > caps.max_tensor:
        raise CapExceededError(f"dimension {dim} exceeds cap {caps.max_tensor}")

    def sign_below(state, i):
        return -1 if bin(state & ((1 << i) - 1)).count("1") % 2 else 1

    def creation(i):
        g = linalg.zeros(dim)
        for s in range(dim):
            if not s >> i & 1:
                g[s | (1 << i)][s] = Fraction(sign_below(s, i))
        return g

    def annihilation(i):
        g = linalg.zeros(dim)
        for s in range(dim):
            if s >> i & 1:
                g[s ^ (1 << i)][s] = Fraction(sign_below(s, i))
        return g

    gens = []
    for i in range(m):
        a_dag, a = creation(i), annihilation(i)
        gens.append(linalg.mat_add(a_dag, a))
        gens.append(linalg.mat_sub(a_dag, a))
    module = GradedModule(hyperbolic(m),
                          tuple(bin(s).count("1") % 2 for s in range(dim)),
                          tuple(gens))
    module.validate()
    if not is_end_iso(module):
        raise PresentationError("structure map is not bijective")
    return module


def is_end_iso(module: GradedModule) -> bool:
    """Blade images span the full endomorphism algebra (bijectivity)."""
    n = module.form.rank
    d = module.dim
    if (1 << n) != d * d:
        return False
    rows = []
    for mask in range(1 << n):
        mat = clifford_action_matrix(CliffordElement(module.form, {mask: 1}),
                                     list(module.gens), d)
        rows.append([mat[r][c] for r in range(d) for c in range(d)])
    return linalg.rank(rows) == d * d


def twist_rep(module: GradedModule, k: int) -> GradedModule:
    """Scale the even<-odd blocks by k: a module over the k-scaled form."""
    if k < 1:
        raise ValueError("k must be positive")
    g = module.grading
    gens = tuple(
        [[x * k if (g[r], g[c]) == (0, 1) else x for c, x in enumerate(row)]
         for r, row in enumerate(gen)]
        for gen in module.gens)
    out = GradedModule(scale(module.form, k), g, gens)
    out.validate()
    return out


def opposite_module(module: GradedModule) -> GradedModule:
    """Module over the negated form via multiplication by the volume action.

    The grading is flipped when needed so that the new volume element is
    again +1 on the even block.
    """
    eps = module.grading_matrix()
    gens = tuple(linalg.mat_mul(eps, g) for g in module.gens)
    form = scale(module.form, -1)
    for grading in (module.grading, tuple(1 - g for g in module.grading)):
        cand = GradedModule(form, grading, gens)
        if linalg.mat_eq(cand.volume_matrix(), cand.grading_matrix()):
            cand.validate()
            return cand
    raise PresentationError("volume element of the opposite module is not diagonal")


# -- tensor powers with the sign-twisted symmetric-group action ---------------

@dataclass
class TensorPower:
    """E^(x)k with diagonal Clifford generators and graded transpositions."""

    base: GradedModule
    k: int
    grading: tuple         # total degree of each tensor basis vector
    diag_gens: tuple       # Delta(e_j) = sum over copies
    copy_gens: tuple       # copy_gens[c][j]: e_j acting in copy c with grading signs
    adjacents: tuple       # graded swap of slots (c, c+1), c = 0..k-2

    @property
    def dim(self) -> int:
        return len(self.grading)

    def perm_matrix(self, word):
        out = linalg.identity(self.dim)
        for c in word:
            out = linalg.mat_mul(out, self.adjacents[c])
        return out

    def cycle_matrix(self):
        """The graded action of a k-cycle (word tau_1 tau_2 ... tau_{k-1})."""
        return self.perm_matrix(range(self.k - 1))

    def u_matrix(self):
        """The volume element of the k-scaled form, acting diagonally."""
        u = volume_element(scale(self.base.form, self.k))
        return clifford_action_matrix(u, list(self.diag_gens), self.dim)


def tensor_power(module: GradedModule, k: int, caps: Caps = DEFAULT_CAPS) -> TensorPower:
    """Build E^(x)k and verify the twisted-action identities exactly.

    The copy generators anticommute across copies via grading signs on the
    earlier slots, the diagonal generators square to k q, and the graded
    transpositions square to one, satisfy the braid relation, commute at
    distance and commute with the diagonal action.
    """
    if k < 1:
        raise ValueError("k must be positive")
    d = module.dim
    dim = d ** k
    if dim > caps.max_tensor:
        raise CapExceededError(f"tensor dimension {dim} exceeds cap {caps.max_tensor}")
    n = module.form.rank
    basis = list(itertools.product(range(d), repeat=k))
    index = {t: i for i, t in enumerate(basis)}
    g = module.grading
    grading = tuple(sum(g[i] for i in t) % 2 for t in basis)

    def copy_generator(c, j):
        gen = module.gens[j]
        out = linalg.zeros(dim)
        for t in basis:
            sign = Fraction(-1) ** sum(g[t[a]] for a in range(c))
            col = index[t]
            for r in range(d):
                x = gen[r][t[c]]
                if x:
                    u = t[:c] + (r,) + t[c + 1:]
                    out[index[u]][col] = x * sign
        return out

    copy_gens = tuple(tuple(copy_generator(c, j) for j in range(n)) for c in range(k))
    diag_gens = []
    for j in range(n):
        acc = copy_gens[0][j]
        for c in range(1, k):
            acc = linalg.mat_add(acc, copy_gens[c][j])
        diag_gens.append(acc)

    def adjacent(c):
        out = linalg.zeros(dim)
        for t in basis:
            u = t[:c] + (t[c + 1], t[c]) + t[c + 2:]
            out[index[u]][index[t]] = Fraction(-1) ** (g[t[c]] * g[t[c + 1]])
        return out

    adjacents = tuple(adjacent(c) for c in range(k - 1))
    tp = TensorPower(module, k, grading, tuple(diag_gens), copy_gens, adjacents)

    ident = linalg.identity(dim)
    for j in range(n):
        if not linalg.mat_eq(linalg.mat_mul(diag_gens[j], diag_gens[j]),
                             linalg.mat_scale(ident, k * module.form.diag[j])):
            raise PresentationError("diagonal generator does not square to k q")
    for i in range(n):
        for j in range(i + 1, n):
            anti = linalg.mat_add(linalg.mat_mul(diag_gens[i], diag_gens[j]),
                                  linalg.mat_mul(diag_gens[j], diag_gens[i]))
            if any(any(x for x in row) for row in anti):
                raise PresentationError("diagonal generators do not anticommute")
    for s in adjacents:
        if not linalg.mat_eq(linalg.mat_mul(s, s), ident):
            raise PresentationError("graded swap does not square to one")
    for c in range(k - 2):
        lhs = linalg.mat_mul(linalg.mat_mul(adjacents[c], adjacents[c + 1]), adjacents[c])
        rhs = linalg.mat_mul(linalg.mat_mul(adjacents[c + 1], adjacents[c]), adjacents[c + 1])
        if not linalg.mat_eq(lhs, rhs):
            raise PresentationError("graded swaps fail the braid relation")
    for c1 in range(k - 1):
        for c2 in range(c1 + 2, k - 1):
            if not linalg.mat_eq(linalg.mat_mul(adjacents[c1], adjacents[c2]),
                                 linalg.mat_mul(adjacents[c2], adjacents[c1])):
                raise PresentationError("distant graded swaps do not commute")
    for s in adjacents:
        for gmat in diag_gens:
            if not linalg.mat_eq(linalg.mat_mul(s, gmat), linalg.mat_mul(gmat, s)):
                raise PresentationError("swaps do not commute with the diagonal action")
    return tp


# -- symmetric-group characters (Murnaghan-Nakayama) ---------------------------

def partitions(n: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for p in range(min(n, max_part), 0, -1):
        for rest in partitions(n - p, p):
            yield (p,) + rest


@lru_cache(maxsize=None)
def sym_character(lam: tuple, mu: tuple) -> int:
    """chi_lam(mu) by recursive border-strip removal on beta numbers."""
    if not mu:
        return 1 if not lam else 0
    t, rest = mu[0], mu[1:]
    r = len(lam)
    beta = [lam[i] + (r - 1 - i) for i in range(r)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((bset - {b}) | {nb}, reverse=True)
        mlen = len(newbeta)
        newlam = tuple(x for x in
                       (newbeta[i] - (mlen - 1 - i) for i in range(mlen)) if x > 0)
        total += (-1) ** height * sym_character(newlam, rest)
    return total


def cycle_type(perm: tuple) -> tuple:
    seen = [False] * len(perm)
    lengths = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        ln, j = 0, i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            ln += 1
        lengths.append(ln)
    return tuple(sorted(lengths, reverse=True))


def _adjacent_word(perm: tuple) -> list:
    # bubble-sort word; composing the adjacents in word order realizes perm
    arr = list(perm)
    word = []
    changed = True
    while changed:
        changed = False
        for j in range(len(arr) - 1):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                word.append(j)
                changed = True
    return word


# -- Adams via eigenmodules of the cycle --------------------------------------

@dataclass(frozen=True)
class VirtualCyclotomicModule:
    """Graded dimensions of the cycle eigenmodules, one pair per eigenvalue."""

    order: int
    graded_dims: tuple  # ((d0, d1), ...) for eigenvalues w^0 .. w^(k-1)

    @property
    def virtual_dims(self) -> tuple:
        return tuple(d0 - d1 for d0, d1 in self.graded_dims)

    def total(self) -> int:
        return sum(d0 + d1 for d0, d1 in self.graded_dims)

    def value(self, block: int) -> Cyclotomic:
        """sum_j dims[j][block] w^j as a cyclotomic integer."""
        k = self.order
        acc = Cyclotomic.from_const(k, 0)
        for j, pair in enumerate(self.graded_dims):
            acc = acc + Cyclotomic.zeta(k, j) * Fraction(pair[block])
        return acc


def _cyc_scaled(order, mat, scalar: Cyclotomic):
    return [[scalar * x for x in row] for row in mat]


def _cyc_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _as_integer(x) -> int:
    if isinstance(x, Cyclotomic):
        x = x.descend()
    x = Fraction(x)
    if x.denominator != 1:
        raise PresentationError(f"expected an integer, got {x}")
    return x.numerator


def cycle_eigen_projectors(tp: TensorPower, caps: Caps = DEFAULT_CAPS):
    """Exact eigenprojectors (1/k) sum_l w^(-jl) T^l of the cycle operator.

    Verified idempotent, mutually orthogonal and resolving the identity.
    """
    k = tp.k
    dim = tp.dim
    t_pows = [linalg.identity(dim)]
    cyc = tp.cycle_matrix()
    for _ in range(k - 1):
        t_pows.append(linalg.mat_mul(t_pows[-1], cyc))
    if not linalg.mat_eq(linalg.mat_mul(t_pows[-1], cyc), linalg.identity(dim)):
        raise PresentationError("cycle operator order is not k")

    zero = Cyclotomic.from_const(k, 0, caps=caps)
    projectors = []
    for j in range(k):
        acc = [[zero] * dim for _ in range(dim)]
        for l in range(k):
            scalar = Cyclotomic.zeta(k, (-j * l) % k, caps=caps) * Fraction(1, k)
            acc = _cyc_add(acc, _cyc_scaled(k, t_pows[l], scalar))
        projectors.append(acc)

    for i, p in enumerate(projectors):
        if not _cyc_mat_eq(linalg.mat_mul(p, p), p):
            raise PresentationError("eigenprojector is not idempotent")
        for j in range(i + 1, k):
            prod = linalg.mat_mul(p, projectors[j])
            if any(any(bool(x) for x in row) for row in prod):
                raise PresentationError("eigenprojectors are not orthogonal")
    total = projectors[0]
    for p in projectors[1:]:
        total = _cyc_add(total, p)
    if not _cyc_mat_eq(total, [[Cyclotomic.from_const(k, 1 if r == c else 0)
                                for c in range(dim)] for r in range(dim)]):
        raise PresentationError("eigenprojectors do not resolve the identity")
    return projectors


def _cyc_mat_eq(a, b) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def adams_bar(module: GradedModule, k: int, caps: Caps = DEFAULT_CAPS) -> VirtualCyclotomicModule:
    """Graded eigenmodule dimensions of the cycle operator on E^(x)k."""
    tp = tensor_power(module, k, caps=caps)
    return adams_bar_of(tp, caps=caps)


def adams_bar_of(tp: TensorPower, caps: Caps = DEFAULT_CAPS) -> VirtualCyclotomicModule:
    projectors = cycle_eigen_projectors(tp, caps=caps)
    keep0 = [g == 0 for g in tp.grading]
    keep1 = [g == 1 for g in tp.grading]
    dims = []
    for p in projectors:
        d0 = _as_integer(linalg.masked_trace(p, keep0))
        d1 = _as_integer(linalg.masked_trace(p, keep1))
        if d0 < 0 or d1 < 0:
            raise PresentationError("negative eigenmodule dimension")
        dims.append((d0, d1))
    vcm = VirtualCyclotomicModule(tp.k, tuple(dims))
    if vcm.total() != tp.dim:
        raise PresentationError("eigenmodule dimensions do not sum to the total")
    return vcm


# -- Adams via characters of the symmetric group -------------------------------

@dataclass(frozen=True)
class IsotypicPiece:
    partition: tuple
    dim: int
    char_at_cycle: int
    graded_mult: tuple  # multiplicity of the irreducible in each block


@dataclass(frozen=True)
class AdamsCharacter:
    k: int
    pieces: tuple
    psi_graded: tuple  # (psi on block 0, psi on block 1)


def isotypic_projectors(tp: TensorPower):
    """(partition, dim, chi at the k-cycle, projector) for each irreducible."""
    k = tp.k
    perms = list(itertools.permutations(range(k)))
    mats = {}
    for perm in perms:
        mats[perm] = tp.perm_matrix(_adjacent_word(perm))
    cycle_class = tuple([k])
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    out = []
    for lam in partitions(k):
        dim_pi = sym_character(lam, (1,) * k)
        chi_c = sym_character(lam, cycle_class)
        acc = linalg.zeros(tp.dim)
        for perm in perms:
            chi = sym_character(lam, cycle_type(perm))
            if chi:
                acc = linalg.mat_add(acc, linalg.mat_scale(mats[perm], Fraction(chi)))
        proj = linalg.mat_scale(acc, Fraction(dim_pi, fact))
        if not linalg.mat_eq(linalg.mat_mul(proj, proj), proj):
            raise PresentationError("isotypic projector is not idempotent")
        out.append((lam, dim_pi, chi_c, proj))
    return out


def adams_character(module: GradedModule, k: int, caps: Caps = DEFAULT_CAPS) -> AdamsCharacter:
    """Character-weighted isotypic decomposition of E^(x)k, per graded block."""
    tp = tensor_power(module, k, caps=caps)
    return adams_character_of(tp)


def adams_character_of(tp: TensorPower) -> AdamsCharacter:
    keep0 = [g == 0 for g in tp.grading]
    keep1 = [g == 1 for g in tp.grading]
    pieces = []
    psi0 = psi1 = 0
    check0 = check1 = 0
    for lam, dim_pi, chi_c, proj in isotypic_projectors(tp):
        h0 = linalg.masked_trace(proj, keep0) / dim_pi
        h1 = linalg.masked_trace(proj, keep1) / dim_pi
        h0, h1 = _as_integer(h0), _as_integer(h1)
        pieces.append(IsotypicPiece(lam, dim_pi, chi_c, (h0, h1)))
        psi0 += chi_c * h0
        psi1 += chi_c * h1
        check0 += dim_pi * h0
        check1 += dim_pi * h1
    if check0 != sum(keep0) or check1 != sum(keep1):
        raise PresentationError("isotypic decomposition does not preserve dimension")
    return AdamsCharacter(tp.k, tuple(pieces), (psi0, psi1))


# -- Morita reduction ----------------------------------------------------------

@dataclass(frozen=True)
class MoritaResult:
    """Graded multiplicity of the standard module inside a presented module."""

    w0: int
    w1: int

    @property
    def multiplicity(self) -> int:
        return self.w0 + self.w1

    @property
    def virtual_rank(self) -> int:
        return self.w0 - self.w1

    def __int__(self):
        return self.multiplicity


def morita_reduce(grading, u_matrix, presentation: GradedModule,
                  projector=None, isotypic_dim: int = 1) -> MoritaResult:
    """Multiplicity of the standard graded module E in (the image of) N.

    Writing N = E (x) W with the algebra element of square one acting as
    +1 on E0 and -1 on E1, the graded multiplicities of W are recovered
    from traces of commuting projectors; all four consistency equations
    and the dimension arithmetic are checked.
    """
    e0, e1 = presentation.dims
    dim = len(grading)
    half = Fraction(1, 2)
    ident = linalg.identity(dim)
    proj = projector if projector is not None else ident
    q_plus = linalg.mat_scale(linalg.mat_add(ident, u_matrix), half)
    q_minus = linalg.mat_scale(linalg.mat_sub(ident, u_matrix), half)
    a = linalg.mat_mul(proj, q_plus)
    b = linalg.mat_mul(proj, q_minus)
    keep0 = [g == 0 for g in grading]
    keep1 = [g == 1 for g in grading]
    t0p = linalg.masked_trace(a, keep0) / isotypic_dim
    t0m = linalg.masked_trace(b, keep0) / isotypic_dim
    t1p = linalg.masked_trace(a, keep1) / isotypic_dim
    t1m = linalg.masked_trace(b, keep1) / isotypic_dim

    def ratio(x, y):
        if y == 0 or x % y:
            raise PresentationError("module dimension is not a multiple of dim E")
        return x // y

    w0 = ratio(_as_integer(t0p), e0)
    w1 = ratio(_as_integer(t1p), e0)
    if w0 != ratio(_as_integer(t1m), e1) or w1 != ratio(_as_integer(t0m), e1):
        raise PresentationError("graded blocks disagree with the presentation")
    return MoritaResult(w0, w1)


# -- the module-level Bott class ------------------------------------------------

def hermitian_bott_of(module: GradedModule, k: int, caps: Caps = DEFAULT_CAPS) -> Fraction:
    """Bott class of a presented module: power, Adams weights, reduction."""
    tp = tensor_power(module, k, caps=caps)
    twist = twist_rep(module, k)
    if not is_end_iso(twist):
        raise PresentationError("twisted structure map is not bijective")
    u_n = tp.u_matrix()
    rho = 0
    for lam, dim_pi, chi_c, proj in isotypic_projectors(tp):
        if chi_c == 0:
            continue
        w = morita_reduce(tp.grading, u_n, twist, projector=proj, isotypic_dim=dim_pi)
        rho += chi_c * w.virtual_rank
    return Fraction(rho)


def hermitian_bott(m: int, k: int, caps: Caps = DEFAULT_CAPS) -> Fraction:
    """The Bott class of m hyperbolic planes; equals k^m."""
    return hermitian_bott_of(spinor_rep(m, caps=caps), k, caps=caps)


def opposite_form_check(m: int, k: int, caps: Caps = DEFAULT_CAPS) -> bool:
    """The class is insensitive to negating the quadratic form."""
    module = spinor_rep(m, caps=caps)
    return (hermitian_bott_of(module, k, caps=caps)
            == hermitian_bott_of(opposite_module(module), k, caps=caps))


def psi_bar_graded(module: GradedModule, k: int, caps: Caps = DEFAULT_CAPS) -> tuple:
    """(block-0, block-1) integers of the eigenmodule Adams operation."""
    vcm = adams_bar(module, k, caps=caps)
    return tuple(_as_integer(vcm.value(block)) for block in (0, 1)), vcm


def adams_module_report(m: int, k: int, caps: Caps = DEFAULT_CAPS) -> dict:
    """One-run summary for a hyperbolic module: both Adams routes and the class."""
    module = spinor_rep(m, caps=caps)
    psi_bar, vcm = psi_bar_graded(module, k, caps=caps)
    char = adams_character(module, k, caps=caps)
    rho = hermitian_bott_of(module, k, caps=caps)
    return {
        "m": m,
        "k": k,
        "eigen_dims": [list(p) for p in vcm.graded_dims],
        "psi_bar": list(psi_bar),
        "psi_char": list(char.psi_graded),
        "rho_k": str(rho),
        "expected": str(k ** m),
    }
