"""Projective covers, syzygies, approximations, duals, transpose and Ext.

Everything here works with minimal constructions: projective covers lift a
basis of the top, so kernels are first syzygies, Betti numbers are the
ranks along the minimal resolution, and Ext groups are read off the
Hom-complex of that resolution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import InvariantViolation, ResourceCapExceeded
from .linalg import Matrix, Subspace, kernel_basis, kernel_subspace, rref
from .modules import (AModule, HomSpace, ModuleMap, free_module, hom_basis, hom_space,
                      left_regular_module, module_from_subspace, quotient, zero_module)

#: Dimension cap for intermediate modules; Betti numbers grow exponentially
#: in general, so resolutions abort cleanly instead of thrashing.
DEFAULT_CAP = 5000

#: Default depth for the bounded "for all i >= 1" predicates.
DEFAULT_BOUND = 10


@dataclass(frozen=True)
class Presentation:
    """A projective cover P -> M together with its kernel (first syzygy)."""

    module: AModule
    cover_rank: int
    cover_map: ModuleMap
    kernel: AModule
    kernel_embedding: ModuleMap


@dataclass(frozen=True)
class BettiTable:
    """Betti numbers t_0..t_N of a module: t_i = dim top of the i-th syzygy."""

    module: AModule
    values: tuple[int, ...]


@dataclass(frozen=True)
class BoundedVerdict:
    """Result of a bounded vanishing check.

    ``holds`` means the property was verified for 1 <= i <= bound; a
    failure records the first index where it breaks.  No unbounded
    certification is claimed.
    """

    holds: bool
    bound: int
    failed_at: Optional[int] = None

    def __bool__(self) -> bool:
        return self.holds


def projective_cover(M: AModule, cap: int = DEFAULT_CAP) -> Presentation:
    """The projective cover A^t -> M with t = dim top M, and its kernel."""
    alg = M.algebra
    t = M.top_dim()
    P = free_module(alg, t)
    if P.dim > cap:
        raise ResourceCapExceeded(P.dim, cap)
    lifts = M.top_lift()
    cols = []
    for m in lifts:
        cols.append(tuple(m))
        for i in range(alg.e):
            cols.append(M.actions[i].apply(m))
        for Y in M.w_actions():
            cols.append(Y.apply(m))
    cover = Matrix(M.field, list(zip(*cols)), cols=P.dim) if M.dim else \
        Matrix(M.field, [], cols=P.dim)
    ker = kernel_subspace(cover)
    if P.dim - ker.dim != M.dim:
        raise InvariantViolation("projective cover is not surjective")
    for v in ker.basis:
        if any(v[k * alg.dim] for k in range(t)):
            raise InvariantViolation("cover kernel escapes the radical (not minimal)")
    omega, embedding = module_from_subspace(P, ker, check=False)
    cover_map = ModuleMap(P, M, cover)
    return Presentation(module=M, cover_rank=t, cover_map=cover_map,
                        kernel=omega, kernel_embedding=embedding)


def syzygy(M: AModule, cap: int = DEFAULT_CAP) -> AModule:
    """The first syzygy: kernel of a projective cover of M."""
    return projective_cover(M, cap=cap).kernel


def syzygy_power(M: AModule, n: int, cap: int = DEFAULT_CAP) -> AModule:
    out = M
    for _ in range(n):
        out = syzygy(out, cap=cap)
    return out


def betti(M: AModule, n: int, cap: int = DEFAULT_CAP) -> BettiTable:
    """Betti numbers t_0..t_n of M along the minimal resolution."""
    values = [M.top_dim()]
    cur = M
    for _ in range(n):
        cur = syzygy(cur, cap=cap)
        values.append(cur.top_dim())
    return BettiTable(module=M, values=tuple(values))


class MinimalResolution:
    """Lazily extended minimal projective resolution of a module."""

    def __init__(self, M: AModule, cap: int = DEFAULT_CAP):
        self.module = M
        self.cap = cap
        self.steps: list[Presentation] = []

    def extend_to(self, depth: int) -> None:
        """Ensure presentations of the syzygies up to index ``depth``."""
        while len(self.steps) <= depth:
            cur = self.module if not self.steps else self.steps[-1].kernel
            self.steps.append(projective_cover(cur, cap=self.cap))

    def rank(self, i: int) -> int:
        self.extend_to(i)
        return self.steps[i].cover_rank

    def syzygy_module(self, i: int) -> AModule:
        if i == 0:
            return self.module
        self.extend_to(i - 1)
        return self.steps[i - 1].kernel

    def boundary_elements(self, j: int) -> list[list[tuple]]:
        """The map P_j -> P_{j-1} as a matrix of algebra elements.

        Entry [l][k] is the element g with d(unit_l) having k-th component
        g; all entries lie in the radical (minimality).
        """
        if j < 1:
            raise ValueError("boundaries start at index 1")
        self.extend_to(j)
        alg = self.module.algebra
        d = self.steps[j - 1].kernel_embedding.compose(self.steps[j].cover_map)
        t_prev = self.steps[j - 1].cover_rank
        out = []
        for l in range(self.steps[j].cover_rank):
            col = d.matrix.col(l * alg.dim)
            out.append([tuple(col[k * alg.dim:(k + 1) * alg.dim]) for k in range(t_prev)])
        return out


def _hom_complex_matrix(res: MinimalResolution, N: AModule, j: int) -> Matrix:
    """Matrix of Hom(P_{j-1}, N) -> Hom(P_j, N) under Hom(A^t, N) = N^t."""
    alg = res.module.algebra
    D = res.boundary_elements(j)
    t_j = len(D)
    t_prev = res.steps[j - 1].cover_rank
    dn = N.dim
    blocks = []
    for l in range(t_j):
        row = [N.element_action(D[l][k]) for k in range(t_prev)]
        blocks.append(row)
    rows = []
    for l in range(t_j):
        for r in range(dn):
            line = []
            for k in range(t_prev):
                line.extend(blocks[l][k].data[r] if dn else [])
            rows.append(line)
    return Matrix(N.field, rows, cols=t_prev * dn)


def ext_dims(M: AModule, N: AModule, imax: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Dimensions of Ext^0..Ext^imax(M, N) from the minimal resolution."""
    if M.algebra != N.algebra:
        raise InvariantViolation("Ext requires modules over the same algebra")
    if M.dim == 0 or N.dim == 0:
        return [0] * (imax + 1)
    res = MinimalResolution(M, cap=cap)
    res.extend_to(imax + 1)
    dn = N.dim
    ranks = [rref(_hom_complex_matrix(res, N, j))[1] for j in range(1, imax + 2)]
    out = [res.rank(0) * dn - ranks[0]]
    for i in range(1, imax + 1):
        val = res.rank(i) * dn - ranks[i] - ranks[i - 1]
        if val < 0:
            raise InvariantViolation("negative Ext dimension; resolution is inconsistent")
        out.append(val)
    return out


def ext_dim(M: AModule, N: AModule, i: int, cap: int = DEFAULT_CAP) -> int:
    """dim Ext^i(M, N); Ext^0 is Hom(M, N)."""
    return ext_dims(M, N, i, cap=cap)[i]


# -- duals -------------------------------------------------------------


@dataclass(frozen=True)
class DualData:
    """Hom(M, A) as a left module over the opposite algebra.

    ``homs`` is the hom space whose basis the dual module's coordinates
    refer to.
    """

    module: AModule
    homs: HomSpace


def dual_data(M: AModule) -> DualData:
    alg = M.algebra
    op = alg.opposite()
    reg = left_regular_module(alg)
    homs = hom_space(M, reg)
    z = homs.dim
    if z == 0:
        return DualData(zero_module(op), homs)
    right_mults = [alg.right_mult_matrix(alg.generator(i)) for i in range(1, alg.e + 1)]
    acts = []
    for R in right_mults:
        cols = [homs.coords(R * f.matrix) for f in homs.maps]
        acts.append(Matrix(M.field, list(zip(*cols)), cols=z))
    dual = AModule(op, z, acts, check=False)
    return DualData(dual, homs)


def a_dual(M: AModule) -> AModule:
    """M* = Hom(M, A) with its right A-action, as a module over A^op."""
    return dual_data(M).module


def eval_map(M: AModule) -> ModuleMap:
    """The evaluation map M -> M**, ev(m)(f) = f(m)."""
    d1 = dual_data(M)
    d2 = dual_data(d1.module)
    ddim = d2.module.dim
    cols = []
    for c in range(M.dim):
        # ev(basis_c) in Hom(M*, A^op-regular): the matrix whose column j
        # is f_j(basis_c).
        mat_cols = [f.matrix.col(c) for f in d1.homs.maps]
        if not mat_cols:
            cols.append(tuple())
            continue
        flat = tuple(x for row in zip(*mat_cols) for x in row)
        cols.append(d2.homs.flat.coords(flat))
    matrix = Matrix(M.field, list(zip(*cols)), cols=M.dim) if ddim else \
        Matrix(M.field, [], cols=M.dim)
    bidual_over_original = AModule(M.algebra, d2.module.dim, d2.module.actions, check=False)
    return ModuleMap(M, bidual_over_original, matrix)


def is_torsionless(M: AModule) -> bool:
    """True iff the evaluation map M -> M** is injective.

    Equivalently, the homomorphisms into A jointly separate points.
    """
    if M.dim == 0:
        return True
    reg = left_regular_module(M.algebra)
    fs = hom_basis(M, reg)
    if not fs:
        return False
    stacked = Matrix.vstack([f.matrix for f in fs])
    return len(kernel_basis(stacked)) == 0


def is_reflexive(M: AModule) -> bool:
    """True iff the evaluation map M -> M** is bijective."""
    ev = eval_map(M)
    return ev.source.dim == ev.target.dim and ev.is_injective()


def transpose(M: AModule, cap: int = DEFAULT_CAP) -> AModule:
    """The transpose: cokernel of the dualized minimal presentation.

    From the minimal presentation A^{t_1} -> A^{t_0} -> M -> 0, dualizing
    gives a map of free right modules; the transpose is its cokernel,
    realized as a left module over the opposite algebra.
    """
    alg = M.algebra
    op = alg.opposite()
    if M.dim == 0:
        return zero_module(op)
    res = MinimalResolution(M, cap=cap)
    res.extend_to(1)
    t0, t1 = res.rank(0), res.rank(1)
    if t1 == 0:
        return zero_module(op)
    D = res.boundary_elements(1)
    blocks = [[alg.left_mult_matrix(D[l][k]) for k in range(t0)] for l in range(t1)]
    big = Matrix.vstack([Matrix.hstack(row) for row in blocks])
    F1 = free_module(op, t1)
    image = Subspace.from_vectors(M.field, F1.dim,
                                  [big.col(j) for j in range(big.cols)])
    tr, _ = quotient(F1, image)
    return tr


# -- minimal left approximations and their cokernels -------------------


@dataclass(frozen=True)
class ApproximationData:
    """A minimal left approximation u: M -> A^z and its cokernel."""

    approximation: ModuleMap
    rank: int
    cokernel: AModule
    injective: bool


def minimal_left_approximation(M: AModule) -> tuple[ModuleMap, int]:
    """Left approximation of M into a minimal number of copies of A.

    The rank z is the dimension of the top of M* over the opposite
    algebra; the map stacks lifts of a basis of that top.  A factoring
    certificate checks that every homomorphism M -> A factors through it.
    """
    alg = M.algebra
    data = dual_data(M)
    dual = data.module
    z = dual.top_dim()
    P = free_module(alg, z)
    if z == 0:
        u = ModuleMap(M, P, Matrix(M.field, [], cols=M.dim))
        return u, 0
    gs = []
    for lam in dual.top_lift():
        acc = Matrix.zeros(M.field, alg.dim, M.dim)
        for j, c in enumerate(lam):
            if c:
                acc = acc + data.homs.maps[j].matrix.scale(c)
        gs.append(acc)
    u = ModuleMap(M, P, Matrix.vstack(gs))
    # Certificate: each f in the hom basis solves f = sum_k r(b) g_k.
    factor_cols = []
    for k in range(z):
        for bidx in range(alg.dim):
            R = alg.right_mult_matrix(alg.basis_vector(bidx))
            comp = R * gs[k]
            factor_cols.append(tuple(x for row in comp.data for x in row))
    factor_space = Subspace.from_vectors(M.field, alg.dim * M.dim, factor_cols)
    for f in data.homs.maps:
        flat = tuple(x for row in f.matrix.data for x in row)
        if not factor_space.contains(flat):
            raise InvariantViolation("left approximation fails its factoring certificate")
    return u, z


def mho_step(M: AModule) -> ApproximationData:
    """One cosyzygy step: cokernel of the minimal left approximation."""
    u, z = minimal_left_approximation(M)
    P = u.target
    img = u.image()
    coker, _ = quotient(P, img)
    return ApproximationData(approximation=u, rank=z, cokernel=coker,
                             injective=img.dim == M.dim)


def mho(M: AModule) -> AModule:
    """The cokernel of a minimal left approximation of M.

    When M is torsionless this is the cosyzygy fitting in the exact
    sequence 0 -> M -> A^z -> mho(M) -> 0; non-injectivity of the
    approximation is reported by :func:`mho_step`.
    """
    return mho_step(M).cokernel


def mho_power(M: AModule, n: int) -> AModule:
    out = M
    for _ in range(n):
        out = mho(out)
    return out


# -- stable homs and Gorenstein-style predicates ------------------------


def stable_hom_dim(M: AModule, N: AModule, cap: int = DEFAULT_CAP) -> int:
    """dim of Hom(M, N) modulo maps factoring through a projective.

    A map factors through some projective iff it factors through the
    projective cover of N, so the factoring subspace is the image of
    composition with that cover.
    """
    hb = hom_basis(M, N)
    if not hb:
        return 0
    pres = projective_cover(N, cap=cap)
    through = hom_basis(M, pres.cover_map.source)
    vecs = []
    for h in through:
        comp = pres.cover_map.matrix * h.matrix
        vecs.append(tuple(x for row in comp.data for x in row))
    factoring = Subspace.from_vectors(M.field, N.dim * M.dim, vecs)
    return len(hb) - factoring.dim


def is_semi_gp(M: AModule, bound: int = DEFAULT_BOUND, cap: int = DEFAULT_CAP) -> BoundedVerdict:
    """Bounded check that Ext^i(M, A) = 0 for 1 <= i <= bound.

    The scan stops at the first non-vanishing group, so modules that fail
    early never build the deep (often exponentially large) resolution.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if M.dim == 0:
        return BoundedVerdict(True, bound)
    reg = left_regular_module(M.algebra)
    res = MinimalResolution(M, cap=cap)
    dn = reg.dim
    hranks: dict[int, int] = {}

    def hrank(j: int) -> int:
        if j not in hranks:
            hranks[j] = rref(_hom_complex_matrix(res, reg, j))[1]
        return hranks[j]

    for i in range(1, bound + 1):
        res.extend_to(i + 1)
        val = res.rank(i) * dn - hrank(i + 1) - hrank(i)
        if val < 0:
            raise InvariantViolation("negative Ext dimension; resolution is inconsistent")
        if val:
            return BoundedVerdict(False, bound, failed_at=i)
    return BoundedVerdict(True, bound)


def is_inf_torsionfree(M: AModule, bound: int = DEFAULT_BOUND,
                       cap: int = DEFAULT_CAP) -> BoundedVerdict:
    """Bounded check that the transpose is semi-Gorenstein-projective.

    The transpose lives over the opposite algebra; the Ext-vanishing is
    checked there.
    """
    tr = transpose(M, cap=cap)
    return is_semi_gp(tr, bound=bound, cap=cap)


def is_gp(M: AModule, bound: int = DEFAULT_BOUND, cap: int = DEFAULT_CAP) -> BoundedVerdict:
    """Bounded Gorenstein-projectivity: semi-GP and infinity-torsionfree."""
    semi = is_semi_gp(M, bound=bound, cap=cap)
    if not semi:
        return semi
    return is_inf_torsionfree(M, bound=bound, cap=cap)
