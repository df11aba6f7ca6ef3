"""Finite-length left modules over a short local algebra.

A module of dimension d is given by the e action matrices of the radical
generators v_1..v_e.  The action of J^2 is derived (w_m acts as the
corresponding combination of products of generator actions), so a tuple of
matrices is a valid module iff it satisfies the linear relations among the
products v_i v_j and kills all triple products.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import ShortAlgebra
from .errors import (AlgebraMismatch, BadParams, DimensionMismatch, InvariantViolation,
                     LoewyTooLong, ZeroModule)
from .linalg import DEFAULT_POOL, Matrix, Subspace, kernel_basis, kernel_subspace, rref


class DimVec(tuple):
    """Dimension vector (t, s) = (dim top M, dim JM) of a Loewy-length <= 2 module."""

    def __new__(cls, t: int, s: int):
        return super().__new__(cls, (t, s))

    @property
    def t(self) -> int:
        return self[0]

    @property
    def s(self) -> int:
        return self[1]

    @property
    def total(self) -> int:
        return self[0] + self[1]

    def __repr__(self) -> str:
        return f"({self[0]},{self[1]})"


class AModule:
    """A finite-length left module over a :class:`ShortAlgebra`."""

    def __init__(self, algebra: ShortAlgebra, dim: int, actions: Sequence[Matrix],
                 check: bool = True):
        if len(actions) != algebra.e:
            raise BadParams(f"expected {algebra.e} action matrices, got {len(actions)}")
        for X in actions:
            if X.rows != dim or X.cols != dim:
                raise DimensionMismatch("action matrix has wrong shape")
        self.algebra = algebra
        self.dim = dim
        self.actions = tuple(actions)
        self.free_rank: Optional[int] = None
        self._radical: Optional[Subspace] = None
        self._socle: Optional[Subspace] = None
        self._w_actions: Optional[tuple] = None
        self._loewy: Optional[int] = None
        if check:
            validate_module(self)

    def __repr__(self) -> str:
        return f"AModule(dim {self.dim} over {self.algebra.name or self.algebra!r})"

    @property
    def field(self):
        return self.algebra.field

    def is_zero(self) -> bool:
        return self.dim == 0

    def generator_action(self, i: int) -> Matrix:
        """Action matrix of v_i (1-based)."""
        return self.actions[i - 1]

    def w_actions(self) -> tuple:
        """Derived action matrices of the J^2 basis elements."""
        if self._w_actions is None:
            alg = self.algebra
            zero = Matrix.zeros(self.field, self.dim, self.dim)
            out = []
            for s in alg.sections():
                acc = zero
                for idx, coef in enumerate(s):
                    if coef:
                        i, j = divmod(idx, alg.e)
                        acc = acc + (self.actions[i] * self.actions[j]).scale(coef)
                out.append(acc)
            self._w_actions = tuple(out)
        return self._w_actions

    def element_action(self, u: Sequence) -> Matrix:
        """Action matrix of an algebra element given in the fixed basis."""
        alg = self.algebra
        acc = Matrix.identity(self.field, self.dim).scale(u[0]) if u[0] \
            else Matrix.zeros(self.field, self.dim, self.dim)
        for i in range(alg.e):
            if u[1 + i]:
                acc = acc + self.actions[i].scale(u[1 + i])
        if any(u[1 + alg.e:]):
            for m, Y in enumerate(self.w_actions()):
                if u[1 + alg.e + m]:
                    acc = acc + Y.scale(u[1 + alg.e + m])
        return acc

    def act(self, u: Sequence, vec: Sequence) -> tuple:
        """Apply an algebra element to a module vector."""
        alg = self.algebra
        zero = self.field.zero()
        out = [u[0] * x if u[0] else zero for x in vec]
        for i in range(alg.e):
            c = u[1 + i]
            if c:
                img = self.actions[i].apply(vec)
                out = [s + c * x if x else s for s, x in zip(out, img)]
        for m in range(alg.a):
            c = u[1 + alg.e + m]
            if c:
                img = self.w_actions()[m].apply(vec)
                out = [s + c * x if x else s for s, x in zip(out, img)]
        return tuple(out)

    # -- structural subspaces -------------------------------------------

    def radical(self) -> Subspace:
        """JM, the span of the images of the generator actions."""
        if self._radical is None:
            vecs = []
            for X in self.actions:
                for j in range(self.dim):
                    col = X.col(j)
                    if any(col):
                        vecs.append(col)
            self._radical = Subspace.from_vectors(self.field, self.dim, vecs)
        return self._radical

    def socle(self) -> Subspace:
        """{m in M : Jm = 0}, the largest semisimple submodule."""
        if self._socle is None:
            if self.algebra.e == 0 or self.dim == 0:
                self._socle = Subspace.full(self.field, self.dim)
            else:
                stacked = Matrix.vstack(self.actions)
                self._socle = Subspace.from_vectors(self.field, self.dim,
                                                    kernel_basis(stacked))
        return self._socle

    def top_dim(self) -> int:
        return self.dim - self.radical().dim

    def loewy_length(self) -> int:
        """Least n with J^n M = 0 (0 for the zero module, at most 3)."""
        if self._loewy is None:
            if self.dim == 0:
                self._loewy = 0
            elif self.radical().dim == 0:
                self._loewy = 1
            else:
                rad = self.radical()
                j2_zero = all(
                    not any(X.apply(v))
                    for X in self.actions for v in rad.basis)
                self._loewy = 2 if j2_zero else 3
        return self._loewy

    def top_lift(self) -> list[tuple]:
        """Deterministic vectors lifting a basis of top M = M/JM."""
        return self.radical().complement()


def validate_module(M: AModule) -> None:
    """Check the module axioms; raises BadParams when they fail.

    Verifies that the product relations of the algebra hold among the
    action matrices and that all triple products vanish (J^3 = 0).
    """
    alg = M.algebra
    products = {}
    for i in range(alg.e):
        for j in range(alg.e):
            products[(i, j)] = M.actions[i] * M.actions[j]
    for lam in alg.product_kernel():
        acc = Matrix.zeros(M.field, M.dim, M.dim)
        for idx, coef in enumerate(lam):
            if coef:
                i, j = divmod(idx, alg.e)
                acc = acc + products[(i, j)].scale(coef)
        if not acc.is_zero():
            raise BadParams("action matrices violate a product relation")
    for (i, j), P in products.items():
        if P.is_zero():
            continue
        for k in range(alg.e):
            if not (P * M.actions[k]).is_zero():
                raise BadParams("triple product of generator actions is non-zero")


@dataclass(frozen=True)
class ModuleMap:
    """An A-linear map, stored as a (target dim) x (source dim) matrix."""

    source: AModule
    target: AModule
    matrix: Matrix

    def __post_init__(self):
        if self.source.algebra != self.target.algebra:
            raise AlgebraMismatch("map between modules over different algebras")
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise DimensionMismatch("module map matrix has wrong shape")

    def is_intertwiner(self) -> bool:
        for Xs, Xt in zip(self.source.actions, self.target.actions):
            if Xt * self.matrix != self.matrix * Xs:
                return False
        return True

    def compose(self, other: "ModuleMap") -> "ModuleMap":
        """self after other."""
        if other.target is not self.source and other.target.dim != self.source.dim:
            raise DimensionMismatch("maps do not compose")
        return ModuleMap(other.source, self.target, self.matrix * other.matrix)

    def apply(self, vec: Sequence) -> tuple:
        return self.matrix.apply(vec)

    def image(self) -> Subspace:
        cols = [self.matrix.col(j) for j in range(self.matrix.cols)]
        return Subspace.from_vectors(self.target.field, self.target.dim, cols)

    def kernel(self) -> Subspace:
        return Subspace.from_vectors(self.source.field, self.source.dim,
                                     kernel_basis(self.matrix))

    def rank(self) -> int:
        return rref(self.matrix)[1]

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dim == self.target.dim and self.is_injective()


# -- constructors ------------------------------------------------------


def simple_module(alg: ShortAlgebra) -> AModule:
    """The unique simple module S = A/J."""
    z = Matrix.zeros(alg.field, 1, 1)
    return AModule(alg, 1, [z] * alg.e, check=False)


def semisimple_module(alg: ShortAlgebra, n: int) -> AModule:
    z = Matrix.zeros(alg.field, n, n)
    return AModule(alg, n, [z] * alg.e, check=False)


def zero_module(alg: ShortAlgebra) -> AModule:
    z = Matrix.zeros(alg.field, 0, 0)
    return AModule(alg, 0, [z] * alg.e, check=False)


def left_regular_module(alg: ShortAlgebra) -> AModule:
    """A as a left module over itself, in the basis (1, v_1.., w_1..)."""
    acts = [alg.left_mult_matrix(alg.generator(i)) for i in range(1, alg.e + 1)]
    M = AModule(alg, alg.dim, acts, check=False)
    M.free_rank = 1
    return M


def free_module(alg: ShortAlgebra, t: int) -> AModule:
    """A^t with block-diagonal regular action.

    Coordinates are grouped per copy: coordinate k*dim(A) + u is the basis
    element b_u of the k-th copy.
    """
    if t < 0:
        raise BadParams("free rank must be natural")
    if t == 0:
        return zero_module(alg)
    reg = left_regular_module(alg)
    acts = [Matrix.block_diag([X] * t) for X in reg.actions]
    M = AModule(alg, alg.dim * t, acts, check=False)
    M.free_rank = t
    return M


def module_from_subspace(M: AModule, space: Subspace, check: bool = True) -> tuple[AModule, ModuleMap]:
    """An action-stable subspace as a module, with its embedding into M.

    The subspace basis is row reduced, so the coordinates of a member
    vector are just its entries at the pivot columns; the induced action
    matrices are read off without solving any system.
    """
    if check:
        for X in M.actions:
            for v in space.basis:
                if not space.contains(X.apply(v)):
                    raise BadParams("subspace is not stable under the module action")
    acts = []
    for X in M.actions:
        cols = [space.coords(X.apply(v)) for v in space.basis]
        acts.append(Matrix(M.field, list(zip(*cols)), cols=space.dim))
    sub = AModule(M.algebra, space.dim, acts, check=False)
    emb = ModuleMap(sub, M, Matrix(M.field, list(zip(*space.basis)) if space.dim else
                                   [[] for _ in range(M.dim)]))
    return sub, emb


def submodule(M: AModule, vectors: Sequence[Sequence]) -> tuple[AModule, ModuleMap]:
    """The submodule spanned by the given vectors (must be action-stable)."""
    space = Subspace.from_vectors(M.field, M.dim, vectors)
    return module_from_subspace(M, space, check=True)


def generated_submodule(M: AModule, vectors: Sequence[Sequence]) -> tuple[AModule, ModuleMap]:
    """The submodule generated by the vectors: their span closed under A."""
    vecs = [tuple(v) for v in vectors]
    closure = list(vecs)
    for v in vecs:
        for X in M.actions:
            img = X.apply(v)
            if any(img):
                closure.append(img)
        for Y in M.w_actions():
            img = Y.apply(v)
            if any(img):
                closure.append(img)
    space = Subspace.from_vectors(M.field, M.dim, closure)
    # One closure round suffices: J*(Jv) lies in J^2 v and J^2*(Jv) = 0.
    for X in M.actions:
        for v in space.basis:
            if not space.contains(X.apply(v)):
                raise InvariantViolation("generated span failed to close")
    return module_from_subspace(M, space, check=False)


def quotient(M: AModule, sub: Subspace | Sequence[Sequence]) -> tuple[AModule, ModuleMap]:
    """The quotient of M by an action-stable subspace, with its projection.

    Quotient coordinates are the non-pivot coordinates of the canonical
    representative (reduction modulo the subspace).
    """
    if not isinstance(sub, Subspace):
        sub = Subspace.from_vectors(M.field, M.dim, sub)
    for X in M.actions:
        for v in sub.basis:
            if not sub.contains(X.apply(v)):
                raise BadParams("subspace is not stable under the module action")
    pivset = set(sub.pivots)
    free = [c for c in range(M.dim) if c not in pivset]
    qdim = len(free)
    acts = []
    for X in M.actions:
        cols = []
        for c in free:
            img = sub.reduce(X.col(c))
            cols.append([img[f] for f in free])
        acts.append(Matrix(M.field, list(zip(*cols)), cols=qdim))
    Q = AModule(M.algebra, qdim, acts, check=False)
    reduced_basis = []
    for c in range(M.dim):
        basis_vec = [M.field.zero()] * M.dim
        basis_vec[c] = M.field.one()
        reduced_basis.append(sub.reduce(basis_vec))
    proj_rows = [[reduced_basis[c][f] for c in range(M.dim)] for f in free]
    proj = ModuleMap(M, Q, Matrix(M.field, proj_rows, cols=M.dim))
    return Q, proj


def direct_sum(M: AModule, N: AModule) -> AModule:
    if M.algebra != N.algebra:
        raise AlgebraMismatch("direct sum over different algebras")
    acts = [Matrix.block_diag([X, Y]) for X, Y in zip(M.actions, N.actions)]
    return AModule(M.algebra, M.dim + N.dim, acts, check=False)


def radical_module(alg: ShortAlgebra) -> AModule:
    """J as a left module (the radical of the regular module)."""
    reg = left_regular_module(alg)
    sub, _ = module_from_subspace(reg, reg.radical(), check=False)
    return sub


def cyclic_submodule(alg: ShortAlgebra, coords: Sequence) -> AModule:
    """A*x inside the regular module, for a radical element x.

    ``coords`` has length 1 + e + a in the fixed basis and must have zero
    unit coordinate; then A*x = k x + J x since J^3 = 0.
    """
    x = tuple(alg.field.of(c) for c in coords)
    if len(x) != alg.dim:
        raise BadParams(f"element coordinates must have length {alg.dim}")
    if x[0]:
        raise BadParams("cyclic submodule expects a radical element (zero unit coordinate)")
    reg = left_regular_module(alg)
    sub, _ = generated_submodule(reg, [x])
    return sub


def m_alpha(alg: ShortAlgebra, alpha) -> AModule:
    """The module M(alpha) over a lambda_c preset algebra.

    Basis (g, g', g'', g_1..g_c) with x g = alpha g', y g = g', z g = g''
    and u_i g = g_i; the radical generators kill everything else.
    """
    if alg.tags.get("preset") != "lambda_c":
        raise BadParams("m_alpha is defined for lambda_c preset algebras")
    c = int(alg.tags["c"])
    al = alg.field.of(alpha)
    d = 3 + c
    zero = alg.field.zero()
    one = alg.field.one()

    def action(images: dict[int, object]) -> Matrix:
        cols = [[zero] * d for _ in range(d)]
        for row, val in images.items():
            cols[0][row] = val
        return Matrix(alg.field, list(zip(*cols)))

    acts = [action({1: al}), action({1: one}), action({2: one})]
    for i in range(1, c + 1):
        acts.append(action({2 + i: one}))
    return AModule(alg, d, acts)


def random_module(alg: ShortAlgebra, n_gens: int, n_rels: int, seed: int,
                  pool: Sequence = DEFAULT_POOL) -> AModule:
    """Quotient of A^{n_gens} by n_rels random radical elements.

    Deterministic for a fixed seed (Mersenne Twister); the result is a
    valid module by construction.
    """
    if n_gens < 1:
        raise BadParams("need at least one generator")
    rng = random.Random(seed)
    elems = [alg.field.of(x) for x in pool]
    F = free_module(alg, n_gens)
    zero = alg.field.zero()
    rels = []
    for _ in range(n_rels):
        vec = []
        for _ in range(n_gens):
            vec.append(zero)
            vec.extend(rng.choice(elems) for _ in range(alg.dim - 1))
        rels.append(tuple(vec))
    closure = list(rels)
    for v in rels:
        for X in F.actions:
            img = X.apply(v)
            if any(img):
                closure.append(img)
    space = Subspace.from_vectors(alg.field, F.dim, closure)
    Q, _ = quotient(F, space)
    return Q


def mod_j_squared(M: AModule) -> AModule:
    """M / J^2 M, the largest Loewy-length <= 2 quotient of M."""
    vecs = []
    for X in M.actions:
        for v in M.radical().basis:
            img = X.apply(v)
            if any(img):
                vecs.append(img)
    space = Subspace.from_vectors(M.field, M.dim, vecs)
    Q, _ = quotient(M, space)
    return Q


# -- structure of Loewy length <= 2 modules ----------------------------


def dim_vector(M: AModule) -> DimVec:
    """(t, s) = (dim top M, dim JM); only for Loewy length <= 2."""
    if M.loewy_length() > 2:
        raise LoewyTooLong("dimension vector requires Loewy length <= 2")
    return DimVec(M.top_dim(), M.radical().dim)


def is_bipartite(M: AModule) -> bool:
    """True iff M is non-zero with soc M = JM."""
    if M.dim == 0:
        return False
    soc, rad = M.socle(), M.radical()
    return soc.dim == rad.dim and soc.contains_space(rad)


def simple_multiplicity(M: AModule) -> int:
    """Multiplicity of S as a direct summand, for Loewy length <= 2.

    Such a module is the direct sum of a bipartite module and S^w with
    w = dim soc M - dim JM.
    """
    if M.loewy_length() > 2:
        raise LoewyTooLong("simple multiplicity requires Loewy length <= 2")
    w = M.socle().dim - M.radical().dim
    if w < 0:
        raise InvariantViolation("socle smaller than radical at Loewy length <= 2")
    return w


# -- hom spaces --------------------------------------------------------


@dataclass(frozen=True)
class HomSpace:
    """A basis of Hom_A(M, N) with coordinates on flattened matrices.

    ``flat`` spans the row-major flattenings of the basis matrices; its
    pseudo-reduced form makes expressing a given homomorphism in the basis
    a coordinate lookup.
    """

    source: AModule
    target: AModule
    maps: tuple[ModuleMap, ...]
    flat: Subspace

    @property
    def dim(self) -> int:
        return len(self.maps)

    def flatten(self, mat: Matrix) -> tuple:
        return tuple(x for row in mat.data for x in row)

    def coords(self, mat: Matrix) -> tuple:
        """Coordinates of a homomorphism matrix in this basis."""
        return self.flat.coords(self.flatten(mat))


def hom_space(M: AModule, N: AModule) -> HomSpace:
    """Solve the intertwining equations for a basis of Hom_A(M, N)."""
    if M.algebra != N.algebra:
        raise AlgebraMismatch("hom between modules over different algebras")
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return HomSpace(M, N, tuple(), Subspace.zero(M.field, dn * dm))
    zero = M.field.zero()
    rows = []
    for Xs, Xt in zip(M.actions, N.actions):
        # Equation (r, c): sum_k Xt[r,k] F[k,c] - sum_k F[r,k] Xs[k,c] = 0,
        # with unknown F[k,c] at index k*dm + c (row-major flattening).
        for r in range(dn):
            t_row = Xt.data[r]
            for c in range(dm):
                row = [zero] * (dn * dm)
                for k, coef in enumerate(t_row):
                    if coef:
                        row[k * dm + c] = row[k * dm + c] + coef
                for k in range(dm):
                    coef = Xs.data[k][c]
                    if coef:
                        row[r * dm + k] = row[r * dm + k] - coef
                if any(row):
                    rows.append(row)
    system = Matrix(M.field, rows, cols=dn * dm)
    space = kernel_subspace(system)
    maps = []
    for vec in space.basis:
        mat = [list(vec[k * dm:(k + 1) * dm]) for k in range(dn)]
        maps.append(ModuleMap(M, N, Matrix(M.field, mat, cols=dm)))
    return HomSpace(M, N, tuple(maps), space)


def hom_basis(M: AModule, N: AModule) -> list[ModuleMap]:
    """A basis of Hom_A(M, N)."""
    return list(hom_space(M, N).maps)


def hom_dim(M: AModule, N: AModule) -> int:
    return len(hom_basis(M, N))


def end_dim(M: AModule) -> int:
    return len(hom_basis(M, M))


def is_solid(M: AModule) -> bool:
    """Solidity test: dim End M = 1 + |top M| * |rad M|.

    A solid module is one whose endomorphisms all act as scalars on the
    socle; solid modules are indecomposable.
    """
    if M.dim == 0:
        raise ZeroModule("solidity is undefined for the zero module")
    if M.loewy_length() > 2:
        raise LoewyTooLong("solidity requires Loewy length <= 2")
    return end_dim(M) == 1 + M.top_dim() * M.radical().dim


# -- isomorphism search ------------------------------------------------


@dataclass(frozen=True)
class IsoSearch:
    """Outcome of an isomorphism search.

    A negative answer is certified only when a dimension obstruction
    exists; otherwise it means "no isomorphism found (probabilistic)".
    """

    found: bool
    certified: bool
    witness: Optional[ModuleMap] = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.found


def _invertible(mat: Matrix) -> bool:
    return mat.rows == mat.cols and rref(mat)[1] == mat.rows


def find_isomorphism(M: AModule, N: AModule, seed: int = 0, tries: int = 64,
                     det_points: Optional[int] = None) -> IsoSearch:
    """Search for an invertible A-map M -> N.

    Tries each hom-basis element, then seeded random combinations with
    small coefficients, and over Q also a generic combination evaluated at
    the integer points 1, 2, 3, ...; any hit certifies the isomorphism.
    """
    if M.algebra != N.algebra:
        raise AlgebraMismatch("isomorphism between modules over different algebras")
    if M.dim != N.dim:
        return IsoSearch(False, True, note="dimension mismatch")
    if M.dim == 0:
        return IsoSearch(True, True, witness=ModuleMap(M, N, Matrix.zeros(M.field, 0, 0)))
    fwd = hom_basis(M, N)
    bwd = hom_basis(N, M)
    if len(fwd) != len(bwd):
        return IsoSearch(False, True, note="hom dimension mismatch")
    if not fwd:
        return IsoSearch(False, True, note="no non-zero homomorphisms")
    for h in fwd:
        if _invertible(h.matrix):
            return IsoSearch(True, True, witness=h)
    rng = random.Random(seed)
    elems = [M.field.of(x) for x in DEFAULT_POOL]
    for _ in range(tries):
        acc = Matrix.zeros(M.field, N.dim, M.dim)
        for h in fwd:
            c = rng.choice(elems)
            if c:
                acc = acc + h.matrix.scale(c)
        if _invertible(acc):
            return IsoSearch(True, True, witness=ModuleMap(M, N, acc))
    if M.field.is_rationals:
        bound = det_points if det_points is not None else 2 * len(fwd) + 8
        for point in range(1, bound + 1):
            xval = M.field.of(point)
            acc = Matrix.zeros(M.field, N.dim, M.dim)
            power = M.field.one()
            for h in fwd:
                acc = acc + h.matrix.scale(power)
                power = power * xval
            if _invertible(acc):
                return IsoSearch(True, True, witness=ModuleMap(M, N, acc))
    return IsoSearch(False, False, note="no isomorphism found (probabilistic)")


def is_isomorphic(M: AModule, N: AModule, seed: int = 0) -> bool:
    return find_isomorphism(M, N, seed=seed).found
