"""Bridge between Loewy-length <= 2 modules and Kronecker representations.

A representation of the e-Kronecker quiver is a pair of spaces with e
parallel maps.  A Loewy-length <= 2 module M yields one on (top M, JM)
with the induced generator actions; conversely a representation pushes
down to a module with block actions [[0, 0], [phi, 0]].  Over a
self-injective algebra of Hilbert type (e, 1) the syzygy corresponds to a
reflection functor built from the multiplication form on J/J^2.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import ShortAlgebra
from .errors import (AlgebraMismatch, BadParams, InvariantViolation, LoewyTooLong,
                     NotSelfInjective, WrongHilbertType)
from .homology import DEFAULT_CAP, syzygy
from .linalg import Matrix, kernel_basis, rref
from .modules import AModule, find_isomorphism, hom_dim, simple_multiplicity


@dataclass(frozen=True)
class KroneckerRep:
    """A representation (V_0, V_1; phi_1..phi_e) of the e-Kronecker quiver."""

    e: int
    dim0: int
    dim1: int
    maps: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.maps) != self.e:
            raise BadParams(f"expected {self.e} maps, got {len(self.maps)}")
        for phi in self.maps:
            if phi.rows != self.dim1 or phi.cols != self.dim0:
                raise BadParams("Kronecker map has wrong shape")

    @property
    def dim_vector(self) -> tuple[int, int]:
        return (self.dim0, self.dim1)


def tilde(M: AModule) -> KroneckerRep:
    """The Kronecker representation (top M, JM; induced actions)."""
    if M.loewy_length() > 2:
        raise LoewyTooLong("the Kronecker shadow needs Loewy length <= 2")
    rad = M.radical()
    lifts = M.top_lift()
    maps = []
    for X in M.actions:
        cols = [rad.coords(X.apply(t)) for t in lifts]
        maps.append(Matrix(M.field, list(zip(*cols)), cols=len(lifts)))
    return KroneckerRep(e=M.algebra.e, dim0=len(lifts), dim1=rad.dim, maps=tuple(maps))


def rep_as_module(rep: KroneckerRep, alg: ShortAlgebra) -> AModule:
    """The Loewy-length <= 2 module with block actions [[0,0],[phi,0]].

    Valid over any short algebra with matching e, since all products of
    the block matrices vanish.
    """
    if rep.e != alg.e:
        raise AlgebraMismatch("representation and algebra have different e")
    d = rep.dim0 + rep.dim1
    zero = alg.field.zero()
    acts = []
    for phi in rep.maps:
        rows = [[zero] * d for _ in range(d)]
        for r in range(rep.dim1):
            for c in range(rep.dim0):
                rows[rep.dim0 + r][c] = phi.data[r][c]
        acts.append(Matrix(alg.field, rows, cols=d))
    return AModule(alg, d, acts, check=False)


def push_down(rep: KroneckerRep, alg: ShortAlgebra) -> AModule:
    """Push a Kronecker representation down to a radical-square-zero algebra."""
    if alg.a != 0:
        raise AlgebraMismatch("push-down targets an algebra with J^2 = 0")
    return rep_as_module(rep, alg)


def rep_dual(rep: KroneckerRep) -> KroneckerRep:
    """The vertex-swapping duality (transposed maps).

    It exchanges the preprojective and preinjective families.
    """
    return KroneckerRep(e=rep.e, dim0=rep.dim1, dim1=rep.dim0,
                        maps=tuple(phi.transpose() for phi in rep.maps))


def kronecker_hom_dim(repA: KroneckerRep, repB: KroneckerRep) -> int:
    """dim Hom of Kronecker representations, by the intertwining equations.

    A homomorphism is a pair (g0: A_0 -> B_0, g1: A_1 -> B_1) with
    phiB_i g0 = g1 phiA_i for every arrow.
    """
    if repA.e != repB.e:
        raise AlgebraMismatch("representations of different Kronecker quivers")
    n0 = repB.dim0 * repA.dim0
    n1 = repB.dim1 * repA.dim1
    if n0 + n1 == 0:
        return 0
    field = (repA.maps[0] if repA.maps else repB.maps[0]).field
    zero = field.zero()
    rows = []
    # Unknowns: g0 flattened row-major first, then g1.
    for phiA, phiB in zip(repA.maps, repB.maps):
        for r in range(repB.dim1):
            for c in range(repA.dim0):
                row = [zero] * (n0 + n1)
                for k in range(repB.dim0):
                    coef = phiB.data[r][k]
                    if coef:
                        row[k * repA.dim0 + c] = row[k * repA.dim0 + c] + coef
                for k in range(repA.dim1):
                    coef = phiA.data[k][c]
                    if coef:
                        row[n0 + r * repA.dim1 + k] = row[n0 + r * repA.dim1 + k] - coef
                if any(row):
                    rows.append(row)
    if not rows:
        return n0 + n1
    return len(kernel_basis(Matrix(field, rows, cols=n0 + n1)))


def hom_decomposition_check(M: AModule, N: AModule) -> bool:
    """Check dim Hom(M, N) = dim Hom(tilde M, tilde N) + t(M) * |JN|.

    This is the hom decomposition along the push-down: module maps split
    into graded Kronecker maps and arbitrary top-to-radical maps.
    """
    if M.loewy_length() > 2 or N.loewy_length() > 2:
        raise LoewyTooLong("hom decomposition needs Loewy length <= 2")
    lhs = hom_dim(M, N)
    rhs = kronecker_hom_dim(tilde(M), tilde(N)) + M.top_dim() * N.radical().dim
    return lhs == rhs


def multiplication_form(alg: ShortAlgebra) -> Matrix:
    """The bilinear form beta(v_i, v_j) = coefficient of v_i v_j in J^2 = k.

    Defined for Hilbert type (e, 1); self-injectivity makes it
    non-degenerate.
    """
    if alg.a != 1:
        raise WrongHilbertType("the multiplication form needs a = 1")
    zero = alg.field.zero()
    rows = [[alg.structure.get((i, j, 1), zero) for j in range(1, alg.e + 1)]
            for i in range(1, alg.e + 1)]
    return Matrix(alg.field, rows, cols=alg.e)


def sigma_reflection(alg: ShortAlgebra, rep: KroneckerRep) -> KroneckerRep:
    """The reflection (V_0, V_1; phi) -> (Ker Phi, V_0; beta-induced maps).

    Phi assembles the phi_i into a single map k^e (x) V_0 -> V_1; the new
    maps feed the kernel components through the multiplication form.  On
    dimension vectors (without simple projective summands) this acts as
    (x, y) -> (e x - y, x).
    """
    if rep.e != alg.e:
        raise AlgebraMismatch("representation and algebra have different e")
    if alg.a != 1:
        raise WrongHilbertType("the reflection needs Hilbert type (e, 1)")
    if not alg.is_self_injective():
        raise NotSelfInjective("the reflection needs a self-injective algebra")
    beta = multiplication_form(alg)
    if rref(beta)[1] != alg.e:
        raise InvariantViolation("multiplication form is degenerate")
    e, d0, d1 = rep.e, rep.dim0, rep.dim1
    field = alg.field
    zero = field.zero()
    # Phi: coordinates (i, u) -> sum over phi_i columns.
    if d0 == 0:
        return KroneckerRep(e=e, dim0=0, dim1=0,
                            maps=tuple(Matrix.zeros(field, 0, 0) for _ in range(e)))
    rows = []
    for r in range(d1):
        line = []
        for i in range(e):
            line.extend(rep.maps[i].data[r])
        rows.append(line)
    phi_big = Matrix(field, rows, cols=e * d0)
    kernel = kernel_basis(phi_big)
    nk = len(kernel)
    new_maps = []
    for j in range(e):
        cols = []
        for kv in kernel:
            acc = [zero] * d0
            for i in range(e):
                coef = beta.data[j][i]
                if coef:
                    block = kv[i * d0:(i + 1) * d0]
                    acc = [s + coef * x if x else s for s, x in zip(acc, block)]
            cols.append(acc)
        new_maps.append(Matrix(field, list(zip(*cols)), cols=nk))
    return KroneckerRep(e=e, dim0=nk, dim1=d0, maps=tuple(new_maps))


def verify_sigma_omega(alg: ShortAlgebra, M: AModule, seed: int = 0,
                       cap: int = DEFAULT_CAP) -> bool:
    """Check that the reflection matches the syzygy on a module.

    Pushes sigma(tilde M) back down and compares with Omega M up to
    isomorphism.  Modules with a simple direct summand are excluded: the
    simple module lifts ambiguously to the Kronecker side, where the
    reflection kills the simple projective.
    """
    if M.loewy_length() > 2:
        raise LoewyTooLong("the comparison needs Loewy length <= 2")
    if simple_multiplicity(M) > 0:
        raise BadParams("excluded case: module has a simple direct summand")
    reflected = rep_as_module(sigma_reflection(alg, tilde(M)), alg)
    om = syzygy(M, cap=cap)
    return find_isomorphism(reflected, om, seed=seed).found
