"""Short local algebras presented by structure constants.

A short local algebra A over a field k has radical J with J^3 = 0 and
A/J = k.  We fix the basis (1, v_1..v_e, w_1..w_a) where the v_i span a
complement of J^2 in J and the w_m span J^2.  The whole multiplication is
then encoded by the structure constants c_{ijm} with

    v_i * v_j = sum_m c_{ijm} w_m,

since products involving J^2 vanish.  The Hilbert type of A is the pair
(e, a) = (dim J/J^2, dim J^2).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import BadParams, SurjectivityViolation
from .linalg import Field, Matrix, Subspace, kernel_basis, rref, solve


class ShortAlgebra:
    """A short local algebra given by its structure constants.

    ``structure`` maps 1-based index triples (i, j, m) to non-zero scalars;
    absent triples are zero.  Instances are immutable after construction
    and safe to share between threads.
    """

    def __init__(self, field: Field, e: int, a: int,
                 structure: Mapping[tuple[int, int, int], object],
                 name: str = "", tags: Optional[dict] = None):
        if e < 0 or a < 0:
            raise BadParams("e and a must be natural numbers")
        self.field = field
        self.e = e
        self.a = a
        self.name = name
        self.tags = dict(tags or {})
        struct = {}
        for (i, j, m), c in structure.items():
            if not (1 <= i <= e and 1 <= j <= e and 1 <= m <= a):
                raise BadParams(f"structure index {(i, j, m)} out of range")
            c = field.of(c)
            if c:
                struct[(i, j, m)] = c
        self.structure = struct
        self._report = None
        self._product_kernel = None
        self._sections = None

    @property
    def dim(self) -> int:
        return 1 + self.e + self.a

    @property
    def hilbert_type(self) -> tuple[int, int]:
        return (self.e, self.a)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShortAlgebra):
            return NotImplemented
        return (self.field, self.e, self.a, self.structure) == \
               (other.field, other.e, other.a, other.structure)

    def __hash__(self) -> int:
        return hash((self.field, self.e, self.a, tuple(sorted(self.structure.items()))))

    def __repr__(self) -> str:
        label = self.name or "ShortAlgebra"
        return f"{label}(e={self.e}, a={self.a} over {self.field})"

    # -- multiplication ------------------------------------------------

    def structure_matrix(self) -> Matrix:
        """The e^2 x a matrix whose row (i,j) lists c_{ij1..ija}."""
        zero = self.field.zero()
        rows = []
        for i in range(1, self.e + 1):
            for j in range(1, self.e + 1):
                rows.append([self.structure.get((i, j, m), zero) for m in range(1, self.a + 1)])
        return Matrix(self.field, rows)

    def product_kernel(self) -> list[tuple]:
        """Basis of the linear relations among the products v_i v_j.

        These are the vectors lam with sum_{ij} lam_{ij} v_i v_j = 0; any
        module action matrices must satisfy the same combinations.
        """
        if self._product_kernel is None:
            self._product_kernel = kernel_basis(self.structure_matrix().transpose())
        return self._product_kernel

    def sections(self) -> list[tuple]:
        """For each m, a vector s with w_m = sum_{ij} s_{ij} v_i v_j."""
        if self._sections is None:
            ct = self.structure_matrix().transpose()
            out = []
            for m in range(self.a):
                target = [self.field.zero()] * self.a
                target[m] = self.field.one()
                s = solve(ct, target)
                if s is None:
                    raise SurjectivityViolation(
                        "products do not span the degree-two part")
                out.append(s)
            self._sections = out
        return self._sections

    def unit(self) -> tuple:
        z, o = self.field.zero(), self.field.one()
        return tuple([o] + [z] * (self.e + self.a))

    def basis_vector(self, k: int) -> tuple:
        z, o = self.field.zero(), self.field.one()
        v = [z] * self.dim
        v[k] = o
        return tuple(v)

    def generator(self, i: int) -> tuple:
        """The element v_i as a coordinate vector (1-based i)."""
        if not 1 <= i <= self.e:
            raise BadParams(f"generator index {i} out of range")
        return self.basis_vector(i)

    def mul(self, u: Sequence, v: Sequence) -> tuple:
        """Product of two elements in the fixed basis (1, v_1.., w_1..)."""
        zero = self.field.zero()
        e, a = self.e, self.a
        out = [zero] * self.dim
        u0, v0 = u[0], v[0]
        out[0] = u0 * v0
        for i in range(1, 1 + e):
            t = u0 * v[i] + u[i] * v0
            if t:
                out[i] = t
        for m in range(1 + e, self.dim):
            t = u0 * v[m] + u[m] * v0
            if t:
                out[m] = t
        for i in range(1, 1 + e):
            if u[i]:
                for j in range(1, 1 + e):
                    if v[j]:
                        ij = u[i] * v[j]
                        for m in range(1, a + 1):
                            c = self.structure.get((i, j, m))
                            if c:
                                out[e + m] = out[e + m] + ij * c
        return tuple(out)

    def left_mult_matrix(self, u: Sequence) -> Matrix:
        """Matrix of x -> u*x in the fixed basis."""
        cols = [self.mul(u, self.basis_vector(k)) for k in range(self.dim)]
        return Matrix(self.field, list(zip(*cols)))

    def right_mult_matrix(self, u: Sequence) -> Matrix:
        """Matrix of x -> x*u in the fixed basis."""
        cols = [self.mul(self.basis_vector(k), u) for k in range(self.dim)]
        return Matrix(self.field, list(zip(*cols)))

    def is_commutative(self) -> bool:
        for (i, j, m), c in self.structure.items():
            if self.structure.get((j, i, m), self.field.zero()) != c:
                return False
        return True

    # -- derived algebras ----------------------------------------------

    def opposite(self) -> "ShortAlgebra":
        """The opposite algebra: c'_{ijm} = c_{jim}.

        Right A-modules are exactly left modules over the opposite.
        """
        struct = {(j, i, m): c for (i, j, m), c in self.structure.items()}
        if self.name.endswith("^op"):
            name = self.name[:-3]
        elif self.name:
            name = self.name + "^op"
        else:
            name = ""
        tags = {"generators": self.tags.get("generators")} if "generators" in self.tags else {}
        return ShortAlgebra(self.field, self.e, self.a, struct, name=name, tags=tags)

    # -- validation ----------------------------------------------------

    def left_socle(self) -> Subspace:
        """{z in A : J z = 0}, computed from the regular representation."""
        if self.e == 0:
            return Subspace.full(self.field, self.dim)
        stacked = Matrix.vstack([self.left_mult_matrix(self.generator(i))
                                 for i in range(1, self.e + 1)])
        return Subspace.from_vectors(self.field, self.dim, kernel_basis(stacked))

    def right_socle(self) -> Subspace:
        """{z in A : z J = 0}."""
        if self.e == 0:
            return Subspace.full(self.field, self.dim)
        stacked = Matrix.vstack([self.right_mult_matrix(self.generator(i))
                                 for i in range(1, self.e + 1)])
        return Subspace.from_vectors(self.field, self.dim, kernel_basis(stacked))

    def validate(self) -> "AlgebraReport":
        """Check the structural invariants and summarize the algebra."""
        if self._report is not None:
            return self._report
        _, rk, _ = rref(self.structure_matrix())
        if rk < self.a:
            raise SurjectivityViolation(
                f"degree-two products span only {rk} of {self.a} dimensions")
        left = self.left_socle().dim
        right = self.right_socle().dim
        report = AlgebraReport(
            name=self.name,
            hilbert_type=(self.e, self.a),
            dimension=self.dim,
            commutative=self.is_commutative(),
            left_socle_dim=left,
            right_socle_dim=right,
            self_injective=(left == 1),
            j2_equals_left_socle=(self.a == left),
            j2_equals_right_socle=(self.a == right),
        )
        if self.a > left or self.a > right:
            raise SurjectivityViolation("J^2 is not contained in the socle")
        self._report = report
        return report

    def is_self_injective(self) -> bool:
        return self.validate().self_injective


@dataclass(frozen=True)
class AlgebraReport:
    """Validation summary for a short local algebra."""

    name: str
    hilbert_type: tuple[int, int]
    dimension: int
    commutative: bool
    left_socle_dim: int
    right_socle_dim: int
    self_injective: bool
    j2_equals_left_socle: bool
    j2_equals_right_socle: bool

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "hilbert_type": list(self.hilbert_type),
            "dimension": self.dimension,
            "commutative": self.commutative,
            "left_socle_dim": self.left_socle_dim,
            "right_socle_dim": self.right_socle_dim,
            "self_injective": self.self_injective,
            "j2_equals_left_socle": self.j2_equals_left_socle,
            "j2_equals_right_socle": self.j2_equals_right_socle,
        }


def algebra_from_relations(field: Field, generators: Sequence[str],
                           relations: Sequence[Mapping[tuple[int, int], object]],
                           *, commutative: bool = False, name: str = "",
                           tags: Optional[dict] = None) -> ShortAlgebra:
    """Build a short local algebra from degree-two relations.

    Each relation is a linear combination of products v_i v_j (1-based
    index pairs mapping to coefficients) declared to vanish.  The algebra
    is k + V + (V (x) V)/R where R is the span of the relations; degree-3
    relations are implied by J^3 = 0 and must not be passed here.  The
    products not eliminated by row reduction become the w-basis of J^2.
    """
    e = len(generators)
    zero = field.zero()
    one = field.one()

    def pidx(i: int, j: int) -> int:
        return (i - 1) * e + (j - 1)

    rel_rows = []
    for rel in relations:
        row = [zero] * (e * e)
        for (i, j), c in rel.items():
            if not (1 <= i <= e and 1 <= j <= e):
                raise BadParams(f"relation index {(i, j)} out of range")
            row[pidx(i, j)] = row[pidx(i, j)] + field.of(c)
        rel_rows.append(row)
    if commutative:
        for i in range(1, e + 1):
            for j in range(i + 1, e + 1):
                row = [zero] * (e * e)
                row[pidx(i, j)] = one
                row[pidx(j, i)] = -one
                rel_rows.append(row)

    span = Subspace.from_vectors(field, e * e, rel_rows)
    free = [c for c in range(e * e) if c not in set(span.pivots)]
    a = len(free)
    free_pos = {c: m for m, c in enumerate(free)}

    structure = {}
    for i in range(1, e + 1):
        for j in range(1, e + 1):
            vec = [zero] * (e * e)
            vec[pidx(i, j)] = one
            red = span.reduce(vec)
            for c, val in enumerate(red):
                if val:
                    structure[(i, j, free_pos[c] + 1)] = val

    all_tags = dict(tags or {})
    all_tags.setdefault("generators", tuple(generators))
    all_tags["j2_products"] = tuple(
        f"{generators[c // e]}*{generators[c % e]}" for c in free)
    return ShortAlgebra(field, e, a, structure, name=name, tags=all_tags)
