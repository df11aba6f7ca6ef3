"""Exact dense linear algebra over the rationals and prime fields.

Scalars are either arbitrary-precision rationals (``gmpy2.mpq`` when
available, ``fractions.Fraction`` otherwise; both keep values in lowest
terms with positive denominator and print as ``"3/2"`` / ``"-1"``) or
residues mod a prime wrapped in :class:`Fp`.  All arithmetic is exact;
there is no floating point anywhere in this package.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import BadParams, DimensionMismatch

try:
    from gmpy2 import mpq as _mpq
except ImportError:  # pragma: no cover - gmpy2 is an optional accelerator
    _mpq = None

#: Rational constructor: accepts ints, "p/q" strings and other rationals.
Rational = _mpq if _mpq is not None else Fraction


class Fp:
    """A residue mod a prime p, stored in the range [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def __add__(self, other: "Fp") -> "Fp":
        return Fp(self.v + other.v, self.p)

    def __sub__(self, other: "Fp") -> "Fp":
        return Fp(self.v - other.v, self.p)

    def __mul__(self, other: "Fp") -> "Fp":
        return Fp(self.v * other.v, self.p)

    def __truediv__(self, other: "Fp") -> "Fp":
        return Fp(self.v * pow(other.v, -1, self.p), self.p)

    def __neg__(self) -> "Fp":
        return Fp(-self.v, self.p)

    def __bool__(self) -> bool:
        return self.v != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.p, self.v))

    def __repr__(self) -> str:
        return f"Fp({self.v}, {self.p})"

    def __str__(self) -> str:
        return str(self.v)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Field:
    """Ground field descriptor: the rationals (characteristic 0) or F_p."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p != 0 and not (p < 2**31 and _is_prime(p)):
            raise BadParams(f"characteristic must be 0 or a prime < 2^31, got {p}")

    @staticmethod
    def rationals() -> "Field":
        return Field(0)

    @staticmethod
    def prime(p: int) -> "Field":
        return Field(p)

    @property
    def kind(self) -> str:
        return "Q" if self.characteristic == 0 else "Fp"

    @property
    def is_rationals(self) -> bool:
        return self.characteristic == 0

    def zero(self):
        return Rational(0) if self.characteristic == 0 else Fp(0, self.characteristic)

    def one(self):
        return Rational(1) if self.characteristic == 0 else Fp(1, self.characteristic)

    def of(self, x):
        """Coerce an int, string ("p/q" or decimal), rational or Fp element."""
        p = self.characteristic
        if p == 0:
            if isinstance(x, Fp):
                raise BadParams("cannot coerce a prime-field residue into Q")
            return Rational(x) if not isinstance(x, str) else Rational(x.strip())
        if isinstance(x, Fp):
            if x.p != p:
                raise BadParams(f"residue mod {x.p} used in F_{p}")
            return x
        if isinstance(x, int):
            return Fp(x, p)
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction) or (_mpq is not None and isinstance(x, type(_mpq(0)))):
            num, den = int(x.numerator), int(x.denominator)
            return Fp(num, p) / Fp(den, p)
        raise BadParams(f"cannot coerce {x!r} into F_{p}")

    def format(self, x) -> str:
        return str(x)

    def __str__(self) -> str:
        return "Q" if self.characteristic == 0 else f"F{self.characteristic}"


QQ = Field.rationals()

#: Default entry pool for seeded random matrices and search coefficients.
DEFAULT_POOL = (-2, -1, 0, 1, 2)


class Matrix:
    """An immutable dense matrix with exact entries.

    Stored row-major as a tuple of row tuples.  Multiplication walks only
    the non-zero entries of each row, so products with the very sparse
    structural matrices that dominate this package stay cheap.
    """

    __slots__ = ("field", "rows", "cols", "data")

    def __init__(self, field: Field, data: Sequence[Sequence], cols: Optional[int] = None):
        self.field = field
        self.data = tuple(tuple(row) for row in data)
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else (cols or 0)
        for row in self.data:
            if len(row) != self.cols:
                raise DimensionMismatch("ragged rows")

    @staticmethod
    def from_rows(field: Field, rows: Iterable[Iterable], cols: Optional[int] = None) -> "Matrix":
        return Matrix(field, [[field.of(x) for x in row] for row in rows], cols=cols)

    @staticmethod
    def zeros(field: Field, rows: int, cols: int) -> "Matrix":
        z = field.zero()
        return Matrix(field, [[z] * cols for _ in range(rows)], cols=cols)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        z, o = field.zero(), field.one()
        return Matrix(field, [[o if i == j else z for j in range(n)] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.data == other.data

    def __hash__(self) -> int:
        return hash((self.field, self.data))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols} over {self.field})"

    def is_zero(self) -> bool:
        return all(not x for row in self.data for x in row)

    def entry(self, i: int, j: int):
        return self.data[i][j]

    def row(self, i: int) -> tuple:
        return self.data[i]

    def col(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "Matrix":
        if self.rows == 0:
            return Matrix(self.field, [[] for _ in range(self.cols)], cols=0)
        return Matrix(self.field, list(zip(*self.data)), cols=self.rows)

    def __neg__(self) -> "Matrix":
        return Matrix(self.field, [[-x for x in row] for row in self.data], cols=self.cols)

    def __add__(self, other: "Matrix") -> "Matrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix(self.field, [[a + b for a, b in zip(r1, r2)]
                                   for r1, r2 in zip(self.data, other.data)], cols=self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, [[c * x for x in row] for row in self.data], cols=self.cols)

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = self.field.zero()
        out = []
        bdata = other.data
        for row in self.data:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a:
                    brow = bdata[k]
                    acc = [s + a * b if b else s for s, b in zip(acc, brow)]
            out.append(acc)
        return Matrix(self.field, out, cols=other.cols)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise DimensionMismatch("vector length mismatch")
        zero = self.field.zero()
        out = []
        for row in self.data:
            s = zero
            for a, v in zip(row, vec):
                if a and v:
                    s = s + a * v
            out.append(s)
        return tuple(out)

    @staticmethod
    def hstack(blocks: Sequence["Matrix"]) -> "Matrix":
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise DimensionMismatch("hstack row mismatch")
        return Matrix(blocks[0].field,
                      [sum((list(b.data[i]) for b in blocks), []) for i in range(rows)],
                      cols=sum(b.cols for b in blocks))

    @staticmethod
    def vstack(blocks: Sequence["Matrix"]) -> "Matrix":
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise DimensionMismatch("vstack column mismatch")
        return Matrix(blocks[0].field, [row for b in blocks for row in b.data], cols=cols)

    @staticmethod
    def block_diag(blocks: Sequence["Matrix"]) -> "Matrix":
        field = blocks[0].field
        zero = field.zero()
        total_r = sum(b.rows for b in blocks)
        total_c = sum(b.cols for b in blocks)
        out = [[zero] * total_c for _ in range(total_r)]
        r0 = c0 = 0
        for b in blocks:
            for i, row in enumerate(b.data):
                out[r0 + i][c0:c0 + b.cols] = row
            r0 += b.rows
            c0 += b.cols
        return Matrix(field, out, cols=total_c)


def _rref_rows(field: Field, rows: list, ncols: int) -> tuple[list, list]:
    """In-place reduced row echelon form; returns (rows, pivot columns)."""
    one = field.one()
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][c]
        if lead != one:
            rows[r] = [x / lead for x in rows[r]]
        rr = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rr)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int, tuple[int, ...]]:
    """Reduced row echelon form: returns (reduced, rank, pivot columns)."""
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.data], m.cols)
    return Matrix(m.field, rows, cols=m.cols), len(pivots), tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> list[tuple]:
    """Basis of the right null space of ``m``.

    Each basis vector carries the entry 1 at "its" free column and 0 at
    every other free column, so the coordinates of any kernel vector in
    this basis can be read off at the free columns.
    """
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.data], m.cols)
    zero, one = m.field.zero(), m.field.one()
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            if rows[r][fc]:
                v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return basis


def kernel_subspace(m: Matrix) -> "Subspace":
    """The right null space as a :class:`Subspace` without re-reduction.

    The kernel basis vectors have unit entries at the free columns and
    zeros at each other's free columns, so they already form a valid
    pseudo-reduced basis with the free columns as pivots.
    """
    rows, pivots = _rref_rows(m.field, [list(r) for r in m.data], m.cols)
    zero, one = m.field.zero(), m.field.one()
    pivset = set(pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    basis = []
    for fc in free:
        v = [zero] * m.cols
        v[fc] = one
        for r, pc in enumerate(pivots):
            if rows[r][fc]:
                v[pc] = -rows[r][fc]
        basis.append(tuple(v))
    return Subspace(m.field, m.cols, basis, free)


def solve(m: Matrix, b: Sequence) -> Optional[tuple]:
    """Some exact solution x of m·x = b, or None if inconsistent."""
    if len(b) != m.rows:
        raise DimensionMismatch("right-hand side length mismatch")
    aug = [list(row) + [bv] for row, bv in zip(m.data, b)]
    if m.rows == 0:
        return tuple() if m.cols == 0 else tuple([m.field.zero()] * m.cols)
    rows, pivots = _rref_rows(m.field, aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    zero = m.field.zero()
    x = [zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][m.cols]
    return tuple(x)


def solve_matrix(m: Matrix, b: Matrix) -> Optional[Matrix]:
    """Some X with m·X = b (column by column), or None if inconsistent."""
    if b.rows != m.rows:
        raise DimensionMismatch("shape mismatch in solve_matrix")
    aug = [list(row) + list(brow) for row, brow in zip(m.data, b.data)]
    rows, pivots = _rref_rows(m.field, aug, m.cols + b.cols)
    if pivots and pivots[-1] >= m.cols:
        return None
    zero = m.field.zero()
    out = [[zero] * b.cols for _ in range(m.cols)]
    for r, pc in enumerate(pivots):
        out[pc] = rows[r][m.cols:]
    return Matrix(m.field, out, cols=b.cols)


class Subspace:
    """A subspace of k^n held as a row-reduced basis.

    The rows form a matrix in reduced row echelon form with unit pivots, so
    membership reduction and coordinate extraction are single passes.
    """

    __slots__ = ("field", "ambient", "basis", "pivots")

    def __init__(self, field: Field, ambient: int, basis: Sequence[Sequence], pivots: Sequence[int]):
        self.field = field
        self.ambient = ambient
        self.basis = tuple(tuple(r) for r in basis)
        self.pivots = tuple(pivots)

    @staticmethod
    def from_vectors(field: Field, ambient: int, vectors: Iterable[Sequence]) -> "Subspace":
        vecs = [list(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient:
                raise DimensionMismatch("vector has wrong ambient dimension")
        rows, pivots = _rref_rows(field, vecs, ambient)
        return Subspace(field, ambient, rows[:len(pivots)], pivots)

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, [], [])

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        eye = Matrix.identity(field, ambient)
        return Subspace(field, ambient, eye.data, range(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, v: Sequence) -> tuple:
        """Canonical representative of v modulo this subspace."""
        out = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = out[p]
            if c:
                out = [a - c * b if b else a for a, b in zip(out, row)]
        return tuple(out)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(row) for row in other.basis)

    def coords(self, v: Sequence) -> tuple:
        """Coordinates of a member vector in this basis."""
        if not self.contains(v):
            raise DimensionMismatch("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def plus(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.from_vectors(self.field, self.ambient, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.field, self.ambient)
        cols = [list(row) for row in self.basis] + [[-x for x in row] for row in other.basis]
        stacked = Matrix(self.field, list(zip(*cols)))
        vectors = []
        for kv in kernel_basis(stacked):
            acc = [self.field.zero()] * self.ambient
            for coef, row in zip(kv[:self.dim], self.basis):
                if coef:
                    acc = [a + coef * b if b else a for a, b in zip(acc, row)]
            vectors.append(acc)
        return Subspace.from_vectors(self.field, self.ambient, vectors)

    def complement(self) -> list[tuple]:
        """Standard basis vectors extending this basis to the ambient space."""
        zero, one = self.field.zero(), self.field.one()
        pivset = set(self.pivots)
        out = []
        for c in range(self.ambient):
            if c not in pivset:
                v = [zero] * self.ambient
                v[c] = one
                out.append(tuple(v))
        return out

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient or self.field != other.field:
            raise DimensionMismatch("subspaces live in different ambient spaces")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (self.field, self.ambient, self.basis) == (other.field, other.ambient, other.basis)

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of k^{self.ambient})"


def random_matrix(field: Field, rows: int, cols: int, seed: int,
                  pool: Sequence = DEFAULT_POOL) -> Matrix:
    """Seeded random matrix with entries drawn uniformly from ``pool``.

    The generator is Python's Mersenne Twister (``random.Random``) seeded
    explicitly, so results are reproducible across runs and platforms.
    """
    rng = random.Random(seed)
    elems = [field.of(x) for x in pool]
    if not elems:
        raise BadParams("entry pool must be non-empty")
    return Matrix(field, [[rng.choice(elems) for _ in range(cols)] for _ in range(rows)])
