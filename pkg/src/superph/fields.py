"""Exact dense linear algebra over GF(2), GF(p) and the rationals.

Every homology computation in this package reduces to rank, kernel, image,
intersection and preimage problems over a coefficient field.  All routines
are dense and exact.  Pivots are always the first nonzero entry in column
order, so every derived basis is canonical and results are bit-for-bit
reproducible across runs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class Field:
    """A coefficient field: GF(2), GF(p) for a prime p, or the rationals.

    GF(p) scalars are ints reduced mod p; rational scalars are Fractions
    (arbitrary precision, so elimination never overflows or rounds).
    """

    __slots__ = ("kind", "p")

    def __init__(self, kind: str, p: int | None = None):
        if kind == "gf2":
            p = 2
        elif kind == "gfp":
            if p is None or not (2 <= p < 2**31) or not _is_prime(p):
                raise ValueError(f"modulus must be a prime in [2, 2^31), got {p!r}")
            if p == 2:
                kind = "gf2"
        elif kind == "rational":
            p = None
        else:
            raise ValueError(f"unknown field kind {kind!r}")
        self.kind = kind
        self.p = p

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def of(self, x):
        """Canonical scalar from an int or Fraction."""
        if self.p:
            return int(x) % self.p
        return x if isinstance(x, Fraction) else Fraction(x)

    def add(self, a, b):
        return (a + b) % self.p if self.p else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p else a * b

    def neg(self, a):
        return (-a) % self.p if self.p else -a

    def inv(self, a):
        if self.p:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return pow(a, -1, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        if self.kind == "gf2":
            return "GF(2)"
        if self.kind == "gfp":
            return f"GF({self.p})"
        return "QQ"


GF2 = Field("gf2")
QQ = Field("rational")


def GF(p: int) -> Field:
    return Field("gf2") if p == 2 else Field("gfp", p)


# ---------------------------------------------------------------------------
# Reduced row echelon form (the single algorithmic backbone)
# ---------------------------------------------------------------------------

def _rref_gf2(rows: Sequence[Sequence[int]], ncols: int):
    # Rows packed into ints, bit j = column j; XOR elimination.
    packed = []
    for r in rows:
        x = 0
        for j, v in enumerate(r):
            if int(v) & 1:
                x |= 1 << j
        packed.append(x)
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, len(packed)):
            if (packed[i] >> col) & 1:
                piv = i
                break
        if piv is None:
            continue
        packed[top], packed[piv] = packed[piv], packed[top]
        pv = packed[top]
        for i in range(len(packed)):
            if i != top and (packed[i] >> col) & 1:
                packed[i] ^= pv
        pivots.append(col)
        top += 1
    out = []
    for x in packed[:top]:
        out.append([(x >> j) & 1 for j in range(ncols)])
    return out, pivots


def rref(rows: Iterable[Sequence], ncols: int, field: Field):
    """Reduced row echelon form.

    Returns (reduced nonzero rows, pivot column indices).  Pivot columns are
    strictly increasing and every pivot entry is 1 with zeros elsewhere in
    its column, so the result is a canonical basis of the row space.
    """
    rows = [list(r) for r in rows]
    if field.kind == "gf2":
        return _rref_gf2(rows, ncols)
    mat = [[field.of(v) for v in r] for r in rows]
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        piv = None
        for i in range(top, len(mat)):
            if mat[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[top], mat[piv] = mat[piv], mat[top]
        scale = field.inv(mat[top][col])
        if scale != field.one:
            mat[top] = [field.mul(scale, v) for v in mat[top]]
        prow = mat[top]
        for i in range(len(mat)):
            if i != top and mat[i][col] != 0:
                c = mat[i][col]
                mat[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(mat[i], prow)]
        pivots.append(col)
        top += 1
    return mat[:top], pivots


class FieldMatrix:
    """Dense matrix of exact field scalars, row-major and immutable."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: Field, rows: int, cols: int, entries: Iterable):
        self.field = field
        self.rows = rows
        self.cols = cols
        ent = tuple(field.of(x) for x in entries)
        if len(ent) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(ent)}")
        self.entries = ent

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> "FieldMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        flat = [x for r in rows for x in r]
        return cls(field, nr, nc, flat)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence], nrows: int | None = None) -> "FieldMatrix":
        nc = len(columns)
        if nrows is None:
            if nc == 0:
                raise ValueError("nrows required for a matrix with no columns")
            nrows = len(columns[0])
        flat = [columns[j][i] for i in range(nrows) for j in range(nc)]
        return cls(field, nrows, nc, flat)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, rows, cols, [field.zero] * (rows * cols))

    @classmethod
    def identity(cls, field: Field, n: int) -> "FieldMatrix":
        return cls(field, n, n, [field.one if i == j else field.zero
                                 for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int):
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def row_lists(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(self.field, self.cols, self.rows,
                           [self.entry(i, j) for j in range(self.cols) for i in range(self.rows)])

    def apply(self, vec: Sequence) -> tuple:
        """Matrix-vector product m @ vec."""
        if len(vec) != self.cols:
            raise ValueError(f"vector length {len(vec)} != cols {self.cols}")
        f = self.field
        out = []
        for i in range(self.rows):
            acc = f.zero
            base = i * self.cols
            for j, v in enumerate(vec):
                if v:
                    acc = f.add(acc, f.mul(self.entries[base + j], f.of(v)))
            out.append(acc)
        return tuple(out)

    def matmul(self, other: "FieldMatrix") -> "FieldMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        f = self.field
        flat = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = f.zero
                for k in range(self.cols):
                    a = self.entry(i, k)
                    if a:
                        acc = f.add(acc, f.mul(a, other.entry(k, j)))
                flat.append(acc)
        return FieldMatrix(f, self.rows, other.cols, flat)

    def __matmul__(self, other):
        return self.matmul(other)

    def __eq__(self, other):
        return (isinstance(other, FieldMatrix) and self.field == other.field
                and self.rows == other.rows and self.cols == other.cols
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self.entries))

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.entries)

    def __repr__(self):
        return f"FieldMatrix({self.field!r}, {self.rows}x{self.cols})"


class SubspaceBasis:
    """A linear subspace of F^n, stored as its canonical RREF row basis."""

    __slots__ = ("field", "ambient_dim", "vectors")

    def __init__(self, field: Field, ambient_dim: int, vectors: Iterable[Sequence] = (),
                 _canonical: bool = False):
        self.field = field
        self.ambient_dim = ambient_dim
        if _canonical:
            self.vectors = tuple(tuple(v) for v in vectors)
        else:
            reduced, _ = rref(vectors, ambient_dim, field)
            self.vectors = tuple(tuple(r) for r in reduced)

    @classmethod
    def zero(cls, field: Field, ambient_dim: int) -> "SubspaceBasis":
        return cls(field, ambient_dim, (), _canonical=True)

    @classmethod
    def full(cls, field: Field, ambient_dim: int) -> "SubspaceBasis":
        return cls.coordinate(field, ambient_dim, range(ambient_dim))

    @classmethod
    def coordinate(cls, field: Field, ambient_dim: int, indices: Iterable[int]) -> "SubspaceBasis":
        """Span of the unit vectors at the given coordinate indices."""
        vecs = []
        for i in sorted(set(indices)):
            v = [field.zero] * ambient_dim
            v[i] = field.one
            vecs.append(tuple(v))
        return cls(field, ambient_dim, vecs, _canonical=True)

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def pivots(self) -> list[int]:
        out = []
        for v in self.vectors:
            out.append(next(j for j, x in enumerate(v) if x != 0))
        return out

    def reduce_vector(self, vec: Sequence) -> list:
        """Remainder of vec after elimination against the basis rows."""
        f = self.field
        v = [f.of(x) for x in vec]
        if len(v) != self.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        for row, p in zip(self.vectors, self.pivots()):
            c = v[p]
            if c != 0:
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def contains(self, vec: Sequence) -> bool:
        return all(x == 0 for x in self.reduce_vector(vec))

    def contains_subspace(self, other: "SubspaceBasis") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def to_matrix_columns(self) -> FieldMatrix:
        if self.dim == 0:
            return FieldMatrix.zeros(self.field, self.ambient_dim, 0)
        return FieldMatrix.from_columns(self.field, [list(v) for v in self.vectors],
                                        self.ambient_dim)

    def __eq__(self, other):
        return (isinstance(other, SubspaceBasis) and self.field == other.field
                and self.ambient_dim == other.ambient_dim and self.vectors == other.vectors)

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.vectors))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"


# ---------------------------------------------------------------------------
# Spec operations
# ---------------------------------------------------------------------------

def rank(m: FieldMatrix) -> int:
    """Dimension of the column space."""
    _, pivots = rref(m.row_lists(), m.cols, m.field)
    return len(pivots)


def kernel_basis(m: FieldMatrix) -> SubspaceBasis:
    """Basis of the null space {x : m @ x = 0}."""
    f = m.field
    reduced, pivots = rref(m.row_lists(), m.cols, f)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    vecs = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for r, pc in enumerate(pivots):
            v[pc] = f.neg(reduced[r][fc])
        vecs.append(v)
    return SubspaceBasis(f, m.cols, vecs)


def image_basis(m: FieldMatrix) -> SubspaceBasis:
    """Canonical basis of the column space."""
    cols = [list(m.column(j)) for j in range(m.cols)]
    return SubspaceBasis(m.field, m.rows, cols)


def subspace_sum(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    _check_compatible(a, b)
    return SubspaceBasis(a.field, a.ambient_dim, list(a.vectors) + list(b.vectors))


def subspace_intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Basis of span(a) ∩ span(b)."""
    _check_compatible(a, b)
    f = a.field
    if a.dim == 0 or b.dim == 0:
        return SubspaceBasis.zero(f, a.ambient_dim)
    # Kernel vectors (u, v) of [A | B] satisfy A u = -B v, so A u runs over
    # the intersection as (u, v) runs over the kernel.
    cols = [list(v) for v in a.vectors] + [list(v) for v in b.vectors]
    ker = kernel_basis(FieldMatrix.from_columns(f, cols, a.ambient_dim))
    vecs = []
    for k in ker.vectors:
        u = k[:a.dim]
        vec = [f.zero] * a.ambient_dim
        for ci, c in enumerate(u):
            if c:
                row = a.vectors[ci]
                vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, row)]
        vecs.append(vec)
    return SubspaceBasis(f, a.ambient_dim, vecs)


def preimage_basis(m: FieldMatrix, s: SubspaceBasis) -> SubspaceBasis:
    """Basis of {x : m @ x ∈ span(s)}; always contains the kernel of m."""
    if s.ambient_dim != m.rows:
        raise ValueError(f"subspace ambient {s.ambient_dim} != matrix rows {m.rows}")
    f = m.field
    cols = [list(m.column(j)) for j in range(m.cols)] + [list(v) for v in s.vectors]
    ker = kernel_basis(FieldMatrix.from_columns(f, cols, m.rows))
    vecs = [list(k[:m.cols]) for k in ker.vectors]
    return SubspaceBasis(f, m.cols, vecs)


def spans_equal(a: SubspaceBasis, b: SubspaceBasis) -> bool:
    _check_compatible(a, b)
    return a.vectors == b.vectors


def solve(m: FieldMatrix, target: Sequence):
    """A solution x of m @ x = target, or None if inconsistent."""
    f = m.field
    if len(target) != m.rows:
        raise ValueError("target length mismatch")
    aug = [list(m.row(i)) + [f.of(target[i])] for i in range(m.rows)]
    reduced, pivots = rref(aug, m.cols + 1, f)
    if m.cols in pivots:
        return None
    x = [f.zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][m.cols]
    return tuple(x)


def express_in_vectors(field: Field, ambient_dim: int, vectors: Sequence[Sequence], target: Sequence):
    """Coefficients c with sum(c_i * vectors_i) = target, or None."""
    if not vectors:
        return () if all(field.of(x) == 0 for x in target) else None
    m = FieldMatrix.from_columns(field, [list(v) for v in vectors], ambient_dim)
    return solve(m, target)


def extend_independent(base: SubspaceBasis, candidates: Iterable[Sequence]) -> list[tuple]:
    """Candidates (in order) that successively enlarge span(base)."""
    f = base.field
    work = [list(v) for v in base.vectors]
    added = []
    for cand in candidates:
        rows, pivots = rref(work + [list(cand)], base.ambient_dim, f)
        if len(rows) > len(work):
            work = rows
            added.append(tuple(f.of(x) for x in cand))
    return added


def _check_compatible(a: SubspaceBasis, b: SubspaceBasis):
    if a.field != b.field:
        raise ValueError("field mismatch")
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimension mismatch: {a.ambient_dim} != {b.ambient_dim}")
