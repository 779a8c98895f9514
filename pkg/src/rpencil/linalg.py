"""Exact linear algebra over the Scalar field.

Matrices are stored sparsely (one dict per row); subspaces are kept as
reduced row-echelon bases, which makes equality of subspaces equality of
representations.
"""

from __future__ import annotations

from .scalars import ONE, Scalar, scalar


class DimensionMismatch(Exception):
    pass


class Mat:
    """Sparse matrix over Scalar: ``rows[i][j]`` holds the (i, j) entry."""

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows=None):
        self.nrows = nrows
        self.ncols = ncols
        self.rows = [dict() for _ in range(nrows)] if rows is None else rows

    @staticmethod
    def identity(n: int) -> "Mat":
        return Mat(n, n, [{i: ONE} for i in range(n)])

    @staticmethod
    def from_dense(entries) -> "Mat":
        nrows = len(entries)
        ncols = len(entries[0]) if nrows else 0
        m = Mat(nrows, ncols)
        for i, row in enumerate(entries):
            for j, v in enumerate(row):
                v = scalar(v)
                if v:
                    m.rows[i][j] = v
        return m

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, Scalar(0))

    def set(self, i: int, j: int, value) -> None:
        value = scalar(value)
        if value:
            self.rows[i][j] = value
        else:
            self.rows[i].pop(j, None)

    def add_to(self, i: int, j: int, value) -> None:
        self.set(i, j, self.rows[i].get(j, Scalar(0)) + value)

    def copy(self) -> "Mat":
        return Mat(self.nrows, self.ncols, [dict(r) for r in self.rows])

    def __add__(self, other: "Mat") -> "Mat":
        self._same_shape(other)
        out = self.copy()
        for i, row in enumerate(other.rows):
            for j, v in row.items():
                out.add_to(i, j, v)
        return out

    def __sub__(self, other: "Mat") -> "Mat":
        return self + (other * Scalar(-1))

    def __mul__(self, other):
        if isinstance(other, Mat):
            return self._matmul(other)
        c = scalar(other)
        out = Mat(self.nrows, self.ncols)
        if c:
            for i, row in enumerate(self.rows):
                out.rows[i] = {j: v * c for j, v in row.items()}
        return out

    __rmul__ = __mul__

    def _matmul(self, other: "Mat") -> "Mat":
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.shape} * {other.shape}")
        out = Mat(self.nrows, other.ncols)
        for i, row in enumerate(self.rows):
            acc: dict = {}
            for k, a in row.items():
                for j, b in other.rows[k].items():
                    prev = acc.get(j)
                    acc[j] = a * b if prev is None else prev + a * b
            out.rows[i] = {j: v for j, v in acc.items() if v}
        return out

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector (dict index -> Scalar)."""
        acc: dict = {}
        cols = self.transpose().rows
        for j, x in vec.items():
            for i, a in cols[j].items():
                prev = acc.get(i)
                acc[i] = a * x if prev is None else prev + a * x
        return {i: v for i, v in acc.items() if v}

    def transpose(self) -> "Mat":
        out = Mat(self.ncols, self.nrows)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                out.rows[j][i] = v
        return out

    def kron(self, other: "Mat") -> "Mat":
        out = Mat(self.nrows * other.nrows, self.ncols * other.ncols)
        for i, row in enumerate(self.rows):
            for j, a in row.items():
                for k, orow in enumerate(other.rows):
                    target = out.rows[i * other.nrows + k]
                    base = j * other.ncols
                    for l, b in orow.items():
                        target[base + l] = a * b
        return out

    def is_zero(self) -> bool:
        return all(not row for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (
            self.shape == other.shape
            and all(a == b for a, b in zip(self.rows, other.rows))
        )

    def __hash__(self):
        return hash((self.shape, tuple(tuple(sorted(r.items())) for r in self.rows)))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[0])

    def inverse(self) -> "Mat":
        if self.nrows != self.ncols:
            raise DimensionMismatch("only square matrices can be inverted")
        n = self.nrows
        aug = []
        for i, row in enumerate(self.rows):
            r = dict(row)
            r[n + i] = ONE
            aug.append(r)
        rows, pivots = rref(aug, 2 * n)
        if pivots != list(range(n)):
            raise DimensionMismatch("matrix is singular")
        out = Mat(n, n)
        for i, row in enumerate(rows):
            out.rows[i] = {j - n: v for j, v in row.items() if j >= n}
        return out

    def specialize(self, assignment: dict) -> "Mat":
        out = Mat(self.nrows, self.ncols)
        for i, row in enumerate(self.rows):
            for j, v in row.items():
                sv = v.specialize(assignment)
                if sv:
                    out.rows[i][j] = sv
        return out

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))})"

    def _same_shape(self, other: "Mat") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")


def rref(rows, ncols):
    """Reduced row echelon form of sparse rows.

    Returns (reduced_rows, pivot_columns); reduced rows are sorted by pivot,
    have pivot entry 1 and zeros above and below each pivot.
    """
    basis: dict = {}  # pivot column -> row dict
    for row in rows:
        row = dict(row)
        row = _reduce_row(row, basis)
        if row:
            piv = min(row)
            inv = 1 / row[piv]
            row = {j: v * inv for j, v in row.items()}
            # eliminate the new pivot from existing rows
            for p, other in basis.items():
                c = other.get(piv)
                if c is None:
                    continue
                merged = dict(other)
                del merged[piv]
                for j, v in row.items():
                    if j == piv:
                        continue
                    newv = merged.get(j, Scalar(0)) - c * v
                    if newv:
                        merged[j] = newv
                    else:
                        merged.pop(j, None)
                basis[p] = merged
            basis[piv] = row
    pivots = sorted(basis)
    return [basis[p] for p in pivots], pivots


def _reduce_row(row: dict, basis: dict) -> dict:
    row = dict(row)
    while True:
        hit = None
        for j in row:
            if j in basis:
                hit = j
                break
        if hit is None:
            return {j: v for j, v in row.items() if v}
        c = row[hit]
        del row[hit]
        for j, v in basis[hit].items():
            if j == hit:
                continue
            newv = row.get(j, Scalar(0)) - c * v
            if newv:
                row[j] = newv
            else:
                row.pop(j, None)
    return row


class SubspaceBasis:
    """A subspace of k^ambient_dim held as a canonical (RREF) basis."""

    __slots__ = ("ambient_dim", "rows", "pivots")

    def __init__(self, ambient_dim: int, rows, *, _canonical=False):
        self.ambient_dim = ambient_dim
        if _canonical:
            self.rows = [dict(r) for r in rows]
            self.pivots = [min(r) for r in self.rows]
        else:
            for r in rows:
                if any(j < 0 or j >= ambient_dim for j in r):
                    raise DimensionMismatch("vector exceeds ambient dimension")
            self.rows, self.pivots = rref(rows, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, vec: dict) -> bool:
        if any(j < 0 or j >= self.ambient_dim for j in vec):
            raise DimensionMismatch("vector exceeds ambient dimension")
        basis = dict(zip(self.pivots, self.rows))
        return not _reduce_row(vec, basis)

    def reduce(self, vec: dict) -> dict:
        """Residual of vec after reduction against the basis (zero iff member)."""
        basis = dict(zip(self.pivots, self.rows))
        return _reduce_row(vec, basis)

    def __eq__(self, other):
        if not isinstance(other, SubspaceBasis):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.rows == other.rows

    def __hash__(self):
        return hash((self.ambient_dim, tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, ambient={self.ambient_dim})"

    def specialize(self, assignment: dict) -> "SubspaceBasis":
        rows = [
            {j: v.specialize(assignment) for j, v in row.items()} for row in self.rows
        ]
        return SubspaceBasis(self.ambient_dim, rows)


def kernel(m: Mat) -> SubspaceBasis:
    """Right kernel {x : m x = 0} as a canonical basis."""
    rows, pivots = rref(m.rows, m.ncols)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    basis_rows = []
    for f in free:
        vec = {f: ONE}
        for piv, row in zip(pivots, rows):
            c = row.get(f)
            if c is not None:
                vec[piv] = -c
        basis_rows.append(vec)
    return SubspaceBasis(m.ncols, basis_rows)


def image(m: Mat) -> SubspaceBasis:
    """Column space of m, as vectors of dimension m.nrows."""
    return SubspaceBasis(m.nrows, m.transpose().rows)


def row_space(m: Mat) -> SubspaceBasis:
    return SubspaceBasis(m.ncols, m.rows)


def intersect(a: SubspaceBasis, b: SubspaceBasis) -> SubspaceBasis:
    """Intersection of two subspaces (Zassenhaus block elimination)."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(f"ambient {a.ambient_dim} vs {b.ambient_dim}")
    d = a.ambient_dim
    block = []
    for row in a.rows:
        r = dict(row)
        for j, v in row.items():
            r[d + j] = v
        block.append(r)
    block.extend(dict(row) for row in b.rows)
    rows, _ = rref(block, 2 * d)
    inter = [
        {j - d: v for j, v in row.items()} for row in rows if min(row) >= d
    ]
    return SubspaceBasis(d, inter)


def member(vec: dict, s: SubspaceBasis) -> bool:
    return s.contains(vec)


def annihilator(s: SubspaceBasis) -> SubspaceBasis:
    """Functionals vanishing on s (w.r.t. the standard pairing)."""
    m = Mat(len(s.rows), s.ambient_dim, [dict(r) for r in s.rows])
    return kernel(m)
