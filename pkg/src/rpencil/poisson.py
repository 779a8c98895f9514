"""Poisson structures on polynomial algebras, given by generator tables.

A structure stores the brackets of generator pairs; the bracket of
arbitrary polynomials is the Leibniz extension

    {f, g} = sum_{i<j} t_ij (d_i f d_j g - d_j f d_i g).

Builders cover the quadratic matrix bracket, its linearization, the gl(n)
Poisson-Lie bracket, constant symplectic brackets and brackets induced by
an antisymmetric tensor acting through linear vector fields.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .commpoly import GeneratorError, Poly
from .linalg import DimensionMismatch, Mat, SubspaceBasis
from .scalars import LAM, Scalar, scalar


def matrix_generators(n: int):
    """Row-major names for the matrix coefficients; a,b,c,d when n = 2."""
    if n == 2:
        return ("a", "b", "c", "d")
    return tuple(f"a_{i}^{j}" for i in range(1, n + 1) for j in range(1, n + 1))


def coordinate_generators(dim: int):
    return tuple(f"x_{i}" for i in range(1, dim + 1))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


class PoissonStructure:
    """Antisymmetric generator-pair table extended by Leibniz."""

    __slots__ = ("generators", "table")

    def __init__(self, generators, table):
        self.generators = tuple(generators)
        clean = {}
        for (i, j), p in table.items():
            if i >= j:
                raise GeneratorError("table keys must satisfy i < j")
            if p:
                clean[(i, j)] = p
        self.table = clean

    def entry(self, i: int, j: int) -> Poly:
        """{g_i, g_j} for any ordered pair, including i >= j."""
        if i == j:
            return Poly.zero(self.generators)
        if i < j:
            return self.table.get((i, j), Poly.zero(self.generators))
        return -self.table.get((j, i), Poly.zero(self.generators))

    @property
    def kind(self) -> str:
        degs = {p.total_degree() for p in self.table.values()}
        degs.discard(-1)
        if not degs:
            return "constant"
        if degs == {0}:
            return "constant"
        if degs == {1}:
            return "linear"
        if degs == {2}:
            return "quadratic"
        return "mixed"

    def bracket(self, f: Poly, g: Poly) -> Poly:
        if f.generators != self.generators or g.generators != self.generators:
            raise GeneratorError("polynomials are not over this structure's generators")
        out = Poly.zero(self.generators)
        dfs = {}
        dgs = {}
        for (i, j), t in self.table.items():
            if i not in dfs:
                dfs[i] = f.diff(i)
                dgs[i] = g.diff(i)
            if j not in dfs:
                dfs[j] = f.diff(j)
                dgs[j] = g.diff(j)
            out = out + t * (dfs[i] * dgs[j] - dfs[j] * dgs[i])
        return out

    def jacobiator(self, f: Poly, g: Poly, h: Poly) -> Poly:
        return (
            self.bracket(f, self.bracket(g, h))
            + self.bracket(g, self.bracket(h, f))
            + self.bracket(h, self.bracket(f, g))
        )

    def is_poisson(self):
        """(True, None) or (False, witness generator-name triple)."""
        gens = [Poly.generator(self.generators, name) for name in self.generators]
        n = len(gens)
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if self.jacobiator(gens[i], gens[j], gens[k]):
                        return False, (
                            self.generators[i],
                            self.generators[j],
                            self.generators[k],
                        )
        return True, None

    def scale(self, c) -> "PoissonStructure":
        c = scalar(c)
        return PoissonStructure(
            self.generators, {k: p * c for k, p in self.table.items()}
        )

    def add(self, other: "PoissonStructure") -> "PoissonStructure":
        self._check(other)
        table = dict(self.table)
        for k, p in other.table.items():
            table[k] = table.get(k, Poly.zero(self.generators)) + p
        return PoissonStructure(self.generators, table)

    def specialize(self, assignment: dict) -> "PoissonStructure":
        return PoissonStructure(
            self.generators, {k: p.specialize(assignment) for k, p in self.table.items()}
        )

    def __eq__(self, other):
        if not isinstance(other, PoissonStructure):
            return NotImplemented
        return self.generators == other.generators and self.table == other.table

    def __repr__(self):
        return f"PoissonStructure({len(self.generators)} generators, kind={self.kind})"

    def _check(self, other: "PoissonStructure") -> None:
        if self.generators != other.generators:
            raise GeneratorError("generator mismatch between Poisson structures")


def mixed_jacobiator(
    p1: PoissonStructure, p2: PoissonStructure, f: Poly, g: Poly, h: Poly
) -> Poly:
    p1._check(p2)
    out = Poly.zero(p1.generators)
    for x, y, z in ((f, g, h), (g, h, f), (h, f, g)):
        out = out + p2.bracket(x, p1.bracket(y, z)) + p1.bracket(x, p2.bracket(y, z))
    return out


def are_compatible(p1: PoissonStructure, p2: PoissonStructure):
    """(True, None) or (False, witness generator-name triple)."""
    p1._check(p2)
    gens = [Poly.generator(p1.generators, name) for name in p1.generators]
    n = len(gens)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                if mixed_jacobiator(p1, p2, gens[i], gens[j], gens[k]):
                    return False, (
                        p1.generators[i],
                        p1.generators[j],
                        p1.generators[k],
                    )
    return True, None


def pencil(p1: PoissonStructure, p2: PoissonStructure, a, b) -> PoissonStructure:
    p1._check(p2)
    return p1.scale(a).add(p2.scale(b))


# ---------------------------------------------------------------------------
# builders on Fun(Mat(n))
# ---------------------------------------------------------------------------


def _pair_case(r1, c1, r2, c2):
    """Classify an ordered generator pair (rows r, columns c, 0-based)."""
    if r1 == r2:
        return "row"
    if c1 == c2:
        return "column"
    if r1 < r2 and c1 < c2:
        return "diagonal"
    return "antidiagonal"


def sd_quadratic(n: int) -> PoissonStructure:
    """The quadratic matrix bracket {.,.}_2 on Fun(Mat(n))."""
    if n < 2:
        raise ValueError("need n >= 2")
    gens = matrix_generators(n)

    def gen(r, c):
        return Poly.generator(gens, gens[r * n + c])

    table = {}
    for u in range(n * n):
        for v in range(u + 1, n * n):
            r1, c1 = divmod(u, n)
            r2, c2 = divmod(v, n)
            case = _pair_case(r1, c1, r2, c2)
            if case in ("row", "column"):
                # row-major order makes (u, v) the (i<j) orientation
                table[(u, v)] = gen(r1, c1) * gen(r2, c2)
            elif case == "diagonal":
                table[(u, v)] = 2 * gen(r1, c2) * gen(r2, c1)
            # antidiagonal pairs commute
    return PoissonStructure(gens, table)


def linearized(n: int) -> PoissonStructure:
    """The linear bracket {.,.}_1 on Fun(Mat(n))."""
    if n < 2:
        raise ValueError("need n >= 2")
    gens = matrix_generators(n)

    def gen(r, c):
        return Poly.generator(gens, gens[r * n + c])

    def delta(r, c):
        return 1 if r == c else 0

    table = {}
    for u in range(n * n):
        for v in range(u + 1, n * n):
            r1, c1 = divmod(u, n)
            r2, c2 = divmod(v, n)
            case = _pair_case(r1, c1, r2, c2)
            p = Poly.zero(gens)
            if case in ("row", "column"):
                if delta(r1, c1):
                    p = p + gen(r2, c2)
                if delta(r2, c2):
                    p = p + gen(r1, c1)
            elif case == "diagonal":
                if delta(r1, c2):
                    p = p + 2 * gen(r2, c1)
                if delta(r2, c1):
                    p = p + 2 * gen(r1, c2)
            if p:
                table[(u, v)] = p
    return PoissonStructure(gens, table)


def gl_bracket(n: int) -> PoissonStructure:
    """Poisson-Lie bracket of gl(n): {a_i^j, a_k^l} = a_i^l d_k^j - a_k^j d_i^l."""
    if n < 1:
        raise ValueError("need n >= 1")
    gens = matrix_generators(n)

    def gen(r, c):
        return Poly.generator(gens, gens[r * n + c])

    table = {}
    for u in range(n * n):
        for v in range(u + 1, n * n):
            r1, c1 = divmod(u, n)
            r2, c2 = divmod(v, n)
            p = Poly.zero(gens)
            if r2 == c1:
                p = p + gen(r1, c2)
            if r1 == c2:
                p = p - gen(r2, c1)
            if p:
                table[(u, v)] = p
    return PoissonStructure(gens, table)


def lambda_linear_term(p: PoissonStructure, n: int) -> PoissonStructure:
    """Coefficient of lam in p's table after the shift a_i^j -> a_i^j + lam*d_i^j."""
    gens = p.generators
    shift = {}
    for i in range(n):
        name = gens[i * n + i]
        shift[name] = Poly.generator(gens, name) + Poly.constant(gens, LAM)
    table = {
        k: entry.substitute(shift).coefficient_of_param("lam", 1)
        for k, entry in p.table.items()
    }
    return PoissonStructure(gens, table)


def double_lie_check(n: int):
    """Verify {x,y}_1 = {R x, y}_gl + {x, R y}_gl with R = sign(col - row).

    Returns (ok, mismatching generator-name pairs).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    lin = linearized(n)
    gl = gl_bracket(n)
    gens = lin.generators
    mismatches = []
    for u in range(n * n):
        for v in range(n * n):
            r1, c1 = divmod(u, n)
            r2, c2 = divmod(v, n)
            factor = _sign(c1 - r1) + _sign(c2 - r2)
            if lin.entry(u, v) != gl.entry(u, v) * scalar(factor):
                mismatches.append((gens[u], gens[v]))
    return not mismatches, mismatches


# ---------------------------------------------------------------------------
# representation-driven brackets on Fun(V*)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MatrixRep:
    """A Lie algebra presented by a list of dim x dim basis matrices."""

    dim: int
    basis_matrices: tuple = field(default_factory=tuple)

    def closes_under_commutator(self) -> bool:
        span = SubspaceBasis(self.dim * self.dim, [self._vec(m) for m in self.basis_matrices])
        for x in self.basis_matrices:
            for y in self.basis_matrices:
                comm = x * y - y * x
                if not span.contains(self._vec(comm)):
                    return False
        return True

    def _vec(self, m: Mat) -> dict:
        out = {}
        for i, row in enumerate(m.rows):
            for j, v in row.items():
                out[i * self.dim + j] = v
        return out


def rmatrix_bracket(rep: MatrixRep, r) -> PoissonStructure:
    """Quadratic bracket {x_p, x_s} = sum r[(i,k),(p,s)] x_i x_k on Fun(V*).

    ``r`` is any object with fields dim and mat (an n^2 x n^2 Mat), e.g. an
    RMatrixElement.
    """
    n = rep.dim
    if r.dim != n:
        raise DimensionMismatch(f"representation dim {n} vs r-matrix dim {r.dim}")
    gens = coordinate_generators(n)

    def x(i):
        return Poly.generator(gens, gens[i])

    cols = r.mat.transpose().rows
    table = {}
    for p in range(n):
        for s in range(p + 1, n):
            entry = Poly.zero(gens)
            for row_idx, coeff in cols[p * n + s].items():
                i, k = divmod(row_idx, n)
                entry = entry + coeff * x(i) * x(k)
            if entry:
                table[(p, s)] = entry
    return PoissonStructure(gens, table)


def constant_symplectic(dim: int) -> PoissonStructure:
    """Standard constant bracket {x_i, x_{i+m}} = 1, dim = 2m."""
    if dim % 2:
        raise ValueError("dimension must be even")
    m = dim // 2
    gens = coordinate_generators(dim)
    table = {
        (i, i + m): Poly.constant(gens, 1) for i in range(m)
    }
    return PoissonStructure(gens, table)
