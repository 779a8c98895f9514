"""Classical r-matrices, the Hecke braid operator and the induced operator
on matrix-coefficient space, with Schouten, QYBE and eigenspace machinery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .commpoly import Poly
from .linalg import DimensionMismatch, Mat, SubspaceBasis, image, kernel
from .poisson import MatrixRep, PoissonStructure, matrix_generators, sd_quadratic
from .scalars import ONE, Q, Scalar, scalar


class NormalizationError(Exception):
    pass


@dataclass(frozen=True)
class RMatrixElement:
    """An element of End(V) tensor End(V), stored as an n^2 x n^2 matrix."""

    dim: int
    mat: Mat

    def is_antisymmetric(self) -> bool:
        flip = _flip(self.dim)
        return (self.mat + flip * self.mat * flip).is_zero()

    def specialize(self, assignment: dict) -> "RMatrixElement":
        return RMatrixElement(self.dim, self.mat.specialize(assignment))


@dataclass(frozen=True)
class BraidOperator:
    """An operator on the tensor square of a dim-dimensional space."""

    dim: int
    mat: Mat

    def is_invertible(self) -> bool:
        return self.mat.rank() == self.dim * self.dim

    def specialize(self, assignment: dict) -> "BraidOperator":
        return BraidOperator(self.dim, self.mat.specialize(assignment))


def _flip(n: int) -> Mat:
    out = Mat(n * n, n * n)
    for i in range(n):
        for j in range(n):
            out.rows[i * n + j][j * n + i] = ONE
    return out


def flip_operator(n: int) -> BraidOperator:
    return BraidOperator(n, _flip(n))


def _unit(n: int, i: int, j: int) -> Mat:
    m = Mat(n, n)
    m.rows[i][j] = ONE
    return m


def canonical_r(n: int) -> RMatrixElement:
    """sum_{i<j} E_ij (x) E_ji - E_ji (x) E_ij in the fundamental picture."""
    if n < 2:
        raise ValueError("need n >= 2")
    mat = Mat(n * n, n * n)
    for i in range(n):
        for j in range(i + 1, n):
            # E_ij (x) E_ji has its single entry at row (i,j), col (j,i)
            mat.add_to(i * n + j, j * n + i, ONE)
            mat.add_to(j * n + i, i * n + j, -ONE)
    return RMatrixElement(n, mat)


def sl_fundamental(n: int) -> MatrixRep:
    basis = [_unit(n, i, j) for i in range(n) for j in range(n) if i != j]
    for i in range(n - 1):
        basis.append(_unit(n, i, i) - _unit(n, i + 1, i + 1))
    return MatrixRep(n, tuple(basis))


def sp_fundamental(dim: int) -> MatrixRep:
    """sp of the standard skew form <e_i, e_{i+m}> = 1, dim = 2m."""
    if dim % 2:
        raise ValueError("dimension must be even")
    m = dim // 2
    basis = []
    for i in range(m):
        for j in range(m):
            if i != j:
                basis.append(_unit(dim, i, j) - _unit(dim, m + j, m + i))
        basis.append(_unit(dim, i, i) - _unit(dim, m + i, m + i))
        basis.append(_unit(dim, i, m + i))
        basis.append(_unit(dim, m + i, i))
    for i in range(m):
        for j in range(i + 1, m):
            basis.append(_unit(dim, i, m + j) + _unit(dim, j, m + i))
            basis.append(_unit(dim, m + j, i) + _unit(dim, m + i, j))
    return MatrixRep(dim, tuple(basis))


def canonical_r_sp(dim: int) -> RMatrixElement:
    """The canonical r-matrix of sp(dim) through its defining representation.

    Positive and negative root vectors are paired dually with respect to the
    trace form of the representation (the weight 1/tr(X_a X_{-a}) per root);
    this is the normalization for which the modified YBE holds.
    """
    if dim % 2:
        raise ValueError("dimension must be even")
    m = dim // 2
    half = Scalar(1) / 2
    pairs = []
    for i in range(m):
        for j in range(m):
            if i < j:
                # short root eps_i - eps_j; tr(X X-) = 2
                pairs.append(
                    (
                        _unit(dim, i, j) - _unit(dim, m + j, m + i),
                        _unit(dim, j, i) - _unit(dim, m + i, m + j),
                        half,
                    )
                )
        # long root 2 eps_i; tr(X X-) = 1
        pairs.append((_unit(dim, i, m + i), _unit(dim, m + i, i), ONE))
    for i in range(m):
        for j in range(i + 1, m):
            # short root eps_i + eps_j; tr(X X-) = 2
            pairs.append(
                (
                    _unit(dim, i, m + j) + _unit(dim, j, m + i),
                    _unit(dim, m + j, i) + _unit(dim, m + i, j),
                    half,
                )
            )
    mat = Mat(dim * dim, dim * dim)
    for xp, xm, c in pairs:
        mat = mat + c * (xp.kron(xm) - xm.kron(xp))
    return RMatrixElement(dim, mat)


def _embed_pair(mat: Mat, n: int, pos: tuple) -> Mat:
    """Embed an n^2 x n^2 two-site operator into three sites at positions pos."""
    out = Mat(n**3, n**3)
    other = ({0, 1, 2} - set(pos)).pop()
    for r, row in enumerate(mat.rows):
        r1, r2 = divmod(r, n)
        for c, v in row.items():
            c1, c2 = divmod(c, n)
            for k in range(n):
                idx_r = [0, 0, 0]
                idx_c = [0, 0, 0]
                idx_r[pos[0]], idx_r[pos[1]], idx_r[other] = r1, r2, k
                idx_c[pos[0]], idx_c[pos[1]], idx_c[other] = c1, c2, k
                rr = (idx_r[0] * n + idx_r[1]) * n + idx_r[2]
                cc = (idx_c[0] * n + idx_c[1]) * n + idx_c[2]
                out.add_to(rr, cc, v)
    return out


def schouten(r: RMatrixElement) -> Mat:
    """[[R,R]] = [R12,R13] + [R12,R23] + [R13,R23] on the triple tensor power."""
    n = r.dim
    r12 = _embed_pair(r.mat, n, (0, 1))
    r13 = _embed_pair(r.mat, n, (0, 2))
    r23 = _embed_pair(r.mat, n, (1, 2))
    def comm(x, y):
        return x * y - y * x
    return comm(r12, r13) + comm(r12, r23) + comm(r13, r23)


def is_modified(r: RMatrixElement, rep: MatrixRep) -> bool:
    """True iff [[R,R]] commutes with every x (x) 1 (x) 1 + ... cyclic sum."""
    if rep.dim != r.dim:
        raise DimensionMismatch("representation and r-matrix dimensions differ")
    s = schouten(r)
    n = r.dim
    eye = Mat.identity(n)
    for x in rep.basis_matrices:
        total = (
            x.kron(eye).kron(eye) + eye.kron(x).kron(eye) + eye.kron(eye).kron(x)
        )
        if not (s * total - total * s).is_zero():
            return False
    return True


def sklyanin_from_r(n: int):
    """Table of [kappa R, L (x) L] matched against the quadratic bracket.

    Returns (PoissonStructure, kappa).  Raises NormalizationError if no
    single kappa reproduces the reference table.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    gens = matrix_generators(n)
    r = canonical_r(n)

    def gen(i, j):
        return Poly.generator(gens, gens[i * n + j])

    # L (x) L with commuting symbolic entries: entry ((i,k),(j,l)) = a_i^j a_k^l
    size = n * n
    ll = [[None] * size for _ in range(size)]
    for i in range(n):
        for k in range(n):
            for j in range(n):
                for l in range(n):
                    ll[i * n + k][j * n + l] = gen(i, j) * gen(k, l)
    zero = Poly.zero(gens)
    comm = [[zero] * size for _ in range(size)]
    # C = R (L x L) - (L x L) R, exploiting R's sparsity
    for rr, row in enumerate(r.mat.rows):
        for cc, v in row.items():
            for j in range(size):
                comm[rr][j] = comm[rr][j] + v * ll[cc][j]
            for i in range(size):
                comm[i][cc] = comm[i][cc] - ll[i][rr] * v
    reference = sd_quadratic(n)
    kappa = None
    table = {}
    for i in range(n):
        for k in range(n):
            for j in range(n):
                for l in range(n):
                    u, v = i * n + j, k * n + l
                    got = comm[i * n + k][j * n + l]
                    want = reference.entry(u, v)
                    if not got:
                        if want:
                            raise NormalizationError(
                                f"zero entry where reference has {want}"
                            )
                        continue
                    ratio = _poly_ratio(want, got)
                    if ratio is None:
                        raise NormalizationError(
                            f"entry ({gens[u]},{gens[v]}) is not proportional to the reference"
                        )
                    if kappa is None:
                        kappa = ratio
                    elif kappa != ratio:
                        raise NormalizationError(
                            f"inconsistent normalization: {kappa} vs {ratio}"
                        )
                    if u < v:
                        table[(u, v)] = got * kappa
    if kappa is None:
        raise NormalizationError("commutator table is identically zero")
    return PoissonStructure(gens, table), kappa


def _poly_ratio(want: Poly, got: Poly):
    """The constant c with want = c * got, or None."""
    if got.is_zero():
        return None
    monom, coeff = next(iter(got.terms.items()))
    c = want.terms.get(monom, Scalar(0)) / coeff
    return c if want == got * c else None


def hecke_s(n: int) -> BraidOperator:
    """The Hecke-type braid operator on V (x) V in the standard basis."""
    if n < 2:
        raise ValueError("need n >= 2")
    qm = Q - 1 / Q
    mat = Mat(n * n, n * n)
    for i in range(n):
        for j in range(n):
            col = i * n + j
            if i == j:
                mat.add_to(col, col, Q)  # (q-1) + transposition on the diagonal
            else:
                mat.add_to(j * n + i, col, ONE)
                if i < j:
                    mat.add_to(col, col, qm)
    return BraidOperator(n, mat)


def qybe_check(s: BraidOperator) -> bool:
    n = s.dim
    eye = Mat.identity(n)
    s12 = s.mat.kron(eye)
    s23 = eye.kron(s.mat)
    return s12 * s23 * s12 == s23 * s12 * s23


def hecke_check(s: BraidOperator) -> bool:
    eye = Mat.identity(s.dim * s.dim)
    return ((s.mat - Q * eye) * (s.mat + (1 / Q) * eye)).is_zero()


def s_w(s: BraidOperator) -> BraidOperator:
    """The induced operator on W = V (x) V*, in the matrix-coefficient basis.

    S_W(a_i^k (x) a_j^l) = S^{mn}_{ij} (S^{-1})^{kl}_{pq} (a_m^p (x) a_n^q).
    """
    n = s.dim
    try:
        sinv = s.mat.inverse()
    except DimensionMismatch:
        raise DimensionMismatch("braid operator is singular") from None
    N = n * n
    out = Mat(N * N, N * N)
    s_cols = s.mat.transpose().rows
    sinv_rows = sinv.rows
    for i in range(n):
        for j in range(n):
            s_entries = [(divmod(rr, n), v) for rr, v in s_cols[i * n + j].items()]
            for k in range(n):
                for l in range(n):
                    col = (i * n + k) * N + (j * n + l)
                    for (p, qq), w in (
                        (divmod(cc, n), v)
                        for cc, v in sinv_rows[k * n + l].items()
                    ):
                        for (m, nn), v in s_entries:
                            row = (m * n + p) * N + (nn * n + qq)
                            out.add_to(row, col, v * w)
    return BraidOperator(N, out)


def eigen_split(sw: BraidOperator):
    """(I_minus, I_plus) = (image, kernel) of sw - id."""
    d = sw.dim * sw.dim
    delta = sw.mat - Mat.identity(d)
    return image(delta), kernel(delta)
