"""Generalized Lie brackets: a splitting V(x)V = I_plus (+) I_minus together
with a bracket V(x)V -> V (+) k vanishing on I_plus, the overlap space
(I(x)V intersect V(x)I), the two compatibility axioms it must satisfy, the
enveloping quadratic algebra, the q-deformed bracket of the quantum matrix
algebras, and the involutive (S-Lie) Jacobi identities.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .commpoly import GeneratorError
from .freealg import FreeElement
from .linalg import Mat, SubspaceBasis, annihilator, intersect, kernel
from .quadratic import QuadraticPresentation, jhq
from .rmatrix import BraidOperator, eigen_split, flip_operator, hecke_s, s_w
from .scalars import ONE, Scalar, scalar


class SplittingError(Exception):
    pass


@dataclass(frozen=True)
class GeneralizedLieBracket:
    """Bracket data on a space V with a chosen splitting of V(x)V.

    The bracket is stored as an (N+1) x N^2 matrix over Scalar: column u*N+v
    holds the value of [x_u, x_v], rows 0..N-1 being the V-coordinates and
    row N the coefficient of 1.
    """

    generators: tuple
    i_plus: SubspaceBasis
    i_minus: SubspaceBasis
    matrix: Mat

    def __post_init__(self):
        N = len(self.generators)
        if self.i_plus.ambient_dim != N * N or self.i_minus.ambient_dim != N * N:
            raise SplittingError("splitting spaces live in the wrong tensor square")
        if self.i_plus.dim + self.i_minus.dim != N * N:
            raise SplittingError("splitting dimensions do not add up to N^2")
        if intersect(self.i_plus, self.i_minus).dim != 0:
            raise SplittingError("splitting spaces intersect nontrivially")
        if self.matrix.shape != (N + 1, N * N):
            raise SplittingError("bracket matrix has the wrong shape")
        for row in self.i_plus.rows:
            if any(self.matrix.apply(row).values()):
                raise SplittingError("bracket does not vanish on I_plus")

    @property
    def dim(self) -> int:
        return len(self.generators)

    def bracket(self, vec: dict) -> dict:
        """Apply the bracket to a tensor-square vector; index N is the 1-slot."""
        return self.matrix.apply(vec)

    def pair(self, u: int, v: int) -> dict:
        return self.bracket({u * self.dim + v: ONE})

    def value_element(self, vec: dict) -> FreeElement:
        """The bracket of vec as a degree <= 1 free-algebra element."""
        N = self.dim
        out = FreeElement.zero(self.generators)
        for idx, c in self.bracket(vec).items():
            if idx == N:
                out = out + FreeElement.constant(self.generators, c)
            else:
                out = out + FreeElement.word(self.generators, (idx,), c)
        return out

    def specialize(self, assignment: dict) -> "GeneralizedLieBracket":
        return GeneralizedLieBracket(
            self.generators,
            self.i_plus.specialize(assignment),
            self.i_minus.specialize(assignment),
            self.matrix.specialize(assignment),
        )

    @staticmethod
    def from_relation_values(generators, i_plus, pairs) -> "GeneralizedLieBracket":
        """Build a bracket from (quadratic vector, value vector) pairs.

        The quadratic vectors span I_minus; together with i_plus they must
        fill V(x)V.  The value vectors have N+1 coordinates (V plus the
        1-slot).  The bracket is the unique linear map sending each quadratic
        vector to its value and killing i_plus.
        """
        N = len(generators)
        quads = [p[0] for p in pairs]
        i_minus = SubspaceBasis(N * N, quads)
        if i_minus.dim != len(pairs):
            raise SplittingError("dependent relation vectors")
        basis = Mat(N * N, N * N)
        for col, vec in enumerate(quads + list(i_plus.rows)):
            for idx, c in vec.items():
                basis.set(idx, col, c)
        if basis.rank() != N * N:
            raise SplittingError("relation vectors and I_plus do not span V(x)V")
        values = Mat(N + 1, N * N)
        for col, (_, val) in enumerate(pairs):
            for idx, c in val.items():
                values.set(idx, col, c)
        matrix = values * basis.inverse()
        return GeneralizedLieBracket(tuple(generators), i_plus, i_minus, matrix)


def overlap_space(i: SubspaceBasis) -> SubspaceBasis:
    """(I (x) V) intersect (V (x) I) inside the tensor cube.

    Computed as the joint kernel of the annihilator constraints phi (x) id
    and id (x) phi, phi ranging over a basis of the annihilator of I.
    """
    NN = i.ambient_dim
    N = int(round(NN**0.5))
    if N * N != NN:
        raise SplittingError("subspace does not live in a tensor square")
    if i.dim == 0:
        return SubspaceBasis(N**3, [])
    rows = []
    for phi in annihilator(i).rows:
        for c in range(N):
            rows.append({ab * N + c: v for ab, v in phi.items()})
        for a in range(N):
            rows.append({a * N * N + bc: v for bc, v in phi.items()})
    return kernel(Mat(len(rows), N**3, rows))


def _partial_brackets(g: GeneralizedLieBracket, w: dict):
    """Apply the bracket to the first or last two factors of a cube vector.

    Returns (quadratic part, linear part) of (b (x) id - id (x) b)(w); the
    constant row of the bracket lands in the linear part, so no constant term
    arises at this stage.
    """
    N = g.dim
    cols = g.matrix.transpose().rows
    quad: dict = {}
    lin: dict = {}

    def acc(store, idx, val):
        s = store.get(idx, Scalar(0)) + val
        if s:
            store[idx] = s
        else:
            store.pop(idx, None)

    for idx, c in w.items():
        xy, z = divmod(idx, N)
        for r, v in cols[xy].items():
            if r < N:
                acc(quad, r * N + z, v * c)
            else:
                acc(lin, z, v * c)
        x, yz = divmod(idx, N * N)
        for r, v in cols[yz].items():
            if r < N:
                acc(quad, x * N + r, -(v * c))
            else:
                acc(lin, x, -(v * c))
    return quad, lin


def check_axiom7(g: GeneralizedLieBracket):
    """(b (x) id - id (x) b) maps the overlap space into I_minus (mod V + k)."""
    for pos, w in enumerate(overlap_space(g.i_minus).rows):
        quad, _ = _partial_brackets(g, w)
        if not g.i_minus.contains(quad):
            return False, {
                "overlap_index": pos,
                "residual": g.i_minus.reduce(quad),
            }
    return True, None


def check_axiom8(g: GeneralizedLieBracket):
    """Applying the bracket once more on the overlap space gives exact zero.

    For overlap vector w write (b (x) id - id (x) b)(w) = D2 + D1 with D2
    quadratic and D1 linear; the requirement is b(D2) + D1 = 0 in V (+) k.
    """
    N = g.dim
    for pos, w in enumerate(overlap_space(g.i_minus).rows):
        quad, lin = _partial_brackets(g, w)
        total = g.bracket(quad)
        for idx, c in lin.items():
            s = total.get(idx, Scalar(0)) + c
            if s:
                total[idx] = s
            else:
                total.pop(idx, None)
        if total:
            return False, {"overlap_index": pos, "residual": total}
    return True, None


@lru_cache(maxsize=None)
def type2_bracket(n: int) -> GeneralizedLieBracket:
    """The q-Lie bracket whose enveloping algebra is the filtered quantum
    matrix algebra: relation quadratic parts map to their lower-order terms,
    the complementary eigenspace maps to zero.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    pres = jhq(n)
    _, i_plus = eigen_split(s_w(hecke_s(n)))
    N = n * n
    pairs = []
    for rel in pres.relations:
        quad = rel.homogeneous_part(2)
        value = quad - rel  # the lower-order terms the quadratic part maps to
        vec = {}
        for word, c in value.terms.items():
            vec[word[0] if word else N] = c
        pairs.append((quad.to_vector(2), vec))
    return GeneralizedLieBracket.from_relation_values(pres.generators, i_plus, pairs)


def bracket_table(g: GeneralizedLieBracket) -> dict:
    """[x_u, x_v] for every ordered generator pair, as degree <= 1 elements."""
    N = g.dim
    out = {}
    for u in range(N):
        for v in range(N):
            out[(g.generators[u], g.generators[v])] = g.value_element({u * N + v: ONE})
    return out


def adjoint(g: GeneralizedLieBracket, name: str) -> dict:
    """ad_x as a map generator name -> bracket value [x, y]."""
    if name not in g.generators:
        raise GeneratorError(f"unknown generator {name!r}")
    u = g.generators.index(name)
    N = g.dim
    return {
        g.generators[v]: g.value_element({u * N + v: ONE}) for v in range(N)
    }


def enveloping(g: GeneralizedLieBracket) -> QuadraticPresentation:
    """T(V) modulo r - [r], r running over the canonical I_minus basis."""
    rels = []
    for row in g.i_minus.rows:
        quad = FreeElement.from_vector(g.generators, 2, row)
        rels.append(quad - g.value_element(row))
    flag = "graded" if all(r.homogeneous_part(2) == r for r in rels) else "filtered"
    return QuadraticPresentation(g.generators, tuple(rels), flag)


def classical_glie(n: int, half_scaled: bool = False) -> GeneralizedLieBracket:
    """The commutator bracket of gl(n) with the symmetric/skew splitting.

    With half_scaled the bracket is divided by two, the normalization under
    which the enveloping presentation has relations xy - yx - [x,y]/2 on the
    full skew basis, reproducing the usual enveloping-algebra relations.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    gens = tuple(f"e_{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))
    N = n * n
    flip = flip_operator(N)
    delta = flip.mat - Mat.identity(N * N)
    i_minus, i_plus = kernel(delta + 2 * Mat.identity(N * N)), kernel(delta)
    matrix = Mat(N + 1, N * N)
    scale = Scalar(1) / 2 if half_scaled else ONE
    for u in range(N):
        i, j = divmod(u, n)
        for v in range(N):
            k, l = divmod(v, n)
            col = u * N + v
            # [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
            if j == k:
                matrix.add_to(i * n + l, col, scale)
            if l == i:
                matrix.add_to(k * n + j, col, -scale)
    return GeneralizedLieBracket(gens, i_plus, i_minus, matrix)


def random_bracket(
    i_plus, i_minus, generators, seed: int, with_constant: bool = False
) -> GeneralizedLieBracket:
    """A random bracket on the given splitting with small integer values."""
    rng = random.Random(seed)
    N = len(generators)
    pairs = []
    for row in i_minus.rows:
        vec = {}
        for idx in range(N + 1 if with_constant else N):
            c = rng.randint(-3, 3)
            if c:
                vec[idx] = scalar(c)
        pairs.append((row, vec))
    return GeneralizedLieBracket.from_relation_values(generators, i_plus, pairs)


def slie_jacobi_check(g: GeneralizedLieBracket, s: BraidOperator) -> bool:
    """The two involutive-case Jacobi identities on the tensor cube.

    Requires s to square to the identity and the bracket to carry no
    constant part; checks b b12 (id + S12 S23 + S23 S12) = 0 and
    b b12 = b b23 (id - S12) exactly.
    """
    N = g.dim
    if s.dim != N:
        raise SplittingError("operator and bracket dimensions differ")
    eye2 = Mat.identity(N * N)
    if s.mat * s.mat != eye2:
        raise ValueError("the Jacobi forms require an involutive operator")
    if any(g.matrix.rows[N].values()):
        raise ValueError("the Jacobi forms require a bracket without constant part")
    bv = Mat(N, N * N, [dict(r) for r in g.matrix.rows[:N]])
    eye = Mat.identity(N)
    b12 = bv.kron(eye)
    b23 = eye.kron(bv)
    s12 = s.mat.kron(eye)
    s23 = eye.kron(s.mat)
    eye3 = Mat.identity(N**3)
    lhs = bv * b12
    if not (lhs * (eye3 + s12 * s23 + s23 * s12)).is_zero():
        return False
    return lhs == bv * b23 * (eye3 - s12)
