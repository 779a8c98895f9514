"""JSON presentation format for the algebraic objects in this package.

Every scalar is stored in its canonical string form; parsing rejects
non-canonical spellings, so serialization round-trips are exact and files
are byte-stable.  Schema violations raise FormatError carrying the path of
the offending field.
"""

from __future__ import annotations

import json

from .commpoly import Poly
from .freealg import FreeElement
from .glie import GeneralizedLieBracket
from .linalg import Mat, SubspaceBasis
from .poisson import PoissonStructure
from .quadratic import QuadraticPresentation
from .rmatrix import BraidOperator, RMatrixElement
from .scalars import Scalar, ScalarError

SCHEMA_VERSION = 1

KINDS = ("poisson", "braid", "rmatrix", "quadratic", "glie")


class FormatError(Exception):
    """A malformed presentation file; the message names the field path."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


# -- scalar / matrix / vector helpers ---------------------------------------


def _scalar_out(c: Scalar) -> str:
    return str(c)

def _scalar_in(text, path: str) -> Scalar:
    if not isinstance(text, str):
        raise FormatError(path, f"expected a scalar string, got {type(text).__name__}")
    try:
        return Scalar.parse_canonical(text)
    except ScalarError as exc:
        raise FormatError(path, str(exc)) from None


def _mat_out(m: Mat) -> dict:
    entries = {}
    for i, row in enumerate(m.rows):
        for j, v in sorted(row.items()):
            entries[f"{i},{j}"] = _scalar_out(v)
    return {"nrows": m.nrows, "ncols": m.ncols, "entries": entries}

def _mat_in(data, path: str) -> Mat:
    nrows = _expect_int(data, "nrows", path)
    ncols = _expect_int(data, "ncols", path)
    entries = _expect(data, "entries", dict, path)
    m = Mat(nrows, ncols)
    for key, text in entries.items():
        here = f"{path}.entries[{key}]"
        try:
            i, j = (int(p) for p in key.split(","))
        except ValueError:
            raise FormatError(here, "entry keys must look like 'row,col'") from None
        if not (0 <= i < nrows and 0 <= j < ncols):
            raise FormatError(here, "entry out of range")
        m.set(i, j, _scalar_in(text, here))
    return m


def _vec_out(vec: dict) -> dict:
    return {str(i): _scalar_out(v) for i, v in sorted(vec.items())}

def _vec_in(data, ambient: int, path: str) -> dict:
    out = {}
    for key, text in _expect_dict(data, path).items():
        here = f"{path}[{key}]"
        try:
            i = int(key)
        except ValueError:
            raise FormatError(here, "vector keys must be integers") from None
        if not 0 <= i < ambient:
            raise FormatError(here, "coordinate out of range")
        out[i] = _scalar_in(text, here)
    return out


def _basis_out(s: SubspaceBasis) -> dict:
    return {"ambient_dim": s.ambient_dim, "rows": [_vec_out(r) for r in s.rows]}

def _basis_in(data, path: str) -> SubspaceBasis:
    ambient = _expect_int(data, "ambient_dim", path)
    rows = _expect(data, "rows", list, path)
    return SubspaceBasis(
        ambient, [_vec_in(r, ambient, f"{path}.rows[{k}]") for k, r in enumerate(rows)]
    )


# -- free / commutative polynomial helpers -----------------------------------


def _free_out(f: FreeElement) -> list:
    return [
        [list(w), _scalar_out(c)]
        for w, c in sorted(f.terms.items(), key=lambda t: (len(t[0]), t[0]))
    ]

def _free_in(data, generators, path: str) -> FreeElement:
    n = len(generators)
    out = FreeElement.zero(generators)
    for k, item in enumerate(_expect_list(data, path)):
        here = f"{path}[{k}]"
        if not (isinstance(item, list) and len(item) == 2):
            raise FormatError(here, "expected [word, coefficient] pairs")
        word, text = item
        if not (isinstance(word, list) and all(isinstance(g, int) and 0 <= g < n for g in word)):
            raise FormatError(here, "word must be a list of generator indices")
        out = out + FreeElement.word(generators, tuple(word), _scalar_in(text, here))
    return out


def _poly_out(p: Poly) -> list:
    return [[list(e), _scalar_out(c)] for e, c in sorted(p.terms.items())]

def _poly_in(data, generators, path: str) -> Poly:
    n = len(generators)
    out = Poly.zero(generators)
    for k, item in enumerate(_expect_list(data, path)):
        here = f"{path}[{k}]"
        if not (isinstance(item, list) and len(item) == 2):
            raise FormatError(here, "expected [exponents, coefficient] pairs")
        exps, text = item
        if not (
            isinstance(exps, list)
            and len(exps) == n
            and all(isinstance(e, int) and e >= 0 for e in exps)
        ):
            raise FormatError(here, f"exponent vector must have {n} nonnegative entries")
        out = out + Poly.monomial(generators, tuple(exps), _scalar_in(text, here))
    return out


# -- schema plumbing ---------------------------------------------------------


def _expect(data, key, typ, path):
    if not isinstance(data, dict):
        raise FormatError(path, f"expected an object, got {type(data).__name__}")
    if key not in data:
        raise FormatError(f"{path}.{key}", "missing field")
    value = data[key]
    if not isinstance(value, typ) or isinstance(value, bool):
        raise FormatError(f"{path}.{key}", f"expected {typ.__name__}")
    return value

def _expect_int(data, key, path):
    return _expect(data, key, int, path)

def _expect_dict(data, path):
    if not isinstance(data, dict):
        raise FormatError(path, f"expected an object, got {type(data).__name__}")
    return data

def _expect_list(data, path):
    if not isinstance(data, list):
        raise FormatError(path, f"expected a list, got {type(data).__name__}")
    return data


# -- top level ---------------------------------------------------------------


def to_data(obj) -> dict:
    """The JSON-ready dictionary for any serializable object."""
    if isinstance(obj, PoissonStructure):
        kind = "poisson"
        payload = {
            "table": {
                f"{i},{j}": _poly_out(p) for (i, j), p in sorted(obj.table.items())
            }
        }
        generators = list(obj.generators)
    elif isinstance(obj, BraidOperator):
        kind = "braid"
        payload = {"dim": obj.dim, "matrix": _mat_out(obj.mat)}
        generators = []
    elif isinstance(obj, RMatrixElement):
        kind = "rmatrix"
        payload = {"dim": obj.dim, "matrix": _mat_out(obj.mat)}
        generators = []
    elif isinstance(obj, QuadraticPresentation):
        kind = "quadratic"
        payload = {
            "flag": obj.flag,
            "relations": [_free_out(r) for r in obj.relations],
        }
        generators = list(obj.generators)
    elif isinstance(obj, GeneralizedLieBracket):
        kind = "glie"
        payload = {
            "i_plus": _basis_out(obj.i_plus),
            "i_minus": _basis_out(obj.i_minus),
            "matrix": _mat_out(obj.matrix),
        }
        generators = list(obj.generators)
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return {"schema": SCHEMA_VERSION, "kind": kind, "generators": generators, "payload": payload}


def from_data(data):
    """Rebuild an object from its JSON dictionary, validating the schema."""
    root = _expect_dict(data, "$")
    version = _expect_int(root, "schema", "$")
    if version != SCHEMA_VERSION:
        raise FormatError("$.schema", f"unsupported schema version {version}")
    kind = _expect(root, "kind", str, "$")
    if kind not in KINDS:
        raise FormatError("$.kind", f"unknown kind {kind!r}; expected one of {KINDS}")
    raw_gens = _expect(root, "generators", list, "$")
    if not all(isinstance(g, str) for g in raw_gens):
        raise FormatError("$.generators", "generator names must be strings")
    generators = tuple(raw_gens)
    payload = _expect(root, "payload", dict, "$")
    path = "$.payload"

    if kind == "poisson":
        table = {}
        N = len(generators)
        for key, val in _expect(payload, "table", dict, path).items():
            here = f"{path}.table[{key}]"
            try:
                i, j = (int(p) for p in key.split(","))
            except ValueError:
                raise FormatError(here, "table keys must look like 'i,j'") from None
            if not (0 <= i < j < N):
                raise FormatError(here, "table keys must satisfy 0 <= i < j < dim")
            table[(i, j)] = _poly_in(val, generators, here)
        return PoissonStructure(generators, table)

    if kind in ("braid", "rmatrix"):
        dim = _expect_int(payload, "dim", path)
        mat = _mat_in(_expect(payload, "matrix", dict, path), f"{path}.matrix")
        want = (dim * dim, dim * dim)
        if mat.shape != want:
            raise FormatError(f"{path}.matrix", f"expected shape {want}, got {mat.shape}")
        return BraidOperator(dim, mat) if kind == "braid" else RMatrixElement(dim, mat)

    if kind == "quadratic":
        flag = _expect(payload, "flag", str, path)
        if flag not in ("graded", "filtered"):
            raise FormatError(f"{path}.flag", f"unknown flag {flag!r}")
        rels = _expect(payload, "relations", list, path)
        relations = tuple(
            _free_in(r, generators, f"{path}.relations[{k}]") for k, r in enumerate(rels)
        )
        try:
            return QuadraticPresentation(generators, relations, flag)
        except ValueError as exc:
            raise FormatError(f"{path}.relations", str(exc)) from None

    i_plus = _basis_in(_expect(payload, "i_plus", dict, path), f"{path}.i_plus")
    i_minus = _basis_in(_expect(payload, "i_minus", dict, path), f"{path}.i_minus")
    mat = _mat_in(_expect(payload, "matrix", dict, path), f"{path}.matrix")
    try:
        return GeneralizedLieBracket(generators, i_plus, i_minus, mat)
    except Exception as exc:
        raise FormatError(path, str(exc)) from None


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, stable separators, trailing newline."""
    return json.dumps(to_data(obj), sort_keys=True, separators=(",", ":")) + "\n"


def loads(text: str):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("$", f"invalid JSON: {exc}") from None
    return from_data(data)


def save(obj, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(obj))


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
