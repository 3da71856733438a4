"""Exact scalars and dense linear maps.

Tensor index convention (used by every module in this package):
bases are zero-based and tensor products are row-major, so the basis
vector e_i (x) e_j of V (x) W has index i*dim(W) + j.  Longer products
nest the same way.  A linear map f: V -> W is stored as a cod x dom
array, and when a map is flattened into a vector (e.g. an element of
Hom(V, W)) the coordinate of f[w][v] is w*dim(V) + v.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Iterable, NamedTuple, Sequence


class Field:
    """Field descriptor: ``QQ`` or ``GF(p)``.

    Rational scalars are ints or Fractions (Fraction keeps lowest terms,
    integral values are stored as int).  Prime-field scalars are ints in
    [0, p).
    """

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and (p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1))):
            raise ValueError(f"GF({p}): modulus must be prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"gf:{self.p}" if self.p else "rational"

    def __repr__(self):
        return f"GF({self.p})" if self.p else "QQ"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __call__(self, x) -> int | Fraction:
        if self.p:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
            return int(x) % self.p
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    def norm(self, x):
        if self.p:
            return x % self.p
        if type(x) is Fraction and x.denominator == 1:
            return x.numerator
        return x

    def inv(self, x):
        if self.p:
            return pow(x, -1, self.p)
        return self.norm(1 / Fraction(x))

    def div(self, a, b):
        if self.p:
            return a * pow(b, -1, self.p) % self.p
        return self.norm(Fraction(a) / b)

    @staticmethod
    def parse(name: str) -> "Field":
        if name in ("rational", "QQ", "Q"):
            return QQ
        if name.startswith("gf:"):
            return Field(int(name[3:]))
        raise ValueError(f"unknown field descriptor {name!r}")


QQ = Field()


def GF(p: int) -> Field:
    return Field(p)


class DimensionMismatch(ValueError):
    pass


class FieldMismatch(ValueError):
    pass


class Singular(NamedTuple):
    """Returned by try_invert when no inverse exists."""
    witness: tuple


class LinMap:
    """Dense exact linear map, stored as a tuple of rows (cod x dom)."""

    __slots__ = ("field", "cod", "dom", "rows")

    def __init__(self, rows: Sequence[Sequence], field: Field = QQ, dom: int | None = None):
        rows = tuple(tuple(field(x) for x in r) for r in rows)
        if dom is None:
            if not rows:
                raise DimensionMismatch("empty matrix needs an explicit dom")
            dom = len(rows[0])
        for r in rows:
            if len(r) != dom:
                raise DimensionMismatch(f"ragged rows: expected {dom} entries, got {len(r)}")
        self.field = field
        self.cod = len(rows)
        self.dom = dom
        self.rows = rows

    @classmethod
    def _raw(cls, field, cod, dom, rows):
        f = object.__new__(cls)
        f.field, f.cod, f.dom, f.rows = field, cod, dom, rows
        return f

    @classmethod
    def zero(cls, cod: int, dom: int, field: Field = QQ):
        return cls._raw(field, cod, dom, tuple((0,) * dom for _ in range(cod)))

    @classmethod
    def identity(cls, n: int, field: Field = QQ):
        return cls._raw(field, n, n, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], cod: int, field: Field = QQ):
        rows = [[field(c[i]) for c in cols] for i in range(cod)]
        return cls._raw(field, cod, len(cols), tuple(tuple(r) for r in rows))

    @classmethod
    def from_images(cls, dom: int, cod: int, image, field: Field = QQ):
        """Build a map from ``image(j) -> {i: value}`` giving column j sparsely."""
        rows = [[0] * dom for _ in range(cod)]
        for j in range(dom):
            for i, v in image(j).items():
                rows[i][j] = field.norm(rows[i][j] + v)
        return cls._raw(field, cod, dom, tuple(tuple(r) for r in rows))

    def __repr__(self):
        return f"LinMap({self.cod}x{self.dom}, {self.field!r}, {[list(r) for r in self.rows]})"

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return (self.cod, self.dom, self.field) == (other.cod, other.dom, other.field) and self.rows == other.rows

    def __hash__(self):
        return hash((self.cod, self.dom, self.rows))

    @property
    def shape(self):
        return (self.cod, self.dom)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [tuple(c) for c in zip(*self.rows)] if self.cod else [()] * self.dom

    def entries(self) -> list:
        return [x for r in self.rows for x in r]

    @property
    def T(self) -> "LinMap":
        return LinMap._raw(self.field, self.dom, self.cod, tuple(zip(*self.rows)) if self.cod else tuple(() for _ in range(self.dom)))

    def _check(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __matmul__(self, other: "LinMap") -> "LinMap":
        self._check(other)
        if self.dom != other.cod:
            raise DimensionMismatch(f"cannot compose {self.shape} after {other.shape}")
        nz = [[(j, v) for j, v in enumerate(r) if v] for r in other.rows]
        norm = self.field.norm
        out = []
        for r in self.rows:
            acc = [0] * other.dom
            for k, a in enumerate(r):
                if a:
                    for j, v in nz[k]:
                        acc[j] += a * v
            out.append(tuple(norm(x) for x in acc))
        return LinMap._raw(self.field, self.cod, other.dom, tuple(out))

    def __add__(self, other):
        self._check(other)
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} + {other.shape}")
        norm = self.field.norm
        return LinMap._raw(self.field, self.cod, self.dom,
                           tuple(tuple(norm(a + b) for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        norm = self.field.norm
        return LinMap._raw(self.field, self.cod, self.dom, tuple(tuple(norm(-a) for a in r) for r in self.rows))

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "LinMap":
        c = self.field(c)
        norm = self.field.norm
        return LinMap._raw(self.field, self.cod, self.dom, tuple(tuple(norm(c * a) for a in r) for r in self.rows))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.dom:
            raise DimensionMismatch(f"vector of length {len(v)} for map with dom {self.dom}")
        norm = self.field.norm
        nz = [(j, x) for j, x in enumerate(v) if x]
        return tuple(norm(sum(r[j] * x for j, x in nz)) for r in self.rows)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def kron(self, other: "LinMap") -> "LinMap":
        return kron(self, other)

    def rank(self) -> int:
        return rank(self)


def kron(*maps: LinMap) -> LinMap:
    """Tensor product of maps, row-major (see module docstring)."""
    f = maps[0]
    for g in maps[1:]:
        f._check(g)
        norm = f.field.norm
        rows = []
        for fr in f.rows:
            for gr in g.rows:
                rows.append(tuple(norm(a * b) if a and b else 0 for a in fr for b in gr))
        f = LinMap._raw(f.field, f.cod * g.cod, f.dom * g.dom, tuple(rows))
    return f


def compose(*maps: LinMap) -> LinMap:
    """compose(f, g, h) = f o g o h."""
    out = maps[-1]
    for f in reversed(maps[:-1]):
        out = f @ out
    return out


def ident(n: int, field: Field = QQ) -> LinMap:
    return LinMap.identity(n, field)


def unravel(index: int, dims: Sequence[int]) -> tuple:
    out = []
    for d in reversed(dims):
        out.append(index % d)
        index //= d
    return tuple(reversed(out))


def ravel(idx: Sequence[int], dims: Sequence[int]) -> int:
    k = 0
    for i, d in zip(idx, dims):
        k = k * d + i
    return k


def permute_factors(dims: Sequence[int], perm: Sequence[int], field: Field = QQ) -> LinMap:
    """Map V_0 (x) ... (x) V_{n-1} -> V_{perm[0]} (x) ... (x) V_{perm[n-1]}."""
    out_dims = [dims[p] for p in perm]
    total = 1
    for d in dims:
        total *= d
    rows = [[0] * total for _ in range(total)]
    for idx in product(*[range(d) for d in dims]):
        rows[ravel([idx[p] for p in perm], out_dims)][ravel(idx, dims)] = 1
    return LinMap._raw(field, total, total, tuple(tuple(r) for r in rows))


def flip(m: int, n: int, field: Field = QQ) -> LinMap:
    """The symmetric braiding V_m (x) V_n -> V_n (x) V_m."""
    return permute_factors((m, n), (1, 0), field)


def basis_vector(n: int, i: int) -> tuple:
    return tuple(1 if k == i else 0 for k in range(n))


def vec_map(v: Sequence, field: Field = QQ) -> LinMap:
    """Column vector as a map 1 -> n."""
    return LinMap._raw(field, len(v), 1, tuple((field(x),) for x in v))


# --- elimination -----------------------------------------------------------

def _rref(rows: Iterable[dict], field: Field) -> list[tuple[int, dict]]:
    """Sparse reduced row echelon form; returns (pivot, row) sorted by pivot.

    Rows are dicts col -> nonzero scalar.  Pivoting takes the first nonzero
    entry of each incoming row, so the result is deterministic (and, being
    reduced, canonical).
    """
    norm = field.norm
    basis: dict[int, dict] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        # basis rows are fully reduced, so one pass over known pivots suffices
        for c in [c for c in r if c in basis]:
            a = r.get(c)
            if a:
                for k, v in basis[c].items():
                    x = norm(r.get(k, 0) - a * v)
                    if x:
                        r[k] = x
                    else:
                        r.pop(k, None)
        if not r:
            continue
        p = min(r)
        inv = field.inv(r[p])
        r = {k: norm(v * inv) for k, v in r.items()}
        for q, brow in basis.items():
            a = brow.get(p)
            if a:
                for k, v in r.items():
                    x = norm(brow.get(k, 0) - a * v)
                    if x:
                        brow[k] = x
                    else:
                        brow.pop(k, None)
        basis[p] = r
    return sorted(basis.items())


def _sparse_rows(f: LinMap) -> list[dict]:
    return [{j: v for j, v in enumerate(r) if v} for r in f.rows]


def rref(f: LinMap) -> list[tuple[int, dict]]:
    return _rref(_sparse_rows(f), f.field)


def rank(f: LinMap) -> int:
    return len(rref(f))


def kernel_basis(f: LinMap) -> list[tuple]:
    """Basis of ker f: one vector per free column, in column order."""
    R = rref(f)
    pivots = {p for p, _ in R}
    norm = f.field.norm
    out = []
    for j in range(f.dom):
        if j in pivots:
            continue
        v = [0] * f.dom
        v[j] = 1
        for p, row in R:
            a = row.get(j)
            if a:
                v[p] = norm(-a)
        # scale so the leading entry is 1
        lead = next(x for x in v if x)
        inv = f.field.inv(lead)
        out.append(tuple(norm(x * inv) for x in v))
    return out


def image_basis(f: LinMap) -> list[tuple]:
    """Canonical basis of the column space (rows of the RREF of f^T)."""
    R = rref(f.T)
    return [tuple(row.get(k, 0) for k in range(f.cod)) for _, row in R]


def try_invert(f: LinMap) -> LinMap | Singular:
    if f.cod != f.dom:
        raise DimensionMismatch(f"try_invert needs a square map, got {f.shape}")
    n = f.dom
    ker = kernel_basis(f)
    if ker:
        return Singular(ker[0])
    # row-reduce [f | I]
    rows = [{**{j: v for j, v in enumerate(r) if v}, **{n + i: 1}} for i, r in enumerate(f.rows)]
    R = _rref(rows, f.field)
    inv = [tuple(row.get(n + k, 0) for k in range(n)) for _, row in R]
    return LinMap._raw(f.field, n, n, tuple(inv))


def solve(f: LinMap, b: Sequence) -> tuple | None:
    """One solution x of f x = b (free variables set to zero), or None."""
    if len(b) != f.cod:
        raise DimensionMismatch("right-hand side has the wrong length")
    rows = []
    for r, bi in zip(f.rows, b):
        d = {j: v for j, v in enumerate(r) if v}
        if bi:
            d[f.dom] = f.field(bi)
        rows.append(d)
    R = _rref(rows, f.field)
    x = [0] * f.dom
    for p, row in R:
        if p == f.dom:
            return None
        x[p] = row.get(f.dom, 0)
    return tuple(x)


def solve_map(f: LinMap, g: LinMap) -> LinMap | None:
    """X with f X = g, or None (columnwise solve)."""
    cols = []
    for c in g.columns():
        x = solve(f, c)
        if x is None:
            return None
        cols.append(x)
    return LinMap.from_columns(cols, f.dom, f.field) if cols else LinMap.zero(f.dom, 0, f.field)


def inclusion(basis: Sequence[Sequence], n: int, field: Field = QQ) -> LinMap:
    """Map k^len(basis) -> k^n whose columns are the given vectors."""
    if not basis:
        return LinMap.zero(n, 0, field)
    return LinMap.from_columns(basis, n, field)


def first_difference(f: LinMap, g: LinMap):
    """(row, column) of the first entry where f and g differ, or None."""
    if f.shape != g.shape:
        raise DimensionMismatch(f"{f.shape} vs {g.shape}")
    for j in range(f.dom):
        for i in range(f.cod):
            if f.rows[i][j] != g.rows[i][j]:
                return i, j
    return None


def same_span(a: Sequence[Sequence], b: Sequence[Sequence], n: int, field: Field = QQ) -> bool:
    ra = _rref([{k: v for k, v in enumerate(x) if v} for x in a], field)
    rb = _rref([{k: v for k, v in enumerate(x) if v} for x in b], field)
    return ra == rb


class Quotient:
    """The quotient of k^ambient by the span of ``relations``.

    The section picks the non-pivot coordinates of the reduced relation
    basis, so quotient coordinates are canonical.
    """

    def __init__(self, ambient: int, relations: Iterable[Sequence | dict], field: Field = QQ):
        rows = []
        for r in relations:
            if isinstance(r, dict):
                rows.append(r)
            else:
                rows.append({k: v for k, v in enumerate(r) if v})
        self.field = field
        self.ambient = ambient
        self.rel = _rref(rows, field)
        pivots = {p for p, _ in self.rel}
        self.free = [j for j in range(ambient) if j not in pivots]
        self.dim = len(self.free)
        pos = {j: k for k, j in enumerate(self.free)}
        norm = field.norm
        proj = [[0] * ambient for _ in range(self.dim)]
        for j in self.free:
            proj[pos[j]][j] = 1
        for p, row in self.rel:
            for c, v in row.items():
                if c != p:
                    proj[pos[c]][p] = norm(-v)
        self.projection = LinMap._raw(field, self.dim, ambient, tuple(tuple(r) for r in proj))
        sec = [[0] * self.dim for _ in range(ambient)]
        for j in self.free:
            sec[j][pos[j]] = 1
        self.section = LinMap._raw(field, ambient, self.dim, tuple(tuple(r) for r in sec))

    @property
    def relation_rank(self) -> int:
        return len(self.rel)

    def relation_vectors(self) -> list[tuple]:
        return [tuple(row.get(k, 0) for k in range(self.ambient)) for _, row in self.rel]

    def reduce(self, v: Sequence) -> tuple:
        return self.projection.apply(v)

    def contains(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def kills(self, f: LinMap) -> bool:
        """True when every column of f lies in the relation span."""
        return (self.projection @ f).is_zero()


def induced_map(F: LinMap, source: Quotient, target: Quotient) -> LinMap | None:
    """The map source -> target induced by F on ambients, or None if F does
    not carry relations into relations."""
    rel = source.relation_vectors()
    if rel:
        R = LinMap.from_columns(rel, source.ambient, F.field)
        if not target.kills(F @ R):
            return None
    return target.projection @ F @ source.section
