"""Reading and writing structure files (.hfj).

An .hfj file is a JSON object with keys ``schema_version`` (currently 1),
``kind``, ``field`` ("rational" or "gf:p") and kind-specific fields. Matrices
are lists of rows; each scalar is a JSON integer or a string "p/q" / "n".
See docs/hfj-schema.md for the full layout.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .exactlin import LinMap, Field, QQ
from .hopfcore import AlgebraSC, CoalgebraSC, BialgebraSC, HopfSC
from .repcat import ModuleRep, ComoduleRep, YDRep, HopfModuleRep
from .galois import BialgebraInjection, OreDatum
from .algebroids import BaseAlgebra, BialgebroidSC
from .natposet import FiniteMonoid, NumericalSubmonoid, EventuallyPeriodicSet
from .constructions import RMatrix

SCHEMA_VERSION = 1
KINDS = ("algebra", "coalgebra", "bialgebra", "hopf", "module", "comodule", "yd", "hopf-module",
         "injection", "ore", "bialgebroid", "monoid", "natset", "pivotal", "rmatrix")

_SCALAR = re.compile(r"^\s*-?\d+\s*(/\s*\d+\s*)?$")


class ParseError(ValueError):
    def __init__(self, path: str, msg: str):
        super().__init__(f"{path}: {msg}" if path else msg)
        self.path = path


# --- scalars and matrices ----------------------------------------------------

def parse_scalar(x, field: Field, path: str):
    if isinstance(x, bool):
        raise ParseError(path, f"booleans are not scalars: {x!r}")
    if isinstance(x, int):
        return field(x)
    if isinstance(x, str) and _SCALAR.match(x):
        num, _, den = x.replace(" ", "").partition("/")
        if den and int(den) == 0:
            raise ParseError(path, f"zero denominator in {x!r}")
        q = Fraction(int(num), int(den) if den else 1)
        if field.p and q.denominator % field.p == 0:
            raise ParseError(path, f"{x!r} has no value in {field.name}")
        return field(q)
    raise ParseError(path, f"malformed scalar {x!r}")


def format_scalar(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else x.numerator
    return x


def parse_matrix(obj, field: Field, shape: tuple, path: str) -> LinMap:
    cod, dom = shape
    if not isinstance(obj, list) or not all(isinstance(r, list) for r in obj):
        raise ParseError(path, "expected a list of rows")
    if len(obj) != cod:
        raise ParseError(path, f"dimension mismatch: expected {cod} rows, got {len(obj)}")
    for i, r in enumerate(obj):
        if len(r) != dom:
            raise ParseError(f"{path}[{i}]", f"dimension mismatch: expected {dom} entries, got {len(r)}")
    rows = [[parse_scalar(x, field, f"{path}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(obj)]
    return LinMap(rows, field, dom=dom)


def format_matrix(f: LinMap):
    return [[format_scalar(x) for x in r] for r in f.rows]


def _vector(obj, field, n, path):
    if not isinstance(obj, list) or len(obj) != n:
        raise ParseError(path, f"dimension mismatch: expected a list of {n} scalars")
    return tuple(parse_scalar(x, field, f"{path}[{i}]") for i, x in enumerate(obj))


def _int(obj, key, path, minimum=0):
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool) or v < minimum:
        raise ParseError(f"{path}.{key}", f"expected an integer >= {minimum}")
    return v


def _need(obj, key, path):
    if key not in obj:
        raise ParseError(path, f"missing field {key!r}")
    return obj[key]


# --- parsing -----------------------------------------------------------------

def parse(obj: dict, path: str = "$", field: Field | None = None):
    if not isinstance(obj, dict):
        raise ParseError(path, "expected an object")
    if path == "$":
        v = obj.get("schema_version")
        if v != SCHEMA_VERSION:
            raise ParseError(f"{path}.schema_version", f"unsupported schema version {v!r}")
    kind = obj.get("kind")
    if kind not in KINDS:
        raise ParseError(f"{path}.kind", f"unknown kind {kind!r}")
    if "field" in obj:
        try:
            f = Field.parse(obj["field"])
        except ValueError as e:
            raise ParseError(f"{path}.field", str(e)) from None
        if field is not None and f != field:
            raise ParseError(f"{path}.field", f"{f.name} differs from the enclosing field {field.name}")
        field = f
    field = field or QQ
    name = obj.get("name", "")
    maps = obj.get("maps", {})

    def mat(key, shape, optional=False):
        if key not in maps:
            if optional:
                return None
            raise ParseError(f"{path}.maps", f"missing map {key!r}")
        return parse_matrix(maps[key], field, shape, f"{path}.maps.{key}")

    def nested(key):
        return parse(_need(obj, key, path), f"{path}.{key}", field)

    if kind in ("algebra", "coalgebra", "bialgebra", "hopf"):
        n = _int(obj, "dim", path, 1)
        parts = {}
        if kind != "coalgebra":
            parts["mult"] = mat("mult", (n, n * n))
            parts["unit"] = mat("unit", (n, 1))
        if kind != "algebra":
            parts["comult"] = mat("comult", (n * n, n))
            parts["counit"] = mat("counit", (1, n))
        if kind == "algebra":
            return AlgebraSC(parts["mult"], parts["unit"])
        if kind == "coalgebra":
            return CoalgebraSC(parts["comult"], parts["counit"])
        if kind == "bialgebra":
            return BialgebraSC(parts["mult"], parts["unit"], parts["comult"], parts["counit"], name)
        return HopfSC(parts["mult"], parts["unit"], parts["comult"], parts["counit"], name,
                      mat("antipode", (n, n)), mat("opantipode", (n, n), optional=True))

    if kind in ("module", "comodule", "yd", "hopf-module"):
        parent = nested("parent")
        n = _int(obj, "dim", path, 0)
        p = parent.dim
        mods = {}
        if kind != "comodule":
            mods["m"] = ModuleRep(parent, n, mat("action", (n, p * n)), name)
        if kind != "module":
            mods["c"] = ComoduleRep(parent, n, mat("coaction", (p * n, n)), name)
        if kind == "module":
            return mods["m"]
        if kind == "comodule":
            return mods["c"]
        return (YDRep if kind == "yd" else HopfModuleRep)(mods["m"], mods["c"], *(() if kind == "yd" else (name,)))

    if kind == "injection":
        src, tgt = nested("source"), nested("target")
        return BialgebraInjection(src, tgt, mat("f", (tgt.dim, src.dim)))

    if kind == "ore":
        parent = nested("parent")
        return OreDatum(parent, mat("d", (parent.dim, parent.dim)))

    if kind == "bialgebroid":
        base = nested("base")
        if not isinstance(base, AlgebraSC) or isinstance(base, BialgebraSC):
            raise ParseError(f"{path}.base", "the base must be of kind 'algebra'")
        na = base.dim
        h = _int(obj, "h_dim", path, 1)
        return BialgebroidSC(BaseAlgebra(base), h, mat("eta", (h, na * na)), mat("mult", (h, h * h)),
                             mat("comult", (h * h, h)), mat("counit", (na, h)), name)

    if kind == "monoid":
        table = _need(obj, "table", path)
        n = len(table) if isinstance(table, list) else 0
        if n == 0 or any(not isinstance(r, list) or len(r) != n for r in table):
            raise ParseError(f"{path}.table", "dimension mismatch: expected a square table")
        if any(not isinstance(x, int) or not 0 <= x < n for r in table for x in r):
            raise ParseError(f"{path}.table", f"entries must be integers in [0, {n})")
        ident = obj.get("identity", 0)
        return FiniteMonoid(tuple(map(tuple, table)), ident, name)

    if kind == "natset":
        if "generators" in obj:
            gens = obj["generators"]
            if not isinstance(gens, list) or any(not isinstance(g, int) or g <= 0 for g in gens):
                raise ParseError(f"{path}.generators", "expected a list of positive integers")
            return NumericalSubmonoid(tuple(gens))
        start, period = _int(obj, "start", path, 0), _int(obj, "period", path, 1)
        prefix = [x for x in _need(obj, "prefix", path) if isinstance(x, int)]
        residues = [x for x in _need(obj, "residues", path) if isinstance(x, int)]
        return EventuallyPeriodicSet(frozenset(prefix), start, period, frozenset(r % period for r in residues))

    if kind == "pivotal":
        n = _int(obj, "dim", path, 1)
        return mat("g", (n, n))

    if kind == "rmatrix":
        parent = nested("parent")
        el = _vector(_need(obj, "element", path), field, parent.dim ** 2, f"{path}.element")
        return RMatrix(parent, el)
    raise ParseError(path, f"unhandled kind {kind!r}")  # pragma: no cover


def load(path) -> object:
    p = Path(path)
    try:
        obj = json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise ParseError(str(p), f"invalid JSON at line {e.lineno}: {e.msg}") from None
    return parse(obj)


def kind_of(obj: dict) -> str:
    return obj.get("kind", "")


# --- serialization -----------------------------------------------------------

def serialize(x, kind: str | None = None, top: bool = True) -> dict:
    """Inverse of ``parse`` up to scalar canonical form."""
    field = getattr(x, "field", None)
    out: dict = {"schema_version": SCHEMA_VERSION} if top else {}

    def head(k, f):
        out["kind"] = k
        out["field"] = f.name

    if isinstance(x, HopfSC) or isinstance(x, BialgebraSC):
        is_hopf = isinstance(x, HopfSC) and x.antipode is not None and kind != "bialgebra"
        head("hopf" if is_hopf else "bialgebra", x.field)
        if x.name:
            out["name"] = x.name
        out["dim"] = x.dim
        out["maps"] = {k: format_matrix(getattr(x, k)) for k in ("mult", "unit", "comult", "counit")}
        if is_hopf:
            out["maps"]["antipode"] = format_matrix(x.antipode)
            if getattr(x, "opantipode", None) is not None:
                out["maps"]["opantipode"] = format_matrix(x.opantipode)
        return out
    if isinstance(x, AlgebraSC):
        head("algebra", x.mult.field)
        out["dim"] = x.dim
        out["maps"] = {"mult": format_matrix(x.mult), "unit": format_matrix(x.unit)}
        return out
    if isinstance(x, CoalgebraSC):
        head("coalgebra", x.comult.field)
        out["dim"] = x.dim
        out["maps"] = {"comult": format_matrix(x.comult), "counit": format_matrix(x.counit)}
        return out
    if isinstance(x, (ModuleRep, ComoduleRep, YDRep, HopfModuleRep)):
        k = {ModuleRep: "module", ComoduleRep: "comodule", YDRep: "yd", HopfModuleRep: "hopf-module"}[type(x)]
        parent = x.parent
        f = parent.mult.field if hasattr(parent, "mult") else parent.comult.field
        head(k, f)
        name = getattr(x, "name", "") or getattr(getattr(x, "module", None), "name", "")
        if name:
            out["name"] = name
        out["dim"] = x.dim
        out["parent"] = serialize(parent, top=False)
        maps = {}
        if k != "comodule":
            maps["action"] = format_matrix(x.action if k == "module" else x.module.action)
        if k != "module":
            maps["coaction"] = format_matrix(x.coaction if k == "comodule" else x.comodule.coaction)
        out["maps"] = maps
        return out
    if isinstance(x, BialgebraInjection):
        head("injection", x.h.field)
        out["source"] = serialize(x.b, top=False)
        out["target"] = serialize(x.h, top=False)
        out["maps"] = {"f": format_matrix(x.f)}
        return out
    if isinstance(x, OreDatum):
        head("ore", x.b.field)
        out["parent"] = serialize(x.b, top=False)
        out["maps"] = {"d": format_matrix(x.d)}
        return out
    if isinstance(x, BialgebroidSC):
        head("bialgebroid", x.field)
        if x.name:
            out["name"] = x.name
        out["base"] = serialize(x.base.alg, top=False)
        out["h_dim"] = x.h_dim
        out["maps"] = {k: format_matrix(getattr(x, k)) for k in ("eta", "mult", "comult", "counit")}
        return out
    if isinstance(x, FiniteMonoid):
        out["kind"] = "monoid"
        if x.name:
            out["name"] = x.name
        out["table"] = [list(r) for r in x.table]
        out["identity"] = x.identity
        return out
    if isinstance(x, NumericalSubmonoid):
        out["kind"] = "natset"
        out["generators"] = list(x.generators)
        return out
    if isinstance(x, EventuallyPeriodicSet):
        out["kind"] = "natset"
        out.update(prefix=sorted(x.prefix), start=x.start, period=x.period, residues=sorted(x.residues))
        return out
    if isinstance(x, RMatrix):
        head("rmatrix", x.parent.field)
        out["parent"] = serialize(x.parent, top=False)
        out["element"] = [format_scalar(v) for v in x.element]
        return out
    if isinstance(x, LinMap) and kind == "pivotal":
        head("pivotal", x.field)
        out["dim"] = x.cod
        out["maps"] = {"g": format_matrix(x)}
        return out
    raise TypeError(f"cannot serialize {type(x).__name__}")


def _pretty(obj, level=0) -> str:
    pad, inner = "  " * level, "  " * (level + 1)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{inner}{json.dumps(k)}: {_pretty(v, level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, list) and any(isinstance(v, (list, dict)) for v in obj):
        return "[\n" + ",\n".join(inner + _pretty(v, level + 1) for v in obj) + "\n" + pad + "]"
    return json.dumps(obj)


def dumps(x, kind: str | None = None) -> str:
    """Rows of a matrix go on one line each."""
    return _pretty(serialize(x, kind))
