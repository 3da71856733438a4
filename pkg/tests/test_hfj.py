import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from hopfmonad import hfj
from hopfmonad.exactlin import LinMap, GF, QQ
from hopfmonad.hopfcore import HopfSC, BialgebraSC, check_antipode
from hopfmonad.repcat import regular_module, free_hopf_module
from hopfmonad.galois import unit_injection, OreDatum
from hopfmonad.algebroids import enveloping_bialgebroid, base_qxq
from hopfmonad.natposet import NumericalSubmonoid, FiniteMonoid, cofinite_set
from hopfmonad.constructions import RMatrix
from hopfmonad.corpus import kZ2, kM2, sweedler_h4, gf2_superline, superline_yd, z2_rmatrix

DATA = Path(hfj.__file__).parent / "data"


def roundtrip(x, kind=None):
    text = hfj.dumps(x, kind)
    return hfj.parse(json.loads(text))


@pytest.mark.parametrize("x", [
    kZ2(), kM2(), sweedler_h4(), gf2_superline(), regular_module(kZ2()), free_hopf_module(kZ2(), 2),
    superline_yd().yd, unit_injection(kZ2()), OreDatum(gf2_superline(), LinMap([[0, 0], [0, 1]], GF(2))),
    enveloping_bialgebroid(base_qxq()), NumericalSubmonoid((2, 3)), cofinite_set({1, 5}),
    FiniteMonoid(((0, 1), (1, 0)), 0, "Z2"), RMatrix(kZ2(), z2_rmatrix()),
], ids=lambda x: type(x).__name__)
def test_roundtrip(x):
    y = roundtrip(x)
    assert hfj.serialize(y) == hfj.serialize(x)


@given(st.lists(st.tuples(st.integers(-9, 9), st.integers(1, 9)), min_size=4, max_size=4))
def test_fraction_matrix_roundtrip(entries):
    g = LinMap([[Fraction(*entries[0]), Fraction(*entries[1])], [Fraction(*entries[2]), Fraction(*entries[3])]])
    assert roundtrip(g, "pivotal") == g


def test_golden_kz2_file():
    h = hfj.load(DATA / "kZ2.hfj")
    assert isinstance(h, HopfSC) and h.dim == 2
    assert h.mult == kZ2().mult and h.antipode == kZ2().antipode
    assert check_antipode(h).passed


def test_every_shipped_file_parses():
    files = sorted(DATA.glob("*.hfj"))
    assert len(files) >= 10
    for f in files:
        hfj.load(f)


def test_monoid_file_is_a_bialgebra_without_antipode():
    m = hfj.load(DATA / "kM2.hfj")
    assert isinstance(m, BialgebraSC) and not isinstance(m, HopfSC)


def base_doc():
    return json.loads((DATA / "kZ2.hfj").read_text())


@pytest.mark.parametrize("mutate,match", [
    (lambda d: d["maps"]["counit"][0].__setitem__(0, "1/0"), "zero denominator"),
    (lambda d: d["maps"]["mult"].pop(), "dimension mismatch"),
    (lambda d: d["maps"]["unit"][0].__setitem__(0, "x"), "malformed scalar"),
    (lambda d: d.__setitem__("kind", "groupoid"), "unknown kind"),
    (lambda d: d.__setitem__("schema_version", 2), "schema version"),
    (lambda d: d.__setitem__("field", "gf:4"), "field"),
    (lambda d: d["maps"].pop("comult"), "missing map"),
])
def test_parse_errors_name_the_location(mutate, match):
    d = base_doc()
    mutate(d)
    with pytest.raises(hfj.ParseError, match=match) as e:
        hfj.parse(d)
    assert e.value.path.startswith("$")


def test_half_has_no_value_mod_two():
    d = base_doc()
    d["field"] = "gf:2"
    d["maps"]["unit"][0][0] = "1/2"
    with pytest.raises(hfj.ParseError, match="no value"):
        hfj.parse(d)
