"""Command line front end: ``hopfmonad COMMAND [ARGS]``.

Exit status: 0 when every check passes, 1 when a check fails, 2 when the
input is invalid or outside the hypotheses of the requested check.
Inputs are .hfj files or ``corpus:NAME`` for a built-in example.
"""

from __future__ import annotations

import json
import os
import sys
from pathlib import Path

import click

from . import hfj
from .exactlin import Field, LinMap, ident, kron, flip, vec_map, DimensionMismatch
from .report import Report, HypothesisError
from .hopfcore import AlgebraSC, CoalgebraSC, BialgebraSC, HopfSC, check_structure, check_bialgebra, check_antipode, with_antipode
from .repcat import (
    ModuleRep, ComoduleRep, YDRep, HopfModuleRep, check_representation, tensor_modules, fundamental_theorem_check,
    ccc_report, regular_module, free_hopf_module, trivial_module, cotensor, regular_comodule, free_comodule, yd_braiding,
)
from . import fusion, constructions, galois, natposet, pivotal, algebroids, corpus

DATA = Path(__file__).with_name("data")


class InvalidInput(click.ClickException):
    exit_code = 2


# --- input -------------------------------------------------------------------

def _corpus_table(field: Field):
    from .galois import unit_injection, OreDatum
    from .exactlin import GF
    return {
        "k": lambda: corpus.trivial_bialgebra(field),
        "kZ2": lambda: corpus.kZ2(field),
        "kZ3": lambda: corpus.kZ3(field),
        "kZ2xZ2": lambda: corpus.kZ2xZ2(field),
        "kM2": lambda: corpus.kM2(field),
        "superline": corpus.gf2_superline,
        "h4": corpus.sweedler_h4,
        "env-qxq": lambda: algebroids.enveloping_bialgebroid(algebroids.base_qxq(field)),
        "kZ2-regular": lambda: regular_module(corpus.kZ2(field)),
        "kZ2-free2": lambda: free_hopf_module(corpus.kZ2(field), 2),
        "superline-yd": lambda: corpus.superline_yd(corpus.kZ2(field)).yd,
        "superline-ore": lambda: OreDatum(corpus.gf2_superline(), LinMap([[0, 0], [0, 1]], GF(2))),
    }


def load_input(source: str, field: Field | None):
    if source.startswith("corpus:"):
        name = source[len("corpus:"):]
        table = _corpus_table(field or Field())
        if name not in table:
            raise InvalidInput(f"unknown corpus entry {name!r}; known: {', '.join(table)}")
        return table[name]()
    path = Path(source)
    if not path.exists():
        override = os.environ.get("HOPFMONAD_CORPUS")
        for d in ([Path(override)] if override else []) + [DATA]:
            if (d / source).exists():
                path = d / source
                break
    if not path.exists():
        raise InvalidInput(f"no such file: {source}")
    try:
        obj = hfj.load(path)
    except (hfj.ParseError, DimensionMismatch, ValueError) as e:
        raise InvalidInput(f"parse error: {e}") from None
    if field is not None and getattr(obj, "field", field) != field:
        raise InvalidInput(f"{source} is over {obj.field.name}, not {field.name}")
    return obj


def _require(obj, types, what):
    if not isinstance(obj, types):
        raise InvalidInput(f"expected {what}, got {type(obj).__name__}")
    return obj


def _parse_field(ctx, param, value):
    if value is None:
        return None
    try:
        return Field.parse(value)
    except ValueError as e:
        raise click.BadParameter(str(e))


def _parse_ints(ctx, param, value):
    if value is None:
        return None
    try:
        return tuple(int(x) for x in value.split(",") if x.strip())
    except ValueError:
        raise click.BadParameter(f"expected a comma-separated list of integers, got {value!r}")


# --- output ------------------------------------------------------------------

def emit(reports: list[Report], fmt: str, extra: list[str] | None = None):
    passed = all(r.passed for r in reports)
    if fmt == "machine":
        for r in reports:
            for rec in r.records():
                click.echo(json.dumps(rec))
        for line in extra or ():
            click.echo(json.dumps({"type": "note", "text": line}))
    else:
        for r in reports:
            click.echo(str(r))
        for line in extra or ():
            click.echo(line)
        click.echo("PASS" if passed else "FAIL")
    sys.exit(0 if passed else 1)


def _run(fn):
    """Run a report-producing thunk, turning hypothesis failures into exit 2."""
    try:
        return fn()
    except HypothesisError as e:
        raise InvalidInput(f"hypotheses not met: {e}") from None
    except constructions.UnverifiedInput as e:
        raise InvalidInput(f"input fails verification: {e}") from None


common = [
    click.option("--field", "field", callback=_parse_field, default=None, help="rational or gf:p"),
    click.option("--format", "fmt", type=click.Choice(["human", "machine"]), default="human"),
]


def with_common(f):
    for opt in reversed(common):
        f = opt(f)
    return f


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact verification of Hopf-monad constructions on finite-dimensional data."""


# --- core checks -------------------------------------------------------------

def _check_any(obj) -> list[Report]:
    if isinstance(obj, HopfSC) and obj.antipode is not None:
        r = check_bialgebra(obj)
        r.merge(check_antipode(obj), "antipode: ")
        return [r]
    if isinstance(obj, BialgebraSC):
        return [check_bialgebra(obj)]
    if isinstance(obj, (AlgebraSC, CoalgebraSC)):
        return [check_structure(obj)]
    if isinstance(obj, (ModuleRep, ComoduleRep, YDRep, HopfModuleRep)):
        return [check_representation(obj)]
    if isinstance(obj, galois.BialgebraInjection):
        return [galois.check_injection(obj)]
    if isinstance(obj, galois.OreDatum):
        return [galois.check_ore_datum(obj)]
    if isinstance(obj, algebroids.BialgebroidSC):
        return [algebroids.check_bialgebroid(obj)]
    if isinstance(obj, natposet.FiniteMonoid):
        rep = Report("monoid")
        try:
            natposet.check_monoid(obj)
            rep.record("monoid axioms", True)
        except ValueError as e:
            rep.record("monoid axioms", False, detail=str(e))
        return [rep.finish()]
    if isinstance(obj, (natposet.NumericalSubmonoid, natposet.EventuallyPeriodicSet)):
        v = natposet.classify_nat_monad(obj)
        rep = Report("closure monad on N0")
        rep.record("monad", v.monad, detail=v.reason)
        return [rep.finish()]
    if isinstance(obj, constructions.RMatrix):
        return [constructions.check_rmatrix(obj)]
    if isinstance(obj, LinMap):
        return [pivotal.check_pivotal_pair(pivotal.pivotal_from_matrix(obj))]
    raise InvalidInput(f"nothing to check for {type(obj).__name__}")


_KIND_TYPES = {
    "algebra": AlgebraSC, "coalgebra": CoalgebraSC, "bialgebra": BialgebraSC, "hopf": HopfSC,
    "module": ModuleRep, "comodule": ComoduleRep, "yd": YDRep, "hopf-module": HopfModuleRep,
    "injection": galois.BialgebraInjection, "ore": galois.OreDatum, "bialgebroid": algebroids.BialgebroidSC,
    "monoid": natposet.FiniteMonoid, "natset": (natposet.NumericalSubmonoid, natposet.EventuallyPeriodicSet),
    "pivotal": LinMap, "rmatrix": constructions.RMatrix,
}


@main.command()
@click.argument("source")
@click.option("--kind", type=click.Choice(hfj.KINDS), default=None, help="expected kind of the input")
@with_common
def check(source, kind, field, fmt):
    """Verify the axioms of whatever structure SOURCE holds."""
    obj = load_input(source, field)
    if kind is not None:
        _require(obj, _KIND_TYPES[kind], kind)
        if kind == "hopf" and getattr(obj, "antipode", None) is None:
            raise InvalidInput("expected a Hopf algebra with an antipode")
    try:
        reports = _run(lambda: _check_any(obj))
    except pivotal.SingularMatrix as e:
        raise InvalidInput(str(e)) from None
    emit(reports, fmt)


@main.command("fusion")
@click.argument("source")
@click.option("--probe-dims", callback=_parse_ints, default="1,2")
@with_common
def fusion_cmd(source, probe_dims, field, fmt):
    """Decide invertibility of the fusion operators of B (x) -."""
    b = _require(load_input(source, field), BialgebraSC, "a bialgebra")
    emit([fusion.classify_report(b, probe_dims)], fmt)


@main.command()
@click.argument("source")
@with_common
def antipode(source, field, fmt):
    """Recover the antipode and opantipode from the fusion operators."""
    b = _require(load_input(source, field), BialgebraSC, "a bialgebra")
    S, Sp = fusion.recover_antipodes(b)
    rep = Report("antipode recovery")
    rep.record("antipode recovered", S is not None)
    rep.record("opantipode recovered", Sp is not None)
    if S is not None:
        rep.merge(check_antipode(with_antipode(b, S, Sp)), "S: ")
        rep.data["S"] = S
    if Sp is not None:
        rep.data["S'"] = Sp
    emit([rep.finish()], fmt)


@main.command("tensor-modules")
@click.argument("left")
@click.argument("right")
@with_common
def tensor_modules_cmd(left, right, field, fmt):
    """Tensor two modules over a bialgebra through its comultiplication."""
    m = _require(load_input(left, field), ModuleRep, "a module")
    n = _require(load_input(right, field), ModuleRep, "a module")
    if m.parent != n.parent:
        raise InvalidInput("modules over different parents")
    t = tensor_modules(m.parent, m, n)
    rep = check_representation(t)
    rep.data["dim"] = t.dim
    emit([rep], fmt)


@main.command()
@click.argument("source")
@with_common
def yd(source, field, fmt):
    """Check a Yetter-Drinfeld module and the braiding it induces on itself."""
    x = _require(load_input(source, field), YDRep, "a Yetter-Drinfeld module")
    rep = check_representation(x)
    if rep.passed:
        from .exactlin import try_invert, Singular
        tau = yd_braiding(x, x.module)   # raises if it is not a module map
        rep.record("self-braiding is an H-module map", True)
        rep.record("self-braiding invertible", not isinstance(try_invert(tau), Singular))
        rep.data["self-braiding"] = tau
    emit([rep], fmt)


@main.command("hopf-module")
@click.argument("source")
@with_common
def hopf_module_cmd(source, field, fmt):
    """Check the Hopf module axioms."""
    x = _require(load_input(source, field), HopfModuleRep, "a Hopf module")
    emit([check_representation(x)], fmt)


@main.command()
@click.argument("source")
@with_common
def fundamental(source, field, fmt):
    """Canonical map H (x) M^co -> M of a Hopf module."""
    x = _require(load_input(source, field), HopfModuleRep, "a Hopf module")
    emit([_run(lambda: fundamental_theorem_check(x.parent, x))], fmt)


@main.command()
@click.argument("source")
@click.option("--probe-dims", callback=_parse_ints, default="1,2")
@with_common
def ccc(source, probe_dims, field, fmt):
    """Lax braiding of the induced cocommutative central coalgebra."""
    h = _require(load_input(source, field), HopfSC, "a Hopf algebra")
    if h.antipode is None:
        raise InvalidInput("the induced braiding needs an antipode")
    emit([ccc_report(h, [regular_module(h), trivial_module(h)], probe_dims)], fmt)


@main.command("cotensor")
@click.argument("source")
@click.option("--probe-dims", callback=_parse_ints, default="1,2,3")
@with_common
def cotensor_cmd(source, probe_dims, field, fmt):
    """Cotensor products of free comodules over a cocommutative coalgebra."""
    c = _require(load_input(source, field), BialgebraSC, "a (bi)algebra")
    rep = Report("cotensor of free comodules")
    try:
        for x in probe_dims:
            for y in probe_dims:
                ct = cotensor(c, free_comodule(c, x), free_comodule(c, y))
                rep.record(f"dim(C^{x} box C^{y}) = {c.dim * x * y}", ct.dim == c.dim * x * y, detail=f"got {ct.dim}")
    except ValueError as e:
        raise InvalidInput(str(e)) from None
    emit([rep.finish()], fmt)


# --- constructions -----------------------------------------------------------

@main.command("cross-product")
@with_common
def cross_product_cmd(field, fmt):
    """Cross product algebra of Q[y]/(y^2-1) with the sign action of Z/2."""
    ma = corpus.sign_algebra_action()
    rep = constructions.check_module_algebra(ma)
    a = constructions.cross_product_algebra(ma)
    rep.merge(check_structure(a), "cross product: ")
    rep.data["dim"] = a.dim
    emit([rep], fmt)


@main.command()
@with_common
def bosonise(field, fmt):
    """Bosonise the superline over Q[Z/2] and check the Hopf axioms."""
    h = corpus.sweedler_h4()
    rep = check_bialgebra(h)
    rep.merge(check_antipode(h), "antipode: ")
    rep.data["dim"] = h.dim
    emit([rep], fmt)


@main.command()
@with_common
def radford(field, fmt):
    """Split the bosonised superline back into Q[Z/2] and a braided Hopf algebra."""
    h2, h1 = corpus.sweedler_h4(), corpus.kZ2()
    F = h1.field
    n = h1.dim
    # H4 basis index (b, h) -> b*2 + h; incl h |-> 1 (x) h, proj kills theta
    incl = LinMap.from_images(n, h2.dim, lambda h: {h: 1}, F)
    proj = LinMap.from_images(h2.dim, n, lambda k: {k % n: 1} if k < n else {}, F)
    b, rep = constructions.radford_decompose(h2, h1, proj, incl)
    rep.data["dim B"] = b.dim
    emit([rep], fmt)


@main.command("dist-tensor")
@click.argument("left")
@click.argument("right")
@with_common
def dist_tensor(left, right, field, fmt):
    """Tensor product of two Hopf algebras through the flip distributive law."""
    c = _require(load_input(left, field), HopfSC, "a Hopf algebra")
    b = _require(load_input(right, field), HopfSC, "a Hopf algebra")
    lam = flip(b.dim, c.dim, c.field)
    rep = constructions.distributive_law_report(c, b, lam)
    if rep.passed:
        t = constructions.tensor_via_distributive_law(c, b, lam)
        rep.merge(check_bialgebra(t), "tensor: ")
        rep.merge(check_antipode(t), "tensor antipode: ")
        rep.data["dim"] = t.dim
    emit([rep], fmt)


@main.command()
@click.argument("source")
@with_common
def rmatrix(source, field, fmt):
    """Quasitriangularity and Yang-Baxter for an R-matrix."""
    r = _require(load_input(source, field), constructions.RMatrix, "an R-matrix")
    emit([constructions.check_rmatrix(r)], fmt)


@main.command()
@click.argument("source")
@click.option("--aug", callback=_parse_ints, default=None, help="augmentation values on the basis (default: counit)")
@with_common
def augment(source, aug, field, fmt):
    """Check an augmentation and whether it is left regular."""
    b = _require(load_input(source, field), BialgebraSC, "a bialgebra")
    a = b.counit if aug is None else LinMap([list(aug)], b.field)
    if a.shape != (1, b.dim):
        raise InvalidInput(f"--aug needs {b.dim} values")
    emit([constructions.check_augmentation(b, a)], fmt)


# --- Galois and Ore ----------------------------------------------------------

def _injection(source, field):
    x = load_input(source, field)
    if isinstance(x, BialgebraSC):
        return galois.unit_injection(x)
    return _require(x, galois.BialgebraInjection, "an injection or a bialgebra")


@main.command("galois-beta")
@click.argument("source")
@with_common
def galois_beta_cmd(source, field, fmt):
    """Galois map H (x)_B H -> C (x) H for an injection (a bialgebra means k -> H)."""
    inj = _injection(source, field)
    reps = [galois.check_injection(inj)]
    if reps[0].passed:
        reps.append(_run(lambda: galois.galois_beta(inj)[1]))
    emit(reps, fmt)


@main.command("galois-gamma")
@click.argument("source")
@click.option("--probe-dims", callback=_parse_ints, default="2")
@with_common
def galois_gamma_cmd(source, probe_dims, field, fmt):
    """The map Gamma and the inverse of H^l rebuilt from it."""
    inj = _injection(source, field)
    reps = [galois.check_injection(inj)]
    if reps[0].passed:
        reps.append(_run(lambda: galois.gamma_map(inj, max(probe_dims))[1]))
    emit(reps, fmt)


@main.command()
@click.argument("source")
@click.option("--x", "x_elem", callback=_parse_ints, default=None,
              help="X on M = N = B is left multiplication by this element (default: X = d)")
@with_common
def ore(source, x_elem, field, fmt):
    """Ore datum and the lifted x-action on Hom_B(B (x) M, N) with M = N = B."""
    od = _require(load_input(source, field), galois.OreDatum, "an Ore datum")
    rep = galois.check_ore_datum(od)
    reps = [rep]
    if rep.passed:
        b = od.b
        if x_elem is None:
            X = od.d
        else:
            if len(x_elem) != b.dim:
                raise InvalidInput(f"--x needs {b.dim} coordinates")
            X = b.mult @ kron(vec_map(tuple(x_elem), b.field), ident(b.dim, b.field))
        reg = regular_module(b)
        try:
            reps.append(galois.ore_lifted_action_check(od, (reg, X), (reg, X)))
        except galois.PreconditionError as e:
            pre = Report("Ore lifted action")
            pre.record("commutator precondition [X, b] = d(b)", False, detail=str(e))
            reps.append(pre.finish())
    emit(reps, fmt)


# --- N0 and theories ---------------------------------------------------------

@main.group()
def nat():
    """Closure monads on (N0, <=, +)."""


@nat.command("classify")
@click.option("--gens", callback=_parse_ints, required=True, help="generators of the submonoid, e.g. 2,3")
@click.option("--bound", type=int, default=100, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["human", "machine"]), default="human")
def nat_classify(gens, bound, fmt):
    """Exit 0 iff the closure monad of <GENS> is Hopf."""
    if not gens or any(g <= 0 for g in gens):
        raise InvalidInput("--gens needs positive integers")
    v = natposet.classify_nat_monad(natposet.NumericalSubmonoid(gens), bound)
    rep = Report("closure monad on N0")
    rep.record("monad", v.monad)
    rep.record("bimonad", v.bimonad, v.closure_witness)
    rep.record("Hopf", v.hopf, v.witness, v.reason)
    rep.data["generators"] = v.generators
    rep.data["verdict"] = v.summary()
    if fmt == "human":
        click.echo(v.summary())
        if v.witness:
            click.echo(f"fusion identity fails at (n, m) = {v.witness}")
        sys.exit(0 if rep.passed else 1)
    emit([rep.finish()], fmt)


@nat.command("scan")
@click.option("--max", "top", type=int, default=6, show_default=True)
@click.option("--bound", type=int, default=100, show_default=True)
def nat_scan(top, bound):
    """Classify <S> for every nonempty S inside {1..MAX}."""
    from itertools import combinations
    hopf = 0
    total = 0
    for k in range(1, top + 1):
        for gens in combinations(range(1, top + 1), k):
            v = natposet.classify_nat_monad(natposet.NumericalSubmonoid(gens), bound)
            total += 1
            hopf += v.hopf
            click.echo(f"{','.join(map(str, gens))}: {v.summary()}")
    click.echo(f"{hopf} of {total} Hopf")


@main.command()
@click.argument("source", required=False)
@click.option("--order", type=int, default=None, help="scan all monoids of this order instead")
@click.option("--max-set", type=int, default=3, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["human", "machine"]), default="human")
def theory(source, order, max_set, fmt):
    """Fusion bijectivity for the unary theory of a finite monoid."""
    if (source is None) == (order is None):
        raise InvalidInput("give either a monoid file or --order")
    monoids = natposet.enumerate_monoids(order) if order is not None else \
        [_require(load_input(source, None), natposet.FiniteMonoid, "a monoid")]
    rep = Report("unary theory fusion")
    for m in monoids:
        try:
            v = natposet.theory_fusion_check(m, max_set)
        except ValueError as e:
            raise InvalidInput(str(e)) from None
        scan = natposet.pseudo_constant_scan(m, max_set)
        label = m.name or str(m.table)
        rep.data[label] = f"{v}; group={natposet.is_group(m)}; pseudo-constants={scan.elements}"
        if order is None:
            rep.record("fusion operator bijective on all probes", v.hopf, v.witness)
    emit([rep.finish()], fmt)


# --- pivotal pairs -----------------------------------------------------------

@main.command("pivotal")
@click.argument("source", required=False)
@click.option("--matrix", default=None, help="rows separated by ';', e.g. '1,1;0,1'")
@with_common
def pivotal_cmd(source, matrix, field, fmt):
    """Pivotal pair from an invertible matrix, with unit and flip intertwiners."""
    F = field or Field()
    if matrix is not None:
        try:
            g = LinMap([[int(x) for x in r.split(",")] for r in matrix.split(";")], F)
        except (ValueError, DimensionMismatch) as e:
            raise InvalidInput(f"bad --matrix: {e}") from None
    elif source is not None:
        g = _require(load_input(source, field), LinMap, "a pivotal matrix")
    else:
        raise InvalidInput("give a file or --matrix")
    try:
        pp = pivotal.pivotal_from_matrix(g)
    except (pivotal.SingularMatrix, ValueError) as e:
        raise InvalidInput(str(e)) from None
    reps = [pivotal.check_pivotal_pair(pp)]
    reps.append(pivotal.check_intertwiner(pivotal.unit_intertwiner(pp)))
    fl = pivotal.Intertwiner(pp, pp.p_dim, flip(pp.p_dim, pp.p_dim, pp.field))
    r = pivotal.check_intertwiner(fl)
    r.check = "flip intertwiner"
    reps.append(r)
    emit(reps, fmt)


# --- algebroids --------------------------------------------------------------

def _algebroid(source, field):
    if source is None:
        return algebroids.enveloping_bialgebroid(algebroids.base_qxq(field or Field()))
    x = load_input(source, field)
    if isinstance(x, BialgebraSC):
        return algebroids.from_bialgebra(x)
    return _require(x, algebroids.BialgebroidSC, "a bialgebroid or bialgebra")


@main.command("algebroid")
@click.argument("action", type=click.Choice(["check", "hopf-maps", "closed", "ccc", "cross", "hopf-module"]))
@click.argument("source", required=False)
@with_common
def algebroid_cmd(action, source, field, fmt):
    """Bialgebroid checks; SOURCE defaults to A^e for A = Q x Q."""
    b = _algebroid(source, field)
    reps = [algebroids.check_bialgebroid(b)]
    if action == "check" or not reps[0].passed:
        emit(reps, fmt)
    maps, mrep = algebroids.hopf_algebroid_maps(b)
    reps.append(mrep)
    if action == "hopf-maps":
        emit(reps, fmt)
    base_mod = algebroids.base_module(b)
    reg = algebroids.regular_algebroid_module(b)
    if action == "closed":
        reps.append(_run(lambda: algebroids.algebroid_closed_actions_check(maps, base_mod, reg)))
    elif action == "ccc":
        for probe in (base_mod, reg):
            reps.append(_run(lambda: algebroids.algebroid_induced_ccc(b, probe, maps)[2]))
    elif action == "hopf-module":
        if b.n_a == 1:
            hm = algebroids.free_algebroid_hopf_module(b, 2)
        else:
            hm = algebroids.free_algebroid_hopf_module(b, b.n_a, algebroids.env_module_of_base(b.base))
        reps.append(_run(lambda: algebroids.algebroid_hopf_module_check(b, hm, maps)))
    elif action == "cross":
        if b.n_a == 1:
            y = algebroids.trivial_ydhopf(b)
        else:
            y = algebroids.enveloping_group_ydhopf(b)
        reps.append(algebroids.cross_product_report(b, y).report)
    emit(reps, fmt)


if __name__ == "__main__":  # pragma: no cover
    main()
