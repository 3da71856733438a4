import json

import pytest
from click.testing import CliRunner

from hopfmonad.cli import main


def run(*args):
    return CliRunner().invoke(main, list(args))


@pytest.mark.parametrize("args,code", [
    (["check", "--kind", "hopf", "kZ2.hfj"], 0),
    (["check", "kM2.hfj"], 0),
    (["check", "--kind", "hopf", "kM2.hfj"], 2),
    (["fusion", "kM2.hfj"], 1),
    (["fusion", "corpus:h4"], 0),
    (["antipode", "corpus:h4"], 0),
    (["yd", "corpus:superline-yd"], 0),
    (["hopf-module", "kZ2_free2.hfj"], 0),
    (["fundamental", "corpus:kZ2-free2"], 0),
    (["fundamental", "corpus:kZ3"], 2),
    (["ccc", "corpus:h4"], 0),
    (["cotensor", "corpus:kZ2"], 0),
    (["cross-product"], 0),
    (["bosonise"], 0),
    (["radford"], 0),
    (["dist-tensor", "corpus:kZ2", "corpus:kZ3"], 0),
    (["rmatrix", "z2_rmatrix.hfj"], 0),
    (["augment", "corpus:kZ2", "--aug", "1,-1"], 0),
    (["galois-beta", "corpus:kM2"], 1),
    (["galois-gamma", "kZ3_unit.hfj"], 0),
    (["ore", "superline_ore.hfj"], 0),
    (["ore", "superline_ore.hfj", "--x", "0,1"], 1),
    (["nat", "classify", "--gens", "2,3"], 1),
    (["nat", "classify", "--gens", "4"], 0),
    (["theory", "--order", "2"], 0),
    (["pivotal", "pivotal_jordan.hfj"], 0),
    (["pivotal", "--matrix", "1,2;2,4"], 2),
    (["algebroid", "check"], 0),
    (["algebroid", "closed"], 0),
    (["algebroid", "ccc", "corpus:kZ2"], 0),
    (["algebroid", "hopf-module"], 0),
    (["algebroid", "hopf-maps", "corpus:kM2"], 1),
    (["check", "nosuch.hfj"], 2),
    (["check", "--field", "gf:4", "kZ2.hfj"], 2),
    (["frobnicate"], 2),
], ids=lambda a: " ".join(a) if isinstance(a, list) else str(a))
def test_exit_codes(args, code):
    r = run(*args)
    assert r.exit_code == code, r.output


def test_nat_classify_prints_verdict_and_witness():
    r = run("nat", "classify", "--gens", "2,3")
    assert r.output.splitlines() == ["bimonad, not Hopf", "fusion identity fails at (n, m) = (1, 1)"]


def test_machine_format_is_json_lines():
    r = run("rmatrix", "z2_rmatrix.hfj", "--format", "machine")
    recs = [json.loads(line) for line in r.output.splitlines()]
    assert recs[-1]["type"] == "verdict" and recs[-1]["passed"]
    inv = next(x for x in recs if x.get("key") == "inverse")
    assert inv["value"] == ["1/2", "1/2", "1/2", "-1/2"]


def test_malformed_file_is_invalid_input(tmp_path):
    p = tmp_path / "bad.hfj"
    p.write_text('{"schema_version": 1, "kind": "hopf", "dim": 2, "maps": {"mult": [[1]]}}')
    r = run("check", str(p))
    assert r.exit_code == 2
    assert "parse error" in r.output


def test_corpus_directory_override(tmp_path, monkeypatch):
    src = run("check", "kZ2.hfj")
    assert src.exit_code == 0
    from hopfmonad import hfj
    from hopfmonad.corpus import kZ3
    (tmp_path / "mine.hfj").write_text(hfj.dumps(kZ3()))
    monkeypatch.setenv("HOPFMONAD_CORPUS", str(tmp_path))
    assert run("antipode", "mine.hfj").exit_code == 0
