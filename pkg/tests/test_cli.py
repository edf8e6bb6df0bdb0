import hashlib
import json
import os
import subprocess
import sys
from pathlib import Path

import pytest

from homlie import __version__
from homlie.catalogue import get
from homlie.cli import main
from homlie.errors import ParseError
from homlie.io import algebra_from_dict, dumps_algebra, loads_algebra, parse_rational

FIX = Path(__file__).parent / "fixtures"
CANONICAL = ["E2", "heisenberg3", "sl2", "abelian_1", "abelian_2", "sl2_plus_sl2",
             "dim4_alpha_iteration", "abelian_9"]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def report(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


@pytest.mark.parametrize("name", CANONICAL)
def test_round_trip_is_byte_identical(name, capsys):
    text = (FIX / f"{name}.json").read_text()
    assert dumps_algebra(loads_algebra(text)) == text
    code, out = run(capsys, "export", FIX / f"{name}.json")
    assert code == 0 and out == text


def test_export_from_catalogue_matches_fixture(capsys, tmp_path):
    for name in ("E2", "heisenberg3", "sl2"):
        code, out = run(capsys, "export", f"catalog:{name}")
        assert code == 0 and out == (FIX / f"{name}.json").read_text()
    target = tmp_path / "r.json"
    assert main(["export", "random:3", "--seed", "7", "-o", str(target)]) == 0
    first = target.read_text()
    assert main(["export", "random:3", "--seed", "7", "-o", str(target)]) == 0
    assert target.read_text() == first
    assert loads_algebra(first).dim == 3


def test_parse_refuses_floats():
    with pytest.raises(ParseError):
        parse_rational(0.5)
    assert str(parse_rational("6/4")) == "3/2"
    with pytest.raises(ParseError):
        algebra_from_dict({"name": "x", "dim": 1, "field": "R", "brackets": [], "alpha": [["1"]]})


def test_non_canonical_input_is_normalised():
    L = get("heisenberg3").algebra
    d = json.loads(dumps_algebra(L))
    d["brackets"][0]["value"] = ["0", "0", "2/2"]
    assert dumps_algebra(algebra_from_dict(d)) == dumps_algebra(L)


@pytest.mark.parametrize("argv", [
    ["info", FIX / "heisenberg3.json"],
    ["homology", FIX / "sl2.json", "--degree", "3", "--verify-complex"],
    ["exterior-square", FIX / "dim4_alpha_iteration.json", "--table"],
    ["capability", "catalog:sl2_ltimes_h3"],
    ["uce", FIX / "sl2_plus_sl2.json"],
    ["sequence", FIX / "E2.json", "--ideal", "[1,0]"],
    ["catalog"],
])
def test_json_is_deterministic(argv, capsys):
    c1, o1 = run(capsys, "--json", *argv)
    c2, o2 = run(capsys, "--json", *argv)
    assert c1 == c2 == 0 and o1 == o2
    r = json.loads(o1)
    assert r["tool_version"] == __version__
    assert not any(isinstance(v, float) for v in _leaves(r))


def _leaves(x):
    if isinstance(x, dict):
        for v in x.values():
            yield from _leaves(v)
    elif isinstance(x, list):
        for v in x:
            yield from _leaves(v)
    else:
        yield x


def test_documented_examples(capsys):
    assert run(capsys, "verify", FIX / "E2.json")[0] == 0
    code, out = run(capsys, "verify", FIX / "corrupted_skew.json")
    assert code == 1 and "(e1, e2)" in out
    _, r = report(capsys, "info", FIX / "heisenberg3.json")
    assert r["results"]["centre"]["dim"] == 1 and r["results"]["derived_dim"] == 1
    assert r["results"]["perfect"] is False
    _, r = report(capsys, "info", FIX / "sl2.json")
    assert r["results"]["perfect"] is True and r["results"]["centre"]["dim"] == 0
    _, r = report(capsys, "info", FIX / "abelian_2.json")
    assert r["results"]["centre"]["dim"] == 2
    for name, dim in (("heisenberg3", 2), ("sl2", 0), ("abelian_2", 1)):
        _, r = report(capsys, "homology", FIX / f"{name}.json", "--degree", "2")
        assert r["results"]["homology"][0]["dim"] == dim
    _, r = report(capsys, "tensor-square", FIX / "sl2.json")
    assert r["results"]["dim"] == 3
    for name, dim in (("abelian_1", 0), ("abelian_2", 1)):
        _, r = report(capsys, "exterior-square", FIX / f"{name}.json")
        assert r["results"]["dim"] == dim
    _, r = report(capsys, "capability", FIX / "abelian_1.json")
    assert r["results"]["capable"] is False
    _, r = report(capsys, "uce", FIX / "sl2.json")
    assert r["results"]["kernel"]["dim"] == 0 and r["results"]["h2_cross_check"] == "pass"
    _, r = report(capsys, "sequence", FIX / "heisenberg3.json", "--ideal", "[0,0,1]")
    assert r["results"]["exact"] is True


def test_report_records_input_hash(capsys):
    path = FIX / "E2.json"
    _, r = report(capsys, "verify", path)
    assert r["command"] == "verify"
    assert r["inputs"]["sha256"] == hashlib.sha256(path.read_bytes()).hexdigest()


def test_no_verify_skips_axioms(capsys):
    assert run(capsys, "info", FIX / "not_multiplicative.json")[0] == 3
    assert run(capsys, "--no-verify", "info", FIX / "not_multiplicative.json")[0] == 0
    assert run(capsys, "info", FIX / "not_multiplicative.json", "--no-verify")[0] == 0


def test_contract_script():
    env = dict(os.environ, HOMLIE=f"{sys.executable} -m homlie")
    p = subprocess.run(["bash", str(FIX / "cli_contract.sh")], env=env,
                       capture_output=True, text=True, timeout=300)
    print(p.stdout)
    assert p.returncode == 0, p.stdout
    assert p.stdout.count("ok   exit") == 25
