"""Command-line interface: subcommands, JSON output, exit codes."""

import json

import pytest

import lihex.ladders
from lihex.cli import main

CANONICAL = dict(sort_keys=True, separators=(",", ":"))


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def test_list_names_everything(capsys):
    rc, out, _ = run(capsys, "list")
    for token in ("pi", "zeta5", "pi4_log2", "f11", "cat", "asymp", "expu"):
        assert token in out.split()
    assert rc == 0


def test_digits_plain(capsys):
    rc, out, _ = run(capsys, "digits", "--constant", "pi",
                     "--position", "1", "--count", "8")
    assert rc == 0
    assert out.strip() == "243F6A88"


def test_digits_json_is_canonical(capsys):
    rc, out, _ = run(capsys, "digits", "--constant", "zeta3",
                     "--position", "100", "--count", "12", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert json.dumps(doc, **CANONICAL) == out.strip()
    assert set(doc) == {"digits", "guard_ok", "position", "retries"}
    assert doc["position"] == 100 and len(doc["digits"]) == 12
    assert doc["digits"] == doc["digits"].upper()


def test_eval_hex_and_decimal(capsys):
    rc, out, _ = run(capsys, "eval", "--constant", "catalan",
                     "--bits", "128")
    assert rc == 0
    lines = out.splitlines()
    assert lines[0] == "hex 0.EA7CB89F409AE845215822E37D32D0C6"
    assert lines[1].startswith("dec 0.91596559417721901505460351")


def test_eval_json_round_trip(capsys):
    rc, out, _ = run(capsys, "eval", "--constant", "pi", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert set(doc) == {"dec", "hex"}
    assert doc["hex"].startswith("3.243F6A8885A308D3")
    assert json.dumps(doc, **CANONICAL) == out.strip()


def test_verify_single_relation(capsys):
    rc, out, _ = run(capsys, "verify", "--relation", "f11",
                     "--bits", "1024")
    assert rc == 0
    assert "f11" in out and "pass" in out


def test_verify_json_null_for_exact_zero(capsys):
    rc, out, _ = run(capsys, "verify", "--relation", "r3", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc == [{"bits": 256, "log2_residual": None,
                    "name": "r3", "passed": True}]


def test_verify_all_default_bits(capsys):
    rc, out, _ = run(capsys, "verify", "--all")
    assert rc == 0
    assert out.count(" pass") == 32 and "FAIL" not in out


def test_verify_failure_exit_code(capsys, monkeypatch):
    from fractions import Fraction as Q
    name, acoef, z4c = lihex.ladders._R4_RHS["r4b"]
    monkeypatch.setitem(lihex.ladders._R4_RHS, "r4b",
                        (name, acoef, z4c + Q(1, 2**100)))
    rc, out, _ = run(capsys, "verify", "--relation", "r4b")
    assert rc == 1
    assert "FAIL" in out


def test_hyper_battery(capsys):
    rc, out, _ = run(capsys, "hyper", "--check", "geo")
    assert rc == 0
    assert out.count(" pass") == 4
    assert "catalan-binomial" in out


def test_discover_found(capsys):
    rc, out, _ = run(capsys, "discover", "--values",
                     "catalan,S(2,1,1,-1,1,0,-1,1,-1,0),"
                     "S(2,3,1,1,1,0,-1,-1,-1,0)",
                     "--bits", "512", "--max-digits", "8", "--json")
    assert rc == 0
    doc = json.loads(out)
    assert doc["status"] == "found"
    assert doc["vector"] == [1, -3, 2]


def test_discover_products_and_exclusion(capsys):
    rc, out, _ = run(capsys, "discover", "--values",
                     "monomial(0,0),pi,monomial(0,1)",
                     "--bits", "1024", "--max-digits", "20", "--json")
    assert rc == 0
    assert json.loads(out)["status"] == "none_within_bound"


def test_discover_inconclusive_is_failure(capsys):
    rc, out, _ = run(capsys, "discover", "--values",
                     "S(2,1,1,-1,1,0,-1,1,-1,0),"
                     "S(2,1,101,-101,101,0,-101,101,-101,0)",
                     "--max-digits", "1", "--json")
    assert rc == 1
    assert json.loads(out)["status"] == "inconclusive"


def test_discover_power_grammar(capsys):
    # pi^2 * log2 as a product atom against its catalog twin
    rc, out, _ = run(capsys, "discover", "--values",
                     "pi^2*monomial(0,1),pi2_log2",
                     "--bits", "256", "--max-digits", "4", "--json")
    assert rc == 0
    assert json.loads(out)["vector"] == [1, -1]


# ----------------------------------------------------------------------
# exit codes and config

def test_unknown_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["digits", "--wat"])
    assert exc.value.code == 2


def test_missing_required_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["digits"])
    assert exc.value.code == 2


def test_bad_expression_is_usage_error(capsys):
    rc, _, err = run(capsys, "discover", "--values", "pi,,log2")
    assert rc == 2
    assert "usage error" in err


def test_bad_position_is_usage_error(capsys):
    rc, _, err = run(capsys, "digits", "--constant", "pi",
                     "--position", "0")
    assert rc == 2
    assert "usage error" in err


def test_unknown_constant_is_failure(capsys):
    rc, _, err = run(capsys, "digits", "--constant", "sqrt2",
                     "--position", "1")
    assert rc == 1
    assert err.startswith("UnknownName")


def test_config_sets_defaults(tmp_path, capsys):
    cfg = tmp_path / "lihex.cfg"
    cfg.write_text("# comment\nbits = 128\nthreads = 2\n")
    rc, out, _ = run(capsys, "--config", str(cfg),
                     "eval", "--constant", "catalan")
    assert rc == 0
    frac = out.splitlines()[0].split(".", 1)[1]
    assert len(frac) == 128 // 4


def test_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "lihex.cfg"
    cfg.write_text("bits = 128\n")
    rc, out, _ = run(capsys, "--config", str(cfg),
                     "eval", "--constant", "catalan", "--bits", "64")
    assert rc == 0
    frac = out.splitlines()[0].split(".", 1)[1]
    assert len(frac) == 64 // 4


def test_config_errors(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("bits = twelve\n")
    rc, _, err = run(capsys, "--config", str(cfg), "list")
    assert rc == 2 and "config error" in err
    cfg.write_text("colour = blue\n")
    rc, _, err = run(capsys, "--config", str(cfg), "list")
    assert rc == 2 and "config error" in err
    rc, _, err = run(capsys, "--config", str(tmp_path / "nope.cfg"), "list")
    assert rc == 2 and "config error" in err
