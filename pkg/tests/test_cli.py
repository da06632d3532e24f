import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from duocat.cli import COMMANDS, SECTIONS, main, render_text, resolve_input, run
from duocat.definition import load_definition

GOLDEN = Path(__file__).parent / "golden"


def invoke(*args):
    return CliRunner().invoke(main, list(args))


def report_of(result):
    return json.loads(result.output)


def section(report, name):
    return next(s for s in report["sections"] if s["name"] == name)


def entry(sec, name):
    return next(e for e in sec["entries"] if e["name"] == name)


def test_help_lists_commands():
    result = invoke("--help")
    assert result.exit_code == 0
    for cmd in COMMANDS:
        assert cmd in result.output


def test_all_on_b2():
    result = invoke("all", "--input", "builtin:B2", "--format", "json")
    assert result.exit_code == 0
    rep = report_of(result)
    assert [s["name"] for s in rep["sections"]] == list(SECTIONS)
    assert all(s["status"] == "pass" for s in rep["sections"])
    assert entry(section(rep, "classification"), "classify:weak")["status"] == "pass"
    bases = section(rep, "bases")
    assert {v: d["dim"] for v, d in bases["data"].items()} == dict.fromkeys(bases["data"], 2)
    assert len(bases["data"]) == 8
    fund = section(rep, "fundamental")
    assert entry(fund, "summary:galois-on-probes")["status"] == "pass"
    assert set(fund["data"].values()) == {"iso"}


def test_check_bimonoid_on_n2():
    result = invoke("check-bimonoid", "--input", "builtin:N2", "--format", "json")
    assert result.exit_code == 1
    wb = entry(section(report_of(result), "axioms"), "WB")
    assert wb["status"] == "fail" and wb["witness"] == 3


def test_check_category_on_builtin_graded():
    result = invoke("check-category", "--input", "builtin:graded-z2")
    assert result.exit_code == 0
    assert all(line.endswith(": PASS") for line in result.output.splitlines())
    assert invoke("check-category", "--input", "builtin:braided").exit_code == 0


def test_n1_counit_failure_and_skips():
    result = invoke("all", "--input", "builtin:N1", "--format", "json")
    assert result.exit_code == 1
    rep = report_of(result)
    e = entry(section(rep, "comonoid"), "delta_left_counit")
    assert e["status"] == "fail" and e["witness"] == 1
    skipped = [s for s in rep["sections"] if s["status"] == "skip"]
    assert {s["name"] for s in skipped} >= {"axioms", "bases", "hopf", "fundamental"}
    assert all("comonoid" in s["reason"] for s in skipped)


def test_skips_do_not_change_exit_code():
    """A category-only file has nothing to check beyond the duoidal axioms."""
    result = invoke("all", "--input", "builtin:graded-z2", "--format", "json")
    rep = report_of(result)
    assert result.exit_code == 0
    assert section(rep, "duoidal")["status"] == "pass"
    assert {s["status"] for s in rep["sections"][1:]} == {"skip"}


def test_b3_exit_one_on_non_galois():
    result = invoke("hopf", "--input", "builtin:B3", "--format", "json")
    assert result.exit_code == 1
    fund = section(report_of(result), "fundamental")
    assert fund["data"]["regular"] == "not_iso(kernel_dim=1, cokernel_dim=1)"


def test_text_format_lines():
    result = invoke("check-bimonoid", "--input", "builtin:N2")
    lines = result.output.splitlines()
    assert "axioms/WB: FAIL witness=3" in lines
    assert "monoid/mu_assoc: PASS" in lines
    assert all(": " in line for line in lines)


@pytest.mark.parametrize("name", ["B1", "B2", "B3", "G1", "N1", "N2"])
def test_every_failure_has_a_witness(name):
    code, rep = run("all", load_definition(resolve_input(f"builtin:{name}")))
    for sec in rep["sections"]:
        for e in sec["entries"]:
            if e["status"] == "fail":
                assert "witness" in e, (sec["name"], e["name"])


def test_entries_sorted_and_deterministic():
    defn_path = resolve_input("builtin:B1")
    a = invoke("all", "--input", str(defn_path), "--format", "json").output
    b = invoke("all", "--input", str(defn_path), "--format", "json").output
    assert a == b
    for sec in json.loads(a)["sections"]:
        names = [e["name"] for e in sec["entries"]]
        assert names == sorted(names)


@pytest.mark.parametrize("golden, args", [
    ("B1_check-bimonoid.json", ["check-bimonoid", "--input", "builtin:B1"]),
    ("N2_check-bimonoid.json", ["check-bimonoid", "--input", "builtin:N2"]),
    ("B1_bases.json", ["bases", "--input", "builtin:B1"]),
])
def test_golden_reports(golden, args):
    result = invoke(*args, "--format", "json")
    assert result.output == (GOLDEN / golden).read_text()


def test_input_errors_exit_two(tmp_path):
    empty = tmp_path / "empty.json"
    empty.write_text("")
    result = invoke("all", "--input", str(empty))
    assert result.exit_code == 2 and "line 1" in result.output
    assert invoke("all", "--input", str(tmp_path / "missing.json")).exit_code == 2
    assert invoke("all", "--input", "builtin:B1", "--field", "gf:9").exit_code == 2
    bad = json.loads(resolve_input("builtin:B1").read_text())
    bad["monoid"]["mu"]["rows"] = 3
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad))
    result = invoke("check-bimonoid", "--input", str(p))
    assert result.exit_code == 2 and "monoid.mu" in result.output


def test_field_override_prime_field():
    result = invoke("check-bimonoid", "--input", "builtin:B2", "--field", "gf:3", "--format", "json")
    rep = report_of(result)
    assert result.exit_code == 0
    assert entry(section(rep, "classification"), "classify:weak")["status"] == "pass"


def test_probe_override(tmp_path):
    probes = tmp_path / "probes.json"
    probes.write_text(json.dumps({"duoidal": [["I", "J", {"atom": "A"}, "I", "J", {"atom": "A"}]],
                                  "objects": ["I"]}))
    result = invoke("all", "--input", "builtin:B1", "--probes", str(probes), "--format", "json")
    assert result.exit_code == 0
    wbm = section(report_of(result), "wbm")
    assert {e.get("probe") for e in wbm["entries"]} <= {None, "I", "I,I", "I,I,I"}


def test_run_rejects_unknown_command():
    with pytest.raises(ValueError):
        run("frobnicate", load_definition(resolve_input("builtin:B1")))


def test_render_text_of_skipped_section():
    text = render_text({"sections": [{"name": "bases", "status": "skip", "entries": []}]})
    assert text == "bases/*: SKIP\n"
