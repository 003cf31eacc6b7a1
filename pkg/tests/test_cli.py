"""Command-line interface tests: exit codes, determinism, and the
serialization contract (every JSON leaf is a string)."""

import json

import pytest

from e6poly import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_roots_exit_zero(capsys):
    code, out = run(capsys, "roots")
    assert code == 0
    assert "fail: 0" in out


def test_roots_json_document_shape(capsys):
    code, doc = run_json(capsys, "roots")
    assert code == 0
    assert set(doc) == {"command", "seed", "reports", "payload"}
    assert doc["command"] == "roots"
    assert doc["seed"] == "20240823"
    for report in doc["reports"]:
        assert report["status"] in ("pass", "fail", "discrepancy-flagged")


def _assert_string_leaves(node, path="$"):
    if isinstance(node, dict):
        for k, v in node.items():
            _assert_string_leaves(v, f"{path}.{k}")
    elif isinstance(node, list):
        for i, v in enumerate(node):
            _assert_string_leaves(v, f"{path}[{i}]")
    else:
        assert isinstance(node, str), f"non-string leaf at {path}: {node!r}"


def test_numbers_serialize_as_decimal_strings(capsys):
    for argv in (
        ("identity", "--max-degree", "4"),
        ("singular", "--degree", "2"),
        ("invariant", "--dump", "eta"),
    ):
        _code, doc = run_json(capsys, *argv)
        _assert_string_leaves(doc)


def test_output_is_deterministic(capsys):
    _code, first = run(capsys, "rep", "--json")
    _code, second = run(capsys, "rep", "--json")
    assert first == second


def test_flag_position_is_irrelevant(capsys):
    _code, before = run(capsys, "--json", "identity", "--max-degree", "3")
    _code, after = run(capsys, "identity", "--max-degree", "3", "--json")
    assert before == after


def test_timings_are_suppressed_by_default(capsys):
    _code, doc = run_json(capsys, "roots")
    assert all("runtime_ms" not in r for r in doc["reports"])
    _code, doc = run_json(capsys, "roots", "--timings")
    assert all("runtime_ms" in r for r in doc["reports"])


def test_singular_degree_guard(capsys):
    code = cli.main(["singular", "--degree", "9"])
    capsys.readouterr()
    assert code == 2


def test_decompose_degree_guard(capsys):
    code = cli.main(["decompose", "--degree", "6"])
    capsys.readouterr()
    assert code == 2


def test_bad_weight_argument(capsys):
    code = cli.main(["singular", "--weight", "1,2"])
    capsys.readouterr()
    assert code == 2


def test_singular_lists_the_quadratic_weight(capsys):
    _code, doc = run_json(capsys, "singular", "--degree", "2")
    weights = {entry["weight"] for entry in doc["payload"]["spaces"]}
    assert "(0, 0, 0, 0, 0, 1)" in weights


def test_invariant_flagged_rows_do_not_fail(capsys):
    code, doc = run_json(capsys, "invariant")
    assert code == 0
    statuses = {r["status"] for r in doc["reports"]}
    assert "discrepancy-flagged" in statuses
    assert "fail" not in statuses


def test_dump_eta_round_trips(capsys):
    from e6poly.invariants import build_eta
    from e6poly.polyops import poly_from_json

    _code, doc = run_json(capsys, "invariant", "--dump", "eta")
    data = [
        {"exponents": t["exponents"], "coefficient": t["coefficient"]}
        for t in doc["payload"]["eta"]
    ]
    assert poly_from_json(data) == build_eta()


def test_dump_zeta_covers_the_family(capsys):
    _code, doc = run_json(capsys, "invariant", "--dump", "zeta")
    assert set(doc["payload"]["zeta"]) == {str(i) for i in range(1, 28)}


def test_failure_status_sets_exit_code(capsys, monkeypatch):
    from e6poly import rootsys

    class Broken:
        ok = False
        pairs_checked = 0
        triples_checked = 0
        failures = ("synthetic",)

    monkeypatch.setattr(rootsys, "check_cocycle_laws",
                        lambda seed, n_random: Broken())
    code, out = run(capsys, "roots")
    assert code == 1
    assert "FAIL" in out


def test_seed_is_threaded_through(capsys):
    _code, doc = run_json(capsys, "--seed", "31337", "roots")
    assert doc["seed"] == "31337"
    assert doc["payload"]["seed"] == "31337"


def test_closure_command(capsys):
    code, out = run(capsys, "closure")
    assert code == 0
    assert "closure.1-0" in out
    assert "closure.0-1" in out
