import json

import pytest

from invsemi import cli
from invsemi import graph as gm


def run_main(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def strip_ms(obj):
    if isinstance(obj, dict):
        return {k: strip_ms(v) for k, v in obj.items() if k != "ms"}
    if isinstance(obj, list):
        return [strip_ms(v) for v in obj]
    return obj


# -- suites ------------------------------------------------------------------------


@pytest.mark.parametrize("name", cli.SUITE_ORDER)
def test_each_suite_passes_at_defaults(name):
    rep = cli.run_suite(name)
    assert rep.suite == name
    assert rep.checks, "a suite must make at least one check"
    failing = [c.claim for c in rep.checks if not c.ok]
    assert rep.passed, f"failing checks: {failing}"


def test_run_suite_unknown_name():
    with pytest.raises(cli.UsageError):
        cli.run_suite("nonsense")


def test_suite_report_schema():
    rep = cli.run_suite("lambda")
    d = rep.to_dict()
    assert set(d) == {"suite", "params", "checks", "pass"}
    assert d["pass"] is True
    for c in d["checks"]:
        assert set(c) == {"claim", "anchor", "expected", "computed",
                          "pass", "ms"}
        assert set(c["expected"]) == {"value", "provenance"}
        assert c["expected"]["provenance"] in ("reference", "derived",
                                               "trivial")
        assert isinstance(c["ms"], (int, float))


def test_verify_all_json(capsys):
    code, out, _ = run_main(capsys, ["verify", "all", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert [r["suite"] for r in payload] == list(cli.SUITE_ORDER)
    assert all(r["pass"] for r in payload)


def test_verify_single_suite_text(capsys):
    code, out, _ = run_main(capsys, ["verify", "balanced-null"])
    assert code == 0
    assert "suite balanced-null" in out
    assert "[PASS]" in out and "[FAIL]" not in out
    assert out.rstrip().endswith("=> pass")


def test_infinity_serialized_for_odd_ground(capsys):
    code, out, _ = run_main(capsys,
                            ["verify", "full-diameter", "--n", "5", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["pass"]
    assert any(c["computed"] == "infinity" for c in payload["checks"])


def test_verify_detects_wrong_reference(capsys, monkeypatch):
    monkeypatch.setitem(cli.LAMBDA_TABLE, 11, 9999)
    code, out, _ = run_main(capsys, ["verify", "lambda", "--json"])
    assert code == 1
    payload = json.loads(out)
    assert not payload["pass"]
    assert any(not c["pass"] for c in payload["checks"])


def test_budget_exit_code(capsys, monkeypatch):
    def trip(report, params, ctx):
        raise gm.BudgetExceeded(None)

    monkeypatch.setitem(cli._SUITES, "lambda", trip)
    code, _, err = run_main(capsys, ["verify", "lambda"])
    assert code == 3
    assert "budget exceeded" in err


def test_verify_determinism(capsys):
    _, out1, _ = run_main(capsys, ["verify", "properties", "--json"])
    _, out2, _ = run_main(capsys, ["verify", "properties", "--json"])
    assert strip_ms(json.loads(out1)) == strip_ms(json.loads(out2))


def test_threads_do_not_change_results(capsys):
    _, out1, _ = run_main(capsys,
                          ["verify", "clique", "--n", "3", "--json"])
    _, out2, _ = run_main(capsys, ["verify", "clique", "--n", "3",
                                   "--threads", "2", "--json"])
    assert strip_ms(json.loads(out1)) == strip_ms(json.loads(out2))


# -- exit codes and guards ----------------------------------------------------------


def test_guard_exit_codes(capsys):
    for argv in (["verify", "extremal", "--n", "9"],
                 ["graph", "--n", "8"],
                 ["verify", "distance5", "--n", "12"],
                 ["centralizer", "--n", "8", "[1 2]"],
                 ["witness", "--n", "15", "--pair", "prime-power"]):
        code, _, err = run_main(capsys, argv)
        assert code == 2, argv
        assert "error:" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run_main(capsys, ["elem", "--n", "3", "((("])
    assert code == 2
    assert "error:" in err


def test_missing_n_exit_code(capsys):
    code, _, err = run_main(capsys, ["centralizer", "[1 2]"])
    assert code == 2
    assert "--n is required" in err


def test_unknown_suite_is_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_witness_without_arguments(capsys):
    code, _, err = run_main(capsys, ["witness", "--n", "4"])
    assert code == 2
    assert "give two elements" in err


# -- inspection commands -------------------------------------------------------------


def test_elem_inspect(capsys):
    code, out, _ = run_main(capsys, ["elem", "--n", "4", "(1 2 3)", "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["element"] == "(1 2 3)"
    assert d["kind"] == "mixed" and d["rank"] == 3
    assert d["cycles"] == [[0, 1, 2]] and d["chains"] == []
    assert d["inverse"] == "(1 3 2)"


def test_elem_compose(capsys):
    code, out, _ = run_main(capsys, ["elem", "--n", "4", "[1 2]", "[2 3]",
                                     "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["ab"] == "[1 3]"
    assert d["ba"] == "0"
    assert d["commute"] is False


def test_centralizer_full_cycle(capsys):
    code, out, _ = run_main(capsys, ["centralizer", "--n", "4", "(1 2 3 4)",
                                     "--json", "--list"])
    assert code == 0
    d = json.loads(out)
    assert d["order"] == 5
    assert sorted(d["elements"]) == d["elements"]
    assert "0" in d["elements"] and "id" in d["elements"]


def test_centralizer_general_element(capsys):
    code, out, _ = run_main(capsys, ["centralizer", "--n", "3", "[1 2]",
                                     "--json"])
    assert code == 0
    assert json.loads(out)["order"] > 2


def test_graph_summary_and_exports(capsys, tmp_path):
    save = tmp_path / "g3.bin"
    dot = tmp_path / "g3.dot"
    code, out, _ = run_main(capsys, ["graph", "--n", "3", "--diameter",
                                     "--clique", "--json",
                                     "--save", str(save), "--dot", str(dot)])
    assert code == 0
    d = json.loads(out)
    assert (d["vertices"], d["edges"]) == (32, 73)
    assert d["diameter"] == "infinity" and d["components"] > 1
    assert d["clique_number"] == 6
    assert save.exists() and dot.exists()
    assert gm.load_packed(save).num_vertices == 32


def test_graph_filters(capsys):
    code, out, _ = run_main(capsys, ["graph", "--n", "4", "--filter",
                                     "nilpotent", "--json"])
    assert code == 0
    assert json.loads(out)["vertices"] == 72  # nilpotent count minus zero
    code, out, _ = run_main(capsys, ["graph", "--n", "4", "--filter",
                                     "permutation", "--json"])
    assert code == 0
    assert json.loads(out)["vertices"] == 23


def test_graph_ideal(capsys):
    code, out, _ = run_main(capsys, ["graph", "--n", "4", "--ideal", "2",
                                     "--diameter", "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["diameter"] == 3
    code, _, err = run_main(capsys, ["graph", "--n", "4", "--ideal", "2",
                                     "--filter", "nilpotent"])
    assert code == 2 and "error:" in err


def test_graph_cache_round_trip(capsys, tmp_path):
    argv = ["graph", "--n", "4", "--json", "--cache-dir", str(tmp_path)]
    code, out1, _ = run_main(capsys, argv)
    assert code == 0
    cached = tmp_path / "icgr-full-n4.bin"
    assert cached.exists()
    code, out2, _ = run_main(capsys, argv)
    assert code == 0
    assert json.loads(out1) == json.loads(out2)


def test_extremal_command(capsys):
    code, out, _ = run_main(capsys, ["extremal", "--n", "4", "--json",
                                     "--list"])
    assert code == 0
    d = json.loads(out)
    assert (d["max_order"], d["count"]) == (7, 6)
    assert len(d["witnesses"]) == 6


def test_witness_pairs(capsys):
    code, out, _ = run_main(capsys, ["witness", "--n", "5", "--pair",
                                     "extremal", "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["a"] == "[1 2 3 4 5]" and d["b"] == "[5 4 3 2 1]"
    code, out, _ = run_main(capsys, ["witness", "--n", "9", "--pair",
                                     "prime-power", "--json"])
    assert code == 0
    code, out, _ = run_main(capsys, ["witness", "--n", "6", "--pair", "ideal",
                                     "--ideal", "4", "--json"])
    assert code == 0
    code, _, err = run_main(capsys, ["witness", "--n", "6", "--pair", "ideal"])
    assert code == 2 and "needs --ideal" in err


def test_witness_path_and_idempotent(capsys):
    code, out, _ = run_main(capsys, ["witness", "--n", "4", "[1 2 3 4]",
                                     "[4 3 2 1]", "--json"])
    assert code == 0
    d = json.loads(out)
    assert d["length"] == len(d["vertices"]) - 1 == 4
    code, out, _ = run_main(capsys, ["witness", "--n", "4", "--idempotent",
                                     "(1 2)"])
    assert code == 0
    assert out.strip() == "(1)|(2)"


def test_search_open_command(capsys):
    code, out, _ = run_main(capsys, ["search-open", "--n", "6", "--samples",
                                     "10", "--seed", "1", "--json"])
    assert code == 0
    d = json.loads(out)
    assert sum(d["histogram"].values()) == 10
