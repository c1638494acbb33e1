import io
import json
import subprocess
import sys

import prdom.cli as cli
from prdom import (
    Tree,
    canonical_form,
    make_path,
    parse_certificate,
    parse_graph6,
    replay_certificate,
)

P3_EDGELIST = "3\n0 1\n1 2\n"
P6_EDGELIST = "6\n0 1\n1 2\n2 3\n3 4\n4 5\n"


def run_cli(args, stdin_text="", monkeypatch=None, capsys=None):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin_text))
    code = cli.main(args)
    out, err = capsys.readouterr()
    return code, out, err


def test_solve_p3(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["solve", "--witness", "--wset"], P3_EDGELIST, monkeypatch, capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["number"] == 2
    assert payload["result"]["witness"] == [0, 2, 0]
    assert payload["result"]["forced_zero"] == [0, 2]
    assert payload["input"]["n"] == 3
    assert payload["input"]["digest"].startswith("sha256:")


def test_solve_k1(monkeypatch, capsys):
    code, out, _ = run_cli(["solve"], "1\n", monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["result"]["number"] == 1


def test_solve_forest_input(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["solve", "--wset"], "5\n0 1\n3 4\n", monkeypatch, capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["number"] == 5  # P2 + K1 + P2
    assert payload["input"]["components"] == 3


def test_solve_graph6_input(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["solve", "--format", "graph6"], "Bg\n", monkeypatch, capsys
    )
    assert code == 0
    assert json.loads(out)["result"]["number"] == 2


def test_determinism_excluding_timing(monkeypatch, capsys):
    payloads = []
    for _ in range(2):
        _, out, _ = run_cli(
            ["solve", "--witness", "--wset"], P3_EDGELIST, monkeypatch, capsys
        )
        data = json.loads(out)
        del data["timing"]
        payloads.append(json.dumps(data, sort_keys=True))
    assert payloads[0] == payloads[1]


def test_stable_p6(monkeypatch, capsys):
    code, out, _ = run_cli(["stable"], P6_EDGELIST, monkeypatch, capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["stable"] is True
    assert payload["result"]["deltas"] == [0] * 6


def test_stable_star(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["stable"], "4\n0 1\n0 2\n0 3\n", monkeypatch, capsys
    )
    assert code == 0
    assert json.loads(out)["result"]["stable"] is False


def test_stable_p4(monkeypatch, capsys):
    code, out, _ = run_cli(["stable"], "4\n0 1\n1 2\n2 3\n", monkeypatch, capsys)
    assert code == 0
    assert json.loads(out)["result"]["stable"] is False


def test_stable_requires_tree(monkeypatch, capsys):
    code, _, err = run_cli(["stable"], "4\n0 1\n2 3\n", monkeypatch, capsys)
    assert code == 2
    assert "not a tree" in err


def test_recognize_with_certificate(tmp_path, monkeypatch, capsys):
    cert_path = tmp_path / "cert.txt"
    code, out, _ = run_cli(
        ["recognize", "--emit-certificate", str(cert_path)],
        P6_EDGELIST,
        monkeypatch,
        capsys,
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["accepted"] is True
    assert payload["result"]["steps"] == 1
    cert = parse_certificate(cert_path.read_text())
    rebuilt = replay_certificate(cert)
    assert rebuilt.n == 6
    assert canonical_form(rebuilt) == canonical_form(make_path(6))


def test_recognize_rejects_double_star(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["recognize"], "8\n0 1\n0 2\n0 3\n0 4\n4 5\n4 6\n4 7\n", monkeypatch, capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["accepted"] is False
    assert payload["result"]["reason"]


def test_parse_error_exit_code(monkeypatch, capsys):
    code, _, err = run_cli(["solve"], "bogus\n", monkeypatch, capsys)
    assert code == 2
    assert "parse error" in err


def test_cycle_input_exit_code(monkeypatch, capsys):
    code, _, err = run_cli(["solve"], "3\n0 1\n1 2\n2 0\n", monkeypatch, capsys)
    assert code == 2
    assert "not a forest" in err


def test_size_limit_exit_code(monkeypatch, capsys):
    code, _, err = run_cli(
        ["verify", "--suite", "theorem", "--max-n", "20"], "", monkeypatch, capsys
    )
    assert code == 3
    assert "size limit" in err


def test_generate_zero_steps_is_base_path(monkeypatch, capsys):
    code, out, _ = run_cli(["generate", "--steps", "0"], "", monkeypatch, capsys)
    assert code == 0
    assert out == "Bg\n"  # graph6 of the labeled path 0-1-2


def test_generate_walk_is_recognized(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["generate", "--steps", "2", "--seed", "7"], "", monkeypatch, capsys
    )
    assert code == 0
    g = parse_graph6(out.strip())
    assert g.n == 9
    from prdom import recognize

    assert recognize(Tree(g)).accepted


def test_generate_is_seed_reproducible(monkeypatch, capsys):
    outs = set()
    for _ in range(2):
        _, out, _ = run_cli(
            ["generate", "--steps", "4", "--seed", "11"], "", monkeypatch, capsys
        )
        outs.add(out)
    assert len(outs) == 1


def test_generate_all_six(monkeypatch, capsys):
    code, out, _ = run_cli(["generate", "--all", "6"], "", monkeypatch, capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 1
    g = parse_graph6(lines[0])
    assert canonical_form(Tree(g)) == canonical_form(make_path(6))


def test_generate_all_sorted_duplicate_free(monkeypatch, capsys):
    code, out, _ = run_cli(["generate", "--all", "12"], "", monkeypatch, capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    forms = [canonical_form(Tree(parse_graph6(line))) for line in lines]
    assert forms == sorted(forms)
    assert len(set(forms)) == 5


def test_generate_all_rejects_bad_order(monkeypatch, capsys):
    code, _, err = run_cli(["generate", "--all", "7"], "", monkeypatch, capsys)
    assert code == 2


def test_verify_passes_and_reports(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "all", "--max-n", "9"], "", monkeypatch, capsys
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["result"]["passed"] is True
    suites = payload["result"]["suites"]
    assert set(suites) == {"theorem", "lemmas", "observation"}
    assert suites["theorem"]["stable_per_order"]["9"] == 2


def test_verify_all_clamps_each_suite(monkeypatch, capsys):
    code, out, _ = run_cli(
        ["verify", "--suite", "all", "--max-n", "13"], "", monkeypatch, capsys
    )
    assert code == 0
    suites = json.loads(out)["result"]["suites"]
    assert suites["theorem"]["max_n"] == 13
    assert suites["observation"]["max_n"] == 12  # clamped to its own cap


def test_verify_certificate_round_trip(tmp_path, monkeypatch, capsys):
    cert_path = tmp_path / "cert.txt"
    tree_path = tmp_path / "tree.txt"
    tree_path.write_text(P6_EDGELIST)
    run_cli(
        ["recognize", "--emit-certificate", str(cert_path)],
        P6_EDGELIST,
        monkeypatch,
        capsys,
    )
    code, out, _ = run_cli(
        ["verify", "--certificate", str(cert_path), "--input", str(tree_path)],
        "",
        monkeypatch,
        capsys,
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["valid"] is True
    assert result["matches_input"] is True
    assert result["steps"] == 1


def test_verify_certificate_standalone(tmp_path, monkeypatch, capsys):
    cert_path = tmp_path / "cert.txt"
    cert_path.write_text("P3\n0: 3 4 5\n")
    code, out, _ = run_cli(
        ["verify", "--certificate", str(cert_path)], "", monkeypatch, capsys
    )
    assert code == 0
    result = json.loads(out)["result"]
    assert result["valid"] is True and result["order"] == 6


def test_verify_certificate_rejects_tampered(tmp_path, monkeypatch, capsys):
    cert_path = tmp_path / "cert.txt"
    cert_path.write_text("P3\n1: 3 4 5\n")  # base center is never forced-zero
    code, out, _ = run_cli(
        ["verify", "--certificate", str(cert_path)], "", monkeypatch, capsys
    )
    assert code == 1
    result = json.loads(out)["result"]
    assert result["valid"] is False
    assert "error" in result


def test_verify_certificate_mismatched_input(tmp_path, monkeypatch, capsys):
    cert_path = tmp_path / "cert.txt"
    cert_path.write_text("P3\n0: 3 4 5\n")  # rebuilds P6
    tree_path = tmp_path / "tree.txt"
    tree_path.write_text("6\n0 1\n0 2\n0 3\n0 4\n0 5\n")  # star on 6 vertices
    code, out, _ = run_cli(
        ["verify", "--certificate", str(cert_path), "--input", str(tree_path)],
        "",
        monkeypatch,
        capsys,
    )
    assert code == 1
    assert json.loads(out)["result"]["matches_input"] is False


def test_verify_property_failure_exit_code(monkeypatch, capsys):
    from prdom.sweeps import CharacterizationResult

    failing = CharacterizationResult(max_n=5)
    failing.mismatches.append({"n": 5, "edges": [], "stable": True,
                               "recognized": False, "family_member": False,
                               "reason": None})
    monkeypatch.setattr(cli, "characterization_sweep", lambda max_n: failing)
    code, out, _ = run_cli(
        ["verify", "--suite", "theorem", "--max-n", "5"], "", monkeypatch, capsys
    )
    assert code == 1
    assert json.loads(out)["result"]["passed"] is False


def test_generate_internal_breach_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(cli, "forced_zero_set", lambda t: frozenset())
    code, _, err = run_cli(
        ["generate", "--steps", "1"], "", monkeypatch, capsys
    )
    assert code == 4
    assert "invariant" in err


def test_missing_input_file(monkeypatch, capsys):
    code, _, err = run_cli(
        ["solve", "--input", "/nonexistent/x.txt"], "", monkeypatch, capsys
    )
    assert code == 2


def test_output_file(tmp_path, monkeypatch, capsys):
    out_path = tmp_path / "report.json"
    code, out, _ = run_cli(
        ["solve", "--output", str(out_path)], P3_EDGELIST, monkeypatch, capsys
    )
    assert code == 0
    assert out == ""
    assert json.loads(out_path.read_text())["result"]["number"] == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "prdom.cli", "solve"],
        input=P3_EDGELIST,
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["number"] == 2
