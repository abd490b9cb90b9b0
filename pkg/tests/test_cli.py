"""Command-line interface: file formats, subcommands, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

import helpers as H
from skewswitch import make, switch
from skewswitch.cli import EXIT_GUARD, EXIT_NO, EXIT_USAGE, EXIT_YES, run


def write_json(path, m):
    doc = {"modulus": m.modulus, "size": m.size, "entries": [list(r) for r in m.entries]}
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


def write_text(path, m):
    rows = [f"{m.modulus} {m.size}"]
    rows += [" ".join(str(x) for x in row) for row in m.entries]
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    return code, json.loads(capsys.readouterr().out)


class TestMatrixFiles:
    def test_json_and_text_formats_agree(self, tmp_path, capsys):
        m = make(3, 4, H.SWITCH_DIGRAPH_IN)
        pj = write_json(tmp_path / "m.json", m)
        pt = write_text(tmp_path / "m.txt", m)
        code_j, doc_j = run_json(capsys, ["switch", "-v", "3", pj])
        code_t, doc_t = run_json(capsys, ["switch", "-v", "3", pt])
        assert code_j == code_t == EXIT_YES
        assert doc_j == doc_t

    def test_missing_file(self, capsys):
        assert run(["switch", "-v", "1", "no-such-file.json"]) == EXIT_USAGE
        assert "error:" in capsys.readouterr().err

    def test_malformed_json(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text('{"modulus": 3}', encoding="utf-8")
        assert run(["switch", "-v", "1", str(p)]) == EXIT_USAGE

    def test_text_row_count_mismatch(self, tmp_path, capsys):
        p = tmp_path / "bad.txt"
        p.write_text("3 3\n0 1 2\n2 0 1\n", encoding="utf-8")
        assert run(["switch", "-v", "1", str(p)]) == EXIT_USAGE

    def test_non_skew_entries_rejected(self, tmp_path, capsys):
        p = tmp_path / "bad.json"
        p.write_text(
            '{"modulus": 3, "size": 2, "entries": [[0, 1], [1, 0]]}', encoding="utf-8"
        )
        assert run(["switch", "-v", "1", str(p)]) == EXIT_USAGE

    def test_usage_error(self, capsys):
        assert run(["switch"]) == EXIT_USAGE
        assert run(["no-such-command"]) == EXIT_USAGE


class TestSwitchAndIsolate:
    def test_switch_display(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", make(3, 4, H.SWITCH_DIGRAPH_IN))
        code, doc = run_json(capsys, ["switch", "-v", "3", p])
        assert code == EXIT_YES
        assert doc["entries"] == H.SWITCH_DIGRAPH_OUT

    def test_switch_bad_vertex(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", make(3, 4, H.SWITCH_DIGRAPH_IN))
        assert run(["switch", "-v", "9", p]) == EXIT_USAGE

    def test_isolate_fan(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", H.from_edges(3, 4, H.FAN_4_ARCS))
        code, doc = run_json(capsys, ["isolate", "-v", "1", p])
        assert code == EXIT_YES
        out = make(3, 4, doc["entries"])
        assert H.arcs_of(out) == set(H.FAN_4_ISOLATION_1)


class TestEulerize:
    def test_display_with_explanation(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", make(4, 7, H.EULERIZE_7_INPUT))
        code, doc = run_json(capsys, ["eulerize", "--explain", p])
        assert code == EXIT_YES
        assert doc["entries"] == H.EULERIZE_7_OUTPUT
        assert doc["scale"] == 3
        assert doc["exponents"] == list(H.EULERIZE_7_EXPONENTS)
        assert doc["buckets"] == {
            str(k): list(vs) for k, vs in H.EULERIZE_7_BUCKETS.items()
        }

    def test_not_coprime_is_usage_error(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", H.zero(2, 4))
        assert run(["eulerize", p]) == EXIT_USAGE


class TestVerdictCommands:
    def test_equiv_yes(self, tmp_path, capsys):
        a = H.zero(3, 4)
        b = switch(a, 2)
        pa = write_json(tmp_path / "a.json", a)
        pb = write_json(tmp_path / "b.json", b)
        code, doc = run_json(capsys, ["equiv", pa, pb])
        assert code == EXIT_YES
        assert doc["equivalent"] is True
        assert doc["permutation"] == [1, 2, 3, 4]
        assert doc["switch_exponents"] is not None

    def test_equiv_no(self, tmp_path, capsys):
        pa = write_json(tmp_path / "a.json", H.from_edges(3, 6, H.PAIR_6_A_ARCS))
        pb = write_json(tmp_path / "b.json", H.from_edges(3, 6, H.PAIR_6_B_ARCS))
        code, doc = run_json(capsys, ["equiv", pa, pb])
        assert code == EXIT_NO
        assert doc["equivalent"] is False

    def test_equiv_modulus_mismatch(self, tmp_path, capsys):
        pa = write_json(tmp_path / "a.json", H.zero(2, 3))
        pb = write_json(tmp_path / "b.json", H.zero(3, 3))
        assert run(["equiv", pa, pb]) == EXIT_USAGE

    def test_iso_both_ways(self, tmp_path, capsys):
        a, b = H.three_var_pair(5)
        pa = write_json(tmp_path / "a.json", a)
        pb = write_json(tmp_path / "b.json", b)
        assert run(["iso", pa, pb]) == EXIT_NO
        capsys.readouterr()
        code, doc = run_json(capsys, ["iso", pa, pa])
        assert code == EXIT_YES
        assert doc["permutation"] == [1, 2, 3]

    def test_complex_iso_pair(self, tmp_path, capsys):
        pa = write_json(tmp_path / "a.json", H.from_edges(3, 7, H.PAIR_7_A_ARCS))
        pb = write_json(tmp_path / "b.json", H.from_edges(3, 7, H.PAIR_7_B_ARCS))
        code, doc = run_json(capsys, ["complex-iso", pa, pb])
        assert code == EXIT_YES
        assert doc["isomorphic"] is True
        assert doc["facets"][0] == [list(f) for f in H.PAIR_7_FACETS]
        assert doc["facets"][1] == [list(f) for f in H.PAIR_7_FACETS]

    def test_complex_iso_distinct(self, tmp_path, capsys):
        pa = write_json(tmp_path / "a.json", H.from_edges(3, 4, H.CLASSES_4[0][0]))
        pb = write_json(tmp_path / "b.json", H.from_edges(3, 4, H.CLASSES_4[1][0]))
        assert run(["complex-iso", pa, pb]) == EXIT_NO


class TestComplex:
    def test_facets_direct_and_via_isolations(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", H.from_edges(3, 6, H.PAIR_6_A_ARCS))
        code, doc = run_json(capsys, ["complex", p])
        assert code == EXIT_YES
        assert doc["facets"] == [list(f) for f in H.PAIR_6_FACETS]
        assert doc["dimension"] == 4
        _, doc_iso = run_json(capsys, ["complex", "--via", "isolations", p])
        assert doc_iso["facets"] == doc["facets"]

    def test_components(self, tmp_path, capsys):
        m = H.from_upper(3, 3, [1, 1, 1])
        p = write_json(tmp_path / "m.json", m)
        code, doc = run_json(capsys, ["complex", "--components", p])
        assert code == EXIT_YES
        assert doc["components"] == [
            {"support": [1, 2], "projective_dimension": 1},
            {"support": [1, 3], "projective_dimension": 1},
            {"support": [2, 3], "projective_dimension": 1},
        ]

    def test_emit_dot(self, tmp_path, capsys):
        p = write_json(tmp_path / "m.json", H.from_edges(3, 3, ((1, 2),)))
        code = run(["complex", "--emit-dot", p])
        out = capsys.readouterr().out
        assert code == EXIT_YES
        assert out.startswith("digraph")
        assert "1 -> 2" in out


class TestClassify:
    def test_six_vertex_pair(self, tmp_path, capsys):
        pa = write_json(tmp_path / "a.json", H.from_edges(3, 6, H.PAIR_6_A_ARCS))
        pb = write_json(tmp_path / "b.json", H.from_edges(3, 6, H.PAIR_6_B_ARCS))
        code, doc = run_json(capsys, ["classify", pa, pb])
        assert code == EXIT_NO
        assert doc["algebra_isomorphic"] is None
        assert doc["grmod_equivalent"] is None
        assert doc["complexes_isomorphic"] is not None
        assert doc["facets"] == [
            [list(f) for f in H.PAIR_6_FACETS],
            [list(f) for f in H.PAIR_6_FACETS],
        ]

    def test_equivalent_pair_reports_lambdas(self, tmp_path, capsys):
        a = H.zero(3, 3)
        pa = write_json(tmp_path / "a.json", a)
        pb = write_json(tmp_path / "b.json", switch(a, 2))
        code, doc = run_json(capsys, ["classify", pa, pb])
        assert code == EXIT_YES
        witness = doc["grmod_equivalent"]
        assert witness["permutation"] == [1, 2, 3]
        assert witness["lambda_exponents"] == [[1, 0], [2, 1], [3, 0]]

    def test_different_sizes(self, tmp_path, capsys):
        pa = write_json(tmp_path / "a.json", H.zero(3, 3))
        pb = write_json(tmp_path / "b.json", H.zero(3, 4))
        code, doc = run_json(capsys, ["classify", pa, pb])
        assert code == EXIT_NO
        assert doc["note"] is not None
        assert doc["dimensions"] == [2, 3]


class TestCountCensusTables:
    def test_count_classes(self, capsys):
        assert run(["count", "--modulus", "2", "--n", "7"]) == EXIT_YES
        assert capsys.readouterr().out.strip() == "54"

    def test_count_eulerian(self, capsys):
        assert run(["count", "--modulus", "4", "--n", "5", "--what", "eulerian"]) == EXIT_YES
        assert capsys.readouterr().out.strip() == "62"

    def test_census_burnside(self, capsys):
        code, doc = run_json(capsys, ["census", "--modulus", "3", "--n", "4"])
        assert code == EXIT_YES
        assert doc["switching_classes"] == 4
        assert doc["eulerian_classes"] == 4
        assert doc["representatives"] is None

    def test_census_brute_force_with_list(self, capsys):
        code, doc = run_json(
            capsys, ["census", "--modulus", "2", "--n", "4", "--brute-force", "--list"]
        )
        assert code == EXIT_YES
        assert doc["switching_classes"] == 3
        assert len(doc["representatives"]) == 3

    def test_census_list_matches_brute_list(self, capsys):
        _, doc_a = run_json(capsys, ["census", "--modulus", "3", "--n", "4", "--list"])
        _, doc_b = run_json(
            capsys, ["census", "--modulus", "3", "--n", "4", "--brute-force", "--list"]
        )
        assert doc_a["representatives"] == doc_b["representatives"]

    def test_census_guard_exit_code(self, capsys):
        assert run(["census", "--modulus", "3", "--n", "7", "--list"]) == EXIT_GUARD
        assert "error:" in capsys.readouterr().err

    def test_tables_check(self, capsys):
        assert run(["tables", "--check"]) == EXIT_YES
        out = capsys.readouterr().out
        assert out.count("ok") == 3
        assert "MISMATCH" not in out

    def test_tables_print(self, capsys):
        assert run(["tables"]) == EXIT_YES
        assert "1182004" in capsys.readouterr().out


class TestInstalledEntryPoint:
    def test_console_script(self, tmp_path):
        p = write_text(tmp_path / "m.txt", make(2, 4, H.SWITCH_GRAPH_IN))
        proc = subprocess.run(
            ["skewswitch", "switch", "-v", "3", str(p)],
            capture_output=True,
            text=True,
        )
        assert proc.returncode == EXIT_YES
        doc = json.loads(proc.stdout)
        assert doc["entries"] == H.SWITCH_GRAPH_OUT
