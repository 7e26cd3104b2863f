"""CLI contract: sub-commands, CSV schemas, exit codes, replay identity."""

from __future__ import annotations

import json
import os

from netimmune.cli import (EXIT_CONFIG, EXIT_OK, EXIT_PARSE, EXIT_USAGE, main)


def read(path):
    with open(path, "rb") as fh:
        return fh.read()


def dir_bytes(d):
    return {name: read(os.path.join(d, name)) for name in sorted(os.listdir(d))}


class TestStats:
    def test_generated_graph(self, capsys, tmp_path):
        out = str(tmp_path / "o")
        assert main(["stats", "--gen", "er:50,100", "--seed", "3",
                     "--out", out]) == EXIT_OK
        text = capsys.readouterr().out
        assert "nodes 50" in text and "edges 100" in text
        st = (tmp_path / "o" / "stats.csv").read_text().splitlines()
        assert st[0].startswith("nodes,edges,max_degree,clustering")
        assert st[1].startswith("50,100,")

    def test_file_input(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        p.write_text("0 1\n1 2\n")
        assert main(["stats", "--input", str(p)]) == EXIT_OK
        assert "nodes 3" in capsys.readouterr().out


class TestRank:
    def test_scores_to_stdout(self, capsys):
        assert main(["rank", "--gen", "ba:30,2", "--seed", "1",
                     "--method", "da"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()
        assert lines[0] == "node,score,method"
        assert len(lines) == 31
        assert lines[1].endswith(",degree")

    def test_scores_file_with_manifest(self, tmp_path):
        out = str(tmp_path / "r")
        assert main(["rank", "--gen", "er:20,40", "--seed", "2",
                     "--method", "svida", "--out", out]) == EXIT_OK
        assert (tmp_path / "r" / "scores.csv").exists()
        doc = json.loads((tmp_path / "r" / "manifest.json").read_text())
        assert doc["command"] == "rank"
        assert doc["params"]["method"] == "svida"

    def test_original_labels_in_output(self, tmp_path, capsys):
        p = tmp_path / "g.txt"
        p.write_text("7 42\n42 100\n")
        assert main(["rank", "--input", str(p), "--method", "da"]) == EXIT_OK
        lines = capsys.readouterr().out.strip().splitlines()[1:]
        assert [ln.split(",")[0] for ln in lines] == ["7", "42", "100"]


class TestImmunize:
    def test_plan_and_fq(self, tmp_path, capsys):
        out = str(tmp_path / "im")
        assert main(["immunize", "--gen", "ba:60,2", "--seed", "5",
                     "--method", "svida", "--q", "1.0", "--out", out]) == EXIT_OK
        plan = (tmp_path / "im" / "plan.csv").read_text().splitlines()
        assert plan[0].startswith("# method=svid ")
        assert "R=" in plan[0]
        assert plan[1] == "step,node,lcc_fraction"
        assert len(plan) == 62  # summary + header + 60 rows
        fq = (tmp_path / "im" / "fq.csv").read_text().splitlines()
        assert fq[0] == "q,svid"
        assert "R " in capsys.readouterr().out

    def test_partial_plan_has_no_r(self, tmp_path):
        out = str(tmp_path / "im")
        assert main(["immunize", "--gen", "ba:60,2", "--seed", "5",
                     "--method", "da", "--q", "0.2", "--out", out]) == EXIT_OK
        head = (tmp_path / "im" / "plan.csv").read_text().splitlines()[0]
        assert "R=" not in head
        assert len((tmp_path / "im" / "plan.csv").read_text().splitlines()) \
            == 14  # summary + header + ceil(0.2*60)


class TestSir:
    def test_trace_and_summary(self, tmp_path):
        out = str(tmp_path / "s")
        assert main(["sir", "--gen", "er:50,100", "--seed", "9",
                     "--lambda", "0.5", "--sigma", "0.2", "--runs", "5",
                     "--out", out]) == EXIT_OK
        trace = (tmp_path / "s" / "trace.csv").read_text().splitlines()
        assert trace[0] == "t,s_mean,i_mean,r_mean,s_std,i_std,r_std"
        summary = (tmp_path / "s" / "summary.csv").read_text().splitlines()
        assert summary[0] == "lambda,sigma,q,method,r_abs_mean,r_abs_std"
        assert summary[1].split(",")[3] == "none"

    def test_with_plan_file(self, tmp_path):
        im = str(tmp_path / "im")
        assert main(["immunize", "--gen", "er:50,100", "--seed", "9",
                     "--method", "da", "--q", "0.2", "--out", im]) == EXIT_OK
        out = str(tmp_path / "s")
        assert main(["sir", "--gen", "er:50,100", "--seed", "9",
                     "--lambda", "0.5", "--sigma", "0.2", "--runs", "5",
                     "--plan", os.path.join(im, "plan.csv"),
                     "--out", out]) == EXIT_OK
        row = (tmp_path / "s" / "summary.csv").read_text().splitlines()[1]
        assert row.split(",")[3] == "plan"
        assert row.split(",")[2] == "0.2"

    def test_inline_method(self, tmp_path):
        out = str(tmp_path / "s")
        assert main(["sir", "--gen", "er:50,100", "--seed", "9",
                     "--lambda", "0.5", "--sigma", "0.2", "--runs", "3",
                     "--method", "svida", "--q", "0.1", "--out", out]) == EXIT_OK
        row = (tmp_path / "s" / "summary.csv").read_text().splitlines()[1]
        assert row.split(",")[3] == "svida"

    def test_plan_and_method_conflict(self, tmp_path):
        assert main(["sir", "--gen", "er:20,40", "--seed", "1",
                     "--lambda", "0.5", "--sigma", "0.5", "--plan", "x.csv",
                     "--method", "da", "--out", str(tmp_path)]) == EXIT_CONFIG


class TestCompare:
    def test_pipeline_outputs(self, tmp_path):
        out = str(tmp_path / "c")
        assert main(["compare", "--gen", "er:40,80", "--seed", "6",
                     "--methods", "da,svida", "--q-grid", "0.1,0.2",
                     "--lambda", "0.6", "--sigma", "0.3", "--runs", "3",
                     "--out", out]) == EXIT_OK
        rob = (tmp_path / "c" / "robustness.csv").read_text().splitlines()
        assert rob[0] == "method,R,fallbacks"
        assert [r.split(",")[0] for r in rob[1:]] == ["da", "svida"]
        fq = (tmp_path / "c" / "fq.csv").read_text().splitlines()
        assert fq[0] == "q,da,svida"
        assert len(fq) == 41
        rvq = (tmp_path / "c" / "r_vs_q.csv").read_text().splitlines()
        assert rvq[0] == "lambda,sigma,q,method,r_abs_mean,r_abs_std"
        methods = [r.split(",")[3] for r in rvq[1:]]
        assert methods == ["none", "da", "svida", "da", "svida"]


class TestErrorPaths:
    def test_missing_input_file(self):
        assert main(["stats", "--input", "/definitely/not/here"]) == EXIT_PARSE

    def test_malformed_edge_list(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("0 1\nbroken line here\n")
        assert main(["stats", "--input", str(p)]) == EXIT_PARSE

    def test_missing_seed_for_generation(self):
        assert main(["stats", "--gen", "er:10,20"]) == EXIT_CONFIG

    def test_bad_q(self, tmp_path):
        assert main(["immunize", "--gen", "er:10,20", "--seed", "1",
                     "--method", "da", "--q", "1.5",
                     "--out", str(tmp_path)]) == EXIT_CONFIG

    def test_unknown_method_is_usage_error(self):
        assert main(["rank", "--gen", "er:10,20", "--seed", "1",
                     "--method", "pagerank"]) == EXIT_USAGE

    def test_bad_gen_spec_is_usage_error(self):
        assert main(["stats", "--gen", "zz:1,2"]) == EXIT_USAGE

    def test_input_and_gen_conflict(self):
        assert main(["stats", "--gen", "er:10,20", "--input", "x"]) \
            == EXIT_USAGE


class TestReplay:
    def test_immunize_replay_identical(self, tmp_path):
        a = str(tmp_path / "a")
        assert main(["immunize", "--gen", "ba:80,2", "--seed", "13",
                     "--method", "svida", "--q", "0.5", "--out", a]) == EXIT_OK
        b = str(tmp_path / "b")
        assert main(["replay", os.path.join(a, "manifest.json"),
                     "--out", b]) == EXIT_OK
        assert dir_bytes(a) == dir_bytes(b)

    def test_sir_replay_identical(self, tmp_path):
        a = str(tmp_path / "a")
        assert main(["sir", "--gen", "er:40,80", "--seed", "21",
                     "--lambda", "0.7", "--sigma", "0.25", "--runs", "4",
                     "--out", a]) == EXIT_OK
        b = str(tmp_path / "b")
        assert main(["replay", os.path.join(a, "manifest.json"),
                     "--out", b]) == EXIT_OK
        assert dir_bytes(a) == dir_bytes(b)

    def test_sir_inline_method_replay_identical(self, tmp_path):
        # inline immunization pulls the strategy flags into the manifest
        a = str(tmp_path / "a")
        assert main(["sir", "--gen", "ba:60,2", "--seed", "3",
                     "--method", "svida", "--q", "0.2", "--lambda", "0.5",
                     "--sigma", "0.3", "--runs", "4", "--out", a]) == EXIT_OK
        b = str(tmp_path / "b")
        assert main(["replay", os.path.join(a, "manifest.json"),
                     "--out", b]) == EXIT_OK
        assert dir_bytes(a) == dir_bytes(b)

    def test_compare_replay_identical(self, tmp_path):
        a = str(tmp_path / "a")
        assert main(["compare", "--gen", "er:50,100", "--seed", "11",
                     "--methods", "da,cna", "--q-grid", "0.1",
                     "--lambda", "0.6", "--sigma", "0.3", "--runs", "3",
                     "--out", a]) == EXIT_OK
        b = str(tmp_path / "b")
        assert main(["replay", os.path.join(a, "manifest.json"),
                     "--out", b]) == EXIT_OK
        assert dir_bytes(a) == dir_bytes(b)

    def test_rejects_foreign_manifest(self, tmp_path):
        p = tmp_path / "m.json"
        p.write_text(json.dumps({"tool": "other"}))
        assert main(["replay", str(p), "--out", str(tmp_path / "o")]) \
            == EXIT_CONFIG
