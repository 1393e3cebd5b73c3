"""Command-line interface: exit codes, JSON stability, record round-trips."""

import json
import subprocess
import sys

import pytest

EXE = [sys.executable, "-m", "hsembed.cli"]


def run_cli(*args):
    return subprocess.run(EXE + list(args), capture_output=True, text=True)


class TestDecideCommand:
    def test_yes_exit_zero(self):
        r = run_cli("decide", "--n", "2", "--source", "1,1,1", "--target", "2,1")
        assert r.returncode == 0
        blob = json.loads(r.stdout)
        assert blob["verdict"]["kind"] == "YES"
        assert blob["schema_version"] == 1

    def test_no_exit_one(self):
        r = run_cli("decide", "--n", "2", "--source", "3", "--target", "4,2")
        assert r.returncode == 1
        blob = json.loads(r.stdout)
        assert blob["verdict"]["kind"] == "NO"
        assert blob["verdict"]["certificate"]["rule"] == "GCD_SINGLE"

    def test_unknown_exit_two(self):
        r = run_cli(
            "decide", "--n", "2", "--source", "4,6", "--target", "8,2",
            "--mode", "symplectic",
        )
        assert r.returncode == 2
        assert json.loads(r.stdout)["verdict"]["kind"] == "UNKNOWN"

    def test_inputs_echo_canonical_order(self):
        r = run_cli("decide", "--n", "2", "--source", "1,2,1", "--target", "1,2")
        blob = json.loads(r.stdout)
        assert blob["inputs"]["source"] == [2, 1, 1]
        assert blob["inputs"]["target"] == [2, 1]

    def test_human_mode_agrees_on_kind(self):
        js = run_cli("decide", "--n", "2", "--source", "3", "--target", "4,2")
        hu = run_cli(
            "decide", "--n", "2", "--source", "3", "--target", "4,2", "--human"
        )
        assert js.returncode == hu.returncode == 1
        kind = json.loads(js.stdout)["verdict"]["kind"]
        assert f"verdict: {kind}" in hu.stdout

    def test_out_file_adds_wall_time(self, tmp_path):
        out = tmp_path / "record.json"
        r = run_cli(
            "decide", "--n", "2", "--source", "1,1,1", "--target", "2,1",
            "--out", str(out),
        )
        assert r.returncode == 0
        stdout_blob = json.loads(r.stdout)
        file_blob = json.loads(out.read_text())
        assert "wall_time_ms" not in stdout_blob
        assert isinstance(file_blob.pop("wall_time_ms"), int)
        assert file_blob == stdout_blob


class TestUsageErrors:
    @pytest.mark.parametrize(
        "args",
        [
            ("decide", "--n", "2", "--source", "3,x", "--target", "4"),
            ("decide", "--n", "0", "--source", "1", "--target", "1"),
            ("decide", "--n", "2", "--source", "", "--target", "1"),
            ("decide", "--n", "2", "--source", "0,1", "--target", "1"),
            ("leqq", "--source", "1"),
            ("spectrum", "--n", "2", "--degrees", "1,1"),
            ("bogus",),
        ],
    )
    def test_exit_64_with_stderr(self, args):
        r = run_cli(*args)
        assert r.returncode == 64
        assert r.stderr.strip() != ""
        assert r.stdout == ""


class TestLeqqCommand:
    def test_true_with_moves(self):
        r = run_cli("leqq", "--source", "3,2,2", "--target", "7,2")
        assert r.returncode == 0
        blob = json.loads(r.stdout)
        assert blob["result"] is True
        assert len(blob["moves"]["moves"]) == 3

    def test_false_exit_one(self):
        r = run_cli("leqq", "--source", "3,2,2", "--target", "10,1")
        assert r.returncode == 1
        blob = json.loads(r.stdout)
        assert blob["result"] is False and blob["moves"] is None

    def test_equal_tuples_empty_sequence(self):
        r = run_cli("leqq", "--source", "5", "--target", "5")
        assert r.returncode == 0
        blob = json.loads(r.stdout)
        assert blob["result"] is True and blob["moves"]["moves"] == []


class TestSpectrumCommand:
    def test_frozen_class_count(self):
        r = run_cli("spectrum", "--n", "2", "--degrees", "1,1,1", "--action-cap", "1")
        assert r.returncode == 0
        blob = json.loads(r.stdout)
        assert len(blob["classes"]) == 9
        first = blob["classes"][0]
        assert {"v", "delta", "morse_index", "action", "cz", "homology"} <= set(first)

    def test_deterministic_row_order(self):
        a = run_cli("spectrum", "--n", "2", "--degrees", "2,1", "--action-cap", "4")
        b = run_cli("spectrum", "--n", "2", "--degrees", "2,1", "--action-cap", "4")
        assert a.stdout == b.stdout


class TestPosetCommand:
    def test_expected_nodes_n2_sum4(self):
        r = run_cli("poset", "--n", "2", "--max-sum", "4")
        assert r.returncode == 0
        expected = ["1,1,1", "2,1", "3", "1,1,1,1", "2,1,1", "2,2", "3,1", "4"]
        for node in expected:
            assert f'"{node}" [label=' in r.stdout
        # exactly these nodes, no self-loops
        declared = [ln for ln in r.stdout.splitlines() if "[label=" in ln and "->" not in ln]
        assert len(declared) == len(expected)
        for line in r.stdout.splitlines():
            if "->" in line:
                left, right = line.split("->")
                assert left.strip().strip('"') != right.split("[")[0].strip().strip('"')

    def test_empty_graph_below_threshold(self):
        r = run_cli("poset", "--n", "3", "--max-sum", "2")
        assert r.returncode == 0
        assert "->" not in r.stdout
        assert "[label=" not in r.stdout

    def test_edges_annotated_with_verdicts(self):
        r = run_cli("poset", "--n", "2", "--max-sum", "4")
        edges = [ln for ln in r.stdout.splitlines() if "->" in ln]
        assert edges
        assert all('[label="YES"]' in e or '[label="NO"]' in e or '[label="UNKNOWN"]' in e for e in edges)


class TestDeterminism:
    COMMANDS = [
        ("decide", "--n", "2", "--source", "2,2", "--target", "3,3"),
        ("leqq", "--source", "3,2,2", "--target", "7,2"),
        ("spectrum", "--n", "2", "--degrees", "2,1", "--action-cap", "3"),
        ("poset", "--n", "2", "--max-sum", "4"),
    ]

    @pytest.mark.parametrize("args", COMMANDS, ids=lambda a: a[0])
    def test_byte_stable_repeat_runs(self, args):
        first = run_cli(*args)
        second = run_cli(*args)
        assert first.stdout == second.stdout
        assert first.returncode == second.returncode

    def test_thread_flag_preserves_verdict(self):
        one = run_cli("decide", "--n", "2", "--source", "2,2", "--target", "3,3")
        four = run_cli(
            "decide", "--n", "2", "--source", "2,2", "--target", "3,3",
            "--threads", "4",
        )
        a, b = json.loads(one.stdout), json.loads(four.stdout)
        assert a["verdict"]["kind"] == b["verdict"]["kind"]
        assert one.returncode == four.returncode
