"""Command-line behavior: outputs, exit codes, round-trips, env overrides."""

import io
import json
import sys

import pytest

from onerel.cli import main

S0 = ["1", "1", "1", "1", "1", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassify:
    def test_minimal_tuple(self, capsys):
        code, out, _ = run(capsys, "classify", *S0)
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "C1a"
        assert "p=1" in lines[1] and "q=0" in lines[1] and "s=1" in lines[1]

    def test_wrong_arity_is_input_error(self, capsys):
        code, _, _ = run(capsys, "classify", "1", "1", "1")
        assert code == 3

    def test_nonpositive_exponent_is_input_error(self, capsys):
        code, _, err = run(capsys, "classify", "1", "1", "1", "1", "1", "0")
        assert code == 3
        assert "positive" in err


class TestEmit:
    def test_plain_listing(self, capsys):
        code, out, _ = run(capsys, "emit", *S0)
        assert code == 0
        assert out.splitlines() == ["a b a b a b -> b", "a b^2 -> b a b"]

    def test_structured_is_json(self, capsys):
        code, out, _ = run(capsys, "emit", *S0, "--structured")
        assert code == 0
        doc = json.loads(out)
        assert doc["rules"] == [
            {"lhs": "a b a b a b", "rhs": "b"},
            {"lhs": "a b^2", "rhs": "b a b"},
        ]
        assert doc["meta"]["case"] == "C1a"

    def test_definitions_listed_first(self, capsys):
        code, out, _ = run(capsys, "emit", "1", "2", "1", "2", "1", "2")
        assert code == 0
        assert out.splitlines()[0].startswith("let x = ")


class TestVerify:
    def test_green_tuple_exits_zero(self, capsys):
        code, out, _ = run(capsys, "verify", *S0)
        assert code == 0
        assert "overall: pass" in out
        assert "confluence: pass" in out
        assert "certificate: a -> (coef 2, const 0), b -> (coef 1, const 1)" in out

    def test_red_tuple_exits_one(self, capsys):
        code, out, _ = run(
            capsys, "verify", "1", "2", "2", "1", "1", "1", "--parts", "confluence"
        )
        assert code == 1
        assert "confluence: FAIL" in out

    def test_structured_report(self, capsys):
        code, out, _ = run(
            capsys, "verify", *S0, "--structured", "--parts", "confluence"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["label"] == "C1a"
        assert doc["confluence"]["ok"] is True

    def test_system_round_trip(self, capsys, monkeypatch):
        _, serialized, _ = run(capsys, "emit", *S0, "--structured")
        monkeypatch.setattr(sys, "stdin", io.StringIO(serialized))
        code, out, _ = run(capsys, "verify", "--system", "-")
        assert code == 0
        assert "overall: pass" in out

    def test_system_without_exponents_is_input_error(self, capsys, monkeypatch):
        bare = json.dumps(
            {"alphabet": ["a", "b"], "rules": [{"lhs": "a b", "rhs": "b"}]}
        )
        monkeypatch.setattr(sys, "stdin", io.StringIO(bare))
        code, _, err = run(capsys, "verify", "--system", "-")
        assert code == 3
        assert "exponents" in err

    def test_missing_system_file_is_input_error(self, capsys):
        code, _, err = run(capsys, "verify", "--system", "/no/such/file.json")
        assert code == 3

    def test_unknown_part_is_input_error(self, capsys):
        code, _, err = run(capsys, "verify", *S0, "--parts", "voodoo")
        assert code == 3
        assert "voodoo" in err


class TestNormalize:
    def test_collapse(self, capsys):
        code, out, _ = run(capsys, "normalize", "ababab", "--exponents", *S0)
        assert code == 0
        assert out.startswith("b  (1 steps)")

    def test_structured(self, capsys):
        code, out, _ = run(
            capsys, "normalize", "ab^2", "--exponents", *S0, "--structured"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc == {
            "completed": True,
            "input": "a b^2",
            "normal_form": "b a b",
            "steps": 1,
        }

    def test_step_limit_exhaustion_is_undecided(self, capsys):
        code, out, _ = run(
            capsys, "normalize", "ababab", "--exponents", *S0, "--step-limit", "0"
        )
        assert code == 2
        assert "step limit" in out

    def test_env_override_is_honored(self, capsys, monkeypatch):
        monkeypatch.setenv("ONEREL_STEP_LIMIT", "0")
        code, _, _ = run(capsys, "normalize", "ababab", "--exponents", *S0)
        assert code == 2

    def test_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("ONEREL_STEP_LIMIT", "0")
        code, _, _ = run(
            capsys, "normalize", "ababab", "--exponents", *S0, "--step-limit", "10"
        )
        assert code == 0

    def test_bad_env_value_is_input_error(self, capsys, monkeypatch):
        monkeypatch.setenv("ONEREL_STEP_LIMIT", "many")
        code, _, err = run(capsys, "normalize", "ababab", "--exponents", *S0)
        assert code == 3
        assert "ONEREL_STEP_LIMIT" in err

    def test_word_outside_alphabet_is_input_error(self, capsys):
        code, _, _ = run(capsys, "normalize", "abz", "--exponents", *S0)
        assert code == 3


class TestEqual:
    def test_equal_pair(self, capsys):
        code, out, _ = run(capsys, "equal", "ab^2", "bab", "--exponents", *S0)
        assert code == 0
        assert out.strip() == "equal (NF = b a b)"

    def test_unequal_pair(self, capsys):
        code, out, _ = run(capsys, "equal", "ab", "ba", "--exponents", *S0)
        assert code == 1
        assert out.startswith("not equal")

    def test_undecided_when_steps_run_out(self, capsys):
        code, out, _ = run(
            capsys, "equal", "ababab", "b", "--exponents", *S0, "--step-limit", "0"
        )
        assert code == 2


class TestSweep:
    def test_single_tuple_range(self, capsys, tmp_path):
        dump = tmp_path / "failures.json"
        code, out, _ = run(
            capsys, "sweep", "--min", "1", "--max", "1", "--failures", str(dump)
        )
        assert code == 0
        assert "C1a ok" in out
        doc = json.loads(dump.read_text())
        assert doc["tuples"] == 1
        assert doc["failures"] == []

    def test_bad_range_is_input_error(self, capsys, tmp_path):
        code, _, _ = run(
            capsys, "sweep", "--min", "3", "--max", "1",
            "--failures", str(tmp_path / "f.json"),
        )
        assert code == 3


class TestDehn:
    def test_table(self, capsys):
        code, out, _ = run(capsys, "dehn", *S0, "--n", "7")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].split() == ["n", "D(n)", "S(n)", "undecided"]
        assert lines[-1].split() == ["7", "5", "11", "0"]

    def test_structured(self, capsys):
        code, out, _ = run(capsys, "dehn", *S0, "--n", "6", "--structured")
        assert code == 0
        doc = json.loads(out)
        assert doc["dehn"]["6"] == 2
