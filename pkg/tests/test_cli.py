import json

import pytest

from groupmatch import make_quaternion, save_group_file
from groupmatch.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestMatchCommand:
    def test_violator_exits_one(self, capsys):
        code, out = run(capsys, "match", "C4", "{0,2}", "{1,2}")
        assert code == 1
        assert "S = {0, 2}" in out and "deficiency = 1" in out

    def test_matching_exits_zero(self, capsys):
        code, out = run(capsys, "match", "C5", "{1,2,3,4}", "{1,2,3,4}")
        assert code == 0
        assert "matching found" in out

    def test_identity_in_b_is_input_error(self, capsys):
        code, out = run(capsys, "match", "C4", "{0,2}", "{0,2}")
        assert code == 2
        assert "identity" in out

    def test_size_mismatch_is_input_error(self, capsys):
        code, _ = run(capsys, "match", "C4", "{0,2}", "{1}")
        assert code == 2

    def test_bad_literal_is_input_error(self, capsys):
        code, out = run(capsys, "match", "C4", "{0,2", "{1,2}")
        assert code == 2
        assert "column" in out

    def test_bad_group_spec_is_input_error(self, capsys):
        code, _ = run(capsys, "match", "X9", "{0}", "{1}")
        assert code == 2

    def test_machine_format(self, capsys):
        code, out = run(capsys, "match", "C4", "{0,2}", "{1,2}", "--format", "machine")
        doc = json.loads(out)
        assert code == 1
        assert doc["result"] == "violator"
        assert doc["violator"] == {"S": [0, 2], "neighborhood": [1], "deficiency": 1}

    def test_lattice_group_match(self, capsys):
        code, out = run(capsys, "match", "Z^2", "{(0,0),(1,1)}", "{(1,0),(0,1)}")
        assert code == 0

    def test_table_file_as_group(self, capsys, tmp_path):
        path = tmp_path / "q8.table"
        save_group_file(make_quaternion(), path)
        code, out = run(capsys, "match", str(path), "{1,4}", "{1,4}")
        assert code == 0
        assert "i" in out   # display uses the file's element names


class TestVerifyCommand:
    def test_all_checks_pass_on_c5(self, capsys):
        code, out = run(capsys, "verify", "C5", "--checks", "all")
        assert code == 0
        assert "overall: PASS" in out

    def test_c4_property_failure_agrees_with_prediction(self, capsys):
        code, out = run(capsys, "verify", "C4", "--checks", "matching-property")
        assert code == 0
        assert '"pairs_failed": 4' in out

    def test_c3_corollary_flags_stated_bound(self, capsys):
        code, out = run(capsys, "verify", "C3", "--checks", "corollary")
        assert code == 0
        assert "stated-bound-counterexample" in out

    def test_size_limit_names_the_check(self, capsys):
        code, out = run(capsys, "verify", "C7", "--checks", "corollary")
        assert code == 2
        assert "corollary" in out

    def test_cap_override_allows_larger_sweep(self, capsys):
        code, _ = run(capsys, "verify", "C7", "--checks", "corollary", "--cap-order", "7")
        assert code == 0

    def test_unknown_check_rejected(self, capsys):
        code, _ = run(capsys, "verify", "C4", "--checks", "nonsense")
        assert code == 2

    def test_lattice_spec_rejected(self, capsys):
        code, _ = run(capsys, "verify", "Z^2")
        assert code == 2

    def test_machine_reports_are_byte_identical(self, capsys):
        args = ("verify", "C4", "--checks", "kemperman,matching-property,hall",
                "--seed", "11", "--jobs", "1", "--format", "machine")
        code1, out1 = run(capsys, *args)
        code2, out2 = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        doc = json.loads(out1)
        assert doc["status"] == "pass"
        assert [c["check"] for c in doc["checks"]] == ["kemperman", "matching-property", "hall"]


class TestCounterexampleCommand:
    def test_c6(self, capsys):
        code, out = run(capsys, "counterexample", "C6")
        assert code == 0
        assert "A = <a> = {0, 2, 4}" in out
        assert "{1, 2, 4}" in out

    def test_prime_order_not_applicable(self, capsys):
        code, _ = run(capsys, "counterexample", "C5")
        assert code == 3

    def test_q8_machine(self, capsys):
        code, out = run(capsys, "counterexample", "Q8", "--format", "machine")
        doc = json.loads(out)
        assert code == 0
        assert len(doc["A"]) in (2, 4)
        assert doc["violator"]["deficiency"] >= 1


class TestLatticeCommand:
    def test_small_run_passes(self, capsys):
        code, out = run(capsys, "lattice", "-d", "1", "-t", "50")
        assert code == 0
        assert "PASS" in out

    def test_zero_trials_skipped(self, capsys):
        code, out = run(capsys, "lattice", "-d", "1", "-t", "0")
        assert code == 2
        assert "SKIPPED" in out

    def test_machine_determinism(self, capsys):
        args = ("lattice", "-d", "2", "-t", "40", "--seed", "3", "--format", "machine")
        _, out1 = run(capsys, *args)
        _, out2 = run(capsys, *args)
        assert out1 == out2
