import json
import pathlib

import pytest

import monkbench

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_pi_of_two_label_fixture():
    assert monkbench.pi_density(load("two_labels.json")) == 3


def test_four_copy_amalgam():
    cert = monkbench.amalgam_run(load("four_copies.json"))
    assert cert["pass"]
    assert cert["q"]["w"] == [0, 1, 2, 3]
    assert len(cert["q"]["F"]) == 6


def test_suite_report_is_deterministic():
    a = monkbench.run_suite("m-amalgam", seed=1, count=5)
    b = monkbench.run_suite("m-amalgam", seed=1, count=5, threads=3)
    a.pop("wall_ms")
    b.pop("wall_ms")
    assert a == b
    assert a["summary"]["failed"] == 0


def test_pichi():
    assert monkbench.pichi_order("fin:4") == "1"
    assert monkbench.pichi_order("lexQ:λ2") == "λ2"


def test_errors():
    with pytest.raises(monkbench.MonkbenchError):
        monkbench.run_suite("nosuch")
    with pytest.raises(monkbench.ParseError):
        monkbench.pichi_order("banana")


def test_cli_exit_codes():
    code, out, _ = monkbench.cli("pi", "--input", FIXTURES / "two_labels.json")
    assert (code, out) == (0, "3\n")
    code, _, err = monkbench.cli("pi", "--input", FIXTURES / "four_copies.json")
    assert code == 2 and err
