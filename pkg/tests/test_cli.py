import json
from pathlib import Path
from typing import Final, List

import pytest

from submodule_codes.__main__ import main
from submodule_codes.formats import parse_matrix

from .shared import GOLDEN_DIR

G: Final = str(GOLDEN_DIR)

GOLDEN_CASES: Final = [
    (["ref", f"{G}/z6.txt"], "ref_z6.expected"),
    (["rref", f"{G}/z6.txt"], "rref_z6.expected"),
    (["length", f"{G}/z6.txt"], "length_z6.expected"),
    (["check-ref", f"{G}/z6.txt"], "check_ref_z6.expected"),
    (["check-ref", f"{G}/z6_echelon.txt"], "check_ref_z6_echelon.expected"),
    (["rref", f"{G}/z4_stacked.txt"], "rref_z4_stacked.expected"),
    (["sum", f"{G}/z4_m.txt", f"{G}/z4_n.txt"], "sum_z4.expected"),
    (["distance", f"{G}/z4_m.txt", f"{G}/z4_n.txt"], "distance_z4.expected"),
    (["loss-error", f"{G}/z4_m.txt", f"{G}/z4_n.txt"], "loss_error_z4.expected"),
    (["length", f"{G}/z4_m.txt"], "length_z4_m.expected"),
    (["rref", f"{G}/z8_canonical.txt"], "rref_z8.expected"),
    (["enumerate", f"{G}/z12_ambient.txt", "--length", "1"], "enumerate_z12.expected"),
    (
        ["bound", "singleton", "--ring", "Z12", "--n", "2", "--k", "2", "--delta", "2"],
        "bound_singleton_z12.expected",
    ),
    (
        ["bound", "sphere", "--ring", "Z12", "--n", "2", "--k", "2", "--delta", "2"],
        "bound_sphere_z12.expected",
    ),
    (
        ["bound", "chain", "--ring", "Z4", "--n", "4", "--k", "3"],
        "bound_chain_z4.expected",
    ),
    (
        ["bound", "zpm", "--p", "2", "--m", "2", "--n", "4", "--k", "2", "--delta", "2"],
        "bound_zpm.expected",
    ),
    (
        ["construct", "tensor", f"{G}/z5_code.txt", "--ring", "Zi5"],
        "construct_tensor_zi5.expected",
    ),
    (["decode", f"{G}/zi5_code.txt", f"{G}/zi5_received.txt"], "decode_zi5.expected"),
    (
        ["decode", f"{G}/z2z2_stacked_code.txt", f"{G}/z2z2_received.txt"],
        "decode_z2z2.expected",
    ),
    (
        [
            "decode",
            "--by-component",
            f"{G}/z2z2_stacked_code.txt",
            f"{G}/z2z2_received.txt",
        ],
        "decode_z2z2_components.expected",
    ),
    (["check-trapping", f"{G}/trapping_z4.txt"], "check_trapping_z4.expected"),
    (["classify", "Zi5"], "classify_zi5.expected"),
    (["optimality", "--n", "4", "--h", "2"], "optimality.expected"),
]


@pytest.mark.parametrize(("argv", "expected_name"), GOLDEN_CASES)
def test_golden(argv: List[str], expected_name: str, capsys) -> None:
    assert main(argv) == 0
    expected = (GOLDEN_DIR / expected_name).read_text(encoding="utf-8")
    assert capsys.readouterr().out == expected


def test_printed_matrix_reparses(capsys) -> None:
    """Matrices printed by rref read back to the same value."""
    assert main(["rref", f"{G}/z8_canonical.txt"]) == 0
    printed = capsys.readouterr().out
    reparsed = parse_matrix(printed)
    original = parse_matrix((GOLDEN_DIR / "rref_z8.expected").read_text())
    assert reparsed.matrix == original.matrix


def test_machine_format(capsys) -> None:
    assert (
        main(["--format", "machine", "distance", f"{G}/z4_m.txt", f"{G}/z4_n.txt"])
        == 0
    )
    assert json.loads(capsys.readouterr().out) == 2

    assert main(["--format", "machine", "rref", f"{G}/z4_stacked.txt"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["ring"] == "Z4"
    assert data["rows"] == [
        ["1", "1", "0", "0"],
        ["0", "2", "0", "2"],
        ["0", "0", "1", "0"],
    ]

    argv = "--format machine bound zpm --p 2 --m 2 --n 4 --k 3 --delta 3".split()
    assert main(argv) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["name"] == "zpm"
    assert {entry["name"] for entry in report["entries"]} == {"bb1", "bb2", "bb3", "bb4"}


def test_malformed_file_exit_2(tmp_path: Path, capsys) -> None:
    bad = tmp_path / "bad.txt"
    bad.write_text("ring: Z4\ncols: 3\n1 2 3\n1 x 3\n", encoding="utf-8")

    assert main(["rref", str(bad)]) == 2
    err = capsys.readouterr().err
    assert err.startswith(f"{bad}:4:3:")


def test_unbalanced_ring_spec_exit_2(tmp_path: Path, capsys) -> None:
    bad = tmp_path / "bad.txt"
    bad.write_text("ring: product(Z2,Z3\ncols: 1\n(1,1)\n", encoding="utf-8")

    assert main(["length", str(bad)]) == 2
    assert f"{bad}:1:" in capsys.readouterr().err


def test_missing_file_exit_2(tmp_path: Path, capsys) -> None:
    assert main(["length", str(tmp_path / "missing.txt")]) == 2
    assert "missing.txt" in capsys.readouterr().err


def test_domain_error_exit_1(capsys) -> None:
    assert main(["construct", "spread", "--ring", "Z6", "--n", "4", "--k", "2"]) == 1
    assert "not a chain ring" in capsys.readouterr().err


def test_check_ref_no_is_not_an_error(capsys) -> None:
    assert main(["check-ref", f"{G}/z4_stacked.txt"]) == 0
    assert capsys.readouterr().out.startswith("NO: ")


def test_member(capsys) -> None:
    assert main(["member", f"{G}/z4_m.txt", "0 0 2 0"]) == 0
    assert capsys.readouterr().out.startswith("YES")

    assert main(["member", f"{G}/z4_m.txt", "0 0 1 0"]) == 0
    assert capsys.readouterr().out == "NO\n"


def test_spread_cardinality(capsys) -> None:
    assert main(["construct", "spread", "--ring", "Z4", "--n", "4", "--k", "3"]) == 0
    assert capsys.readouterr().out.startswith("# 5 word(s), k=3\n")


def test_simulate_is_reproducible(tmp_path: Path, capsys) -> None:
    config = tmp_path / "sim.txt"
    config.write_text(
        "ring: Z4\nn: 4\nt: 2\nN: 3\nv: 0\n"
        "construction: spread\nk: 4\ntrials: 20\nseed: 7\n",
        encoding="utf-8",
    )

    assert main(["simulate", str(config)]) == 0
    first = capsys.readouterr().out

    assert main(["simulate", str(config)]) == 0
    assert capsys.readouterr().out == first

    # No noise and a left-invertible transfer matrix always decode
    assert "success rate: 1.0000" in first


def test_simulate_code_file_relative_to_config(tmp_path: Path, capsys) -> None:
    (tmp_path / "code.txt").write_text(
        (GOLDEN_DIR / "zi5_code.txt").read_text(), encoding="utf-8"
    )
    config = tmp_path / "sim.txt"
    config.write_text(
        "ring: Zi5\nn: 4\nt: 2\nN: 2\ncode: code.txt\ntrials: 5\n", encoding="utf-8"
    )

    assert main(["--format", "machine", "--seed", "3", "simulate", str(config)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["trials"] == 5
    assert report["success_rate"] == 1.0


def test_bad_config_exit_2(tmp_path: Path, capsys) -> None:
    config = tmp_path / "sim.txt"
    config.write_text("ring: Z4\nn: four\n", encoding="utf-8")

    assert main(["simulate", str(config)]) == 2
    assert str(config) in capsys.readouterr().err
