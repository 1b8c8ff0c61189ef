import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cohomring.cli import main, run_command

REDUCE_ARGS = [
    "reduce",
    "X^2",
    "--ideal",
    "(X^3, Y^2, X^2+X*Y)",
    "--ring",
    "Z2",
    "--vars",
    "X,Y",
]


def test_reduce_example():
    assert run_command(REDUCE_ARGS) == (0, "X*Y")


def test_reduce_example_json_bytes():
    code, text = run_command(REDUCE_ARGS + ["--json"])
    assert code == 0
    assert text == (
        '{"command": "reduce", "diagnostics": {}, '
        '"inputs": {"expr": "X^2", "ideal": "(X^3, Y^2, X^2+X*Y)", '
        '"ring": "Z2", "vars": "X,Y"}, "result": "X*Y"}'
    )


def test_distinguish_example():
    code, text = run_command(
        ["cohomology-distinguish", "K2", "RP2vS1", "--coeff", "Z2"]
    )
    assert code == 0
    assert text == "distinct (no graded ring isomorphism exists)"


def test_distinguish_example_json_bytes():
    code, text = run_command(
        ["cohomology-distinguish", "K2", "RP2vS1", "--coeff", "Z2", "--json"]
    )
    assert code == 0
    assert text == (
        '{"command": "cohomology-distinguish", "diagnostics": {}, '
        '"inputs": {"coeff": "Z2", "space1": "K2", "space2": "RP2vS1"}, '
        '"result": "distinct (no graded ring isomorphism exists)"}'
    )


def test_unsupported_pair_example():
    code, text = run_command(["cohomology-ring", "S2", "--coeff", "Z2"])
    assert code == 1
    assert text == "error: unsupported coefficient for this space"


def test_unsupported_pair_example_json_bytes():
    code, text = run_command(["cohomology-ring", "S2", "--coeff", "Z2", "--json"])
    assert code == 1
    assert text == (
        '{"command": "cohomology-ring", '
        '"diagnostics": {"error": "unsupported coefficient for this space"}, '
        '"inputs": {"coeff": "Z2", "space": "S2"}, "result": null}'
    )


def test_normalize():
    assert run_command(["normalize", "X + X + 1", "--ring", "Z2", "--vars", "X"]) == (
        0,
        "1",
    )
    # canonical order is ascending, later variables weigh less
    assert run_command(["normalize", "X + Y", "--vars", "X,Y"]) == (0, "Y + X")


def test_add_and_mul():
    assert run_command(["add", "X^2", "3*X", "--vars", "X"]) == (0, "3*X + X^2")
    assert run_command(["mul", "X + 1", "X - 1", "--vars", "X"]) == (0, "-1 + X^2")


def test_eval():
    assert run_command(["eval", "X^2 + 1", "3", "--vars", "X"]) == (0, "10")
    assert run_command(["eval", "X*Y", "3", "4", "--vars", "X,Y"]) == (0, "12")
    assert run_command(["eval", "X^2 + 1", "3", "--ring", "Z2", "--vars", "X"]) == (
        0,
        "0",
    )


def test_eval_wrong_value_count():
    code, text = run_command(["eval", "X*Y", "3", "--vars", "X,Y"])
    assert code == 1
    assert text.startswith("error:")


def test_groebner_check():
    args = ["groebner-check", "--ideal", "(X^3, Y^2, X^2+X*Y)", "--ring", "Z2", "--vars", "X,Y"]
    assert run_command(args) == (0, "true")
    args = ["groebner-check", "--ideal", "(X*Y+1, X^2)", "--ring", "Z2", "--vars", "X,Y"]
    assert run_command(args) == (0, "false")


def test_groebner_complete():
    code, text = run_command(
        [
            "groebner-check",
            "--ideal",
            "(X*Y+1, X^2)",
            "--ring",
            "Z2",
            "--vars",
            "X,Y",
            "--complete",
        ]
    )
    assert code == 0
    # generators render canonically, constant term first
    assert text == "(1 + X*Y, X^2, X, 1)"


def test_groebner_complete_bound_exceeded():
    code, text = run_command(
        [
            "groebner-check",
            "--ideal",
            "(X*Y+Z^2, X^2+Y^2)",
            "--ring",
            "Z2",
            "--vars",
            "X,Y,Z",
            "--complete",
            "--degree-bound",
            "2",
        ]
    )
    assert code == 1
    assert text.startswith("error:")


def test_cohomology_ring_presentations():
    code, text = run_command(["cohomology-ring", "K2", "--coeff", "Z2"])
    assert code == 0
    assert text == "Z2[X,Y]/(X^3, Y^2, X*Y + X^2)\ndeg X = 1, deg Y = 1"
    code, text = run_command(["cohomology-ring", "S2", "--coeff", "Z"])
    assert code == 0
    assert text == "Z[X]/(X^2)\ndeg X = 2"


def test_cohomology_ring_json_shape():
    code, text = run_command(["cohomology-ring", "CP2", "--coeff", "Z", "--json"])
    assert code == 0
    payload = json.loads(text)
    assert payload["result"] == {
        "degrees": [2],
        "relations": ["X^3"],
        "ring": "Z",
        "variables": ["X"],
    }


def test_cohomology_group():
    assert run_command(["cohomology-group", "K2", "2", "--coeff", "Z"]) == (0, "Z2")
    assert run_command(["cohomology-group", "K2", "1", "--coeff", "Z2"]) == (
        0,
        "Z2 x Z2",
    )
    assert run_command(["cohomology-group", "S2", "1", "--coeff", "Z"]) == (0, "0")
    assert run_command(["cohomology-group", "S2", "2", "--coeff", "Z"]) == (0, "Z")


def test_cup_trivial():
    assert run_command(
        ["cohomology-cup-trivial", "S2vS4", "2", "2", "--coeff", "Z"]
    ) == (0, "true")
    assert run_command(["cohomology-cup-trivial", "CP2", "2", "2", "--coeff", "Z"]) == (
        0,
        "false",
    )


def test_distinguish_by_groups():
    code, text = run_command(["cohomology-distinguish", "S2", "S3", "--coeff", "Z"])
    assert code == 0
    assert text == "distinct (cohomology groups differ in degree 2)"


def test_distinguish_inconclusive():
    code, text = run_command(["cohomology-distinguish", "K2", "RP2vS1", "--coeff", "Z"])
    assert code == 0
    assert text == "indistinguishable by implemented invariants"


def test_unknown_space():
    code, text = run_command(["cohomology-ring", "T2", "--coeff", "Z"])
    assert code == 1
    assert "T2" in text


def test_usage_errors_exit_2():
    assert run_command([])[0] == 2
    assert run_command(["no-such-command"])[0] == 2
    assert run_command(["reduce"])[0] == 2
    assert run_command(["normalize", "X", "--no-such-flag"])[0] == 2


def test_domain_errors_exit_1():
    assert run_command(["normalize", "X^", "--vars", "X"])[0] == 1
    assert run_command(["normalize", "Q", "--vars", "X"])[0] == 1
    assert run_command(["normalize", "X", "--ring", "Q7", "--vars", "X"])[0] == 1
    assert run_command(["reduce", "X", "--ideal", "X", "--vars", "X"])[0] == 1


def test_help_exits_0():
    code, text = run_command(["--help"])
    assert code == 0
    assert "cohomring" in text


def test_json_output_is_stable():
    for argv in (
        REDUCE_ARGS + ["--json"],
        ["cohomology-group", "K2", "1", "--coeff", "Z2", "--json"],
        ["eval", "X^2", "5", "--vars", "X", "--json"],
    ):
        assert run_command(argv) == run_command(argv)


def test_bench_runs():
    code, text = run_command(
        ["bench", "--workload", "sparse", "--sizes", "64", "--trials", "1"]
    )
    assert code == 0
    assert "n=64" in text and "sparse" in text and "dense" in text


def test_bench_json_reports_timings():
    code, text = run_command(
        ["bench", "--workload", "dense", "--sizes", "32", "--trials", "1", "--json"]
    )
    assert code == 0
    payload = json.loads(text)
    assert payload["diagnostics"]["cross_check"] == "equal"
    row = payload["result"]["rows"][0]
    assert row["workload"] == "dense" and row["size"] == 32
    assert set(row["timings_ms"]) == {"sparse", "dense"}


def test_bench_zero_trials():
    code, text = run_command(["bench", "--trials", "0"])
    assert code == 1
    assert text.startswith("error:")


def test_main_prints_and_returns(capsys):
    assert main(["normalize", "0", "--vars", "X"]) == 0
    assert capsys.readouterr().out == "0\n"
    assert main(["cohomology-ring", "S2", "--coeff", "Z2"]) == 1
    assert capsys.readouterr().err.strip() == "error: unsupported coefficient for this space"


_TOKENS = st.sampled_from(
    [
        "normalize",
        "reduce",
        "eval",
        "bench",
        "cohomology-ring",
        "X^2",
        "X,Y",
        "((",
        "-3",
        "--ring",
        "--vars",
        "--ideal",
        "--coeff",
        "--json",
        "Z2",
        "Z/0",
        "K2",
        "",
    ]
)


@given(st.lists(_TOKENS, max_size=5))
def test_fuzzed_argv_never_panics(argv):
    code, _ = run_command(argv)
    assert code in (0, 1, 2)
