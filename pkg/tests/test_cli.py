import json
import pathlib

import jsonschema

from freeknot.cli import main

SCHEMA = json.loads(
    (pathlib.Path(__file__).resolve().parents[1] / "schemas" / "output.schema.json").read_text()
)


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def run_json(capsys, *argv):
    status, out, err = run(capsys, *argv, "--format", "json")
    payload = json.loads(out)
    jsonschema.validate(payload, SCHEMA)
    return status, payload


# ---------------------------------------------------------------------------
# the grammar examples


def test_components_example(capsys):
    status, out, _ = run(capsys, "components", "a b | a b")
    assert status == 0 and out == "2\n"


def test_delta_json_example(capsys):
    # every splitting of this word dies by the free-loop rule (see ledger)
    status, payload = run_json(capsys, "delta", "a b c a b c")
    assert status == 0 and payload == []


def test_reduce_example(capsys):
    status, out, _ = run(capsys, "reduce", "a b a b")
    assert status == 0
    assert out.splitlines() == ["O", "saw_free_loop: true"]


# ---------------------------------------------------------------------------
# plumbing


def test_parse_text_and_json(capsys):
    status, out, _ = run(capsys, "parse", "O | a a")
    assert status == 0
    assert out.splitlines()[0] == "O | a a"
    status, payload = run_json(capsys, "parse", "O | a a")
    assert payload["components"] == 2 and payload["chords"] == 1 and payload["free_loops"] == 1


def test_canon_is_a_fixed_point(capsys):
    _, out1, _ = run(capsys, "canon", "b a b a")
    _, out2, _ = run(capsys, "canon", out1.strip())
    assert out1 == out2 == "a b a b\n"


def test_file_input(tmp_path, capsys):
    f = tmp_path / "code.txt"
    f.write_text("a b | a b\n")
    status, out, _ = run(capsys, "components", "--file", str(f))
    assert status == 0 and out == "2\n"


def test_parity_output(capsys):
    status, out, _ = run(capsys, "parity", "a b a c b c", "--rule", "gaussian")
    assert status == 0
    assert out.splitlines() == ["a: odd", "b: even", "c: odd"]
    status, payload = run_json(capsys, "parity", "a b | a b", "--rule", "component")
    assert payload["parities"] == {"a": "odd", "b": "odd"}


def test_orientable_output(capsys):
    assert run(capsys, "orientable", "a b b a")[1] == "true\n"
    assert run(capsys, "orientable", "a b a b")[1] == "false\n"


def test_interlacement_formats(capsys):
    status, out, _ = run(capsys, "interlacement", "a b a c b c")
    assert out.splitlines() == ["vertices: a b c", "a b", "b c"]
    status, out, _ = run(capsys, "interlacement", "a b a b", "--format", "dot")
    assert out.splitlines()[0] == "graph interlacement {"
    assert '  "a" -- "b";' in out
    run_json(capsys, "interlacement", "a b a c b c")


def test_bracket_text_empty_sum_prints_zero(capsys):
    status, out, _ = run(capsys, "kbracket", "a a | b b")
    assert status == 0 and out == "0\n"
    status, out, _ = run(capsys, "kbracket", "a a b | b")
    assert status == 0 and out == "a | a\n"


def test_bound_output(capsys):
    status, payload = run_json(capsys, "bound", "a b a b")
    assert payload["bound"] == 0 and payload["tight"] is False
    status, out, _ = run(capsys, "bound", "a b | a b")
    assert status == 0 and "bound: 0" in out


def test_realizable_adjacency(capsys, tmp_path):
    status, out, _ = run(capsys, "realizable", "x: y")
    assert status == 0 and out == "a b a b\n"
    f = tmp_path / "graph.txt"
    f.write_text("hub: r0 r1 r2 r3 r4\nr0: r1 r4\nr1: r2\nr2: r3\nr3: r4\n")
    status, payload = run_json(capsys, "realizable", "--file", str(f))
    assert status == 0 and payload == {"command": "realizable", "realizable": False, "witness": None}


def test_bfs_output_and_exit_codes(capsys):
    status, out, _ = run(capsys, "bfs", "a b a b", "O", "--max-vertices", "4", "--max-depth", "2")
    assert status == 0 and "reached: true" in out
    status, out, _ = run(capsys, "bfs", "a a", "a b a b c c", "--max-vertices", "2", "--max-depth", "1")
    assert status == 3 and "reached: false" in out
    run_json(capsys, "bfs", "a b a b", "O", "--max-vertices", "4", "--max-depth", "2")


def test_enumerate_output(capsys):
    status, out, _ = run(capsys, "enumerate", "2", "1")
    assert status == 0 and out.splitlines() == ["a a b b", "a b a b"]
    run_json(capsys, "enumerate", "2", "1")


def test_random_requires_seed_and_is_deterministic(capsys):
    status, _, _ = run(capsys, "random", "3", "1")
    assert status == 1
    s1 = run(capsys, "random", "3", "1", "--seed", "9")
    s2 = run(capsys, "random", "3", "1", "--seed", "9")
    assert s1 == s2 and s1[0] == 0
    s3 = run(capsys, "random", "3", "1", "--seed", "9", "--moves", "4", "--max-vertices", "6")
    assert s3[0] == 0
    run_json(capsys, "random", "3", "1", "--seed", "9")


# ---------------------------------------------------------------------------
# error paths


def test_parse_error_exit_code(capsys):
    status, _, err = run(capsys, "canon", "a b a")
    assert status == 1 and "error:" in err


def test_precondition_exit_code(capsys):
    status, _, err = run(capsys, "delta", "a b | a b")
    assert status == 2 and "component" in err


def test_budget_exit_code(capsys):
    lines = "\n".join(f"v{i}: v{(i+1) % 9}" for i in range(9))
    status, _, err = run(capsys, "realizable", lines)
    assert status == 3


def test_missing_input_is_usage_error(capsys):
    status, _, err = run(capsys, "canon")
    assert status == 1


def test_unknown_subcommand_is_usage_error(capsys):
    assert run(capsys, "frobnicate")[0] == 1


def test_byte_identical_reruns(capsys):
    for argv in (
        ["delta", "a b a c b c"],
        ["abracket", "a b a c b c", "--format", "json"],
        ["kdelta", "a b a c b c"],
        ["enumerate", "3", "1"],
        ["interlacement", "a b a c b c", "--format", "dot"],
    ):
        assert run(capsys, *argv) == run(capsys, *argv)
