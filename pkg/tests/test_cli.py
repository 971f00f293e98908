import json

import pytest

from src.formats import dump_relation
from src.main import EXIT_CHECK_FAILED, EXIT_COMPUTATION, EXIT_INPUT, EXIT_OK, main
from strategies import G1_TEXT, K4_TEXT, P4_TEXT


@pytest.fixture
def write(tmp_path):
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_decompose_g1(capsys, write):
    code, out, _ = run(capsys, "decompose", write("g1.txt", G1_TEXT))
    assert code == EXIT_OK
    root = json.loads(out)["node"]
    assert root["kind"] == "degenerate"
    assert [child["members"] for child in root["children"]] == [[0, 1, 3], [2]]


def test_decompose_text_outline(capsys, write):
    code, out, _ = run(capsys, "decompose", write("p4.txt", P4_TEXT), "--format", "text")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "prime [0, 1, 2, 3]"


def test_decompose_writes_file(capsys, write, tmp_path):
    target = tmp_path / "tree.json"
    code, out, err = run(capsys, "decompose", write("k4.txt", K4_TEXT), "--out", str(target))
    assert code == EXIT_OK
    assert out == ""
    assert str(target) in err
    assert json.loads(target.read_text())["node"]["kind"] == "degenerate"


def test_reruns_are_byte_identical(capsys, write):
    path = write("g1.txt", G1_TEXT)
    first = run(capsys, "decompose", path)[1]
    second = run(capsys, "--threads", "3", "decompose", path)[1]
    assert first == second


@pytest.mark.parametrize("threads", ["0", "-2"])
def test_thread_count_below_one_is_rejected(capsys, write, threads):
    with pytest.raises(SystemExit) as exc:
        main(["--threads", threads, "decompose", write("g1.txt", G1_TEXT)])
    assert exc.value.code == 2
    assert "must be at least 1" in capsys.readouterr().err


@pytest.mark.parametrize("argv, expected", [
    (["shs", "0", "2"], [0, 1, 2, 3]),
    (["shs", "0", "3"], [0, 1, 3]),
    (["mhs", "3"], [[0, 1], [2]]),
    (["trivial"], False),
])
def test_queries_on_g1(capsys, write, argv, expected):
    code, out, _ = run(capsys, "query", write("g1.txt", G1_TEXT), *argv)
    assert code == EXIT_OK
    assert json.loads(out) == expected


def test_p4_is_trivial(capsys, write):
    code, out, _ = run(capsys, "query", write("p4.txt", P4_TEXT), "trivial")
    assert (code, json.loads(out)) == (EXIT_OK, True)


@pytest.mark.parametrize("argv", [
    ["shs", "0", "9"],
    ["mhs"],
    ["mhs", "1", "2"],
])
def test_bad_query_arguments(capsys, write, argv):
    code, _, err = run(capsys, "query", write("g1.txt", G1_TEXT), *argv)
    assert code == EXIT_INPUT
    assert "invalid input" in err


def test_empty_shs_is_a_computation_error(capsys, write):
    code, _, err = run(capsys, "query", write("g1.txt", G1_TEXT), "shs")
    assert code == EXIT_COMPUTATION
    assert "EmptySet" in err


@pytest.mark.parametrize("text", [
    "4 2 undirected\n0 1\n",
    "2 1 undirected\n0 7\n",
    '{"n": 3, "classes": [[[1]], [[0, 2]], [[0, 1]]]}',
])
def test_malformed_input_exits_with_2(capsys, write, text):
    code, out, err = run(capsys, "decompose", write("bad.txt", text))
    assert code == EXIT_INPUT
    assert out == ""
    assert err.startswith("✗")


def test_missing_file_exits_with_2(capsys, tmp_path):
    code, _, _ = run(capsys, "decompose", str(tmp_path / "absent.txt"))
    assert code == EXIT_INPUT


def test_check_defaults_to_expected_axioms(capsys, write):
    code, out, _ = run(capsys, "check", write("g1.txt", G1_TEXT))
    assert code == EXIT_OK
    assert [report["axiom"] for report in json.loads(out)] == ["A1", "A2", "A3", "A4"]


def test_digraph_check_expects_a2_and_a3(capsys, write):
    code, out, _ = run(capsys, "check", write("t.txt", "3 3 directed\n0 1\n1 2\n2 0\n"))
    assert code == EXIT_OK
    assert [report["axiom"] for report in json.loads(out)] == ["A2", "A3"]


def test_failing_check_exits_with_1(capsys, write, bad_rel):
    code, out, err = run(capsys, "check", write("bad.json", dump_relation(bad_rel)), "--axioms", "A2", "--closure")
    assert code == EXIT_CHECK_FAILED
    reports = json.loads(out)
    assert reports[0] == {"axiom": "A2", "holds": False, "witness": [2, 3, 0, 1]}
    assert reports[1]["axiom"] == "weakly_partitive"
    assert "A2" in err


def test_check_closure_submodularity_and_oracle(capsys, write):
    code, out, _ = run(capsys, "check", write("g1.txt", G1_TEXT), "--closure", "--submodular", "--oracle")
    assert code == EXIT_OK
    axioms = [report["axiom"] for report in json.loads(out)]
    assert axioms[:2] == ["partitive", "submodularity"]
    assert "oracle:strong_sets" in axioms


def test_oracle_on_a_large_input_exits_with_3(capsys, write):
    text = "13 0 undirected\n"
    code, _, err = run(capsys, "check", write("big.txt", text), "--oracle")
    assert code == EXIT_COMPUTATION
    assert "TooLarge" in err


def test_generate_then_decompose(capsys, tmp_path):
    target = tmp_path / "gen.txt"
    assert run(capsys, "generate", "--model", "gnp", "--n", "8", "--p", "1", "--out", str(target))[0] == EXIT_OK
    assert target.read_text().splitlines()[0] == "8 28 undirected"
    code, out, _ = run(capsys, "decompose", str(target))
    assert code == EXIT_OK
    assert len(json.loads(out)["node"]["children"]) == 8


def test_generate_is_deterministic(capsys):
    argv = ["generate", "--model", "tournament", "--n", "6", "--seed", "4"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_oracle_command(capsys, write):
    code, out, _ = run(capsys, "oracle", write("g1.txt", G1_TEXT))
    assert code == EXIT_OK
    families = json.loads(out)
    assert families["strong_sets"] == families["homogeneous_sets"]
    assert [0, 1, 3] in families["homogeneous_sets"]


def test_bipartite_graphs_decompose_into_bimodules(capsys, write):
    text = "3 1 bipartite\ncolors: 0\n0 1\n"
    code, out, _ = run(capsys, "decompose", write("b.txt", text))
    assert code == EXIT_OK
    root = json.loads(out)["node"]
    assert root["kind"] == "unclassified"
    assert len(root["children"]) == 3


def test_unknown_command_is_an_argparse_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["explode"])
    assert exc.value.code == 2


def test_running_out_of_memory_is_a_computation_failure(capsys, write, monkeypatch):
    def exhausted(*args, **kwargs):
        raise MemoryError

    monkeypatch.setattr("src.main.run_checks", exhausted)
    code, _, err = run(capsys, "check", write("g1.txt", G1_TEXT))
    assert code == EXIT_COMPUTATION
    assert "out of memory" in err
