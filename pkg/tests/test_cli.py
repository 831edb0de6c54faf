"""Command-line surface: formats, exit codes, determinism."""

import json

from linhyp import hgio
from linhyp.cli import EXIT_GUARD, EXIT_OK, EXIT_USAGE, main
from linhyp.core import hypergraph_isomorphic
from linhyp.algebra import affine_plane


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_gen_header(capsys):
    code, out, _ = run(capsys, "gen", "--family", "ag", "--q", "3")
    assert code == EXIT_OK
    assert "p hg 9 12" in out.splitlines()


def test_gen_round_trip(tmp_path, capsys):
    path = tmp_path / "f9.hg"
    code, _, _ = run(capsys, "gen", "--family", "ag", "--q", "3", "--out", str(path))
    assert code == EXIT_OK
    assert hypergraph_isomorphic(hgio.load(path), affine_plane(3))


def test_solve_f9(tmp_path, capsys):
    path = tmp_path / "f9.hg"
    run(capsys, "gen", "--family", "ag", "--q", "3", "--out", str(path))
    code, payload, _ = run_json(capsys, "solve", str(path))
    assert code == EXIT_OK
    assert payload["tau"] == 5
    assert len(payload["witness"]) == 5
    assert all(1 <= v <= 9 for v in payload["witness"])
    assert payload["manifest"]["version"]


def test_solve_determinism(tmp_path, capsys):
    path = tmp_path / "f9.hg"
    run(capsys, "gen", "--family", "ag", "--q", "3", "--out", str(path))
    _, a, _ = run_json(capsys, "solve", str(path))
    _, b, _ = run_json(capsys, "solve", str(path))
    a["manifest"].pop("elapsed_ms")
    b["manifest"].pop("elapsed_ms")
    assert a == b


def test_gen_random_requires_seed(capsys):
    code, _, err = run(
        capsys, "gen", "--family", "random", "--n", "10", "--k", "3",
        "--max-deg", "2", "--m-target", "4",
    )
    assert code == EXIT_USAGE
    assert "--seed" in err


def test_gen_random_deterministic(tmp_path, capsys):
    args = (
        "gen", "--family", "random", "--n", "12", "--k", "3", "--max-deg",
        "2", "--m-target", "5", "--seed", "77",
    )
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_prob_envelope(capsys):
    code, payload, _ = run_json(capsys, "prob", "envelope")
    assert code == EXIT_OK
    assert abs(payload["max"] - 1.5037) < 1e-3
    assert abs(payload["argmax"] - 3.753) < 1e-2


def test_prob_threshold(capsys):
    code, payload, _ = run_json(
        capsys, "prob", "threshold", "--k-lo", "2750", "--k-hi", "2756"
    )
    assert code == EXIT_OK
    assert payload["threshold"] == 2753


def test_prob_shrink_and_mc(tmp_path, capsys):
    path = tmp_path / "pg3.hg"
    run(capsys, "gen", "--family", "pg", "--q", "3", "--out", str(path))
    out_path = tmp_path / "shrunk.hg"
    code, payload, _ = run_json(
        capsys, "prob", "shrink", str(path), "--k", "2", "--seed", "3",
        "--out", str(out_path),
    )
    assert code == EXIT_OK and payload["n"] == 13
    shrunk = hgio.load(out_path)
    assert all(len(e) == 2 for e in shrunk.edges)
    code, payload, _ = run_json(
        capsys, "prob", "mc", "--p", "3", "--trials", "5", "--seed", "1"
    )
    assert code == EXIT_OK
    assert payload["trials"] == 5


def test_dual_identity(tmp_path, capsys):
    path = tmp_path / "h10.hg"
    run(capsys, "gen", "--family", "special", "--name", "H10", "--out", str(path))
    code, payload, _ = run_json(capsys, "dual", str(path))
    assert code == EXIT_OK
    assert payload == {
        **payload,
        "m": 5,
        "alpha_prime": 2,
        "tau": 3,
        "identity_holds": True,
    }


def test_defic(tmp_path, capsys):
    path = tmp_path / "h10.hg"
    run(capsys, "gen", "--family", "special", "--name", "H10", "--out", str(path))
    code, payload, _ = run_json(capsys, "defic", str(path))
    assert code == EXIT_OK
    assert payload["value"] == 10
    assert payload["partition_counts"]["X10"] == 1


def test_verify_catalog(capsys):
    code, payload, _ = run_json(capsys, "verify", "catalog")
    assert code == EXIT_OK
    assert payload["all_passed"]
    assert set(payload["subjects"]) == set(
        __import__("linhyp.catalog", fromlist=["NAMES"]).NAMES
    )


def test_verify_mainyy(capsys):
    code, payload, _ = run_json(capsys, "verify", "mainyy", "--q", "4")
    assert code == EXIT_OK
    assert payload["all_passed"]


def test_verify_bounds_builtin(capsys):
    code, payload, _ = run_json(
        capsys, "verify", "bounds", "--bound", "Q46", "--corpus", "builtin"
    )
    assert code == EXIT_OK
    assert payload["all_passed"]


def test_verify_bounds_directory_corpus(tmp_path, capsys):
    run(capsys, "gen", "--family", "ag", "--q", "3", "--out", str(tmp_path / "a.hg"))
    run(capsys, "gen", "--family", "residual", "--q", "3", "--s", "1",
        "--out", str(tmp_path / "b.hg"))
    code, payload, _ = run_json(
        capsys, "verify", "bounds", "--bound", "K23", "--corpus", str(tmp_path)
    )
    assert code == EXIT_OK
    assert len(payload["results"]) == 2
    assert payload["all_passed"]


def test_verify_mainyy_table(capsys):
    code, out, _ = run(capsys, "verify", "mainyy", "--q", "4", "--table")
    assert code == EXIT_OK
    assert "tau" in out and "(n+m)/(q+1)" in out


def test_gen_dot_output(tmp_path, capsys):
    dot = tmp_path / "h4.dot"
    code, _, _ = run(
        capsys, "gen", "--family", "special", "--name", "H4",
        "--out", str(tmp_path / "h4.hg"), "--dot", str(dot),
    )
    assert code == EXIT_OK
    text = dot.read_text()
    assert text.startswith("graph incidence {")
    assert "v0 -- e0;" in text


def test_usage_error_exit_code(capsys):
    code, _, _ = run(capsys, "gen", "--family", "nonsense")
    assert code == EXIT_USAGE


def test_missing_family_params(capsys):
    code, _, err = run(capsys, "gen", "--family", "lk")
    assert code == EXIT_USAGE
    assert "--k" in err


def test_guard_exit_code(tmp_path, capsys, monkeypatch):
    path = tmp_path / "big.hg"
    run(capsys, "gen", "--family", "ag", "--q", "3", "--out", str(path))
    monkeypatch.setenv("LINHYP_GUARD_SOLVE_N", "5")
    code, _, err = run(capsys, "solve", str(path))
    assert code == EXIT_GUARD
    assert "guard" in err


def test_bad_file_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.hg"
    path.write_text("p hg 3 1\ne 1 9\n")
    code, _, _ = run(capsys, "solve", str(path))
    assert code == EXIT_USAGE


def test_dual_rejects_high_degree(tmp_path, capsys):
    path = tmp_path / "plane.hg"
    run(capsys, "gen", "--family", "ag", "--q", "3", "--out", str(path))
    code, _, err = run(capsys, "dual", str(path))
    assert code == EXIT_USAGE
    assert "degree" in err


def test_solve_edgeless_file(tmp_path, capsys):
    path = tmp_path / "empty.hg"
    path.write_text("p hg 4 0\n")
    code, payload, _ = run_json(capsys, "solve", str(path))
    assert code == EXIT_OK
    assert payload["tau"] == 0 and payload["witness"] == []
