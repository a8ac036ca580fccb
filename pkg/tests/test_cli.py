import json

import pytest

from rainbow_turan import cge
from rainbow_turan import constructions as C
from rainbow_turan.census import run_census
from rainbow_turan.cli import main
from rainbow_turan.patterns import path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_roundtrip(tmp_path, capsys):
    out = tmp_path / "p.cge"
    code, stdout, _ = run(capsys, "construct", "path-lower", "--k", "5", "--n", "40", "--out", str(out),
                          "--emit-dot", str(tmp_path / "p.dot"))
    assert code == 0
    summary = json.loads(stdout)
    assert summary["provenance"]["family"] == "PathLower"
    assert summary["manifest"]["subcommand"] == "construct"
    text = out.read_text()
    header = cge.read_header(text)
    assert header["provenance"]["params"] == {"k": 5, "n_target": 40}
    g = cge.loads(text)
    assert g == C.path_lower(5, n_target=40)
    assert cge.dumps(g, header) == text

    code, stdout, _ = run(capsys, "count", "--pattern", "P5", str(out))
    d = json.loads(stdout)
    mem = run_census(C.path_lower(5, n_target=40), path(5)).to_dict()
    assert d["copy_count"] == mem["copy_count"] and d["rainbow_found"] is False
    assert (tmp_path / "p.dot").read_text().startswith("graph")


def test_construct_to_stdout(capsys):
    code, stdout, _ = run(capsys, "construct", "p4-extremal", "--n", "9")
    assert code == 0 and cge.loads(stdout).m == 12


def test_p4_extremal_counts(tmp_path, capsys):
    f = tmp_path / "p4.cge"
    run(capsys, "construct", "p4-extremal", "--n", "9", "--out", str(f))
    _, stdout, _ = run(capsys, "count", "--pattern", "P4", str(f))
    assert json.loads(stdout)["copy_count"] == 24
    _, stdout, _ = run(capsys, "rainbow-check", "--pattern", "P4", str(f))
    d = json.loads(stdout)
    assert d["rainbow_found"] is False and d["proper"] is True


def test_k4_count(tmp_path, capsys):
    f = tmp_path / "k4.cge"
    f.write_text("4 6\n0 1 -\n0 2 -\n0 3 -\n1 2 -\n1 3 -\n2 3 -\n")
    _, stdout, _ = run(capsys, "count", "--pattern", "P4", "--no-rainbow", str(f))
    assert json.loads(stdout)["copy_count"] == 12


def test_identical_runs_identical_output(tmp_path, capsys):
    f = tmp_path / "g.cge"
    run(capsys, "construct", "odd-cycle-lower", "--k", "2", "--b", "2", "--out", str(f))
    a = run(capsys, "count", "--pattern", "C5", str(f))
    b = run(capsys, "count", "--pattern", "C5", str(f))
    assert a == b


@pytest.mark.parametrize("argv", [
    ("construct", "clique-lower", "--r", "3", "--n", "30"),
    ("construct", "path-lower", "--n", "30"),
    ("count", "--pattern", "Q7", "missing.cge"),
    ("oracle", "--n", "9", "--h", "P4", "--f", "P4"),
])
def test_invalid_input_exit_2(argv, capsys):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error")


def test_bad_cge_exit_2(tmp_path, capsys):
    f = tmp_path / "bad.cge"
    f.write_text("3 2\n0 1 0\n")
    assert run(capsys, "count", "--pattern", "P2", str(f))[0] == 2


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["construct", "no-such-family"])
    assert info.value.code == 2


def test_budget_exit_3(capsys):
    code, stdout, _ = run(capsys, "oracle", "--n", "6", "--h", "P4", "--f", "P4", "--max-graphs", "1")
    assert code == 3 and json.loads(stdout)["binding_cap"] == "max_graphs"


def test_count_budget_exit_3(tmp_path, capsys):
    f = tmp_path / "k.cge"
    run(capsys, "construct", "clique-lower", "--r", "4", "--b", "3", "--out", str(f))
    assert run(capsys, "count", "--pattern", "K4", "--max-nodes", "5", str(f))[0] == 3


def test_oracle_json(capsys):
    code, stdout, _ = run(capsys, "oracle", "--n", "4", "--h", "M2", "--f", "M2")
    d = json.loads(stdout)
    assert code == 0 and d["value"] == 3 and d["status"] == "exact"
    assert cge.loads(d["witness_cge"]).m == 6


def test_lemma_random_seeded(capsys):
    a = run(capsys, "lemma", "--random-k", "3", "--seed", "11")
    b = run(capsys, "lemma", "--random-k", "3", "--seed", "11")
    assert a == b and json.loads(a[1])["found"] is True


def test_lemma_not_found_is_reported(tmp_path, capsys):
    f = tmp_path / "g.cge"
    f.write_text("3 2\n0 2 0\n1 2 1\n")
    code, stdout, _ = run(capsys, "lemma", str(f), "--anchors", "0,1", "--A", "0")
    d = json.loads(stdout)
    assert code == 0 and d["found"] is False and d["precondition"] is False


def test_characterize(tmp_path, capsys):
    f = tmp_path / "c5.cge"
    f.write_text("5 5\n0 1 -\n1 2 -\n2 3 -\n3 4 -\n0 4 -\n")
    _, stdout, _ = run(capsys, "characterize", str(f))
    assert json.loads(stdout)["colorable"] is False


def test_scaling_json(capsys):
    code, stdout, _ = run(capsys, "scaling", "odd-cycle-lower", "--k", "2", "--n", "10,15,20", "--json")
    d = json.loads(stdout)
    assert code == 0 and [r["count"] for r in d["rows"]] == [8, 27, 64]
    assert d["slope"] == pytest.approx(3.0)


def test_scaling_table(capsys):
    code, stdout, _ = run(capsys, "scaling", "odd-cycle-lower", "--k", "2", "--n", "10,15,20")
    assert code == 0 and "slope" in stdout.splitlines()[-1]


def test_invariant_failure_exit_4(tmp_path, capsys, monkeypatch):
    from rainbow_turan import cli
    from rainbow_turan.census import CountInvariantError

    def broken(*a, **kw):
        raise CountInvariantError("embeddings not divisible")

    monkeypatch.setattr(cli, "run_census", broken)
    f = tmp_path / "g.cge"
    f.write_text("2 1\n0 1 0\n")
    code, _, err = run(capsys, "count", "--pattern", "P2", str(f))
    assert code == 4 and "invariant" in err
