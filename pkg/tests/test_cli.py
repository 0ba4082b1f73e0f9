import json

import pytest

from figure_data import H_3_9
from hypersample import generators as gen
from hypersample.cli import main
from hypersample.hypergraph import read_hypergraph, write_hypergraph


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_complete(capsys, tmp_path):
    path = tmp_path / "k4.hg"
    code, _, _ = run(capsys, "gen", "complete", "--n", 4, "--k", 2, "--out", path)
    assert code == 0
    assert read_hypergraph(path).m == 6


def test_gen_infeasible_is_exit_2(capsys):
    code, _, err = run(capsys, "gen", "regular", "--n", 10, "--k", 3, "--d", 2)
    assert code == 2 and "error" in err


def test_missing_file_is_exit_1(capsys, tmp_path):
    code, _, _ = run(capsys, "stats", tmp_path / "nope.hg")
    assert code == 1


def test_stats(capsys, tmp_path):
    path = tmp_path / "h.hg"
    write_hypergraph(gen.random_regular_uniform(12, 3, 2, seed=1), path)
    code, out, _ = run(capsys, "stats", path)
    st = json.loads(out)
    assert code == 0 and st["m"] == 8 and st["max_degree"] == 2 and st["r"] == pytest.approx(2 / 3)


def test_curves_h_reproduces_figure(capsys):
    code, out, _ = run(capsys, "curves", "--k", 3, "--r", 9, "--which", "h", "--p-grid", "0:0.6:13")
    lines = out.strip().split("\n")
    assert code == 0 and lines[0] == "x,h"
    got = [float(line.split(",")[1]) for line in lines[1:]]
    assert got == pytest.approx(H_3_9, abs=1e-6)


def test_curves_bad_column(capsys):
    code, _, _ = run(capsys, "curves", "--k", 3, "--r", 9, "--which", "q")
    assert code == 2


def test_typical_exact_equals_oracle(capsys, tmp_path):
    path = tmp_path / "h.hg"
    write_hypergraph(gen.random_uniform(14, 3, 10, seed=2), path)
    code, out, _ = run(capsys, "typical", path, "--p", 0.5, "--stat", "tv_to_hyp", "--threshold", 0.3, "--exact")
    rep = json.loads(out)
    code2, out2, _ = run(capsys, "oracle", path, "--p", 0.5, "--mode", "typical", "--stat", "tv_to_hyp", "--threshold", 0.3)
    orc = json.loads(out2)
    assert code == code2 == 0
    assert rep["exceed"] == orc["exceed"] and rep["trials"] == orc["subsets"]
    assert orc["mean_confinement"] == orc["expected_confinement"]


def test_typical_mc_deterministic_across_threads(capsys, tmp_path):
    path = tmp_path / "h.hg"
    write_hypergraph(gen.random_regular_uniform(60, 3, 2, seed=2), path)
    outs = []
    for threads in (1, 4):
        code, out, _ = run(capsys, "typical", path, "--p", 0.5, "--trials", 200, "--seed", 7, "--threads", threads)
        assert code == 0
        outs.append(out)
    assert outs[0] == outs[1]
    rep = json.loads(outs[0])
    assert rep["seed"] == 7 and len(rep["instance_digest"]) == 64


def test_adversary(capsys, tmp_path):
    path = tmp_path / "h.hg"
    write_hypergraph(gen.random_regular_uniform(30, 3, 2, seed=2), path)
    dump = tmp_path / "trials.csv"
    code, out, _ = run(capsys, "adversary", path, "--delta", 0.5, "--budget", 8, "--seed", 3, "--dump-trials", dump)
    res = json.loads(out)
    assert code == 0
    assert res["confinement_float"] >= res["floors"]["uniform"]
    assert dump.read_text().startswith("gamma,B,A,density,confined_frac")


def test_rewire(capsys, tmp_path):
    src, dst = tmp_path / "a.hg", tmp_path / "b.hg"
    write_hypergraph(gen.random_irregular(30, 20, 5, seed=1), src)
    code, out, _ = run(capsys, "rewire", src, "--max-degree", 4, "--out", dst)
    summ = json.loads(out)
    assert code == 0 and read_hypergraph(dst).max_degree <= 4 and summ["mode"] == "vertex"
    code, _, _ = run(capsys, "rewire", src, "--max-degree", 0, "--out", dst)
    assert code == 2


def test_oracle_worst_and_duality(capsys, tmp_path):
    path = tmp_path / "h.hg"
    write_hypergraph(gen.complete_uniform(6, 2), path)
    code, out, _ = run(capsys, "oracle", path, "--p", 0.5, "--mode", "worst")
    res = json.loads(out)
    assert code == 0 and res["confinement"] == "1/5" and res["argmax"] == [0, 1, 2]
    code, out, _ = run(capsys, "oracle", path, "--mode", "duality")
    assert code == 0 and json.loads(out)["holds"]
