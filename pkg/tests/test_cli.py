import json

import pytest
from click.testing import CliRunner

from grassharm.cli import main


@pytest.fixture()
def runner():
    return CliRunner()


def test_partitions_count(runner):
    res = runner.invoke(main, ["partitions", "count", "--k", "2",
                               "--max-weight", "8"])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert lines[0].startswith("# ")
    assert lines[1] == "weight,class_count,cumulative_count"
    assert lines[-1] == "8,3,9"


def test_partitions_density_and_usage_error(runner):
    res = runner.invoke(main, ["partitions", "density", "--k", "2",
                               "--max-weight", "12",
                               "--predicate", "part2_le:2"])
    assert res.exit_code == 0
    assert res.output.strip().splitlines()[-1] == "12,3,4"
    bad = runner.invoke(main, ["partitions", "density", "--k", "2",
                               "--max-weight", "4", "--predicate", "bogus"])
    assert bad.exit_code == 2


def test_grassmann_sample_provenance(runner, tmp_path):
    out = tmp_path / "s.json"
    res = runner.invoke(main, ["grassmann", "sample", "--n", "4", "--k", "2",
                               "--count", "10", "--seed", "3",
                               "-o", str(out)])
    assert res.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["config"]["parameters"]["seed"] == 3
    assert len(doc["payload"]["squared_cosines"]) == 10


def test_grassmann_sample_requires_seed(runner):
    res = runner.invoke(main, ["grassmann", "sample", "--n", "4", "--k", "2"])
    assert res.exit_code == 2


def test_grassmann_flow(runner, tmp_path):
    out = tmp_path / "f.json"
    res = runner.invoke(main, ["grassmann", "flow", "--n", "4", "--k", "2",
                               "--eps", "0.5", "--seed", "1", "-o", str(out)])
    assert res.exit_code == 0
    doc = json.loads(out.read_text())
    assert all(s["jacobian_factor"] > 0 for s in doc["payload"]["samples"])


def test_zonal_spectrum_classify_pipeline(runner, tmp_path):
    fam = tmp_path / "fam.json"
    res = runner.invoke(main, ["zonal", "build", "--n", "4", "--k", "1",
                               "--max-weight", "6", "--method", "quadrature",
                               "-o", str(fam)])
    assert res.exit_code == 0
    table = tmp_path / "table.json"
    args = ["transform", "spectrum", "--op", "cos", "--n", "4", "--k", "1",
            "--max-weight", "6", "--samples", "50000", "--seed", "7",
            "--family", str(fam), "-o", str(table)]
    assert runner.invoke(main, args).exit_code == 0
    doc = json.loads(table.read_text())
    assert doc["inputs_digest"]  # the family file is part of the provenance
    res = runner.invoke(main, ["transform", "classify",
                               "--table", str(table)])
    assert res.exit_code == 0
    assert "surviving density: 1" in res.output


def test_spectrum_reproducible(runner, tmp_path):
    fam = tmp_path / "fam.json"
    runner.invoke(main, ["zonal", "build", "--n", "4", "--k", "1",
                         "--max-weight", "4", "--method", "quadrature",
                         "-o", str(fam)])
    outs = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        res = runner.invoke(main, ["transform", "spectrum", "--op", "cos",
                                   "--n", "4", "--k", "1",
                                   "--max-weight", "4", "--samples", "2000",
                                   "--seed", "11", "--family", str(fam),
                                   "-o", str(out)])
        assert res.exit_code == 0
        outs.append(out.read_bytes())
    assert outs[0] == outs[1]


def test_classify_inconclusive_exit_code(runner, tmp_path):
    table = {
        "n": 4, "k": 1, "operator": "cos", "max_weight": 2, "seed": 0,
        "estimates": [
            {"lam": [0], "mean": 1.0, "stderr": 0.01, "samples": 1,
             "operator": "cos"},
            {"lam": [2], "mean": 0.04, "stderr": 0.01, "samples": 1,
             "operator": "cos"},
        ],
    }
    path = tmp_path / "t.json"
    path.write_text(json.dumps(table))
    res = runner.invoke(main, ["transform", "classify", "--table", str(path)])
    assert res.exit_code == 3


def test_pde_kernel_dims(runner, tmp_path):
    op = tmp_path / "op.json"
    op.write_text(json.dumps(
        {"k": 1, "terms": [{"dx": [1], "x": [1], "c": "1"},
                           {"dx": [0], "x": [0], "c": "-2"}]}))
    csv_out = tmp_path / "ker.csv"
    rep_out = tmp_path / "ker.json"
    res = runner.invoke(main, ["pde", "kernel-dims", "--op", str(op),
                               "--m-max", "10", "--mu-check",
                               "--density-bound", "-o", str(csv_out),
                               "--report", str(rep_out)])
    assert res.exit_code == 0
    rows = csv_out.read_text().strip().splitlines()
    assert rows[1] == "m,dim_P,dim_ker"
    # x d/dx - 2 kills exactly the span of x^2 once m >= 2
    assert rows[2] == "0,1,0" and rows[-1] == "10,11,1"
    report = json.loads(rep_out.read_text())
    assert not report["payload"]["growth"]["violates"]
    assert report["payload"]["density_bound"]["N"] == 2


def test_pde_malformed_operator(runner, tmp_path):
    op = tmp_path / "bad.json"
    op.write_text(json.dumps({"terms": "nope"}))
    res = runner.invoke(main, ["pde", "kernel-dims", "--op", str(op),
                               "--m-max", "4"])
    assert res.exit_code == 2


def test_det_commands(runner):
    res = runner.invoke(main, ["det", "factorial", "--k", "3", "--n", "2",
                               "--verify"])
    assert res.exit_code == 0
    assert "-1/217728000" in res.output
    res = runner.invoke(main, ["det", "cauchy", "--size", "3", "--seed", "5",
                               "--verify"])
    assert res.exit_code == 0
    assert "verified" in res.output


def test_accept_exact_suite(runner):
    res = runner.invoke(main, ["accept", "--suite", "exact"])
    assert res.exit_code == 0
    lines = [l for l in res.output.splitlines() if l.startswith("PASS")]
    assert len(lines) == 6
