"""Command-line behavior: exit codes, artifacts, determinism, reports."""

import json
from itertools import combinations

from bergesat.cli import main
from bergesat.hypercore import Hypergraph3, read_h3, write_h3


def run(*argv):
    return main(list(argv))


def test_build_then_verify_round_trip(tmp_path):
    out = tmp_path / "w.h3"
    code = run("build", "--n", "45", "--ell", "5", "--m", "63",
               "--seed", "1", "-o", str(out), "--quiet")
    assert code == 0
    assert out.exists()
    assert run("verify", str(out), "--ell", "5", "--quiet") == 0


def test_build_reports_provable_infeasibility(capsys):
    assert run("build", "--n", "45", "--ell", "5", "--m", "88") == 6
    assert "infeasible_by_theorem" in capsys.readouterr().out
    assert run("build", "--n", "45", "--ell", "5", "--m", "10") == 6
    assert run("build", "--n", "45", "--ell", "5", "--m", "500") == 7


def test_build_summary_echoes_the_seed(capsys, tmp_path):
    out = tmp_path / "w.h3"
    run("build", "--n", "45", "--ell", "5", "--m", "59",
        "--seed", "77", "-o", str(out))
    assert "seed=77" in capsys.readouterr().out


def test_identical_command_lines_write_identical_artifacts(tmp_path):
    a, b = tmp_path / "a.h3", tmp_path / "b.h3"
    for path in (a, b):
        assert run("build", "--n", "60", "--ell", "5", "--m", "85",
                   "--seed", "4", "-o", str(path), "--quiet") == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_separates_unsaturated_from_not_free(tmp_path):
    near = tmp_path / "near.h3"
    edges = [e for e in combinations(range(5), 3) if e != (2, 3, 4)]
    near.write_text(write_h3(Hypergraph3(5, tuple(edges))))
    assert run("verify", str(near), "--ell", "5", "--quiet") == 2
    full = tmp_path / "full.h3"
    full.write_text(write_h3(Hypergraph3(5, tuple(combinations(range(5), 3)))))
    assert run("verify", str(full), "--ell", "4", "--quiet") == 3


def test_verify_report_carries_the_verdict(tmp_path):
    g = tmp_path / "g.h3"
    rep = tmp_path / "rep.json"
    run("gadget", "--name", "lantern", "--ell", "5", "-o", str(g), "--quiet")
    assert run("verify", str(g), "--ell", "5",
               "--report", str(rep), "--quiet") == 0
    obj = json.loads(rep.read_text())
    assert obj["is_saturated"] is True and obj["ell"] == 5


def test_missing_file_is_a_usage_error(tmp_path):
    assert run("verify", str(tmp_path / "absent.h3"), "--ell", "5") == 4


def test_bad_arguments_are_usage_errors():
    assert run("build", "--n", "45") == 4
    assert run("nonsense") == 4


def test_sampler_budget_exit_code(tmp_path):
    # this overlay remainder is provably unrealizable, so the search
    # exhausts its space and reports through the budget channel
    assert run("sample-config", "--n", "22", "--ell", "5", "--k", "1",
               "--quiet") == 5


def test_sample_config_emits_stats_on_stderr(capsys, tmp_path):
    out = tmp_path / "s.h3"
    assert run("sample-config", "--n", "30", "--ell", "5", "--seed", "3",
               "-o", str(out), "--quiet") == 0
    stats = json.loads(capsys.readouterr().err)
    assert stats["tries"] >= 1
    g = read_h3(out.read_text())
    assert g.vertex_count == 30


def test_gadget_json_format(tmp_path):
    out = tmp_path / "g.json"
    assert run("gadget", "--name", "gadget-q", "-o", str(out),
               "--format", "json", "--quiet") == 0
    obj = json.loads(out.read_text())
    assert obj["n"] == 20 and len(obj["edges"]) == 29


def test_spectrum_theory_names_each_range(capsys):
    assert run("spectrum", "--theory", "--n", "45", "--ell", "5",
               "--quiet") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["sat"] == 57 and obj["ex"] == 90
    rules = {r["rule"] for r in obj["ranges"]}
    assert any("lower-range" in r for r in rules)
    statuses = [r["status"] for r in obj["ranges"]]
    assert "infeasible" in statuses and "feasible" in statuses


def test_spectrum_exhaustive_small(capsys):
    assert run("spectrum", "--exhaustive", "--n", "5", "--ell", "5",
               "--quiet") == 0
    obj = json.loads(capsys.readouterr().out)
    assert obj["realizable"] == [10]


def test_classify_links_table(capsys):
    assert run("classify-links", "--enumerate", "--quiet") == 0
    out = capsys.readouterr().out
    assert "K2+K1,3" in out and "strata sizes" in out


def test_classify_links_per_vertex(tmp_path, capsys):
    # only vertices with 5+ neighbors are reported: the six lantern
    # spine vertices, each seeing its mate pair plus a group triangle
    g = tmp_path / "l5.h3"
    assert run("gadget", "--name", "lantern", "--ell", "5",
               "-o", str(g), "--quiet") == 0
    assert run("classify-links", str(g), "--quiet") == 0
    out = capsys.readouterr().out
    assert out.count("K2+K3") == 6


def test_no_partial_artifact_after_infeasible_build(tmp_path):
    out = tmp_path / "none.h3"
    assert run("build", "--n", "45", "--ell", "5", "--m", "88",
               "-o", str(out), "--quiet") == 6
    assert not out.exists()
