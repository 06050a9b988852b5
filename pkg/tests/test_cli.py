"""End-to-end tests for the command-line interface."""

import json

from interval6 import cli
from interval6.bigraph import from_json, is_simple
from interval6.checker import (
    check_interval,
    check_proper_path_factor,
    coloring_from_dict,
    factor_from_dict,
)


def run(capsys, *args):
    try:
        code = cli.main(list(args))
    except SystemExit as exc:
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def gen_file(capsys, tmp_path, family, *extra):
    path = tmp_path / f"{family}.json"
    code, _, _ = run(capsys, "gen", "--family", family, "--out", str(path), *extra)
    assert code == 0
    return path


def test_gen_subset6_with_factor(capsys, tmp_path):
    gpath = tmp_path / "g.json"
    fpath = tmp_path / "f.json"
    code, _, _ = run(capsys, "gen", "--family", "subset6",
                     "--out", str(gpath), "--factor-out", str(fpath))
    assert code == 0
    g = from_json(gpath.read_text())
    assert (g.x_count, g.y_count, g.edge_count) == (20, 15, 60)
    factor = factor_from_dict(json.loads(fpath.read_text()))
    assert check_proper_path_factor(g, factor)


def test_gen_random_is_deterministic(capsys, tmp_path):
    a = gen_file(capsys, tmp_path, "random", "--k", "3", "--seed", "7", "--simple")
    text = a.read_text()
    b = tmp_path / "again.json"
    run(capsys, "gen", "--family", "random", "--k", "3", "--seed", "7", "--out", str(b))
    assert b.read_text() == text
    run(capsys, "gen", "--family", "random", "--k", "3", "--seed", "8", "--out", str(b))
    assert b.read_text() != text
    code, _, err = run(capsys, "gen", "--family", "random")
    assert code == 3 and "--k" in err


def test_gen_claw_is_multigraph(capsys, tmp_path):
    path = gen_file(capsys, tmp_path, "claw-triple")
    g = from_json(path.read_text())
    assert (g.x_count, g.y_count, g.edge_count) == (4, 3, 12)
    assert not is_simple(g)


def test_gen_factor_out_needs_canonical_factor(capsys, tmp_path):
    code, _, err = run(capsys, "gen", "--family", "eight-triples",
                       "--out", str(tmp_path / "g.json"),
                       "--factor-out", str(tmp_path / "f.json"))
    assert code == 3 and "canonical factor" in err


def test_factor_search_writes_verified_factor(capsys, tmp_path):
    gpath = gen_file(capsys, tmp_path, "subset6")
    fpath = tmp_path / "found.json"
    code, out, _ = run(capsys, "factor", "--in", str(gpath), "--out", str(fpath))
    assert code == 0
    report = json.loads(out)
    assert report["status"] == "found" and report["method"] == "search"
    g = from_json(gpath.read_text())
    factor = factor_from_dict(json.loads(fpath.read_text()))
    assert check_proper_path_factor(g, factor)
    assert report["lengths"] == sorted(p.length for p in factor.paths)


def test_factor_oracle_definitive_none(capsys, tmp_path):
    gpath = gen_file(capsys, tmp_path, "claw-triple")
    code, out, _ = run(capsys, "factor", "--in", str(gpath), "--method", "oracle")
    assert code == 1
    assert json.loads(out)["status"] == "none"


def test_factor_via24_depends_on_cover(capsys, tmp_path):
    gpath = gen_file(capsys, tmp_path, "subset6")
    code, out, _ = run(capsys, "factor", "--in", str(gpath), "--method", "via24")
    assert code == 2
    assert json.loads(out)["reason"] == "no-y-cover"
    # k=1 forces the complete graph, which peels cleanly
    gpath = gen_file(capsys, tmp_path, "random", "--k", "1", "--seed", "0")
    code, out, _ = run(capsys, "factor", "--in", str(gpath), "--method", "via24")
    assert code == 0
    assert json.loads(out)["lengths"] == [6]


def test_factor_transversal_paths(capsys, tmp_path):
    gpath = gen_file(capsys, tmp_path, "random", "--k", "1", "--seed", "0")
    code, out, _ = run(capsys, "factor", "--in", str(gpath), "--method", "transversal")
    assert code == 0 and json.loads(out)["status"] == "found"
    gpath = gen_file(capsys, tmp_path, "eight-triples")
    code, out, _ = run(capsys, "factor", "--in", str(gpath), "--method", "transversal")
    assert code == 2
    assert json.loads(out)["reason"] == "no-full-3regular-subgraph"


def test_factor_rejects_bad_input(capsys, tmp_path):
    code, _, err = run(capsys, "factor", "--in", str(tmp_path / "missing.json"))
    assert code == 3 and "cannot read graph" in err
    bad = tmp_path / "bad.json"
    bad.write_text('{"x_count": 2, "y_count": 1, "edges": [[0, 0], [1, 0]]}')
    code, _, err = run(capsys, "factor", "--in", str(bad))
    assert code == 3 and "biregular" in err


def test_color_pipeline(capsys, tmp_path):
    gpath = tmp_path / "g.json"
    fpath = tmp_path / "f.json"
    run(capsys, "gen", "--family", "subset6", "--out", str(gpath), "--factor-out", str(fpath))
    cpath = tmp_path / "c.json"
    dpath = tmp_path / "g.dot"
    code, out, _ = run(capsys, "color", "--in", str(gpath), "--factor", str(fpath),
                       "--out", str(cpath), "--dot", str(dpath), "--summary")
    assert code == 0
    g = from_json(gpath.read_text())
    coloring = coloring_from_dict(json.loads(cpath.read_text()))
    assert check_interval(g, coloring)
    assert 'label="1"' in dpath.read_text()
    lines = out.strip().splitlines()
    assert len(lines) == g.x_count + g.y_count
    assert lines[0].startswith("x0: ")


def test_color_rejects_wrong_factor(capsys, tmp_path):
    gpath = gen_file(capsys, tmp_path, "subset6")
    other = tmp_path / "other.json"
    ofac = tmp_path / "otherfac.json"
    run(capsys, "gen", "--family", "two-eight-triples", "--out", str(other),
        "--factor-out", str(ofac))
    code, _, err = run(capsys, "color", "--in", str(gpath), "--factor", str(ofac))
    assert code == 3 and "factor rejected" in err


def test_verify_accepts_and_rejects(capsys, tmp_path):
    gpath = tmp_path / "g.json"
    fpath = tmp_path / "f.json"
    run(capsys, "gen", "--family", "subset6", "--out", str(gpath), "--factor-out", str(fpath))
    cpath = tmp_path / "c.json"
    run(capsys, "color", "--in", str(gpath), "--factor", str(fpath), "--out", str(cpath))
    code, out, _ = run(capsys, "verify", "--in", str(gpath),
                       "--factor", str(fpath), "--coloring", str(cpath))
    assert code == 0
    assert "factor: ok" in out and "coloring: ok" in out

    broken = json.loads(cpath.read_text())
    broken["colors"] = [1] * len(broken["colors"])
    cpath.write_text(json.dumps(broken))
    code, out, _ = run(capsys, "verify", "--in", str(gpath), "--coloring", str(cpath))
    assert code == 1 and "coloring: FAIL" in out

    code, _, err = run(capsys, "verify", "--in", str(gpath))
    assert code == 3 and "nothing to verify" in err


def test_verify_cert_and_oracle(capsys, tmp_path):
    gpath = gen_file(capsys, tmp_path, "random", "--k", "1", "--seed", "0")
    cert = tmp_path / "cert.json"
    cert.write_text(json.dumps({"edges": list(range(3, 12))}))
    code, out, _ = run(capsys, "verify", "--in", str(gpath), "--cert", str(cert))
    assert code == 0 and "cert: ok" in out
    cert.write_text(json.dumps({"edges": list(range(4, 12))}))
    code, out, _ = run(capsys, "verify", "--in", str(gpath), "--cert", str(cert))
    assert code == 1 and "cert: FAIL" in out

    code, out, _ = run(capsys, "verify", "--in", str(gpath), "--oracle")
    assert code == 0
    assert "oracle path factor: found" in out
    gpath = gen_file(capsys, tmp_path, "claw-triple")
    code, out, _ = run(capsys, "verify", "--in", str(gpath), "--oracle")
    assert code == 1
    assert "oracle path factor: none (definitive)" in out
    # no factor, yet colorable: the factor route is sufficient, not necessary
    assert "oracle interval 6-coloring: found" in out


def test_hunt_small_run(capsys, tmp_path):
    code, out, _ = run(capsys, "hunt", "--k", "1", "--trials", "5", "--seed", "3",
                       "--archive", str(tmp_path / "hits"))
    assert code == 0
    report = json.loads(out)
    assert report["tallies"] == {"factor": 5, "none": 0, "unknown": 0}
    assert report["counterexample_seeds"] == []
    assert not (tmp_path / "hits").exists()


def test_hunt_jobs_are_bit_identical(capsys, tmp_path):
    args = ["hunt", "--k", "2", "--trials", "40", "--seed", "11",
            "--archive", str(tmp_path / "hits")]
    code1, out1, _ = run(capsys, *args)
    code8, out8, _ = run(capsys, *args, "--jobs", "8")
    assert code1 == code8 == 0
    assert out1 == out8
    assert json.loads(out1)["tallies"]["factor"] == 40


def test_hunt_bounded_out_reports_unknown(capsys, tmp_path):
    code, out, _ = run(capsys, "hunt", "--k", "2", "--trials", "6", "--seed", "0",
                       "--max-nodes", "10", "--archive", str(tmp_path / "hits"))
    assert code == 0
    assert json.loads(out)["tallies"] == {"factor": 0, "none": 0, "unknown": 6}


def test_hunt_archives_counterexamples(capsys, tmp_path, monkeypatch):
    # no real counterexample is known, so fake one trial result to pin
    # the archive-and-flag plumbing
    real = cli._hunt_trial

    def fake(task):
        k, seed, max_nodes = task
        if seed == 21:
            return "none", {"x_count": 4, "y_count": 3,
                            "edges": [[i, j] for i in range(4) for j in range(3)]}
        return real(task)

    monkeypatch.setattr(cli, "_hunt_trial", fake)
    archive = tmp_path / "hits"
    code, out, err = run(capsys, "hunt", "--k", "2", "--trials", "3", "--seed", "20",
                         "--archive", str(archive))
    assert code == 1
    report = json.loads(out)
    assert report["tallies"]["none"] == 1
    assert report["counterexample_seeds"] == [21]
    assert "COUNTEREXAMPLE" in err
    saved = archive / "counterexample_k2_seed21.json"
    assert from_json(saved.read_text()).edge_count == 12


def test_export_plain_and_colored(capsys, tmp_path):
    gpath = tmp_path / "g.json"
    fpath = tmp_path / "f.json"
    run(capsys, "gen", "--family", "subset6", "--out", str(gpath), "--factor-out", str(fpath))
    code, out, _ = run(capsys, "export", "--in", str(gpath))
    assert code == 0
    assert out.startswith("graph G {") and "x0 -- y0;" in out
    cpath = tmp_path / "c.json"
    run(capsys, "color", "--in", str(gpath), "--factor", str(fpath), "--out", str(cpath))
    dpath = tmp_path / "g.dot"
    code, _, _ = run(capsys, "export", "--in", str(gpath), "--coloring", str(cpath),
                     "--dot", str(dpath))
    assert code == 0 and "#e41a1c" in dpath.read_text()
    bad = tmp_path / "short.json"
    bad.write_text(json.dumps({"palette_size": 6, "colors": [1, 2, 3]}))
    code, _, err = run(capsys, "export", "--in", str(gpath), "--coloring", str(bad))
    assert code == 3 and "coloring covers" in err
