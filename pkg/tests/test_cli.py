import json

import pytest

from gengraph.cli import SweepConfig, main, rows_to_csv, run_sweep


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_graph_dot(capsys):
    code, out, _ = run(capsys, "graph", "4", "--delta", "--format", "dot")
    assert code == 0
    assert out.count("[label=") == 6 and out.count(" -- ") == 12


def test_graph_json(capsys):
    code, out, _ = run(capsys, "graph", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 6 and len(data["edges"]) == 9


def test_graph_rejects_small_n(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["graph", "1"])
    assert exc.value.code == 2
    assert "n must be ≥ 2" in capsys.readouterr().err


def test_spectrum_45(capsys):
    code, out, _ = run(capsys, "spectrum", "45", "--matrix", "adjacency")
    assert code == 0
    for entry in ("  3: 8", "  -6: 4", "  -12: 2"):
        assert entry in out.splitlines()
    assert "verified=true" in out


def test_spectrum_6_laplacian(capsys):
    code, out, _ = run(capsys, "spectrum", "6", "--matrix", "laplacian")
    assert code == 0
    assert "spectrum: {0:5, 3:2, 5:2, 6:2, 8:1}" in out and "verified=true" in out


def test_spectrum_8_integral_json(capsys):
    code, out, _ = run(capsys, "spectrum", "8", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["integral"] and data["verified"]
    assert all(e["b"] == 0 for e in data["entries"])


def test_indices_table(capsys):
    code, out, _ = run(capsys, "indices", "3")
    rows = {line.split()[0]: line.split()[1:] for line in out.splitlines()[1:]}
    assert code == 0
    assert rows["Wiener"] == ["11", "11", "yes"]
    assert rows["Gutman"] == ["162", "138", "NO"]
    code, out, _ = run(capsys, "indices", "4")
    assert "SchultzMTI" in out and out.split("SchultzMTI")[1].split()[:3] == ["144", "144", "yes"]


def test_invariants_json(capsys):
    code, out, _ = run(capsys, "invariants", "7", "--format", "json")
    data = {r["name"]: r for r in json.loads(out)}
    assert code == 0 and data["clique"]["closed_form"] == 8 and data["domination"]["agrees"]


def test_verify_gen(capsys):
    code, out, _ = run(capsys, "verify", "--from", "2", "--to", "20", "--checks", "gen")
    assert code == 0 and "gen: 19 pass, 0 fail" in out


def test_verify_indices_flags_errata(capsys, tmp_path):
    target = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "verify", "--from", "2", "--to", "12", "--checks", "indices", "-o", str(target))
    assert code == 0
    text = target.read_text()
    assert text.startswith("# schema=1\n")
    assert "3,indices,Gutman/general,errata,162 vs 138" in text
    assert "4,indices,SchultzMTI/power_of_two,errata,36 vs 144" in text
    assert ",fail," not in text


def test_verify_bad_range(capsys):
    code, _, err = run(capsys, "verify", "--from", "9", "--to", "3")
    assert code == 2 and "n_min" in err


def test_verify_unknown_check():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--checks", "nope"])
    assert exc.value.code == 2


def test_sweep_deterministic_across_workers():
    base = SweepConfig(2, 14, ("graph", "kronecker", "indices"))
    serial = rows_to_csv(run_sweep(base))
    parallel = rows_to_csv(run_sweep(SweepConfig(2, 14, ("graph", "kronecker", "indices"), workers=3)))
    assert serial == parallel


def test_output_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["graph", "6", "--format", "json", "-o", str(a)])
    main(["graph", "6", "--format", "json", "-o", str(b)])
    assert a.read_bytes() == b.read_bytes()
    main(["graph", "6", "--format", "json", "--meta", "-o", str(b)])
    assert "meta" in json.loads(b.read_text())
