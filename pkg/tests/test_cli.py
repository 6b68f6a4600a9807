import json

import pytest

from chirotrop import cli
from chirotrop.io import data_path, write_rays
from chirotrop.subsets import PlueckerVector


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", "--k", "3", "--n", "7")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 105
    assert lines[0] == "L={1} quad={2,3,4,5} terms=(123·145, 124·135, 125·134)"
    code, out, _ = run(capsys, "relations", "--k", "4", "--n", "8", "--count")
    assert out.strip() == "420"


def test_dressian_all_classes(tmp_path, capsys):
    out_dir = tmp_path / "fans"
    code, out, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--rays", str(data_path("rays_3_6.txt")),
                       "--all-classes", "--out", str(out_dir))
    assert code == 0
    files = sorted(p.name for p in out_dir.glob("*.json"))
    assert len(files) == 5 and "summary.json" in files
    assert "++++++++++++++++++++.json" in files
    summary = json.loads((out_dir / "summary.json").read_text())
    assert [r["f_vector"] for r in summary["fans"]] == [
        [15, 60, 90, 45], [15, 60, 89, 44], [14, 55, 82, 41], [16, 66, 98, 48]]
    assert all(r["pure"] and r["two_determined"] for r in summary["fans"])
    assert (out_dir / "summary.tsv").read_text() == out


def test_dressian_deterministic_across_threads(tmp_path, capsys, monkeypatch):
    outs = []
    for threads in ("1", "3"):
        monkeypatch.setenv("CHIROTROP_THREADS", threads)
        d = tmp_path / threads
        code, _, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--all-classes", "--out", str(d))
        assert code == 0
        outs.append({p.name: p.read_bytes() for p in sorted(d.iterdir())})
    assert outs[0] == outs[1]


def test_dressian_single_chirotope_forms(capsys):
    code, out, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--negative-triples", "456", "--json")
    assert code == 0
    doc = json.loads(out)
    assert doc["fans"][0]["f_vector"] == [14, 55, 82, 41]
    code, out, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--chirotope", "+" * 20)
    assert code == 0 and "(16,66,98,48)" in out


def test_dressian_chirotope_file(tmp_path, capsys):
    p = tmp_path / "chis.txt"
    p.write_text("# two\n" + "+" * 18 + "--\n" + "+" * 20 + "\n")
    code, out, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--chirotope-file", str(p))
    assert code == 0
    assert out.count("\n") == 3


def test_exit_code_format(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    p.write_text("3 6 1\n1 2 3\n")
    code, _, err = run(capsys, "dressian", "--rays", str(p), "--negative-triples", "456")
    assert code == cli.EXIT_FORMAT and "expected 20" in err
    code, _, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--chirotope", "+-x")
    assert code == cli.EXIT_FORMAT


def test_exit_code_ingestion(tmp_path, capsys):
    p = tmp_path / "bad.txt"
    write_rays(p, [-PlueckerVector.unit(3, 6, (1, 2, 3))])
    code, _, err = run(capsys, "dressian", "--rays", str(p), "--negative-triples", "456")
    assert code == cli.EXIT_INGESTION
    assert "L={1} quad={2,3,4,5}" in err
    code, _, _ = run(capsys, "dressian", "--k", "3", "--n", "6", "--negative-triples", "124")
    assert code == cli.EXIT_INGESTION


def test_exit_code_purity(tmp_path, capsys):
    from chirotrop.chirotope import Chirotope
    from chirotrop.dressian import compute_chirotropical_dressian
    from chirotrop.io import bundled_rays

    res = compute_chirotropical_dressian(bundled_rays(3, 6), Chirotope.positive(3, 6))
    p = tmp_path / "partial.txt"
    write_rays(p, [res.fan.rays[i] for i in res.fan.facets[0][:3]])
    code, _, err = run(capsys, "dressian", "--rays", str(p), "--chirotope", "+" * 20)
    assert code == cli.EXIT_PURITY and "purity" in err


def test_exit_code_verification(capsys):
    code, out, _ = run(capsys, "chirotope", "validate", "--n", "6", "--negative-triples", "124")
    assert code == cli.EXIT_VERIFICATION and "[FAIL]" in out


def test_verify_counterexample(capsys):
    code, out, _ = run(capsys, "verify", "counterexample-48")
    assert code == 0
    assert "dim 12 > 9: non-realizable cone confirmed" in out


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "fano", "--n", "7", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["details"]["facets_compatible_with_orbit"] == 210


def test_verify_fano_8(capsys):
    code, out, _ = run(capsys, "verify", "fano", "--n", "8")
    assert code == 0 and "240 Fano points, 0 compatible" in out


def test_verify_covering(capsys):
    code, out, _ = run(capsys, "verify", "covering", "--n", "6")
    assert code == 0 and "550/550" in out
    code, _, err = run(capsys, "verify", "covering", "--n", "7")
    assert code == cli.EXIT_FORMAT and "--extended" in err


def test_verify_two_determined(capsys):
    code, out, _ = run(capsys, "verify", "two-determined", "--n", "6")
    assert code == 0 and "4/4 fans are 2-determined" in out


def test_charts_verify(capsys):
    code, out, _ = run(capsys, "charts", "verify", "--samples", "20", "--seed", "7")
    assert code == 0 and "[PASS] charts" in out
    code2, out2, _ = run(capsys, "charts", "verify", "--samples", "20", "--seed", "7")
    assert out2 == out


def test_chirotope_orbit(tmp_path, capsys):
    p = tmp_path / "orbit.txt"
    code, out, _ = run(capsys, "chirotope", "orbit", "--n", "6", "--out", str(p))
    assert code == 0 and "372 members" in out
    assert len([ln for ln in p.read_text().splitlines() if not ln.startswith("#")]) == 372


def test_unwritable_output(tmp_path, capsys):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, err = run(capsys, "dressian", "--k", "3", "--n", "6", "--all-classes", "--out", str(blocker / "sub"))
    assert code == cli.EXIT_FORMAT and "not writable" in err


def test_bad_threads_env(capsys, monkeypatch):
    monkeypatch.setenv("CHIROTROP_THREADS", "many")
    code, _, err = run(capsys, "dressian", "--k", "3", "--n", "6", "--all-classes")
    assert code == cli.EXIT_FORMAT and "CHIROTROP_THREADS" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify"])
    assert exc.value.code == 2
