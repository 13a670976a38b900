"""Command line behavior: outputs, exit codes, file handling."""

import importlib.resources

from matroidkit.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info_u24(capsys):
    code, out, _ = run_cli(capsys, "info", "u24")
    assert code == 0
    assert "elements: 4" in out
    assert "rank: 2" in out
    assert "3-connected: yes" in out
    assert "circuits by size: 3:4" in out


def test_info_whirl3(capsys):
    code, out, _ = run_cli(capsys, "info", "whirl3")
    assert code == 0
    assert "elements: 6" in out and "rank: 3" in out and "3-connected: yes" in out


def test_info_small_convention_note(capsys):
    code, out, _ = run_cli(capsys, "info", "u12")
    assert code == 0 and "small-matroid convention" in out


def test_info_parse_error_exit2(tmp_path, capsys):
    bad = tmp_path / "bad.mat"
    bad.write_text("matroid x\nlinear gf2\ncol a 1\ncol b 1 0\nend\n")
    code, _, err = run_cli(capsys, "info", f"{bad}#x")
    assert code == 2
    assert "line 4" in err


def test_info_unknown_ref_exit2(capsys):
    code, _, err = run_cli(capsys, "info", "mysterious")
    assert code == 2 and "known" in err


def test_circuits_listing(capsys):
    code, out, _ = run_cli(capsys, "circuits", "u24")
    assert code == 0
    assert sorted(out.splitlines()) == ["a b c", "a b d", "a c d", "b c d"]


def test_minor_with_pin(capsys):
    code, out, _ = run_cli(capsys, "minor", "u25", "u24", "--pin", "a,b")
    assert code == 0
    assert "delete[" in out and "map:" in out


def test_minor_absent(capsys):
    code, out, _ = run_cli(capsys, "minor", "mk:4", "u24")
    assert code == 0 and "no minor" in out


def test_vnc_output(capsys):
    code, out, _ = run_cli(capsys, "vnc", "u25", "u12")
    assert code == 0
    assert "count: 0" in out


def test_webs_output(capsys):
    code, out, _ = run_cli(capsys, "webs", "prismgraph", "mk:4", "--kind", "prism")
    assert code == 0
    assert "total: 1" in out


def test_check_clean_manifest_exit0(tmp_path, capsys):
    manifest = tmp_path / "m.manifest"
    manifest.write_text("pair wheel:4 mk:4 T1.K1 L-MELO\n")
    out_path = tmp_path / "report.tsv"
    code, _, _ = run_cli(capsys, "check", str(manifest), "--out", str(out_path))
    assert code == 0
    content = out_path.read_text()
    assert "T1.K1\twheel:4/mk:4\tverified" in content


def test_check_violation_exit1(tmp_path, capsys):
    manifest = tmp_path / "m.manifest"
    manifest.write_text("pair u25 u12 !T1.K1\n")
    code, out, _ = run_cli(capsys, "check", str(manifest))
    assert code == 1
    assert "violated" in out


def test_check_only_filter(tmp_path, capsys):
    manifest = tmp_path / "m.manifest"
    manifest.write_text("pair wheel:4 mk:4 T1.K1 L-MELO L-W38\n")
    code, out, _ = run_cli(capsys, "check", str(manifest), "--only", "T1")
    assert code == 0
    records = [l for l in out.splitlines() if l and not l.startswith("#")]
    assert all(l.startswith("T1") for l in records)


def test_check_text_format(tmp_path, capsys):
    manifest = tmp_path / "m.manifest"
    manifest.write_text("pair wheel:4 mk:4 T1.K1\n")
    code, out, _ = run_cli(capsys, "check", str(manifest), "--format", "text")
    assert code == 0 and "[verified]".replace(" ", "") in out.replace(" ", "")


def test_rounded_decision_exit0(capsys):
    spec = importlib.resources.files("matroidkit.data") / "u24.class"
    import tempfile, os

    with tempfile.TemporaryDirectory() as td:
        small = os.path.join(td, "small.class")
        with open(small, "w") as fh:
            fh.write("class u24\nmember u24\nambient gf3\n"
                     "caps elements=6 rank=3 seconds=120\n")
        code, out, _ = run_cli(capsys, "rounded", small, "--k", "2")
    assert code == 0
    assert "decision: rounded-within-caps" in out
    del spec


def test_rounded_zero_caps_exit3(tmp_path, capsys):
    spec = tmp_path / "z.class"
    spec.write_text("class z\nmember u24\nambient gf3\ncaps elements=0 rank=0 seconds=5\n")
    code, out, _ = run_cli(capsys, "rounded", str(spec), "--k", "2")
    assert code == 3 and "inconclusive" in out


def test_rounded_ambient_all_rejected(tmp_path, capsys):
    spec = tmp_path / "a.class"
    spec.write_text("class a\nmember u24\nambient all\ncaps elements=4 rank=2 seconds=5\n")
    code, _, err = run_cli(capsys, "rounded", str(spec), "--k", "2")
    assert code == 2 and "not enumerable" in err


def test_check_shipped_corpus_exit0(tmp_path, capsys):
    manifest = importlib.resources.files("matroidkit.data") / "corpus.manifest"
    out_path = tmp_path / "corpus.tsv"
    code, _, _ = run_cli(capsys, "check", str(manifest), "--out", str(out_path))
    assert code == 0
    lines = out_path.read_text().splitlines()
    records = [l.split("\t") for l in lines if l and not l.startswith("#")]
    assert records
    assert all(rec[2] in ("verified", "vacuous") for rec in records)
    assert any(l.startswith("# summary") for l in lines)


def test_file_reference_round_trip(tmp_path, capsys):
    mat = tmp_path / "one.mat"
    mat.write_text("matroid tri\ngraph 3\nedge a 0 1\nedge b 1 2\nedge c 2 0\nend\n")
    code, out, _ = run_cli(capsys, "info", f"{mat}#tri")
    assert code == 0 and "elements: 3" in out
    code2, out2, _ = run_cli(capsys, "info", str(mat))
    assert code2 == 0 and "elements: 3" in out2
