"""plotkit consumes the qcss CLI's profile CSVs; nothing else of qcss."""

import shutil
import subprocess

import pytest

from plotkit import ProfileFormatError, parse_profile, render
from plotkit.cli import main

PNG_MAGIC = b"\x89PNG"


@pytest.fixture(scope="session")
def profile_csv(tmp_path_factory):
    if shutil.which("qcss") is None:
        pytest.skip("qcss command line tool not on PATH")
    path = tmp_path_factory.mktemp("profiles") / "C.csv"
    res = subprocess.run(
        ["qcss", "profile", "--construction", "C", "-p", "3", "-n", "2",
         "--pairs", "0x0,0x1,0x2", "--out", str(path)],
        capture_output=True, text=True)
    assert res.returncode == 0, res.stderr
    return path


def test_parse_profile(profile_csv):
    rows = parse_profile(str(profile_csv))
    # two cross pairs with 8 shifts each, one auto pair with 7
    assert len(rows) == 8 + 8 + 7
    assert {r.kind for r in rows} == {"auto", "cross"}
    assert {r.max_corr for r in rows} == {10.0}
    auto = [r for r in rows if r.kind == "auto"]
    assert all(r.tau >= 1 for r in auto)


def test_render_every_selected_pair(profile_csv, tmp_path):
    out = tmp_path / "plots"
    written = render(str(profile_csv), str(out), tag="C")
    assert sorted(p.rsplit("/", 1)[1] for p in written) == \
        ["C_0x0_auto.png", "C_0x1_cross.png", "C_0x2_cross.png"]
    for p in written:
        with open(p, "rb") as fh:
            assert fh.read(4) == PNG_MAGIC
    # the peak line sits at 10 and no bar exceeds it
    rows = parse_profile(str(profile_csv))
    assert all(r.magnitude <= r.max_corr + 1e-9 for r in rows)
    assert rows[0].max_corr == 10.0


def test_render_pair_subset(profile_csv, tmp_path):
    written = render(str(profile_csv), str(tmp_path), pairs=[(0, 1)], tag="C")
    assert [p.rsplit("/", 1)[1] for p in written] == ["C_0x1_cross.png"]
    with pytest.raises(ValueError, match="not present"):
        render(str(profile_csv), str(tmp_path), pairs=[(5, 5)])


def test_tag_defaults_to_stem(profile_csv, tmp_path):
    written = render(str(profile_csv), str(tmp_path), pairs=[(0, 2)])
    assert written[0].endswith("C_0x2_cross.png")


def test_svg_output(profile_csv, tmp_path):
    written = render(str(profile_csv), str(tmp_path), pairs=[(0, 1)], ext="svg")
    assert written[0].endswith(".svg")


@pytest.mark.parametrize("content,row", [
    ("", 1),
    ("wrong,header\n0,1,0,1.0,cross,2.0\n", 1),
    ("m1,m2,tau,magnitude,kind,max_corr\n0,1,0,1.0,cross\n", 2),
    ("m1,m2,tau,magnitude,kind,max_corr\n0,1,0,1.0,cross,2.0\n0,1,x,1.0,cross,2.0\n", 3),
    ("m1,m2,tau,magnitude,kind,max_corr\n0,1,0,1.0,sideways,2.0\n", 2),
    ("m1,m2,tau,magnitude,kind,max_corr\n0,1,-1,1.0,cross,2.0\n", 2),
    ("m1,m2,tau,magnitude,kind,max_corr\n0,1,0,-1.0,cross,2.0\n", 2),
    ("m1,m2,tau,magnitude,kind,max_corr\n\n", 2),
])
def test_malformed_csv(tmp_path, content, row):
    bad = tmp_path / "bad.csv"
    bad.write_text(content)
    with pytest.raises(ProfileFormatError) as exc:
        parse_profile(str(bad))
    assert exc.value.row == row
    assert f"row {row}" in str(exc.value)


def test_cli_render(profile_csv, tmp_path, capsys):
    code = main(["render", str(profile_csv), "--out", str(tmp_path / "p"),
                 "--pairs", "0x1,0x0", "--tag", "C"])
    out = capsys.readouterr().out
    assert code == 0
    assert "C_0x1_cross.png" in out and "C_0x0_auto.png" in out


def test_cli_malformed_exits_nonzero(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("m1,m2,tau,magnitude,kind,max_corr\n0,1,0,oops,cross,2.0\n")
    code = main(["render", str(bad), "--out", str(tmp_path / "p")])
    err = capsys.readouterr().err
    assert code == 2
    assert "row 2" in err


def test_cli_bad_pairs(profile_csv, tmp_path, capsys):
    code = main(["render", str(profile_csv), "--out", str(tmp_path / "p"),
                 "--pairs", "0-1"])
    assert code == 2
    code = main(["render", str(profile_csv), "--out", str(tmp_path / "p"),
                 "--pairs", ""])
    assert code == 2


def test_cli_io_error(profile_csv, tmp_path, capsys):
    blocker = tmp_path / "blocked"
    blocker.write_text("a file, not a directory")
    code = main(["render", str(profile_csv), "--out", str(blocker)])
    assert code == 3
