import io

import pytest
from click.testing import CliRunner

from pentasep.cli import main
from pentasep.planarcode import HEADER, read_planar_code
from pentasep.planegraph import validate_fullerene


@pytest.fixture()
def runner():
    return CliRunner()


def graphs_of(stdout_bytes):
    return list(read_planar_code(io.BytesIO(stdout_bytes)))


def test_generate(runner):
    res = runner.invoke(main, ["generate", "28", "--workers", "1"])
    assert res.exit_code == 0
    gs = graphs_of(res.stdout_bytes)
    assert len(gs) == 2
    for g in gs:
        assert validate_fullerene(g).vertex_count == 28
    assert "2 fullerene(s)" in res.stderr


def test_generate_deterministic(runner):
    a = runner.invoke(main, ["generate", "30", "--workers", "1"]).stdout_bytes
    b = runner.invoke(main, ["generate", "30", "--workers", "2"]).stdout_bytes
    assert a == b


def test_goldberg_and_separation(runner, tmp_path):
    out = tmp_path / "g.pc"
    res = runner.invoke(main, ["goldberg", "1", "1", "-o", str(out)])
    assert res.exit_code == 0
    assert "60 vertices" in res.stderr
    res = runner.invoke(main, ["separation", str(out)])
    assert res.exit_code == 0
    assert "0: nv=60 separation=2" in res.output


def test_minimal(runner):
    res = runner.invoke(main, ["minimal", "2"])
    assert res.exit_code == 0
    gs = graphs_of(res.stdout_bytes)
    assert [g.vertex_count for g in gs] == [60]


def test_build(runner):
    res = runner.invoke(main, ["build", "2", "41"])
    assert res.exit_code == 0
    g = graphs_of(res.stdout_bytes)[0]
    f = validate_fullerene(g)
    assert f.hexagon_count == 41


def test_tables(runner):
    res = runner.invoke(main, ["tables", "20", "24", "--workers", "1"])
    assert res.exit_code == 0
    lines = res.stdout.strip().splitlines()
    assert lines[0] == "nv,nf,total,ipr,sep3,sep4,sep5"
    assert lines[1] == "20,12,1,0,0,0,0"
    assert lines[2] == "22,13,0,0,0,0,0"
    assert lines[3] == "24,14,1,0,0,0,0"


def test_verify_ok(runner):
    res = runner.invoke(main, ["verify", "20", "26", "--workers", "1"])
    assert res.exit_code == 0
    assert "all rows match" in res.stderr


def test_verify_mismatch_exit(runner, monkeypatch):
    import pentasep.tables as tables

    monkeypatch.setitem(tables.FIXTURE_COUNTS, 24, (2, 0))
    res = runner.invoke(main, ["verify", "24", "24", "--workers", "1"])
    assert res.exit_code == 1
    assert "MISMATCH nv=24 column=total expected=2 got=1" in res.stderr


def test_convert_round_trip(runner, tmp_path):
    pc = tmp_path / "g.pc"
    runner.invoke(main, ["goldberg", "1", "0", "-o", str(pc)])
    txt = tmp_path / "g.txt"
    res = runner.invoke(main, ["convert", str(pc), "--to", "text", "-o", str(txt)])
    assert res.exit_code == 0
    assert txt.read_text().splitlines()[0].startswith("0: ")
    back = tmp_path / "back.pc"
    res = runner.invoke(main, ["convert", str(txt), "--to", "planar_code",
                               "-o", str(back)])
    assert res.exit_code == 0
    assert back.read_bytes() == pc.read_bytes()


def test_stdout_is_clean_planar_code(runner):
    res = runner.invoke(main, ["goldberg", "1", "0"])
    assert res.stdout_bytes.startswith(HEADER)
    assert b"vertices" not in res.stdout_bytes  # diagnostics stay on stderr
