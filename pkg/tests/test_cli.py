import json

import pytest

from crystalmds import cli


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_json_schema(capsys):
    code, out, _ = run(capsys, ["compute", "--family", "A", "--rank", "2",
                                "--n", "2", "--lambda", "2,2", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert list(obj) == ["family", "rank", "n", "lambda", "terms"]
    assert obj["lambda"] == [2, 2]
    assert obj["terms"][0]["wt"] == [2, 2]


def test_compute_character_text(capsys):
    code, out, _ = run(capsys, ["compute", "--family", "D", "--rank", "4",
                                "--character", "--lambda", "1,0,0,0"])
    assert code == 0
    assert "(8 terms)" in out


def test_compute_rejects_boundary_weight(capsys):
    code, _, err = run(capsys, ["compute", "--family", "B", "--rank", "2",
                                "--n", "1", "--lambda", "0,0"])
    assert code == 2
    assert "strongly dominant" in err


def test_compute_allow_dominant(capsys):
    code, out, _ = run(capsys, ["compute", "--family", "B", "--rank", "2",
                                "--n", "1", "--lambda", "0,0", "--allow-dominant",
                                "--json"])
    assert code == 0
    json.loads(out)


def test_compute_rank_mismatch(capsys):
    code, _, err = run(capsys, ["compute", "--family", "A", "--rank", "3",
                                "--lambda", "1,1"])
    assert code == 2 and "coordinates" in err


def test_verify_tokuyama_passes(capsys):
    code, out, _ = run(capsys, ["verify", "--suite", "tokuyama",
                                "--lambdas", "2;3;1,1;2,1"])
    assert code == 0
    rep = json.loads(out)
    assert rep["ok"] and rep["suite"] == "tokuyama"


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(cli.SUITES, "tokuyama",
                        lambda **kw: {"suite": "tokuyama", "ok": False, "cases": []})
    code, out, _ = run(capsys, ["verify", "--suite", "tokuyama"])
    assert code == 1
    assert not json.loads(out)["ok"]


def test_verify_unknown_suite_exits_two(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def export_files(tmp_path, capsys, name, extra=()):
    outdir = tmp_path / name
    code, out, err = run(capsys, ["export", "--family", "A", "--rank", "2",
                                  "--lambda", "2,1", "--n", "2",
                                  "--out", str(outdir), *extra])
    assert code == 0, err
    return {p.name: p.read_bytes() for p in sorted(outdir.iterdir())}


def test_export_deterministic(tmp_path, capsys):
    first = export_files(tmp_path, capsys, "one")
    second = export_files(tmp_path, capsys, "two")
    assert first == second
    assert set(first) == {"patterns.txt", "decorated.txt", "polynomial.json"}
    assert first["patterns.txt"].decode().splitlines()[0].count(";") == 1


def test_export_thread_invariance(tmp_path, capsys):
    one = export_files(tmp_path, capsys, "t1", ("--threads", "1"))
    four = export_files(tmp_path, capsys, "t4", ("--threads", "4"))
    assert one == four


def test_export_pattern_count_matches_dimension(tmp_path, capsys):
    files = export_files(tmp_path, capsys, "dim")
    from crystalmds import CartanSpec, build_root_system, weyl_dimension
    dim = weyl_dimension(build_root_system(CartanSpec("A", 2)), (2, 1))
    assert len(files["patterns.txt"].decode().splitlines()) == dim


def test_export_unwritable_path(tmp_path, capsys):
    # a regular file where a directory is needed fails regardless of privileges
    blocker = tmp_path / "blocker"
    blocker.write_text("occupied")
    code, _, err = run(capsys, ["export", "--family", "A", "--rank", "1",
                                "--lambda", "1", "--out", str(blocker / "sub")])
    assert code == 1 and "export failed" in err
