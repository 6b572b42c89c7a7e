"""The command line front end: exit codes, JSON shape, and byte stability."""
import json

import pytest

from tverlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()], out


def test_centerpoint_smoke(capsys):
    code, records, _ = run(
        capsys, "centerpoint", "--d", "1", "--r", "2", "--trials", "3", "--seed", "5"
    )
    assert code == 0
    assert len(records) == 3
    for rec in records:
        assert rec["ok"] and rec["depth"] >= 2
        assert all("/" in c for c in rec["point"])


def test_tverberg_smoke(capsys):
    code, records, _ = run(
        capsys, "tverberg", "--d", "2", "--r", "2", "--trials", "2"
    )
    assert code == 0
    for rec in records:
        assert rec["ok"] and len(rec["blocks"]) == 2


def test_reduce_smoke(capsys):
    code, records, _ = run(capsys, "reduce", "--d", "1", "--r", "4", "--trials", "1")
    assert code == 0
    assert records[0]["plan"] == {"r": 4, "d": 1, "k": 2, "R": 7, "m": 6, "M": 13}
    assert records[1]["depth"] >= 4


def test_hind_sphere_and_alias(capsys):
    code, records, _ = run(capsys, "hind", "--m", "2")
    assert code == 0 and records[0] == {
        "sphere": 2, "hind": 2, "expected": 2, "ok": True
    }
    code, records, _ = run(capsys, "hind", "--sphere", "1")
    assert code == 0 and records[0]["hind"] == 1


def test_hind_from_input_file(tmp_path, capsys):
    path = tmp_path / "sphere.json"
    path.write_text(
        json.dumps(
            {
                "maximal_simplices": [[0, 2], [0, 3], [1, 2], [1, 3]],
                "involution": {"0": 1, "1": 0, "2": 3, "3": 2},
            }
        )
    )
    code, records, _ = run(capsys, "hind", "--input", str(path))
    assert code == 0 and records[0] == {"hind": 1}


def test_counterexample_and_probe(capsys):
    code, records, _ = run(capsys, "counterexample", "--d", "1", "--r", "2")
    assert code == 0
    assert records[-1]["summary"]["all_isolated"]
    assert len(records) == records[-1]["summary"]["tuples"] + 1

    code, records, _ = run(capsys, "probe", "--d", "1", "--r", "2")
    assert code == 0
    assert records[0]["found"] and records[0]["faces"] == [[0, 1], [2, 3]]


def test_cover_seeded_and_from_file(tmp_path, capsys):
    code, records, _ = run(capsys, "cover", "--d", "2", "--trials", "2", "--seed", "3")
    assert code == 0
    assert all(rec["ok"] and rec["touches_all_facets"] for rec in records)

    path = tmp_path / "pts.json"
    path.write_text(
        json.dumps(
            {"barycentric_points": [["1/1", "0/1"], ["0/1", "1/1"]]}
        )
    )
    code, records, _ = run(capsys, "cover", "--input", str(path))
    assert code == 0
    assert records[0]["delta"] == "1/1" and records[0]["touches_all_facets"]


def test_fiber_demo_output(capsys):
    code, records, _ = run(capsys, "fiber-demo", "--d", "1", "--trials", "2")
    assert code == 0
    labels = {rec["evidence"] for rec in records if "evidence" in rec}
    assert labels == {"coordinate projection", "constant map"}


def test_point_config_input(tmp_path, capsys):
    path = tmp_path / "config.json"
    path.write_text(
        json.dumps({"d": 1, "points": [["0/1"], ["1/1"], ["2/1"]]})
    )
    code, records, _ = run(capsys, "centerpoint", "--r", "2", "--input", str(path))
    assert code == 0 and records[0]["depth"] == 2


def test_usage_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as e:
        main(["centerpoint"])  # missing --d/--r
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["centerpoint", "--d", "1", "--r", "2", "--jobs", "0"])
    assert e.value.code == 2


def test_bad_input_files_are_usage_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    empty = tmp_path / "empty.json"
    empty.write_text("{}")
    cases = [
        ["hind", "--input", str(bad)],
        ["cover", "--input", str(tmp_path / "missing.json")],
        ["cover", "--input", str(empty)],
        ["counterexample", "--d", "0", "--r", "2"],
    ]
    for argv in cases:
        with pytest.raises(SystemExit) as e:
            main(argv)
        assert e.value.code == 2
        err = capsys.readouterr().err
        assert "Traceback" not in err
        assert argv[0] in err


def test_output_bytes_do_not_depend_on_jobs(tmp_path):
    outs = []
    for jobs in ("1", "4"):
        path = tmp_path / f"out-{jobs}.jsonl"
        code = main(
            [
                "tverberg", "--d", "2", "--r", "2", "--trials", "3",
                "--seed", "11", "--jobs", jobs, "--output", str(path),
            ]
        )
        assert code == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
    # sorted keys, compact separators: stable canonical encoding
    first = outs[0].decode().splitlines()[0]
    assert first == json.dumps(json.loads(first), sort_keys=True, separators=(",", ":"))
