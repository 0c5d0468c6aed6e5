from __future__ import annotations

import json

import pytest

from alcove_tilt.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(out):
    return [json.loads(line) for line in out.splitlines()]


def test_root_info_bad_primes(capsys):
    code, out, _ = call(capsys, "root-info", "--datum", "G2")
    assert code == 0
    assert '"bad_primes":[2,3]' in out
    rec = records(out)[0]
    assert rec["component_group"] == [] and rec["weyl_group_order"] == 12


def test_tilting_char(capsys):
    code, out, _ = call(capsys, "tilting-char", "--datum", "A1-adjoint", "--p", "3", "--mu", "4")
    assert code == 0
    row, ch = records(out)
    assert row["row"] == [[[0], 1], [[4], 1]]
    assert row["source"] == "ordinary-fallback" and row["caveat"]
    assert ch["dimension"] == 6


def test_weyl_char_and_negative_values(capsys):
    code, out, _ = call(capsys, "weyl-char", "--datum", "A2", "--lambda", "1,1")
    assert code == 0 and records(out)[0]["dimension"] == 8
    code, _, err = call(capsys, "weyl-char", "--datum", "A2", "--lambda", "-1,1")
    assert code == 1 and "NotDominant" in err
    code, out, _ = call(capsys, "dims", "--mu", "2", "--lambda", "-2")
    assert code == 0
    rec = records(out)[0]
    assert rec["mv_dimension"] == 0 and rec["orbit_dimension"] == 2


def test_alcove(capsys):
    code, out, _ = call(capsys, "alcove", "--p", "3", "--classify", "4")
    assert code == 0
    rec = records(out)[0]
    assert rec["closure"]["lambda"] == [0]


def test_kl_and_pkl_round_trip(capsys, tmp_path):
    code, out, _ = call(capsys, "kl", "--datum", "A3", "--max-length", "4")
    assert code == 0
    hit = [r for r in records(out) if r["w"] == [1, 0, 2, 1] and r["y"] == [1]]
    assert hit and hit[0]["coeffs"] == {"1": 1, "3": 1}

    path = tmp_path / "table.jsonl"
    code, _, _ = call(capsys, "kl", "--affine", "--max-length", "5", "--emit-pkl", "3", "--out", str(path))
    assert code == 0
    code, out, _ = call(capsys, "pkl-validate", str(path))
    assert code == 0 and records(out)[0]["ok"]

    code, out, _ = call(capsys, "tilting-char", "--p", "3", "--mu", "4", "--pkl", str(path))
    assert code == 0 and records(out)[0]["source"] == "ingested"
    code, _, err = call(capsys, "tilting-char", "--p", "3", "--mu", "40", "--pkl", str(path))
    assert code == 2 and "OutsideFrontier" in err
    code, _, err = call(capsys, "tilting-char", "--p", "5", "--mu", "4", "--pkl", str(path))
    assert code == 2


def test_pkl_validate_rejects_bad_row(capsys, tmp_path):
    path = tmp_path / "bad.jsonl"
    call(capsys, "kl", "--affine", "--max-length", "2", "--emit-pkl", "3", "--out", str(path))
    lines = path.read_text().splitlines()
    row = json.loads(lines[2])
    for t in row["terms"]:
        if t["y"] == row["w"]:
            t["coeffs"] = {"0": 2}
    lines[2] = json.dumps(row)
    path.write_text("\n".join(lines) + "\n")
    code, _, err = call(capsys, "pkl-validate", str(path))
    assert code == 2 and "NotUnitriangular" in err


def test_usage_errors(capsys):
    assert call(capsys, "nonsense")[0] == 1
    assert call(capsys, "blocks", "--p", "3")[0] == 1
    assert call(capsys, "blocks", "--p", "3", "--max-pairing", "0")[0] == 1
    assert call(capsys, "blocks", "--p", "1", "--max-pairing", "4")[0] == 1
    assert call(capsys, "root-info", "--datum", "Q7")[0] == 1
    assert call(capsys, "lusztig-char", "--p", "3")[0] == 1
    assert call(capsys, "pkl-validate", "/nonexistent/file")[0] in (1, 2)


def test_blocks_and_tsv(capsys):
    code, out, _ = call(capsys, "blocks", "--p", "3", "--max-pairing", "9", "--format", "tsv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split("\t") == ["lambda", "p", "members", "w"]
    assert len(lines) == 5


def test_lusztig_char(capsys):
    code, out, _ = call(capsys, "lusztig-char", "--p", "3", "--w", "1")
    assert code == 0
    rec = records(out)[0]
    assert rec["dimension"] == 4 and rec["in_regime"] and rec["conjectural"]
    code, out2, _ = call(capsys, "lusztig-char", "--p", "3", "--mu", "4")
    assert out2 == out
    assert call(capsys, "lusztig-char", "--datum", "A2", "--p", "2", "--w", "")[0] == 1


@pytest.mark.parametrize("jobs", ["1", "3"])
def test_tilting_table_is_sorted_and_stable(capsys, jobs):
    code, out, _ = call(capsys, "tilting-table", "--datum", "A2", "--p", "3", "--max-pairing", "12",
                        "--jobs", jobs)
    assert code == 0
    mus = [r["mu"] for r in records(out)]
    assert mus == sorted(mus)
    _, again, _ = call(capsys, "tilting-table", "--datum", "A2", "--p", "3", "--max-pairing", "12")
    assert again == out
