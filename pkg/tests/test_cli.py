"""End-to-end tests of the command-line interface."""

import csv
import io
import json

import pytest

from r2subfield.cli import BUNDLED_MANIFEST, MANIFEST_HEADER, main


def run_cli(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_code_json_matching_example(capsys):
    rc, out, err = run_cli(
        capsys, "code", "--m", "3", "--family", "2",
        "--L", "1", "--M", "1,2", "--N", "1,2,3", "--format", "json",
    )
    assert rc == 0
    assert err == ""
    report = json.loads(out)
    assert (report["n"], report["k"], report["d"]) == (192, 8, 96)
    assert report["match"] is True
    assert report["flags"]["griesmer_equal"] is True
    assert report["flags"]["distance_optimal_by_griesmer"] is True
    assert report["weights"] == [
        {"w": 0, "count": 1}, {"w": 96, "count": 252}, {"w": 128, "count": 3},
    ]


def test_code_explicit_complement_flags(capsys):
    rc, out, _ = run_cli(
        capsys, "code", "--m", "2", "--D1", "deltac", "--D2", "deltac",
        "--L", "-", "--M", "-", "--N", "1,2", "--format", "json",
    )
    assert rc == 0
    report = json.loads(out)
    assert report["family"] == 5
    assert (report["n"], report["k"], report["d"]) == (36, 6, 16)


def test_code_family_and_flags_conflict(capsys):
    rc, _, err = run_cli(
        capsys, "code", "--m", "2", "--family", "5", "--D1", "deltac",
        "--L", "-", "--M", "-", "--N", "1",
    )
    assert rc == 2
    assert "error:" in err


def test_code_requires_some_family_selector(capsys):
    rc, _, err = run_cli(capsys, "code", "--m", "2", "--L", "-", "--M", "-", "--N", "1")
    assert rc == 2
    assert "error:" in err


def test_code_degenerate_exits_2(capsys):
    rc, _, err = run_cli(
        capsys, "code", "--m", "1", "--family", "3", "--L", "-", "--M", "1", "--N", "-",
    )
    assert rc == 2
    assert "error:" in err


def test_code_bad_subset_exits_2(capsys):
    rc, _, err = run_cli(
        capsys, "code", "--m", "2", "--family", "1", "--L", "3", "--M", "-", "--N", "-",
    )
    assert rc == 2
    assert "error:" in err


def test_code_m_out_of_range_exits_2(capsys):
    rc, _, err = run_cli(
        capsys, "code", "--m", "6", "--family", "1", "--L", "1", "--M", "-", "--N", "-",
    )
    assert rc == 2
    assert "error:" in err


def test_code_csv_round_trips(capsys):
    rc, out, _ = run_cli(
        capsys, "code", "--m", "2", "--family", "9",
        "--L", "1,2", "--M", "1,2", "--N", "-", "--format", "csv",
    )
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    row = rows[0]
    assert (row["n"], row["k"], row["d"]) == ("48", "6", "24")
    assert row["weights"] == "0:1;24:60;32:3"
    assert row["match"] == "true"


def test_code_md_contains_tables(capsys):
    rc, out, _ = run_cli(
        capsys, "code", "--m", "2", "--family", "5", "--L", "-", "--M", "-", "--N", "1,2",
    )
    assert rc == 0
    assert "measured  [n,k,d] = [36,6,16]" in out
    assert "| 16 | 9 | 9 |" in out
    assert "| table10_minimal | true |" in out


def test_verify_md_smoke(capsys):
    rc, out, _ = run_cli(capsys, "verify", "--m", "1")
    assert rc == 0
    assert "verdict: PASS" in out
    assert "total: 72" in out
    assert "mismatch: 0" in out


def test_verify_deterministic_across_jobs(tmp_path, capsys):
    out1 = tmp_path / "seq.json"
    out2 = tmp_path / "par.json"
    rc1, _, _ = run_cli(
        capsys, "verify", "--m", "1,2", "--format", "json",
        "--jobs", "1", "--out", str(out1),
    )
    rc2, _, _ = run_cli(
        capsys, "verify", "--m", "1,2", "--format", "json",
        "--jobs", "2", "--out", str(out2),
    )
    assert rc1 == rc2 == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_verify_family_filter_csv(capsys):
    rc, out, _ = run_cli(
        capsys, "verify", "--m", "2", "--families", "9", "--format", "csv",
    )
    assert rc == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 64
    assert {row["family"] for row in rows} == {"9"}
    assert all(row["status"] in ("ok", "degenerate") for row in rows)


def test_verify_bad_family_exits_2(capsys):
    rc, _, err = run_cli(capsys, "verify", "--m", "2", "--families", "11")
    assert rc == 2
    assert "error:" in err


def test_scan_bundled_manifest_all_pass(capsys):
    rc, out, _ = run_cli(capsys, "scan", "--format", "json")
    assert rc == 0
    results = json.loads(out)
    assert len(results) == len(BUNDLED_MANIFEST) == 21
    for result in results:
        assert result["result"] == "PASS"
        assert result["expected"] == result["computed"]
        assert result["match"] is True
    griesmer_rows = [r for r in results if r["optimal"] == "yes (Griesmer)"]
    assert len(griesmer_rows) == 6  # families 2 and 9 meet the bound exactly


def test_scan_md_table(capsys):
    rc, out, _ = run_cli(capsys, "scan")
    assert rc == 0
    assert "21 rows, 0 failures" in out
    assert "| [192,8,96] | [192,8,96] |" in out


def test_scan_empty_manifest_passes(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    path.write_text(",".join(MANIFEST_HEADER) + "\n", encoding="utf-8")
    rc, out, _ = run_cli(capsys, "scan", "--manifest", str(path), "--format", "json")
    assert rc == 0
    assert json.loads(out) == []


def test_scan_detects_wrong_expectation(tmp_path, capsys):
    path = tmp_path / "wrong.csv"
    path.write_text(
        ",".join(MANIFEST_HEADER) + "\n" + "5,2,-,-,\"1,2\",36,6,17\n",
        encoding="utf-8",
    )
    rc, out, _ = run_cli(capsys, "scan", "--manifest", str(path), "--format", "json")
    assert rc == 1
    results = json.loads(out)
    assert results[0]["result"] == "FAIL"
    assert results[0]["computed"] == [36, 6, 16]


def test_scan_rejects_bad_header(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("family,m,L,M,N,n,k\n", encoding="utf-8")
    rc, _, err = run_cli(capsys, "scan", "--manifest", str(path))
    assert rc == 2
    assert "error:" in err


def test_scan_missing_manifest_exits_2(tmp_path, capsys):
    rc, _, err = run_cli(capsys, "scan", "--manifest", str(tmp_path / "nope.csv"))
    assert rc == 2
    assert "error:" in err


def test_tables_json(capsys):
    rc, out, _ = run_cli(
        capsys, "tables", "--family", "1", "--m", "3",
        "--sL", "1", "--sM", "1", "--sN", "1", "--format", "json",
    )
    assert rc == 0
    payload = json.loads(out)
    assert (payload["n"], payload["k"], payload["d"]) == (8, 3, 4)
    assert payload["weights"] == [{"w": 0, "count": 1}, {"w": 4, "count": 7}]


def test_tables_merges_coincident_weights(capsys):
    # family 5 at |N| = 2, m = 2 produces two formula rows at weight 24 that
    # must appear as one merged row
    rc, out, _ = run_cli(
        capsys, "tables", "--family", "5", "--m", "2",
        "--sL", "0", "--sM", "0", "--sN", "2", "--format", "json",
    )
    assert rc == 0
    payload = json.loads(out)
    weights = {e["w"]: e["count"] for e in payload["weights"]}
    assert weights == {0: 1, 16: 9, 18: 48, 24: 6}


def test_tables_counts_sum_to_codebook(capsys):
    rc, out, _ = run_cli(
        capsys, "tables", "--family", "8", "--m", "2",
        "--sL", "0", "--sM", "0", "--sN", "0", "--format", "json",
    )
    assert rc == 0
    payload = json.loads(out)
    assert sum(e["count"] for e in payload["weights"]) == 64 == 1 << payload["k"]


def test_tables_degenerate_exits_2(capsys):
    rc, _, err = run_cli(
        capsys, "tables", "--family", "3", "--m", "1",
        "--sL", "0", "--sM", "1", "--sN", "0",
    )
    assert rc == 2
    assert "error:" in err


def test_tables_md(capsys):
    rc, out, _ = run_cli(
        capsys, "tables", "--family", "9", "--m", "2", "--sL", "2", "--sM", "2", "--sN", "0",
    )
    assert rc == 0
    assert "[n,k,d] = [48,6,24]" in out
    assert "| 24 | 60 |" in out


def test_out_file_matches_stdout(tmp_path, capsys):
    rc, out, _ = run_cli(capsys, "scan", "--format", "csv")
    assert rc == 0
    path = tmp_path / "scan.csv"
    rc2, out2, _ = run_cli(capsys, "scan", "--format", "csv", "--out", str(path))
    assert rc2 == 0
    assert out2 == ""  # nothing on stdout when writing a file
    assert path.read_text(encoding="utf-8") == out
