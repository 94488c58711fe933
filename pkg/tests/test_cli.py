import json

import pytest

from parthom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_beta_multiplicity_row(capsys):
    code, out = run(
        capsys, "beta", "--n", "7", "--ranks", "2,4,5",
        "--mult", "trivial,refl", "--format", "tsv", "--no-cache",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].split("\t") == ["n", "S", "trivial", "refl"]
    assert lines[1].split("\t") == ["7", "2,4,5", "5", "23"]


def test_table_bs_rows_sum_to_euler(capsys):
    code, out = run(capsys, "table", "--family", "bS", "--n", "5",
                    "--format", "tsv", "--no-cache")
    assert code == 0
    lines = out.strip().split("\n")
    header = lines[0].split("\t")
    assert header == ["n", "S", "a_S", "a'_S", "b_S", "b'_S"]
    rows = [line.split("\t") for line in lines[1:]]
    assert len(rows) == 2 ** 3
    assert rows[0][1] == "-"  # empty rank set
    assert sum(int(r[4]) for r in rows) == 5  # E_4
    assert sum(int(r[5]) for r in rows) == 16  # E_5


def test_check_suite_exit_codes(capsys):
    code, out = run(capsys, "check", "--suite", "conj-3.9", "--max-n", "7",
                    "--format", "json", "--no-cache")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] and data["failures"] == []


def test_check_failure_witness_is_machine_readable(capsys, monkeypatch):
    # force a failure by shrinking a sequence value behind the suite's back
    import parthom.checks as checks

    real = checks.simsun

    def broken(i, n):
        return 0 if (i, n) == (2, 4) else real(i, n)

    monkeypatch.setattr(checks, "simsun", broken)
    code, out = run(capsys, "check", "--suite", "conj-3.9", "--max-n", "2",
                    "--format", "json", "--no-cache")
    assert code == 1
    data = json.loads(out)
    assert not data["passed"]
    assert data["failures"][0]["witness"]["i"] == 2


def test_alpha_symfunc_output(capsys):
    code, out = run(capsys, "alpha", "--n", "4", "--ranks", "1,2",
                    "--format", "json", "--no-cache")
    assert code == 0
    data = json.loads(out)
    assert data["symfunc"]["basis"] == "h"
    assert data["dimension"] == "18"


def test_homology_json(capsys):
    code, out = run(capsys, "homology", "--n", "5", "--poset", "qnk:k=3",
                    "--format", "json", "--no-cache")
    assert code == 0
    data = json.loads(out)
    assert data["view"] == "qnk:k=3,n=5"
    assert data["betti"]["1"] == 16


def test_euler_simsun_bi_tables(capsys):
    code, out = run(capsys, "euler", "--max-n", "6", "--format", "tsv", "--no-cache")
    assert code == 0
    assert out.strip().split("\n")[-1] == "6\t61"
    code, out = run(capsys, "simsun", "--max-n", "4", "--format", "tsv", "--no-cache")
    assert code == 0
    assert "a_i(n)" in out
    code, out = run(capsys, "bi", "--max-n", "4", "--format", "tsv", "--no-cache")
    assert code == 0
    assert out.strip().split("\n")[-1].startswith("4\t4")


def test_sf_families(capsys):
    code, out = run(capsys, "sf", "--family", "lie", "--n", "4", "--basis", "s",
                    "--format", "json", "--no-cache")
    assert code == 0
    data = json.loads(out)
    assert data["dimension"] == "6"
    code, out = run(capsys, "sf", "--family", "whitehouse", "--n", "5", "--k", "4",
                    "--format", "pretty", "--no-cache")
    assert code == 0
    assert "dimension 6" in out  # 5!/4 - 4!


def test_report_stability(capsys):
    code, out = run(capsys, "report", "--family", "stability", "--ranks", "2",
                    "--k", "0", "--max-n", "7", "--format", "json", "--no-cache")
    assert code == 0
    data = json.loads(out)
    assert data["passed"]


def test_invalid_input_exit_2(capsys):
    assert main(["alpha", "--n", "30", "--ranks", "1", "--no-cache"]) == 2
    assert main(["homology", "--n", "6", "--poset", "bogus", "--no-cache"]) == 2


def test_cache_round_trip(tmp_path, capsys):
    argv = ["homology", "--n", "4", "--poset", "full", "--format", "json",
            "--cache-dir", str(tmp_path)]
    code1, out1 = run(capsys, *argv)
    code2, out2 = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    cached = list(tmp_path.rglob("*.json"))
    assert len(cached) == 1


def test_corrupt_cache_entry_recomputed(tmp_path, capsys):
    argv = ["euler", "--max-n", "3", "--format", "json"]
    # euler is uncached; use a cached command instead
    argv = ["sf", "--family", "lie", "--n", "3", "--format", "json",
            "--cache-dir", str(tmp_path)]
    code1, out1 = run(capsys, *argv)
    entry = next(tmp_path.rglob("*.json"))
    entry.write_text("{ not json")
    code2, out2 = run(capsys, *argv)
    assert code2 == 0 and out2 == out1


def test_jobs_do_not_change_bytes(capsys):
    _, out1 = run(capsys, "table", "--family", "bS", "--n", "4",
                  "--format", "tsv", "--no-cache", "--jobs", "1")
    _, out2 = run(capsys, "table", "--family", "bS", "--n", "4",
                  "--format", "tsv", "--no-cache", "--jobs", "2")
    assert out1 == out2


def test_stability_tsv_handles_missing_columns(capsys):
    # the two-row Schur column only exists once n >= 2k; earlier rows render "-"
    code, out = run(capsys, "report", "--family", "stability", "--ranks", "1",
                    "--k", "2", "--max-n", "5", "--format", "tsv", "--no-cache")
    assert code == 0
    lines = out.strip().split("\n")
    assert "alpha_two_row" in lines[0]
    first = dict(zip(lines[0].split("\t"), lines[1].split("\t")))
    assert first["alpha_two_row"] == "-"


def test_out_file(tmp_path, capsys):
    target = tmp_path / "result.tsv"
    code, out = run(capsys, "euler", "--max-n", "4", "--format", "tsv",
                    "--out", str(target))
    assert code == 0 and out == ""
    assert target.read_text().strip().split("\n")[-1] == "4\t5"
