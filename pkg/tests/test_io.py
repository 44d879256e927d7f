import pytest

from segci import SimSpec, generate_results
from segci.io import (
    DataFormatError,
    detect_training_format,
    read_calibration_csv,
    read_corpus_csv,
    read_pairs_csv,
    read_per_case_csv,
    write_per_case_csv,
)


def test_per_case_roundtrip(tmp_path):
    rows = generate_results(SimSpec(n_tasks=2, methods_per_task=2, cases_per_task=5, seed=3))
    path = tmp_path / "cases.csv"
    write_per_case_csv(rows, path)
    loaded = read_per_case_csv(path)
    assert len(loaded) == len(rows)
    for got, want in zip(loaded, rows):
        assert got.task_id == want.task_id
        assert got.dsc == pytest.approx(want.dsc, abs=5e-7)  # 6-decimal file precision


def test_detect_format(tmp_path):
    per_case = tmp_path / "a.csv"
    per_case.write_text("task_id,method_id,case_id,dsc\n")
    pairs = tmp_path / "b.csv"
    pairs.write_text("dsc_mean_pct,sd_pct\n")
    assert detect_training_format(per_case) == "per_case"
    assert detect_training_format(pairs) == "pairs"


def test_detect_rejects_unknown_header(tmp_path):
    bad = tmp_path / "c.csv"
    bad.write_text("mean,sd\n0.9,0.1\n")
    with pytest.raises(DataFormatError):
        detect_training_format(bad)


def test_empty_file(tmp_path):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    with pytest.raises(DataFormatError) as info:
        detect_training_format(empty)
    assert info.value.line == 1


def test_header_only_per_case(tmp_path):
    path = tmp_path / "cases.csv"
    path.write_text("task_id,method_id,case_id,dsc\n")
    with pytest.raises(DataFormatError):
        read_per_case_csv(path)


def test_bad_number_reports_line(tmp_path):
    path = tmp_path / "cases.csv"
    path.write_text("task_id,method_id,case_id,dsc\nt,m,c,0.5\nt,m,c2,oops\n")
    with pytest.raises(DataFormatError) as info:
        read_per_case_csv(path)
    assert info.value.line == 3
    assert "dsc" in str(info.value)


def test_out_of_range_dsc(tmp_path):
    path = tmp_path / "cases.csv"
    path.write_text("task_id,method_id,case_id,dsc\nt,m,c,1.5\n")
    with pytest.raises(DataFormatError) as info:
        read_per_case_csv(path)
    assert info.value.line == 2


def test_pairs_csv(tmp_path):
    path = tmp_path / "pairs.csv"
    path.write_text("dsc_mean_pct,sd_pct\n80.0,14.142136\n90.0,8.0\n")
    pairs = read_pairs_csv(path)
    assert len(pairs) == 2
    assert pairs[0].dsc_mean_pct == 80.0


def test_corpus_csv_grouping(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text(
        "paper_id,method_id,mean_dsc,test_n,sd\n"
        "p1,a,0.90,100,\n"
        "p1,b,0.85,100,0.07\n"
        "p2,a,0.70,30,\n"
    )
    papers = read_corpus_csv(path)
    assert [p.paper_id for p in papers] == ["p1", "p2"]
    assert papers[0].test_n == 100
    assert papers[0].methods[0].reported_sd is None
    assert papers[0].methods[1].reported_sd == 0.07


def test_corpus_csv_conflicting_test_n(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text(
        "paper_id,method_id,mean_dsc,test_n,sd\n"
        "p1,a,0.90,100,\n"
        "p1,b,0.85,90,\n"
    )
    with pytest.raises(DataFormatError) as info:
        read_corpus_csv(path)
    assert info.value.line == 3


def test_corpus_csv_invalid_mean(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text("paper_id,method_id,mean_dsc,test_n,sd\np1,a,1.90,100,\n")
    with pytest.raises(DataFormatError):
        read_corpus_csv(path)


def test_wrong_field_count(tmp_path):
    path = tmp_path / "corpus.csv"
    path.write_text("paper_id,method_id,mean_dsc,test_n,sd\np1,a,0.9\n")
    with pytest.raises(DataFormatError) as info:
        read_corpus_csv(path)
    assert info.value.line == 2


def test_calibration_csv(tmp_path):
    path = tmp_path / "cal.csv"
    path.write_text(
        "task_id,method_id,n,mean_dsc,observed_sd\nliver,unet,100,0.90,0.10\n"
    )
    rows = read_calibration_csv(path)
    assert rows == [("liver", "unet", 100, 0.90, 0.10)]


def test_calibration_csv_validation(tmp_path):
    path = tmp_path / "cal.csv"
    path.write_text("task_id,method_id,n,mean_dsc,observed_sd\nliver,unet,1,0.90,0.10\n")
    with pytest.raises(DataFormatError):
        read_calibration_csv(path)
