"""Tests for the embedded reference dataset, its CSV codec and rater consistency"""

from collections import Counter

import pytest

from dataset.consistency import consistency_stats, relative_difference
from dataset.measurements import MEASUREMENTS_PER_PROJECT, REFERENCE_PROJECTS, embedded_dataset
from ingest.dataset_csv import HEADER, load_csv, load_csv_file, save_csv
from models.errors import ParseFailure, ValidationError
from models.measurement import Dataset, MeasurementRecord

CSV_HEADER = ",".join(HEADER)


class TestEmbeddedDataset:

    def test_shape(self, reference):
        assert len(reference) == REFERENCE_PROJECTS * MEASUREMENTS_PER_PROJECT == 60
        per_project = Counter(record.project_id for record in reference)
        assert sorted(per_project) == list(range(1, 31))
        assert set(per_project.values()) == {2}

    def test_first_record(self, reference):
        assert reference.records[0] == MeasurementRecord(1, 203.0, 8, 8, 32)

    def test_project_27_row(self, reference):
        matches = [record for record in reference if record.project_id == 27 and record.fp == 719.0]
        assert matches == [MeasurementRecord(27, 719.0, 34, 47, 88)]

    def test_record_invariants(self, reference):
        assert all(record.fp > 0 and record.cilfeif >= record.cilf for record in reference)

    def test_column_sums(self, reference):
        assert sum(record.fp for record in reference) == pytest.approx(17297.0)
        assert sum(record.cilf for record in reference) == 596
        assert sum(record.cilfeif for record in reference) == 1019
        assert sum(record.ceieoeq for record in reference) == 2266

    def test_is_cached(self):
        assert embedded_dataset() is embedded_dataset()


class TestMeasurementRecord:

    def test_cilfeif_below_cilf(self):
        with pytest.raises(ValidationError) as excinfo:
            MeasurementRecord(1, 100.0, 5, 4, 10)
        assert excinfo.value.field == "cilfeif"

    @pytest.mark.parametrize("fp", [-1.0, float("nan"), float("inf")])
    def test_bad_fp(self, fp):
        with pytest.raises(ValidationError):
            MeasurementRecord(1, fp, 1, 1, 1)

    def test_project_id_must_be_positive(self):
        with pytest.raises(ValidationError):
            MeasurementRecord(0, 100.0, 1, 1, 1)

    def test_unknown_predictor(self):
        with pytest.raises(ValidationError):
            MeasurementRecord(1, 100.0, 1, 1, 1).counter("cei")


class TestCsv:

    def test_single_row(self):
        ds = load_csv(f"{CSV_HEADER}\n1,203.0,8,8,32\n")
        assert ds.records == (MeasurementRecord(1, 203.0, 8, 8, 32),)

    def test_crlf_and_blank_lines(self):
        ds = load_csv(f"{CSV_HEADER}\r\n1,203.0,8,8,32\r\n\r\n2,266,8,11,36\r\n")
        assert [record.project_id for record in ds] == [1, 2]
        assert ds.records[1].fp == 266.0

    def test_cilfeif_below_cilf_is_positioned(self):
        with pytest.raises(ParseFailure) as excinfo:
            load_csv(f"{CSV_HEADER}\n1,203.0,8,7,32\n")
        (error,) = excinfo.value.errors
        assert error.message == "cilfeif < cilf"
        assert (error.line, error.column) == (2, 11)

    def test_bad_header(self):
        with pytest.raises(ParseFailure) as excinfo:
            load_csv("id,fp,cilf,cilfeif,ceieoeq\n1,203.0,8,8,32\n")
        assert excinfo.value.errors[0].line == 1
        assert "bad header" in excinfo.value.errors[0].message

    def test_all_bad_cells_reported(self):
        source = f"{CSV_HEADER}\nx,203.0,8,8,32\n2,2o3,8,8,32\n3,100.0,8,8\n"
        with pytest.raises(ParseFailure) as excinfo:
            load_csv(source)
        positions = [(error.line, error.column) for error in excinfo.value.errors]
        assert positions == [(2, 1), (3, 3), (4, 1)]

    @pytest.mark.parametrize("separator", ["\x0c", "\x1c", "\x85", " "])
    def test_only_lf_ends_a_line(self, separator):
        source = f"{CSV_HEADER}\n1,203.0,8,8,32{separator}\n2,2o3,8,8,32\n"
        with pytest.raises(ParseFailure) as excinfo:
            load_csv(source)
        assert [(error.line, error.column) for error in excinfo.value.errors] == [(3, 3)]

    def test_bare_carriage_return_is_positioned(self):
        with pytest.raises(ParseFailure) as excinfo:
            load_csv(f"{CSV_HEADER}\n1,203.0\r,8,8,32\n2,2o3,8,8,32\n")
        errors = excinfo.value.errors
        assert [(error.line, error.column) for error in errors] == [(2, 1), (3, 3)]
        assert "malformed" in errors[0].message

    def test_digit_separators_rejected(self):
        with pytest.raises(ParseFailure) as excinfo:
            load_csv(f"{CSV_HEADER}\n1_0,2_03.0,8,8,32\n")
        assert [(error.line, error.column) for error in excinfo.value.errors] == [(2, 1), (2, 5)]

    @pytest.mark.parametrize("fp", ["2.03e2", "nan", "inf", "0x10", "1_000.5"])
    def test_fp_must_be_a_plain_decimal(self, fp):
        with pytest.raises(ParseFailure) as excinfo:
            load_csv(f"{CSV_HEADER}\n1,{fp},8,8,32\n")
        assert [(error.line, error.column) for error in excinfo.value.errors] == [(2, 3)]

    @pytest.mark.parametrize("fp, expected", [("266", 266.0), ("203.", 203.0), (".5", 0.5), ("+12.25", 12.25)])
    def test_plain_decimals_accepted(self, fp, expected):
        (record,) = load_csv(f"{CSV_HEADER}\n1,{fp},8,8,32\n")
        assert record.fp == expected

    def test_decimal_comma_rejected(self):
        with pytest.raises(ParseFailure):
            load_csv(f'{CSV_HEADER}\n1,"203,5",8,8,32\n')

    def test_empty_dataset_serializes_to_header(self):
        assert save_csv(Dataset()) == f"{CSV_HEADER}\n"

    def test_first_row_serialization(self, reference):
        assert save_csv(reference).splitlines()[1] == "1,203.0,8,8,32"

    def test_round_trip_embedded(self, reference):
        assert load_csv(save_csv(reference)) == reference

    def test_round_trip_generated(self, rng):
        for _ in range(20):
            rows = []
            for index in range(int(rng.integers(0, 15))):
                cilf = int(rng.integers(0, 40))
                fp = round(float(rng.uniform(0, 2000)), 1)
                rows.append((index + 1, fp, cilf, cilf + int(rng.integers(0, 20)), int(rng.integers(0, 120))))
            ds = Dataset.from_rows(rows)
            assert load_csv(save_csv(ds)) == ds

    def test_load_file(self, tmp_path, reference):
        path = tmp_path / "table.csv"
        path.write_text(save_csv(reference), encoding="utf-8")
        assert load_csv_file(path) == reference

    def test_file_errors_carry_name(self, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("nope\n", encoding="utf-8")
        with pytest.raises(ParseFailure) as excinfo:
            load_csv_file(path)
        assert excinfo.value.render()[0].startswith(f"{path}:1:1: error: bad header")


class TestConsistency:

    def test_relative_difference(self):
        assert relative_difference(216.0, 227.0) == pytest.approx(11 / 221.5)
        assert relative_difference(219.0, 240.0) == pytest.approx(21 / 229.5)
        assert relative_difference(150.0, 150.0) == 0.0
        assert relative_difference(0.0, 0.0) == 0.0

    def test_embedded_stats(self, reference):
        stats, mean = consistency_stats(reference)
        by_id = {stat.project_id: stat for stat in stats}
        assert [stat.project_id for stat in stats] == list(range(1, 31))
        assert by_id[9].rel_diff == pytest.approx(0.04966, abs=5e-6)
        assert by_id[6].rel_diff == pytest.approx(0.09150, abs=5e-6)
        assert mean == pytest.approx(0.1379071606, abs=1e-9)
        assert all(stat.rel_diff >= 0 for stat in stats)

    def test_order_independent(self, reference):
        reversed_ds = Dataset(tuple(reversed(reference.records)))
        _, mean = consistency_stats(reversed_ds)
        assert mean == pytest.approx(consistency_stats(reference)[1], rel=1e-12)

    def test_equal_measurements(self):
        stats, mean = consistency_stats(Dataset.from_rows([(1, 100.0, 1, 1, 1), (1, 100.0, 2, 2, 2)]))
        assert stats[0].rel_diff == 0.0
        assert mean == 0.0

    @pytest.mark.parametrize("rows", [
        [(1, 100.0, 1, 1, 1)],
        [(1, 100.0, 1, 1, 1), (1, 110.0, 1, 1, 1), (1, 120.0, 1, 1, 1)],
    ])
    def test_project_without_exactly_two_measurements(self, rows):
        with pytest.raises(ValidationError) as excinfo:
            consistency_stats(Dataset.from_rows(rows))
        assert "project 1" in str(excinfo.value)

    def test_empty_dataset(self):
        with pytest.raises(ValidationError):
            consistency_stats(Dataset())
