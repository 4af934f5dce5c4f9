"""Tests for the efpm command line"""

import json
import xml.etree.ElementTree as ET

import pytest
from click.testing import CliRunner

from cli import __version__
from cli.main import cli, run
from dataset.measurements import embedded_dataset
from ingest.dataset_csv import save_csv


def invoke(capsys, *argv):
    status = run(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


@pytest.fixture
def reference_csv(tmp_path):
    path = tmp_path / "reference.csv"
    path.write_text(save_csv(embedded_dataset()), encoding="utf-8")
    return path


class TestCount:

    def test_text(self, capsys, billing_file):
        status, out, err = invoke(capsys, "count", str(billing_file))
        assert status == 0
        assert out.splitlines() == [
            "total_ufp 28",
            "ILF 1 10",
            "EIF 1 5",
            "EI 1 3",
            "EO 1 7",
            "EQ 1 3",
            "cilf 1",
            "cilfeif 2",
            "ceieoeq 3",
        ]
        assert err == ""

    def test_json(self, capsys, billing_file):
        status, out, _ = invoke(capsys, "count", str(billing_file), "--format", "json")
        data = json.loads(out)
        assert status == 0
        assert data["project"] == "Billing"
        assert data["total_ufp"] == 28
        assert data["per_kind"]["EO"] == {"count": 1, "subtotal": 7}

    def test_missing_header(self, capsys, tmp_path):
        path = tmp_path / "broken.fps"
        path.write_text('ilf "Customers" rets=2 dets=25\n', encoding="utf-8")
        status, out, err = invoke(capsys, "count", str(path))
        assert status == 1
        assert out == ""
        assert err.startswith(f"{path}:1:1: error: missing project header")

    def test_every_error_reported(self, capsys, tmp_path):
        path = tmp_path / "broken.fps"
        path.write_text('project "P"\nilf "A" rets=0 dets=1\nei "B" ftrs=1\n', encoding="utf-8")
        status, _, err = invoke(capsys, "count", str(path))
        assert status == 1
        assert [line.split(":")[1] for line in err.splitlines()] == ["2", "3"]

    def test_missing_file(self, capsys, tmp_path):
        status, _, err = invoke(capsys, "count", str(tmp_path / "absent.fps"))
        assert status == 1
        assert "absent.fps" in err


class TestEstimate:

    def test_intercept(self, capsys):
        status, out, _ = invoke(capsys, "estimate", "--cilf", "0")
        assert status == 0
        assert out.splitlines() == ["CILF 0 130.327 r2=0.718", "best CILF 130.327"]

    def test_all_counters(self, capsys):
        status, out, _ = invoke(capsys, "estimate", "--cilf", "10", "--cilfeif", "15", "--ceieoeq", "40")
        lines = out.splitlines()
        assert status == 0
        assert lines[0] == "CEIEOEQ 40 302.344 r2=0.869"
        assert [line.split()[0] for line in lines] == ["CEIEOEQ", "CILF", "CILFEIF", "best"]
        assert lines[-1] == "best CEIEOEQ 302.344"

    def test_interval(self, capsys):
        status, out, _ = invoke(capsys, "estimate", "--ceieoeq", "40", "--interval", "0.95")
        assert status == 0
        line = out.splitlines()[0]
        assert line.startswith("CEIEOEQ 40 302.344 r2=0.869 interval=")
        assert line.endswith("@0.95")

    def test_json(self, capsys):
        status, out, _ = invoke(capsys, "estimate", "--ceieoeq", "40", "--format", "json")
        data = json.loads(out)
        assert status == 0
        assert data["best"]["model"] == "CEIEOEQ"
        assert data["best"]["predicted_fp"] == pytest.approx(302.344)

    def test_recalibrated(self, capsys, reference_csv):
        status, out, _ = invoke(capsys, "estimate", "--cilf", "8", "--models", f"fit:{reference_csv}")
        assert status == 0
        assert out.splitlines()[0] == "CILF 8 257.540 r2=0.718"

    def test_no_counter(self, capsys):
        status, out, err = invoke(capsys, "estimate")
        assert status == 1
        assert out == ""
        assert "at least one counter" in err

    def test_inconsistent_counters(self, capsys):
        status, _, err = invoke(capsys, "estimate", "--cilf", "5", "--cilfeif", "3")
        assert status == 1
        assert "cilfeif" in err

    def test_bad_models_option(self, capsys):
        status, _, err = invoke(capsys, "estimate", "--cilf", "1", "--models", "other")
        assert status == 2
        assert "--models" in err


class TestFitAndReproduce:

    def test_fit_cilf(self, capsys):
        status, out, _ = invoke(capsys, "fit", "--x", "cilf")
        assert status == 0
        assert "130.327" in out
        assert "15.902" in out
        assert out.startswith("Summary of the model\n")

    def test_fit_writes_table(self, capsys, tmp_path):
        table = tmp_path / "cilf.tsv"
        status, _, _ = invoke(capsys, "fit", "--x", "ceieoeq", "--table", str(table))
        assert status == 0
        assert len(table.read_text(encoding="utf-8").splitlines()) == 61

    def test_fit_from_csv(self, capsys, reference_csv):
        status, out, _ = invoke(capsys, "fit", "--x", "cilfeif", "--dataset", str(reference_csv))
        assert status == 0
        assert "66.905" in out

    def test_fit_bad_csv(self, capsys, tmp_path):
        path = tmp_path / "bad.csv"
        path.write_text("project,fp,cilf,cilfeif,ceieoeq\n1,203.0,8,7,32\n", encoding="utf-8")
        status, _, err = invoke(capsys, "fit", "--x", "cilf", "--dataset", str(path))
        assert status == 1
        assert err.startswith(f"{path}:2:11: error: cilfeif < cilf")

    def test_reproduce(self, capsys):
        status, out, _ = invoke(capsys, "reproduce")
        checks = [line for line in out.splitlines() if line.startswith("n=")]
        assert status == 0
        assert out.count("Summary of the model") == 3
        assert checks == [
            "n=60 r2=0.718 r2_adj=0.713 check=0.713",
            "n=60 r2=0.679 r2_adj=0.673 check=0.673",
            "n=60 r2=0.869 r2_adj=0.867 check=0.867",
        ]


class TestDatasetAndConsistency:

    def test_export(self, capsys):
        status, out, _ = invoke(capsys, "dataset", "export")
        lines = out.splitlines()
        assert status == 0
        assert lines[:2] == ["project,fp,cilf,cilfeif,ceieoeq", "1,203.0,8,8,32"]
        assert len(lines) == 61

    def test_consistency(self, capsys):
        status, out, _ = invoke(capsys, "consistency")
        lines = out.splitlines()
        assert status == 0
        assert len(lines) == 31
        assert lines[8] == "9 216.0 227.0 0.04966"
        assert lines[-1] == "mean 0.13791"


class TestPlot:

    def test_plot(self, capsys, tmp_path):
        out_path = tmp_path / "cilf.svg"
        status, out, _ = invoke(capsys, "plot", "--x", "cilf", "--out", str(out_path))
        assert status == 0
        assert out == f"wrote {out_path} markers=60\n"
        root = ET.fromstring(out_path.read_bytes())
        (markers,) = [g for g in root.iter("{http://www.w3.org/2000/svg}g") if g.get("id") == "markers"]
        assert len(markers.findall(".//{http://www.w3.org/2000/svg}use")) == 60

    def test_plot_is_byte_identical(self, capsys, tmp_path):
        first, second = tmp_path / "a.svg", tmp_path / "b.svg"
        invoke(capsys, "plot", "--x", "ceieoeq", "--out", str(first))
        invoke(capsys, "plot", "--x", "ceieoeq", "--out", str(second))
        assert first.read_bytes() == second.read_bytes()

    def test_plot_size_from_environment(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("EFPM_PLOT_WIDTH", "800")
        out_path = tmp_path / "wide.svg"
        status, _, _ = invoke(capsys, "plot", "--x", "cilf", "--out", str(out_path))
        assert status == 0
        assert ET.fromstring(out_path.read_bytes()).get("width") == "800pt"

    def test_bad_settings(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("EFPM_PLOT_WIDTH", "wide")
        status, _, err = invoke(capsys, "plot", "--x", "cilf", "--out", str(tmp_path / "x.svg"))
        assert status == 1
        assert "plot.width" in err


class TestClassify:

    @pytest.mark.parametrize("argv, expected", [
        (["ilf", "--rets", "3", "--dets", "51"], "ILF High 15"),
        (["eo", "--ftrs", "2", "--dets", "5"], "EO Low 4"),
        (["eq", "--ftrs", "4", "--dets", "3"], "EQ Average 4"),
    ])
    def test_lookup(self, capsys, argv, expected):
        status, out, _ = invoke(capsys, "classify", *argv)
        assert status == 0
        assert out == expected + "\n"

    def test_wrong_attribute_is_usage_error(self, capsys):
        status, _, _ = invoke(capsys, "classify", "ilf", "--ftrs", "1", "--dets", "5")
        assert status == 2

    def test_out_of_range_is_validation_error(self, capsys):
        status, _, err = invoke(capsys, "classify", "ei", "--ftrs", "1", "--dets", "0")
        assert status == 1
        assert "dets" in err


class TestUsage:

    def test_unknown_subcommand(self, capsys):
        status, _, err = invoke(capsys, "tally")
        assert status == 2
        assert "Usage:" in err

    def test_unknown_flag(self, capsys):
        status, _, _ = invoke(capsys, "fit", "--x", "cilf", "--verbose")
        assert status == 2

    def test_bad_choice(self, capsys):
        status, _, _ = invoke(capsys, "fit", "--x", "eif")
        assert status == 2

    def test_version(self, capsys):
        status, out, _ = invoke(capsys, "--version")
        assert status == 0
        assert out == f"efpm {__version__}\n"

    @pytest.mark.parametrize("argv", [["--help"], ["estimate", "--help"], ["dataset", "export", "--help"]])
    def test_help(self, argv):
        result = CliRunner().invoke(cli, argv)
        assert result.exit_code == 0
        assert "Usage:" in result.output
