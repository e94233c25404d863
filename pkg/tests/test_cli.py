"""
Tests de extremo a extremo del CLI a través de main().
"""

import json

import pytest

from main import main
from src.bitstream.application.services.trace_generation_service import generate_random_trace
from src.bitstream.infrastructure.data.file_trace_repository import FileTraceRepository
from src.shared.exceptions import EXIT_DATA, EXIT_NUMERICAL, EXIT_OK, EXIT_USAGE
from src.simlab.application.services.integration_service import synthesize_power_traces
from src.simlab.infrastructure.data.csv_power_trace_repository import CsvPowerTraceRepository


@pytest.fixture
def simulated(temp_dir, capsys):
    """Dataset sintético de 160 filas escrito por `simulate`."""
    path = temp_dir / "lab.csv"
    assert main(["simulate", "--seed", "3", "--rows", "160", "--noise", "0.01", "--out", str(path)]) == EXIT_OK
    capsys.readouterr()
    return path


class TestSimulate:

    def test_prints_dataset_path_and_writes_truth(self, temp_dir, capsys):
        path = temp_dir / "out.csv"
        assert main(["simulate", "--seed", "1", "--rows", "16", "--out", str(path)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == str(path)
        assert path.exists()
        assert (temp_dir / "out.truth.json").exists()

    def test_same_seed_same_bytes(self, temp_dir):
        first, second = temp_dir / "a.csv", temp_dir / "b.csv"
        for path in (first, second):
            assert main(["simulate", "--seed", "9", "--rows", "24", "--noise", "0.03", "--out", str(path)]) == EXIT_OK
        assert first.read_bytes() == second.read_bytes()
        assert (temp_dir / "a.truth.json").read_bytes() == (temp_dir / "b.truth.json").read_bytes()

    def test_seed_is_required(self, temp_dir):
        assert main(["simulate", "--rows", "8", "--out", str(temp_dir / "x.csv")]) == EXIT_USAGE

    def test_generator_config_file(self, temp_dir):
        config_path = temp_dir / "gen.json"
        config_path.write_text(json.dumps({"seed": 1, "qps": [20]}), encoding="utf-8")
        out = temp_dir / "q.csv"
        assert main([
            "simulate", "--generator-config", str(config_path), "--seed", "2", "--rows", "8", "--out", str(out),
        ]) == EXIT_OK
        document = json.loads((temp_dir / "q.truth.json").read_text(encoding="utf-8"))
        assert document["generator_config"]["qps"] == [20]
        assert document["generator_config"]["seed"] == 2

    def test_invalid_generator_config(self, temp_dir):
        config_path = temp_dir / "gen.json"
        config_path.write_text(json.dumps({"seed": 1, "qps": [11]}), encoding="utf-8")
        assert main([
            "simulate", "--generator-config", str(config_path), "--seed", "2", "--out", str(temp_dir / "q.csv"),
        ]) == EXIT_DATA


class TestFitEstimate:

    def test_fit_then_estimate(self, simulated, temp_dir, capsys):
        model_path = temp_dir / "fs.model.json"
        assert main(["fit", str(simulated), "--model", "FS", "--out", str(model_path)]) == EXIT_OK
        assert capsys.readouterr().out.strip() == str(model_path)

        assert main(["estimate", str(model_path), str(simulated)]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert len(lines) == 160
        assert all(line.endswith(" J") and " FS " in line for line in lines)

    def test_trust_region_model_is_saved(self, simulated, temp_dir):
        model_path = temp_dir / "h3.model.json"
        # Sin convergencia el modelo se guarda igualmente y la salida es 3
        assert main(["fit", str(simulated), "--model", "H3", "--out", str(model_path)]) in (EXIT_OK, EXIT_NUMERICAL)
        document = json.loads(model_path.read_text(encoding="utf-8"))
        assert document["model_id"] == "H3"

    def test_unknown_model(self, simulated):
        assert main(["fit", str(simulated), "--model", "XYZ"]) == EXIT_USAGE

    def test_missing_dataset(self, temp_dir):
        assert main(["fit", str(temp_dir / "missing.csv"), "--model", "FS"]) == EXIT_DATA


class TestCvReport:

    def test_cv_then_report(self, simulated, temp_dir, capsys):
        reports = temp_dir / "reports"
        assert main([
            "cv", str(simulated), "--model", "FS,T", "--seed", "1", "--out", str(reports), "--system", "lab",
        ]) == EXIT_OK
        table = capsys.readouterr().out
        assert table == (reports / "report.txt").read_text(encoding="utf-8")
        assert table.splitlines()[0].split(" | ")[:3] == ["system", "FS", "T"]

        merged = temp_dir / "merged"
        assert main([
            "report", str(reports / "lab__FS.cv.json"), str(reports / "lab__T.cv.json"), "--out", str(merged),
        ]) == EXIT_OK
        assert capsys.readouterr().out == table
        assert (merged / "report.csv").exists()

    def test_cv_requires_seed(self, simulated):
        assert main(["cv", str(simulated), "--model", "FS"]) == EXIT_USAGE

    def test_cv_seed_from_config_file(self, simulated, temp_dir):
        run_config = temp_dir / "run.env"
        run_config.write_text("seed=4\nfolds=5\nmodel=T\n", encoding="utf-8")
        reports = temp_dir / "reports"
        assert main(["cv", str(simulated), "--config", str(run_config), "--out", str(reports)]) == EXIT_OK
        document = json.loads((reports / "lab__T.cv.json").read_text(encoding="utf-8"))
        assert document["seed"] == 4
        assert document["folds"] == 5


class TestExtractIntegrate:

    def test_extract_reports_corrupt_traces(self, temp_dir, capsys):
        good = FileTraceRepository().save(generate_random_trace(1, size_hint=60), temp_dir / "good.trace")
        bad = temp_dir / "bad.trace"
        bad.write_text("this is not a trace\n", encoding="utf-8")
        out = temp_dir / "features"

        assert main(["extract", str(good), str(bad), "--kind", "FS", "--out", str(out)]) == EXIT_DATA
        assert (out / "good.FS.csv").exists()
        assert capsys.readouterr().out.strip() == str(out / "good.FS.csv")

    def test_extract_missing_trace_does_not_abort(self, temp_dir, capsys):
        good = FileTraceRepository().save(generate_random_trace(2, size_hint=40), temp_dir / "good.trace")
        out = temp_dir / "features"
        assert main(["extract", str(temp_dir / "nope.trace"), str(good), "--out", str(out)]) == EXIT_DATA
        assert capsys.readouterr().out.strip() == str(out / "good.FS.csv")

    def test_integrate(self, temp_dir, capsys):
        repository = CsvPowerTraceRepository()
        p_dec, p_idle = synthesize_power_traces(2.0, 0.5, start_s=0.5, duration_s=21.5, total_s=23.0, period_s=0.5)
        repository.save(p_dec, temp_dir / "dec.csv")
        repository.save(p_idle, temp_dir / "idle.csv")
        assert main(["integrate", str(temp_dir / "dec.csv"), str(temp_dir / "idle.csv")]) == EXIT_OK
        assert capsys.readouterr().out.strip() == "10.75 J"

    def test_integrate_missing_file(self, temp_dir):
        assert main(["integrate", str(temp_dir / "a.csv"), str(temp_dir / "b.csv")]) == EXIT_DATA


class TestUsage:

    def test_no_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == EXIT_USAGE

    def test_unknown_flag(self):
        with pytest.raises(SystemExit) as exc:
            main(["integrate", "a.csv", "b.csv", "--bogus"])
        assert exc.value.code == EXIT_USAGE


class TestReproducibility:
    """Dos ejecuciones con las mismas entradas y semilla producen los mismos bytes."""

    @staticmethod
    def run_twice(capsys, temp_dir, make_args):
        outputs = []
        for run in ("uno", "dos"):
            out = temp_dir / run
            code = main(make_args(out))
            outputs.append((code, capsys.readouterr().out.replace(str(out), "<out>"), out))
        (code_a, stdout_a, out_a), (code_b, stdout_b, out_b) = outputs
        assert code_a == code_b
        assert stdout_a == stdout_b
        return out_a, out_b

    @staticmethod
    def same_files(first, second):
        names = sorted(p.relative_to(first) for p in first.rglob("*") if p.is_file())
        assert names
        assert names == sorted(p.relative_to(second) for p in second.rglob("*") if p.is_file())
        for name in names:
            assert (first / name).read_bytes() == (second / name).read_bytes(), name

    def test_fit(self, simulated, temp_dir, capsys):
        first, second = self.run_twice(capsys, temp_dir, lambda out: [
            "fit", str(simulated), "--model", "FS", "--seed", "5", "--out", str(out / "fs.model.json"),
        ])
        self.same_files(first, second)

    def test_estimate(self, simulated, temp_dir, capsys):
        model_path = temp_dir / "t.model.json"
        assert main(["fit", str(simulated), "--model", "T", "--out", str(model_path)]) == EXIT_OK
        capsys.readouterr()
        self.run_twice(capsys, temp_dir, lambda out: ["estimate", str(model_path), str(simulated)])

    def test_cv_and_report(self, simulated, temp_dir, capsys):
        first, second = self.run_twice(capsys, temp_dir, lambda out: [
            "cv", str(simulated), "--model", "T,H2", "--seed", "6", "--out", str(out / "cv"),
        ])
        self.same_files(first, second)

        reports = sorted(str(p) for p in (first / "cv").glob("*.cv.json"))
        merged_a, merged_b = self.run_twice(capsys, temp_dir / "merged", lambda out: [
            "report", *reports, "--out", str(out),
        ])
        self.same_files(merged_a, merged_b)

    def test_extract(self, temp_dir, capsys):
        repository = FileTraceRepository()
        traces = [
            str(repository.save(generate_random_trace(seed, size_hint=80), temp_dir / f"s{seed}.trace"))
            for seed in (1, 2)
        ]
        first, second = self.run_twice(capsys, temp_dir, lambda out: [
            "extract", *traces, "--kind", "FA", "--out", str(out),
        ])
        self.same_files(first, second)

    def test_integrate(self, temp_dir, capsys):
        repository = CsvPowerTraceRepository()
        p_dec, p_idle = synthesize_power_traces(
            2.0, 0.5, start_s=0.5, duration_s=21.5, total_s=23.0, period_s=0.5, noise_w=0.01, seed=3
        )
        repository.save(p_dec, temp_dir / "dec.csv")
        repository.save(p_idle, temp_dir / "idle.csv")
        self.run_twice(capsys, temp_dir, lambda out: [
            "integrate", str(temp_dir / "dec.csv"), str(temp_dir / "idle.csv"),
        ])
