"""
Tests del laboratorio simulado: integración de potencia, protocolo de
mediciones, generador de datasets y sus repositorios.
"""

import math

import numpy as np
import pytest
from scipy import stats

from src.energy_models.domain.models.trained_model import ModelId
from src.fitting.application.services.linear_fit_service import fit_linear_relative
from src.fitting.infrastructure.data.csv_dataset_repository import CsvDatasetRepository
from src.shared.exceptions import (
    ConfigInvalid,
    DomainError,
    MalformedLine,
    MismatchedTraces,
    NonPositiveMean,
    TooFewSamples,
)
from src.shared.run_config import build_run_config
from src.shared.utils.json_encoder import write_json
from src.simlab.application.services.confidence_interval_service import (
    ci_stop_decision,
    simulate_measurement_series,
    student_t_critical,
)
from src.simlab.application.services.dataset_generator_service import dataset_capacity, generate_dataset
from src.simlab.application.services.integration_service import (
    integrate_decoding_energy,
    synthesize_power_traces,
)
from src.simlab.application.use_cases.integrate_energy_use_case import (
    IntegrateEnergyRequest,
    IntegrateEnergyUseCase,
)
from src.simlab.application.use_cases.simulate_dataset_use_case import (
    SimulateDatasetRequest,
    SimulateDatasetUseCase,
)
from src.simlab.domain.models.generator_config import build_generator_config
from src.simlab.domain.models.measurement_record import MeasurementRecord
from src.simlab.domain.models.power_trace import PowerTrace
from src.simlab.domain.models.sequence_catalog import RESOLUTIONS
from src.simlab.infrastructure.controllers.simlab_controller import generator_config_from_run
from src.simlab.infrastructure.data.csv_power_trace_repository import CsvPowerTraceRepository
from src.simlab.infrastructure.data.json_truth_repository import FORMAT_TAG, JsonTruthRepository


def record(mean: float, stddev: float, m: int) -> MeasurementRecord:
    return MeasurementRecord(stream_id="s", samples=(), mean=mean, stddev=stddev, m=m)


def bump_traces(extra: float = 0.5):
    """Meseta de 21.5 s sobre 2 W de reposo, muestreada cada 0.5 s."""
    return synthesize_power_traces(
        idle_power=2.0,
        decode_power_extra=extra,
        start_s=0.5,
        duration_s=21.5,
        total_s=23.0,
        period_s=0.5,
    )


# ========================================
# INTEGRACIÓN DE POTENCIA
# ========================================

class TestIntegration:

    def test_identical_traces(self):
        trace = PowerTrace(0.1, (1.0, 2.0, 3.0, 2.5))
        assert integrate_decoding_energy(trace, trace) == 0.0

    def test_rectangular_bump(self):
        p_dec, p_idle = bump_traces()
        assert integrate_decoding_energy(p_dec, p_idle) == pytest.approx(10.75, rel=1e-12)

    def test_linear_in_the_extra_power(self):
        single = integrate_decoding_energy(*bump_traces(0.5))
        double = integrate_decoding_energy(*bump_traces(1.0))
        assert double == pytest.approx(2 * single, rel=1e-12)

    def test_piecewise_linear_matches_refined_sum(self):
        rng = np.random.default_rng(8)
        period = 0.02
        dec = rng.uniform(1.0, 4.0, 301)
        idle = rng.uniform(0.5, 1.5, 301)
        energy = integrate_decoding_energy(PowerTrace(period, tuple(dec)), PowerTrace(period, tuple(idle)))

        # Suma de punto medio sobre una rejilla 100 veces más fina
        grid = np.arange(301) * period
        midpoints = (np.arange(300 * 100) + 0.5) * (period / 100)
        oracle = float(np.sum(np.interp(midpoints, grid, dec - idle)) * (period / 100))
        assert energy == pytest.approx(oracle, rel=1e-6)

    def test_different_periods(self):
        with pytest.raises(MismatchedTraces):
            integrate_decoding_energy(PowerTrace(0.1, (1.0, 1.0)), PowerTrace(0.2, (1.0, 1.0)))

    def test_different_lengths(self):
        with pytest.raises(MismatchedTraces):
            integrate_decoding_energy(PowerTrace(0.1, (1.0, 1.0, 1.0)), PowerTrace(0.1, (1.0, 1.0)))

    def test_noisy_traces_are_seeded(self):
        kwargs = dict(
            idle_power=2.0, decode_power_extra=0.5, start_s=0.5, duration_s=5.0,
            total_s=6.0, period_s=0.01, noise_w=0.05, seed=4,
        )
        first = integrate_decoding_energy(*synthesize_power_traces(**kwargs))
        second = integrate_decoding_energy(*synthesize_power_traces(**kwargs))
        assert first == second
        assert first == pytest.approx(2.5, rel=0.05)

    def test_bump_must_fit(self):
        with pytest.raises(MismatchedTraces):
            synthesize_power_traces(2.0, 0.5, start_s=5.0, duration_s=5.0, total_s=6.0, period_s=0.5)


# ========================================
# PROTOCOLO DE MEDICIONES
# ========================================

class TestStudentT:

    @pytest.mark.parametrize("dof,expected", [(9, 3.24984), (11, 3.10581), (1_000_000, 2.57583)])
    def test_critical_values(self, dof, expected):
        assert student_t_critical(0.99, dof) == pytest.approx(expected, abs=1e-4)

    @pytest.mark.parametrize("alpha,dof", [(0.0, 5), (1.0, 5), (-0.5, 5), (0.99, 0)])
    def test_domain(self, alpha, dof):
        with pytest.raises(DomainError):
            student_t_critical(alpha, dof)


class TestCiStopDecision:

    def test_zero_variance_accepts(self):
        decision = ci_stop_decision(record(5.0, 0.0, 2))
        assert decision.accepted
        assert decision.delta_c == 0.0

    def test_ten_samples_rejected(self):
        decision = ci_stop_decision(record(100.0, 1.0, 10), alpha=0.99, beta=0.02)
        assert decision.delta_c == pytest.approx(2.0555, abs=1e-3)
        assert not decision.accepted

    def test_twelve_samples_accepted(self):
        decision = ci_stop_decision(record(100.0, 1.0, 12), alpha=0.99, beta=0.02)
        assert decision.delta_c == pytest.approx(1.7932, abs=1e-3)
        assert decision.accepted

    def test_monotone_in_sigma(self):
        decisions = [ci_stop_decision(record(100.0, sigma, 12)).accepted for sigma in np.linspace(0.0, 3.0, 61)]
        first_reject = decisions.index(False)
        assert not any(decisions[first_reject:])

    def test_too_few_samples(self):
        with pytest.raises(TooFewSamples):
            ci_stop_decision(record(1.0, 0.0, 1))

    @pytest.mark.parametrize("mean", [0.0, -3.0])
    def test_non_positive_mean(self, mean):
        with pytest.raises(NonPositiveMean):
            ci_stop_decision(record(mean, 1.0, 5))

    def test_matches_direct_recomputation_from_samples(self):
        rng = np.random.default_rng(1000)
        for i in range(1000):
            m = int(rng.integers(2, 40))
            samples = rng.uniform(1.0, 2.0) * (1.0 + rng.uniform(0.0, 0.05) * rng.standard_normal(m))
            alpha = float(rng.choice([0.9, 0.95, 0.99]))
            mean = math.fsum(samples) / m
            s = math.sqrt(math.fsum((x - mean) ** 2 for x in samples) / (m - 1))
            expected = 2.0 * s / math.sqrt(m) * stats.t.ppf(1.0 - (1.0 - alpha) / 2.0, m - 1)

            decision = ci_stop_decision(MeasurementRecord.from_samples(f"s{i}", samples), alpha=alpha, beta=0.02)
            assert decision.delta_c == pytest.approx(expected, rel=1e-9)
            if abs(expected - 0.02 * mean) > 1e-9 * mean:
                assert decision.accepted == (expected < 0.02 * mean)


class TestMeasurementSeries:

    def test_no_noise_stops_at_two(self):
        series = simulate_measurement_series(true_energy=3.5, noise_rel_sigma=0.0, seed=1)
        assert series.m == 2
        assert series.accepted
        assert series.mean == 3.5

    def test_deterministic(self):
        first = simulate_measurement_series(1.0, 0.01, seed=12)
        second = simulate_measurement_series(1.0, 0.01, seed=12)
        assert first.samples == second.samples
        assert first.accepted == second.accepted

    def test_cap_on_measurements(self):
        series = simulate_measurement_series(1.0, 0.5, seed=3, max_m=5)
        assert series.m == 5
        assert not series.accepted

    def test_accepted_series_meets_the_criterion(self):
        series = simulate_measurement_series(2.0, 0.02, seed=6, alpha=0.99, beta=0.02)
        assert series.accepted
        assert series.delta_c < 0.02 * series.mean
        assert len(series.samples) == series.m

    def test_outlier_rejection_keeps_the_cap(self):
        series = simulate_measurement_series(1.0, 0.05, seed=2, max_m=30, drop_outliers=True)
        assert 2 <= series.m <= 30

    def test_coverage(self):
        runs = 1000
        hits = sum(
            abs(simulate_measurement_series(1.0, 0.005, seed=seed).mean - 1.0) <= 0.01
            for seed in range(runs)
        )
        stderr = math.sqrt(0.99 * 0.01 / runs)
        assert hits / runs >= 0.99 - 3 * stderr


# ========================================
# GENERADOR
# ========================================

class TestGenerator:

    def test_default_capacity(self):
        assert dataset_capacity(build_generator_config(seed=0)) == 960

    def test_same_seed_same_dataset(self):
        config = build_generator_config(seed=5, noise_rel_sigma=0.02)
        first = generate_dataset(config, n_rows=40)
        second = generate_dataset(config, n_rows=40)
        assert first.dataset.rows == second.dataset.rows
        assert first.energy_true == second.energy_true

    def test_seed_changes_dataset(self):
        first = generate_dataset(build_generator_config(seed=5), n_rows=16)
        second = generate_dataset(build_generator_config(seed=6), n_rows=16)
        assert first.dataset.energies().tolist() != second.dataset.energies().tolist()

    def test_rows_and_groups(self, noiseless_fs_dataset):
        dataset = noiseless_fs_dataset.dataset
        assert len(dataset) == 500
        assert [row.frame_count for row in dataset.rows[:8]] == list(range(1, 9))
        assert len({row.group_key for row in dataset.rows[:8]}) == 1
        for row in dataset:
            assert row.meta.frame_size in {w * h for w, h in RESOLUTIONS}
            assert row.meta.num_frames == row.frame_count
            assert row.energy > 0

    def test_noiseless_energy_is_the_truth(self, noiseless_fs_dataset):
        for row in noiseless_fs_dataset.dataset.rows[:50]:
            assert row.energy == noiseless_fs_dataset.energy_true[row.stream_id]

    def test_noiseless_fit_recovers_truth(self, noiseless_fs_dataset):
        result = fit_linear_relative(noiseless_fs_dataset.dataset, ModelId.FS)
        np.testing.assert_allclose(
            result.model.param_vector(), noiseless_fs_dataset.truth.param_vector(), rtol=1e-6
        )

    def test_power_trace_measurement(self):
        config = build_generator_config(seed=2, power_traces=True)
        generated = generate_dataset(config, n_rows=8)
        for row in generated.dataset:
            assert row.energy == pytest.approx(generated.energy_true[row.stream_id], rel=1e-9)

    def test_measurement_protocol(self):
        config = build_generator_config(seed=2, measurement_protocol=True, noise_rel_sigma=0.01)
        generated = generate_dataset(config, n_rows=8)
        for row in generated.dataset:
            assert row.energy == pytest.approx(generated.energy_true[row.stream_id], rel=0.05)

    @pytest.mark.parametrize("n_rows", [0, 961])
    def test_row_count_out_of_range(self, n_rows):
        with pytest.raises(ConfigInvalid):
            generate_dataset(build_generator_config(seed=0), n_rows=n_rows)

    @pytest.mark.parametrize("values", [
        {},
        {"seed": 1, "qps": [11]},
        {"seed": 1, "noise_rel_sigma": -0.1},
        {"seed": 1, "trace_size_range": [5, 2]},
        {"seed": 1, "unknown_field": 3},
    ])
    def test_invalid_config(self, values):
        with pytest.raises(ConfigInvalid):
            build_generator_config(values)

    def test_unknown_hidden_parameter(self):
        with pytest.raises(ConfigInvalid):
            generate_dataset(build_generator_config(seed=1, hidden_params={"nope": 1.0}), n_rows=4)

    @pytest.mark.parametrize("qps", [[10, 32, 45], [5, 50], [10, 15, 32]])
    def test_known_qp_sets(self, qps):
        assert build_generator_config({"seed": 1, "qps": qps}).qps == tuple(qps)

    def test_default_qps_are_validated(self):
        config = build_generator_config(seed=1)
        assert config.qps == (10, 32, 45)
        assert build_generator_config({"seed": 1, "qps": list(config.qps)}) == config

    def test_recorded_config_regenerates_the_dataset(self):
        config = build_generator_config(seed=6, noise_rel_sigma=0.02, target_model="T", hidden_params={"E_0": 0.1})
        generated = generate_dataset(config, n_rows=12)
        recorded = build_generator_config(config.model_dump(mode="json"))
        assert recorded == config
        again = generate_dataset(recorded, n_rows=12)
        assert again.dataset.rows == generated.dataset.rows


# ========================================
# REPOSITORIOS Y CASOS DE USO
# ========================================

class TestPowerTraceRepository:

    def test_save_and_integrate(self, temp_dir):
        repository = CsvPowerTraceRepository()
        p_dec, p_idle = bump_traces()
        repository.save(p_dec, temp_dir / "dec.csv")
        repository.save(p_idle, temp_dir / "idle.csv")
        energy = IntegrateEnergyUseCase(repository).execute(
            IntegrateEnergyRequest(temp_dir / "dec.csv", temp_dir / "idle.csv")
        )
        assert energy == pytest.approx(10.75, rel=1e-9)

    def test_bad_header(self, temp_dir):
        path = temp_dir / "trace.csv"
        path.write_text("t,p\n0,1\n1,1\n", encoding="utf-8")
        with pytest.raises(MalformedLine):
            CsvPowerTraceRepository().load(path)

    def test_irregular_grid(self, temp_dir):
        path = temp_dir / "trace.csv"
        path.write_text("time_s,power_w\n0,1\n0.1,1\n0.3,1\n", encoding="utf-8")
        with pytest.raises(MismatchedTraces):
            CsvPowerTraceRepository().load(path)

    def test_single_sample(self, temp_dir):
        path = temp_dir / "trace.csv"
        path.write_text("time_s,power_w\n0,1\n", encoding="utf-8")
        with pytest.raises(MismatchedTraces):
            CsvPowerTraceRepository().load(path)


class TestSimulateUseCase:

    def test_writes_dataset_and_truth(self, temp_dir):
        use_case = SimulateDatasetUseCase(CsvDatasetRepository(), JsonTruthRepository())
        response = use_case.execute(SimulateDatasetRequest(
            config=build_generator_config(seed=3, target_model="H3"),
            n_rows=24,
            out_path=temp_dir / "lab.csv",
        ))
        assert response.truth_path == temp_dir / "lab.truth.json"

        loaded = CsvDatasetRepository().load(response.dataset_path)
        assert len(loaded) == 24
        np.testing.assert_allclose(loaded.energies(), response.generated.dataset.energies(), rtol=1e-15)

        document = JsonTruthRepository().load(response.truth_path)
        assert document["format"] == FORMAT_TAG
        assert document["target_model"] == "H3"
        assert set(document["energy_true"]) == set(loaded.stream_ids)

    def test_truth_config_can_be_replayed(self, temp_dir):
        use_case = SimulateDatasetUseCase(CsvDatasetRepository(), JsonTruthRepository())
        first = use_case.execute(SimulateDatasetRequest(
            config=build_generator_config(seed=8, noise_rel_sigma=0.01), n_rows=16, out_path=temp_dir / "a.csv",
        ))
        document = JsonTruthRepository().load(first.truth_path)
        assert document["generator_config"]["qps"] == [10, 32, 45]

        replay = use_case.execute(SimulateDatasetRequest(
            config=build_generator_config(document["generator_config"]), n_rows=16, out_path=temp_dir / "b.csv",
        ))
        assert replay.dataset_path.read_bytes() == first.dataset_path.read_bytes()


class TestGeneratorConfigFromRun:
    """Precedencia: opciones explícitas > JSON > valores por defecto."""

    def test_defaults_without_json(self):
        config = generator_config_from_run(build_run_config("simulate", {"seed": 4}))
        assert config.seed == 4
        assert config.noise_rel_sigma == 0.0
        assert config.target_model is ModelId.FS

    def test_json_values_survive_implicit_defaults(self, temp_dir):
        path = temp_dir / "gen.json"
        write_json(path, {"seed": 1, "noise_rel_sigma": 0.04, "target_model": "H2"})
        config = generator_config_from_run(build_run_config("simulate", {"inputs": [str(path)], "seed": 9}))
        assert config.seed == 9
        assert config.noise_rel_sigma == 0.04
        assert config.target_model is ModelId.H2

    def test_explicit_flags_win(self, temp_dir):
        path = temp_dir / "gen.json"
        write_json(path, {"seed": 1, "noise_rel_sigma": 0.04})
        run = build_run_config("simulate", {"inputs": [str(path)], "seed": 2, "noise": 0.01, "model_ids": ["t"]})
        config = generator_config_from_run(run)
        assert config.noise_rel_sigma == 0.01
        assert config.target_model is ModelId.T

    def test_invalid_json(self, temp_dir):
        path = temp_dir / "gen.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ConfigInvalid):
            generator_config_from_run(build_run_config("simulate", {"inputs": [str(path)], "seed": 2}))

    def test_json_must_be_an_object(self, temp_dir):
        path = temp_dir / "gen.json"
        write_json(path, [1, 2, 3])
        with pytest.raises(ConfigInvalid):
            generator_config_from_run(build_run_config("simulate", {"inputs": [str(path)], "seed": 2}))
