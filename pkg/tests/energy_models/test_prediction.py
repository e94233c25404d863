"""
Tests de los nueve estimadores de energía.
"""

import numpy as np
import pytest

from src.bitstream.domain.models.feature_vector import FEATURE_CATALOG, FeatureId, FeatureKind, FeatureVector
from src.energy_models.application.services.prediction_service import (
    energy_breakdown,
    predict,
    predict_feature_linear,
    predict_h1t,
    predict_h2,
    predict_h2t,
    predict_h3,
    predict_ram,
    predict_time,
)
from src.energy_models.domain.models.bitstream_meta import BitstreamMeta, MemCounts, PeCounts
from src.energy_models.domain.models.model_catalog import MODEL_ARITY, variables_required
from src.energy_models.domain.models.trained_model import HingeDirection, HingeTerm, ModelId, TrainedModel
from src.shared.exceptions import (
    DataException,
    DimensionMismatch,
    DomainError,
    MissingVariables,
    NonPositiveNormalizer,
)


def make_meta(**overrides) -> BitstreamMeta:
    values = dict(
        frame_size=416 * 240,
        num_frames=4,
        frame_rate=30.0,
        qp=32,
        bitrate=1e6,
        bits_per_pixel=0.5,
        intra_fraction=0.25,
        decode_time=2.0,
        pe_counts=PeCounts(1e9, 2e6),
        mem_counts=MemCounts(3e6, 1e6),
    )
    values.update(overrides)
    return BitstreamMeta(**values)


class TestCatalog:
    """Aridades y variables requeridas."""

    def test_arities(self):
        assert MODEL_ARITY[ModelId.FA] == 90
        assert MODEL_ARITY[ModelId.FS] == 27
        assert MODEL_ARITY[ModelId.H1T] == 7
        assert MODEL_ARITY[ModelId.H3] == 4
        assert ModelId.PE not in MODEL_ARITY

    def test_fs_requirements(self):
        requirement = variables_required("FS")
        assert len(requirement.variables) == 27
        assert not requirement.execution_required

    def test_time_requirements(self):
        requirement = variables_required(ModelId.T)
        assert requirement.variables == {"t_dec"}
        assert requirement.execution_required

    def test_h3_requirements(self):
        assert variables_required(ModelId.H3).variables == {"b_pixel", "N", "S"}


class TestFeatureModels:
    """Σ n_i·e_i y desglose."""

    def test_linear_sum(self):
        vector = FeatureVector(FeatureKind.FS, {FeatureId("E_0"): 1, FeatureId("coeff"): 10})
        energies = np.zeros(27)
        energies[0] = 0.5
        energies[list(FEATURE_CATALOG[FeatureKind.FS]).index(FeatureId("coeff"))] = 0.01
        assert predict_feature_linear(vector, energies) == pytest.approx(0.6)

    def test_wrong_length(self):
        vector = FeatureVector(FeatureKind.FS, {FeatureId("E_0"): 1})
        with pytest.raises(DimensionMismatch):
            predict_feature_linear(vector, np.zeros(90))

    def test_fa_model_with_fs_vector(self):
        model = TrainedModel(ModelId.FA, [f.label for f in FEATURE_CATALOG[FeatureKind.FA]], np.ones(90))
        vector = FeatureVector(FeatureKind.FS, {FeatureId("E_0"): 1})
        with pytest.raises(DimensionMismatch):
            predict(model, features=vector)

    def test_breakdown_sorted_by_magnitude(self):
        names = [f.label for f in FEATURE_CATALOG[FeatureKind.FS]]
        params = np.zeros(27)
        params[names.index("coeff")] = 1e-3
        params[names.index("E_0")] = 2e-2
        params[names.index("Bs")] = -5e-2
        model = TrainedModel(ModelId.FS, names, params)
        vector = FeatureVector(FeatureKind.FS, {FeatureId("E_0"): 1, FeatureId("coeff"): 100, FeatureId("Bs"): 1})
        parts = energy_breakdown(vector, model)
        assert [fid.label for fid, _ in parts[:3]] == ["coeff", "Bs", "E_0"]
        assert sum(c for _, c in parts) == pytest.approx(predict(model, features=vector))

    @pytest.mark.parametrize("kind", [FeatureKind.FA, FeatureKind.FS])
    def test_homogeneity(self, kind):
        rng = np.random.default_rng(11)
        catalog = FEATURE_CATALOG[kind]
        energies = rng.normal(scale=1e-3, size=len(catalog))
        for _ in range(20):
            counts = rng.integers(0, 5000, size=len(catalog))
            k = int(rng.integers(0, 50))
            base = FeatureVector(kind, dict(zip(catalog, counts)))
            scaled = FeatureVector(kind, dict(zip(catalog, k * counts)))
            assert predict_feature_linear(scaled, energies) == pytest.approx(
                k * predict_feature_linear(base, energies), rel=1e-12, abs=1e-12
            )


class TestExecutionModels:
    """PE, M, T, H1T y H2T."""

    def test_time_zero(self):
        assert predict_time(make_meta(decode_time=0.0), E_0=0.3, P_mean=5.0) == 0.3

    def test_time_direct_substitution(self):
        assert predict_time(make_meta(decode_time=21.5), E_0=0.0, P_mean=0.5) == pytest.approx(10.75)

    def test_time_is_affine(self):
        once = predict_time(make_meta(decode_time=3.0), 0.7, 1.5)
        twice = predict_time(make_meta(decode_time=6.0), 0.7, 1.5)
        assert twice - once == pytest.approx(1.5 * 3.0)

    def test_time_without_decode_time(self):
        model = TrainedModel(ModelId.T, ("E_0", "P_mean"), (0.1, 1.0))
        with pytest.raises(MissingVariables):
            predict(model, meta=make_meta(decode_time=None), row_id="r1")

    def test_ram(self):
        meta = make_meta(mem_counts=MemCounts(10, 20))
        assert predict_ram(meta, 1.0, 0.5) == 20.0

    def test_h1t_zero_exponents(self):
        params = {"P_max": 3.0, "c_S": 0.0, "c_f": 0.0, "c_q": 0.0}
        normalizers = {"S_max": 1e6, "f_max": 60.0, "q_min": 10.0}
        assert predict_h1t(make_meta(), params, normalizers) == pytest.approx(6.0)

    def test_h1t_unit_ratios(self):
        meta = make_meta(frame_size=2560 * 1600, frame_rate=60.0, qp=10)
        params = {"P_max": 3.0, "c_S": 0.7, "c_f": -1.3, "c_q": 2.1}
        normalizers = {"S_max": 2560 * 1600, "f_max": 60.0, "q_min": 10.0}
        assert predict_h1t(meta, params, normalizers) == pytest.approx(6.0)

    def test_h1t_hand_evaluation(self):
        meta = make_meta()
        params = {"P_max": 2.0, "c_S": 0.5, "c_f": 0.25, "c_q": -0.5}
        normalizers = {"S_max": 2e6, "f_max": 50.0, "q_min": 8.0}
        expected = 2.0 * (meta.frame_size / 2e6) ** 0.5 * (30 / 50) ** 0.25 * (32 / 8) ** -0.5 * 2.0
        assert predict_h1t(meta, params, normalizers) == pytest.approx(expected)

    def test_h1t_non_positive_normalizer(self):
        params = {"P_max": 1.0, "c_S": 1.0, "c_f": 1.0, "c_q": 1.0}
        with pytest.raises(NonPositiveNormalizer):
            predict_h1t(make_meta(), params, {"S_max": 0.0, "f_max": 1.0, "q_min": 1.0})

    @pytest.mark.parametrize("overrides", [{"qp": 0}, {"qp": -4}, {"frame_rate": 0.0}, {"frame_rate": -30.0}])
    def test_h1t_non_positive_base(self, overrides):
        params = {"P_max": 1.0, "c_S": 0.5, "c_f": 0.5, "c_q": -0.5}
        normalizers = {"S_max": 1e6, "f_max": 60.0, "q_min": 10.0}
        with pytest.raises(DomainError):
            predict_h1t(make_meta(**overrides), params, normalizers)

    def test_h1t_zero_qp_through_dispatch(self):
        names = ("P_max", "c_S", "c_f", "c_q", "S_max", "f_max", "q_min")
        model = TrainedModel(ModelId.H1T, names, (1.0, 0.5, 0.5, -0.5, 1e6, 60.0, 10.0))
        with pytest.raises(DomainError):
            predict(model, meta=make_meta(qp=0))

    def test_h2t_intercept_only(self):
        meta = make_meta(intra_fraction=0.0, bitrate=0.0, decode_time=4.0)
        assert predict_h2t(meta, (1.0, 2.0, 3.0, 0.5)) == 2.0

    def test_h2t_all_ones(self):
        meta = make_meta(intra_fraction=1.0, bitrate=1.0, decode_time=1.0, num_frames=1)
        assert predict_h2t(meta, (1.0, 2.0, 3.0, 4.0)) == 10.0

    def test_mars(self):
        basis = (
            HingeTerm(None, HingeDirection.CONSTANT, None, 0.5),
            HingeTerm(0, HingeDirection.POSITIVE, 1e8, 1e-9),
            HingeTerm(1, HingeDirection.NEGATIVE, 3e6, 1e-6),
        )
        model = TrainedModel(ModelId.PE, ("B0", "B1", "B2"), (0.5, 1e-9, 1e-6), mars_basis=basis)
        expected = 0.5 + 1e-9 * (1e9 - 1e8) + 1e-6 * (3e6 - 2e6)
        assert predict(model, meta=make_meta()) == pytest.approx(expected)


class TestExecutionFreeModels:
    """H2 y H3."""

    def test_h2_intercept_only(self):
        meta = make_meta(bits_per_pixel=0.0, intra_fraction=0.0, num_frames=1, frame_size=100)
        assert predict_h2(meta, (9.0, 9.0, 9.0, 0.25)) == 25.0

    def test_h2_all_ones(self):
        meta = make_meta(bits_per_pixel=1.0, intra_fraction=1.0, num_frames=1, frame_size=1)
        assert predict_h2(meta, (1.0, 2.0, 3.0, 4.0)) == 10.0

    def test_h3_beta_zero(self):
        meta = make_meta(num_frames=2, frame_size=50)
        params = {"C": 1.0, "h3_alpha": 0.5, "h3_beta": 0.0, "gamma": 0.8}
        assert predict_h3(meta, params) == pytest.approx(1.0 + 100 * 0.5)

    def test_h3_direct_substitution(self):
        meta = make_meta(num_frames=1, frame_size=100, bits_per_pixel=0.5)
        params = {"C": 0.0, "h3_alpha": 0.0, "h3_beta": 1.0, "gamma": 1.0}
        assert predict_h3(meta, params) == pytest.approx(50.0)

    def test_h3_negative_gamma_at_zero_bits(self):
        meta = make_meta(bits_per_pixel=0.0)
        with pytest.raises(DomainError):
            predict_h3(meta, {"C": 0.0, "h3_alpha": 0.0, "h3_beta": 1.0, "gamma": -0.5})

    @pytest.mark.parametrize("alpha", [0.0, 0.3, 1.0])
    def test_h2_matches_h2t_without_intra_terms(self, alpha):
        S, N, f, b_pixel = 1920 * 1080, 48, 24.0, 0.07
        meta = make_meta(
            frame_size=S, num_frames=N, frame_rate=f, bits_per_pixel=b_pixel,
            bitrate=b_pixel * S * f, decode_time=N / f, intra_fraction=alpha,
        )
        c3, c4 = 2.5e-8, 4e-9
        h2 = predict_h2(meta, (0.0, 0.0, c3, c4))
        h2t = predict_h2t(meta, (0.0, 0.0, c3, c4 * S * f))
        assert h2 == pytest.approx(h2t, rel=1e-12)
        assert predict_h2t(meta, (0.0, 0.0, c3, c4)) != pytest.approx(h2, rel=1e-6)


class TestDomainObjects:
    """Validación de entidades."""

    def test_wrong_arity(self):
        with pytest.raises(DimensionMismatch):
            TrainedModel(ModelId.H3, ("C", "h3_alpha"), (1.0, 2.0))

    def test_h1t_normalizers_are_mirrored(self):
        names = ("P_max", "c_S", "c_f", "c_q", "S_max", "f_max", "q_min")
        model = TrainedModel(ModelId.H1T, names, (1, 0, 0, 0, 100, 30, 10))
        assert model.normalizers == {"S_max": 100.0, "f_max": 30.0, "q_min": 10.0}

    def test_intra_fraction_range(self):
        with pytest.raises(DataException):
            make_meta(intra_fraction=1.5)

    def test_hinge_requires_knot(self):
        with pytest.raises(DataException):
            HingeTerm(0, HingeDirection.POSITIVE, None, 1.0)
