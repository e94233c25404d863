"""
DatasetGeneratorService - Laboratorio simulado: datasets con verdad oculta conocida.

Cada grupo (secuencia, configuración, QP) se codifica con 1..8 frames. Las
trazas se sintetizan frame a frame y los vectores FA/FS de n frames son la
acumulación de los n primeros, de modo que la diferenciación por frame es
exacta sin ruido. La energía "medida" sale del modelo oculto objetivo, con
ruido multiplicativo y, opcionalmente, el protocolo de repetición y las
trazas de potencia.
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from src.bitstream.application.services.feature_counting_service import FeatureCounter
from src.bitstream.application.services.trace_generation_service import TraceSynthesizer
from src.bitstream.domain.models.feature_vector import FeatureKind
from src.bitstream.domain.models.syntax_event import SliceType, StreamBegin
from src.energy_models.application.services.prediction_service import predict
from src.energy_models.domain.models.bitstream_meta import BitstreamMeta, MemCounts, PeCounts
from src.energy_models.domain.models.model_catalog import FEATURE_MODELS
from src.energy_models.domain.models.trained_model import TrainedModel
from src.fitting.domain.models.dataset import Dataset, DatasetRow, GroupKey
from src.shared.exceptions import ConfigInvalid, NonPositiveEnergy
from src.simlab.application.services.confidence_interval_service import simulate_measurement_series
from src.simlab.application.services.integration_service import (
    integrate_decoding_energy,
    synthesize_power_traces,
)
from src.simlab.domain.models.generator_config import GeneratorConfig
from src.simlab.domain.models.hidden_parameters import hidden_model
from src.simlab.domain.models.sequence_catalog import (
    CODING_CONFIGS,
    EVALUATION_SEQUENCES,
    SequenceSpec,
)

logger = logging.getLogger(__name__)

# Bits por píxel de un frame intra a QP 10; se reduce a la mitad cada 6 QP
_BPP_AT_QP10 = 3.0
_INTER_BITS_RATIO = 0.25

# Coste de decodificación por frame (modelo lineal en S y bits)
_TIME_PER_PIXEL = 1.2e-8
_TIME_PER_BIT = 3e-8
_TIME_PER_FRAME = 1e-3
_IF_PER_PIXEL, _IF_PER_BIT = 50.0, 200.0
_L1DM_PER_PIXEL, _L1DM_PER_BIT = 0.5, 3.0
_RA_PER_PIXEL, _RA_PER_BIT = 1.5, 4.0
_WA_PER_PIXEL, _WA_PER_BIT = 0.6, 1.0

# Trazas de potencia del laboratorio
_IDLE_POWER_W = 2.0
_POWER_PERIOD_S = 0.01
_POWER_MARGIN_S = 0.5


@dataclass(frozen=True)
class GeneratedDataset:
    dataset: Dataset
    truth: TrainedModel
    config: GeneratorConfig
    energy_true: Dict[str, float]


def _bits_per_pixel(qp: int) -> float:
    return _BPP_AT_QP10 * 2.0 ** (-(qp - 10) / 6.0)


def _slice_type(config: str, frame_index: int) -> SliceType:
    if config == "intra" or frame_index == 0:
        return SliceType.I
    return SliceType.P if config == "lowdelay_P" else SliceType.B


def _ctus_per_frame(sequence: SequenceSpec, size_range: Tuple[int, int]) -> int:
    """Escala log(S) de la tabla de secuencias a trace_size_range."""
    lo, hi = size_range
    sizes = [s.frame_size for s in EVALUATION_SEQUENCES]
    smallest, largest = math.log(min(sizes)), math.log(max(sizes))
    position = (math.log(sequence.frame_size) - smallest) / (largest - smallest)
    return int(round(lo + (hi - lo) * position))


def _group_plan(config: GeneratorConfig) -> List[Tuple[SequenceSpec, str, int]]:
    return [
        (sequence, coding, qp)
        for sequence in EVALUATION_SEQUENCES
        for coding in CODING_CONFIGS
        for qp in config.qps
    ]


class _GroupSimulator:
    """Acumula features y variables de un grupo frame a frame."""

    def __init__(self, sequence: SequenceSpec, coding: str, qp: int, config: GeneratorConfig, rng):
        self.sequence = sequence
        self.coding = coding
        self.qp = qp
        self.rng = rng
        self.synthesizer = TraceSynthesizer(rng)
        self.n_ctus = _ctus_per_frame(sequence, config.trace_size_range)
        self.counters = {
            kind: FeatureCounter(kind, fixed_point_log=config.fixed_point_log) for kind in FeatureKind
        }
        for counter in self.counters.values():
            counter.feed(StreamBegin())
        self.bits = 0.0
        self.intra_frames = 0
        self.decode_time = 0.0

    def next_frame(self, frame_index: int) -> Tuple[BitstreamMeta, Dict]:
        slice_type = _slice_type(self.coding, frame_index)
        for event in self.synthesizer.frame_events(slice_type, self.n_ctus):
            for counter in self.counters.values():
                counter.feed(event)

        S = self.sequence.frame_size
        intra = slice_type is SliceType.I
        frame_bits = S * _bits_per_pixel(self.qp) * (1.0 if intra else _INTER_BITS_RATIO)
        frame_bits *= self.rng.uniform(0.8, 1.2)
        self.bits += frame_bits
        self.intra_frames += int(intra)
        self.decode_time += _TIME_PER_PIXEL * S + _TIME_PER_BIT * frame_bits + _TIME_PER_FRAME

        n = frame_index + 1
        f = self.sequence.frame_rate
        meta = BitstreamMeta(
            frame_size=S,
            num_frames=n,
            frame_rate=f,
            qp=self.qp,
            bitrate=self.bits * f / n,
            bits_per_pixel=self.bits / (S * n),
            intra_fraction=self.intra_frames / n,
            decode_time=self.decode_time,
            pe_counts=PeCounts(
                _IF_PER_PIXEL * S * n + _IF_PER_BIT * self.bits,
                _L1DM_PER_PIXEL * S * n + _L1DM_PER_BIT * self.bits,
            ),
            mem_counts=MemCounts(
                _RA_PER_PIXEL * S * n + _RA_PER_BIT * self.bits,
                _WA_PER_PIXEL * S * n + _WA_PER_BIT * self.bits,
            ),
        )
        features = {kind: counter.result() for kind, counter in self.counters.items()}
        return meta, features


def _true_energy(truth: TrainedModel, meta: BitstreamMeta, features: Dict, stream_id: str) -> float:
    kind = FEATURE_MODELS.get(truth.model_id)
    energy = predict(truth, meta=meta, features=features.get(kind) if kind else None, row_id=stream_id)
    if not energy > 0:
        raise NonPositiveEnergy(energy, stream_id)
    return energy


def _measure(true_energy: float, meta: BitstreamMeta, config: GeneratorConfig, rng, stream_id: str) -> float:
    energy = true_energy
    if config.power_traces:
        duration = meta.decode_time
        total = duration + 2 * _POWER_MARGIN_S
        width = max(1, int(round(duration / _POWER_PERIOD_S)))
        p_dec, p_idle = synthesize_power_traces(
            idle_power=_IDLE_POWER_W,
            decode_power_extra=true_energy / (width * _POWER_PERIOD_S),
            start_s=_POWER_MARGIN_S,
            duration_s=width * _POWER_PERIOD_S,
            total_s=total,
            period_s=_POWER_PERIOD_S,
            noise_w=config.trace_noise_w,
            seed=int(rng.integers(2**31)),
        )
        energy = integrate_decoding_energy(p_dec, p_idle)
        if not energy > 0:
            raise NonPositiveEnergy(energy, stream_id)

    if config.measurement_protocol:
        record = simulate_measurement_series(
            true_energy=energy,
            noise_rel_sigma=config.noise_rel_sigma,
            seed=int(rng.integers(2**31)),
            alpha=config.alpha,
            beta=config.beta,
            max_m=config.max_m,
            drop_outliers=config.drop_outliers,
            stream_id=stream_id,
        )
        return record.mean

    if config.noise_rel_sigma > 0:
        noisy = 0.0
        while not noisy > 0:
            noisy = energy * (1.0 + config.noise_rel_sigma * rng.standard_normal())
        energy = noisy
    return energy


def dataset_capacity(config: GeneratorConfig) -> int:
    """Filas máximas: grupos × frames por grupo."""
    return len(_group_plan(config)) * config.frames_per_group


def generate_dataset(config: GeneratorConfig, n_rows: int) -> GeneratedDataset:
    """
    Genera `n_rows` filas recorriendo los grupos en orden (secuencia, configuración, QP)
    y, dentro de cada grupo, los frames 1..frames_per_group.

    Raises:
        ConfigInvalid: n_rows fuera de 1..(grupos × frames) o parámetros ocultos desconocidos
    """
    plan = _group_plan(config)
    capacity = dataset_capacity(config)
    if not 1 <= n_rows <= capacity:
        raise ConfigInvalid(f"n_rows={n_rows} fuera de 1..{capacity} para esta configuración")

    truth = hidden_model(config.target_model, config.hidden_params)
    rng = np.random.default_rng(config.seed)
    rows: List[DatasetRow] = []
    energy_true: Dict[str, float] = {}

    for sequence, coding, qp in plan:
        if len(rows) >= n_rows:
            break
        simulator = _GroupSimulator(sequence, coding, qp, config, rng)
        key = GroupKey(sequence=sequence.sequence_id, config=coding, qp=qp)
        for frame_index in range(config.frames_per_group):
            if len(rows) >= n_rows:
                break
            meta, features = simulator.next_frame(frame_index)
            stream_id = f"{key.sequence}_{coding}_qp{qp}_n{frame_index + 1}"
            true_energy = _true_energy(truth, meta, features, stream_id)
            rows.append(DatasetRow(
                stream_id=stream_id,
                meta=meta,
                energy=_measure(true_energy, meta, config, rng, stream_id),
                group_key=key,
                frame_count=frame_index + 1,
                features=features,
            ))
            energy_true[stream_id] = true_energy

    logger.info(
        f"🧪 Dataset sintético: {len(rows)} filas, modelo oculto {truth.model_id.value}, "
        f"ruido {config.noise_rel_sigma:.3g}, semilla {config.seed}"
    )
    return GeneratedDataset(
        dataset=Dataset(rows=tuple(rows), name="simulated"),
        truth=truth,
        config=config,
        energy_true=energy_true,
    )
