"""
IntegrateEnergyUseCase - Energía de decodificación a partir de dos trazas CSV.
"""

from dataclasses import dataclass
from pathlib import Path

from src.simlab.application.services.integration_service import integrate_decoding_energy
from src.simlab.domain.repositories.power_trace_repository import PowerTraceRepository


@dataclass
class IntegrateEnergyRequest:
    decode_trace_path: Path
    idle_trace_path: Path


class IntegrateEnergyUseCase:

    def __init__(self, trace_repository: PowerTraceRepository):
        self.trace_repository = trace_repository

    def execute(self, request: IntegrateEnergyRequest) -> float:
        p_dec = self.trace_repository.load(Path(request.decode_trace_path))
        p_idle = self.trace_repository.load(Path(request.idle_trace_path))
        return integrate_decoding_energy(p_dec, p_idle)
