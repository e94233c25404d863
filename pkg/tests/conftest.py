"""
Fixtures compartidas de la suite.
"""

import tempfile
from pathlib import Path

import pytest

from src.bitstream.application.services.trace_generation_service import generate_random_trace
from src.simlab.application.services.dataset_generator_service import generate_dataset
from src.simlab.domain.models.generator_config import build_generator_config


@pytest.fixture
def temp_dir():
    """Directorio temporal para archivos de prueba."""
    with tempfile.TemporaryDirectory() as tmpdir:
        yield Path(tmpdir)


@pytest.fixture(scope="session")
def random_traces():
    """Cincuenta trazas aleatorias deterministas de tamaño variado."""
    return [generate_random_trace(seed, size_hint=20 + 7 * seed) for seed in range(50)]


@pytest.fixture(scope="session")
def noiseless_fs_dataset():
    """Dataset sintético sin ruido generado por el modelo FS oculto (500 filas)."""
    return generate_dataset(build_generator_config(seed=7, target_model="FS"), n_rows=500)
