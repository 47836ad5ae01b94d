import os
import sys

import pytest

# Añadir el directorio raíz al path para importar src
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.models.calibration import Calibration
from src.models.model_spec import ModelSpec


@pytest.fixture
def small_cal():
    return Calibration(1000, 0.6, 0.8, 1.0)


@pytest.fixture
def direct_model():
    return ModelSpec(ModelSpec.DIRECT)


@pytest.fixture(autouse=True)
def single_worker(monkeypatch):
    # Las pruebas corren en un solo proceso salvo que pidan otra cosa
    monkeypatch.setenv("RAREWEAK_THREADS", "1")
