"""Shared fixtures for the EFPM workbench test suite"""

import logging
from pathlib import Path

import numpy as np
import pytest

from dataset.measurements import embedded_dataset
from estimator.efpm import paper_models
from models.functions import DataFunction, FunctionKind, Project, TransactionalFunction
from regression.ols import fit_simple_ols
from utils.logging_config import HANDLER_NAME


GOLDEN_DIR = Path(__file__).parent / "golden"

KINDS = tuple(FunctionKind)

BILLING_SPEC = '''# sample project
project "Billing"
ilf "Customers" rets=2 dets=25
eif "Rates" rets=1 dets=4
ei "Add customer" ftrs=1 dets=12
eo "Monthly invoice" ftrs=3 dets=21
eq "Customer lookup" ftrs=1 dets=6
'''


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Keep ambient EFPM_* settings of the developer's shell out of the tests"""
    for name in ("EFPM_CONFIG", "EFPM_LOG_LEVEL", "EFPM_LOG_FORMAT",
                 "EFPM_PLOT_WIDTH", "EFPM_PLOT_HEIGHT", "EFPM_PLOT_MARKER_RADIUS"):
        monkeypatch.delenv(name, raising=False)
    yield
    # drop handlers bound to this test's captured stderr
    for handler in list(logging.root.handlers):
        if handler.get_name() == HANDLER_NAME:
            logging.root.removeHandler(handler)


@pytest.fixture
def golden():
    def read(name: str) -> str:
        return (GOLDEN_DIR / name).read_text(encoding="utf-8")
    return read


@pytest.fixture(scope="session")
def reference():
    return embedded_dataset()


@pytest.fixture(scope="session")
def cilf_fit(reference):
    return fit_simple_ols(reference.points("cilf"), predictor_name="CILF")


@pytest.fixture(scope="session")
def paper():
    return paper_models()


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def project_factory():
    """Build random valid projects from a numpy Generator"""

    def build(rng, name="Generated", prefix="f", max_functions=12) -> Project:
        data, transactions = [], []
        for index in range(int(rng.integers(0, max_functions + 1))):
            kind = KINDS[int(rng.integers(0, len(KINDS)))]
            label = f"{prefix}{index} {kind.keyword}"
            if kind.is_data:
                data.append(DataFunction(label, kind, int(rng.integers(1, 10)), int(rng.integers(1, 80))))
            else:
                transactions.append(TransactionalFunction(label, kind, int(rng.integers(0, 7)),
                                                          int(rng.integers(1, 30))))
        return Project(name, tuple(data), tuple(transactions))

    return build


@pytest.fixture
def billing_spec():
    return BILLING_SPEC


@pytest.fixture
def billing_file(tmp_path):
    path = tmp_path / "billing.fps"
    path.write_text(BILLING_SPEC, encoding="utf-8")
    return path
