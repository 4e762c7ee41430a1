#!/usr/bin/env python3
# -*- coding:utf-8 -*-
# ================================================================================================ #
# Project    : Drowsy Lab                                                                          #
# Version    : 0.1.0                                                                               #
# Python     : 3.10.6                                                                              #
# Filename   : /conftest.py                                                                        #
# ------------------------------------------------------------------------------------------------ #
# Created    : Monday October 12th 2026 05:42:48 pm                                                #
# Modified   : Monday October 19th 2026 09:40:12 am                                                #
# ------------------------------------------------------------------------------------------------ #
# License    : MIT License                                                                         #
# ================================================================================================ #
import pytest
import numpy as np

from drowsy_lab import RANDOM_STATE
from drowsy_lab.container import DrowsyLab
from drowsy_lab.dataset.entity import DatasetBundle, EegSample, Trial
from drowsy_lab.dataset.synthetic import synth_generate, synth_generate_with_events
from drowsy_lab.model.config import ModelConfig, init_params
from drowsy_lab.training.trainer import fit

# ------------------------------------------------------------------------------------------------ #
FIXTURE_SUBJECTS = 4
FIXTURE_PER_CLASS = 100
FIXTURE_EPOCHS = 10
TINY = {"m": 3, "n": 10, "n1": 2, "l": 3}
# ------------------------------------------------------------------------------------------------ #


@pytest.fixture(scope="session")
def container():
    container = DrowsyLab()
    container.core.init_resources()
    yield container
    container.core.shutdown_resources()


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session")
def synthetic_events():
    """Four subjects with 100 samples per class, and the spindle bursts of every sample."""
    return synth_generate_with_events(FIXTURE_SUBJECTS, FIXTURE_PER_CLASS, seed=RANDOM_STATE)


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session")
def synthetic_bundle(synthetic_events):
    """Four subjects with 100 samples per class."""
    return synthetic_events[0]


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session")
def small_bundle():
    """Three subjects with ten samples per class."""
    return synth_generate(3, 10, seed=RANDOM_STATE)


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="module")
def tiny_config():
    return ModelConfig(**TINY)


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="module")
def tiny_params(tiny_config):
    return init_params(tiny_config, seed=RANDOM_STATE)


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="module")
def tiny_batch(tiny_config):
    rng = np.random.default_rng(RANDOM_STATE)
    X = rng.standard_normal((4, tiny_config.m, tiny_config.n))
    y = np.array([0, 1, 1, 0])
    return X, y


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="session")
def trained_model(synthetic_bundle):
    """Full network trained on subjects 1-3 of the synthetic bundle; subject 4 is unseen."""
    config = ModelConfig()
    train = synthetic_bundle.subset([1, 2, 3])
    params, report = fit(train, config, epochs=FIXTURE_EPOCHS, seed=RANDOM_STATE)
    return params, config, report


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="function")
def session_trials():
    """One session of 200 trials: quick responses with slow stretches every fourth block."""
    rng = np.random.default_rng(RANDOM_STATE)
    trials = []
    for index in range(200):
        slow = (index // 10) % 4 == 3
        rt = rng.uniform(2.0, 3.0) if slow else rng.uniform(0.5, 0.7)
        trials.append(
            Trial(
                subject_id=1,
                session_id=1,
                onset=8.0 * index,
                local_rt=rt,
                signal=rng.standard_normal((30, 384)),
            )
        )
    return trials


# ------------------------------------------------------------------------------------------------ #
@pytest.fixture(scope="function")
def make_bundle():
    """Builds a bundle from (subject, label) pairs with random signals."""

    def _make(pairs, kind="unbalanced", local_rts=None, seed=RANDOM_STATE):
        rng = np.random.default_rng(seed)
        samples = [
            EegSample(
                subject_id=subject,
                signal=rng.standard_normal((30, 384)),
                label=label,
                local_rt=None if local_rts is None else local_rts[index],
                session_id=1,
            )
            for index, (subject, label) in enumerate(pairs)
        ]
        return DatasetBundle(samples=samples, kind=kind)

    return _make
