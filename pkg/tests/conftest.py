import numpy as np
import pytest

from deepsubband.stft import StftConfig, Waveform


@pytest.fixture
def cfg():
    return StftConfig()


@pytest.fixture
def tiny_cfg():
    # 5 bins, 4-sample hop: small enough for finite-difference sweeps.
    return StftConfig(window_len=8, hop=4, sample_rate=16000)


def random_waveform(seed, n=16000, rate=16000):
    rng = np.random.default_rng(seed)
    return Waveform(rng.standard_normal(n), rate)


def rel_err(a, b):
    """Norm-relative deviation of a from reference b."""
    a = np.asarray(a)
    b = np.asarray(b)
    denom = np.linalg.norm(b.ravel())
    if denom == 0.0:
        return np.linalg.norm(a.ravel())
    return np.linalg.norm((a - b).ravel()) / denom
