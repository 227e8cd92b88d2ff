import numpy as np
import pytest

from sigkit.core import Signal, ToneSpec, generate_sinusoid, three_tone_demo


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def composite_demo():
    """1536-sample, fs=1600 three-tone signal with a 400 Hz transient."""
    return three_tone_demo()


def make_tone(freq, fs, n, amplitude=1.0, phase=0.0):
    return generate_sinusoid(ToneSpec(amplitude, freq, phase), fs, n)


def random_signal(rng, n, fs=1000.0):
    return Signal(rng.standard_normal(n), fs)
