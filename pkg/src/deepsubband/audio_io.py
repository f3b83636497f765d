"""Mono WAV read/write: 16-bit PCM or 32-bit IEEE float, fixed sample rate."""

from __future__ import annotations

import os

import numpy as np
from scipy.io import wavfile

from .stft import Waveform


def write_wav(path: str | os.PathLike, wav: Waveform, fmt: str = "float32") -> None:
    """Write a mono WAV file.

    ``fmt`` is "float32" (IEEE float, used for dataset files so composition
    identities survive the round trip) or "int16" (PCM, clipped to [-1, 1)).
    """
    if fmt == "float32":
        data = wav.samples.astype(np.float32)
    elif fmt == "int16":
        clipped = np.clip(wav.samples, -1.0, 32767.0 / 32768.0)
        data = np.round(clipped * 32768.0).astype(np.int16)
    else:
        raise ValueError(f"unsupported WAV format {fmt!r}; use 'float32' or 'int16'")
    wavfile.write(os.fspath(path), wav.sample_rate, data)


def read_wav(path: str | os.PathLike, expected_rate: int = 16000) -> Waveform:
    """Read a mono WAV file; rejects other sample rates (no resampling)."""
    rate, data = wavfile.read(os.fspath(path))
    if rate != expected_rate:
        raise ValueError(
            f"{path}: sample rate {rate} Hz, expected {expected_rate} Hz "
            "(resampling is not supported)"
        )
    if data.ndim != 1:
        raise ValueError(f"{path}: only mono WAV files are supported")
    if data.dtype == np.int16:
        samples = data.astype(np.float64) / 32768.0
    elif data.dtype == np.float32:
        samples = data.astype(np.float64)
    elif data.dtype == np.float64:
        samples = data
    else:
        raise ValueError(
            f"{path}: unsupported sample format {data.dtype}; "
            "use 16-bit PCM or 32-bit float"
        )
    return Waveform(samples, rate)
