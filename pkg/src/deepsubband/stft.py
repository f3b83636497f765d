"""STFT analysis/synthesis and compressed spectral features.

Analysis uses a periodic Hann window with 50% overlap and centered framing
(frame t is centered on sample t*hop).  Synthesis is weighted overlap-add
with window-square normalization, which reconstructs the input exactly up
to floating error on the retained region.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

DEFAULT_WINDOW_LEN = 320
DEFAULT_HOP = 160
DEFAULT_SAMPLE_RATE = 16000


def hann_periodic(length: int) -> np.ndarray:
    """Periodic Hann window; overlapping copies at hop=length/2 sum to 1."""
    return 0.5 - 0.5 * np.cos(2.0 * np.pi * np.arange(length) / length)


@dataclass(frozen=True)
class StftConfig:
    """Analysis/synthesis configuration.

    The hop is pinned to half the window length so the Hann window meets the
    constant-overlap-add condition and inversion is exact.
    """

    window_len: int = DEFAULT_WINDOW_LEN
    hop: int = DEFAULT_HOP
    sample_rate: int = DEFAULT_SAMPLE_RATE
    window: np.ndarray = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.window_len < 2 or self.window_len % 2 != 0:
            raise ValueError(f"window_len must be even and >= 2, got {self.window_len}")
        if self.hop != self.window_len // 2:
            raise ValueError(
                f"hop must be window_len/2 (50% overlap), got hop={self.hop} "
                f"for window_len={self.window_len}"
            )
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")
        if self.window is None:
            object.__setattr__(self, "window", hann_periodic(self.window_len))
        else:
            win = np.asarray(self.window, dtype=np.float64)
            if win.shape != (self.window_len,):
                raise ValueError("window length does not match window_len")
            object.__setattr__(self, "window", win)

    @property
    def n_bins(self) -> int:
        return self.window_len // 2 + 1

    @property
    def frames_per_second(self) -> float:
        return self.sample_rate / self.hop


@dataclass
class Waveform:
    """Mono time-domain signal with its sample rate."""

    samples: np.ndarray
    sample_rate: int

    def __post_init__(self):
        self.samples = np.asarray(self.samples, dtype=np.float64)
        if self.samples.ndim != 1:
            raise ValueError(f"waveform must be 1-D, got shape {self.samples.shape}")
        if self.samples.size < 1:
            raise ValueError("waveform must contain at least one sample")
        if not np.all(np.isfinite(self.samples)):
            raise ValueError("waveform contains non-finite samples")
        if self.sample_rate <= 0:
            raise ValueError(f"sample_rate must be positive, got {self.sample_rate}")

    def __len__(self) -> int:
        return self.samples.size

    @property
    def duration(self) -> float:
        return self.samples.size / self.sample_rate


@dataclass
class Spectrogram:
    """Complex time-frequency matrix, frames x bins, with its origin config."""

    data: np.ndarray
    config: StftConfig

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.complex128)
        if self.data.ndim != 2:
            raise ValueError(f"spectrogram must be 2-D, got shape {self.data.shape}")
        if self.data.shape[1] != self.config.n_bins:
            raise ValueError(
                f"spectrogram has {self.data.shape[1]} bins, config expects "
                f"{self.config.n_bins}"
            )
        if not np.all(np.isfinite(self.data)):
            raise ValueError("spectrogram contains non-finite entries")

    @property
    def n_frames(self) -> int:
        return self.data.shape[0]

    @property
    def n_bins(self) -> int:
        return self.data.shape[1]


@dataclass
class FeatureTensor:
    """Square-root-compressed spectral features, 2 channels x frames x bins.

    Channel 0 is sqrt(|X|)*cos(phase), channel 1 is sqrt(|X|)*sin(phase), so
    channel0^2 + channel1^2 recovers |X| per bin.
    """

    data: np.ndarray

    def __post_init__(self):
        self.data = np.asarray(self.data, dtype=np.float64)
        if self.data.ndim != 3 or self.data.shape[0] != 2:
            raise ValueError(f"features must have shape (2, T, F), got {self.data.shape}")

    @property
    def n_frames(self) -> int:
        return self.data.shape[1]

    @property
    def n_bins(self) -> int:
        return self.data.shape[2]


def _pad_centered(x: np.ndarray, pad: int) -> np.ndarray:
    # Reflection keeps spectral content smooth at the edges; signals shorter
    # than the pad cannot be reflected, so fall back to zeros there.
    if x.size > pad:
        return np.pad(x, pad, mode="reflect")
    return np.pad(x, pad, mode="constant")


def n_frames_for(num_samples: int, cfg: StftConfig) -> int:
    """Frame count produced by the analysis on a signal of given length."""
    return -(-num_samples // cfg.hop)


def stft(wav: Waveform, cfg: StftConfig) -> Spectrogram:
    """Forward STFT with centered framing.

    Frame t is centered on sample t*hop; T = ceil(len/hop) frames come out,
    each with window_len/2 + 1 one-sided bins.
    """
    if wav.sample_rate != cfg.sample_rate:
        raise ValueError(
            f"sample-rate mismatch: waveform {wav.sample_rate} Hz vs config "
            f"{cfg.sample_rate} Hz"
        )
    x = wav.samples
    if x.size == 0:
        raise ValueError("cannot transform an empty waveform")
    pad = cfg.window_len // 2
    padded = _pad_centered(x, pad)
    n_frames = n_frames_for(x.size, cfg)
    frames = np.lib.stride_tricks.sliding_window_view(padded, cfg.window_len)
    frames = frames[:: cfg.hop][:n_frames]
    data = np.fft.rfft(frames * cfg.window, axis=1)
    return Spectrogram(data, cfg)


def istft(spec: Spectrogram, cfg: StftConfig, n_samples: int | None = None) -> Waveform:
    """Inverse STFT via weighted overlap-add with window-square normalization.

    ``n_samples`` selects the output length; it must be consistent with the
    frame count (ceil(n_samples/hop) == T).  The default T*hop matches
    whole-hop inputs.
    """
    if spec.config != cfg:
        raise ValueError("spectrogram was produced under a different config")
    n_frames = spec.data.shape[0]
    if n_frames < 1:
        raise ValueError("spectrogram has no frames")
    if n_samples is None:
        n_samples = n_frames * cfg.hop
    if n_samples < 1 or n_frames_for(n_samples, cfg) != n_frames:
        raise ValueError(
            f"n_samples={n_samples} inconsistent with {n_frames} frames at hop {cfg.hop}"
        )
    pad = cfg.window_len // 2
    out_len = (n_frames - 1) * cfg.hop + cfg.window_len
    acc = np.zeros(out_len)
    norm = np.zeros(out_len)
    frames = np.fft.irfft(spec.data, n=cfg.window_len, axis=1) * cfg.window
    win_sq = cfg.window**2
    for t in range(n_frames):
        start = t * cfg.hop
        acc[start : start + cfg.window_len] += frames[t]
        norm[start : start + cfg.window_len] += win_sq
    region = slice(pad, pad + n_samples)
    return Waveform(acc[region] / norm[region], cfg.sample_rate)


def compress_features(spec: Spectrogram) -> FeatureTensor:
    """Map a complex spectrogram to square-root-compressed 2-channel features.

    Zero-magnitude bins map to (0, 0): the phase convention there is 0.
    """
    mag = np.abs(spec.data)
    root = np.sqrt(mag)
    # sqrt(|X|) * cos(phase) == Re(X)/sqrt(|X|); guard the zero bins.
    denom = np.where(mag > 0.0, root, 1.0)
    ch0 = np.where(mag > 0.0, spec.data.real / denom, 0.0)
    ch1 = np.where(mag > 0.0, spec.data.imag / denom, 0.0)
    return FeatureTensor(np.stack([ch0, ch1]))
