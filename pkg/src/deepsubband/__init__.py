"""Speech restoration with time-frequency masking and deep subband filtering."""

from .stft import (
    FeatureTensor,
    Spectrogram,
    StftConfig,
    Waveform,
    compress_features,
    istft,
    stft,
)

__all__ = [
    "FeatureTensor",
    "Spectrogram",
    "StftConfig",
    "Waveform",
    "compress_features",
    "istft",
    "stft",
]

__version__ = "0.1.0"
