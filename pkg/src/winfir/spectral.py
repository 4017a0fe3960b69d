"""Sampled magnitude spectra and lobe measurements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .errors import GridTooCoarse, NoSidelobe
from .windows import Window

DEFAULT_NFFT = 512
DB_FLOOR = -400.0

ArrayLike = Union[Window, Sequence[float], np.ndarray]


def _coefficients(window: ArrayLike) -> np.ndarray:
    if isinstance(window, Window):
        return window.coefficients
    return np.asarray(window, dtype=float)


def check_grid(n_fft: int, length: int) -> int:
    """Validate an FFT size for a sequence of ``length`` samples."""
    if isinstance(n_fft, bool) or int(n_fft) != n_fft or n_fft < 1:
        raise GridTooCoarse(f"n_fft must be a positive integer, got {n_fft!r}")
    n_fft = int(n_fft)
    if n_fft & (n_fft - 1):
        raise GridTooCoarse(f"n_fft must be a power of two, got {n_fft}")
    if n_fft < 4 * length:
        raise GridTooCoarse(
            f"n_fft={n_fft} is below 4*(M+1)={4 * length}; zero-padding too small"
        )
    return n_fft


def to_db(magnitude: np.ndarray, reference: float) -> np.ndarray:
    """``20*log10(magnitude/reference)``, with exact zeros pinned to ``DB_FLOOR``."""
    magnitude = np.asarray(magnitude, dtype=float)
    out = np.full(magnitude.shape, DB_FLOOR)
    nonzero = magnitude > 0
    out[nonzero] = 20.0 * np.log10(magnitude[nonzero] / reference)
    return out


@dataclass(frozen=True, eq=False)
class MagnitudeSpectrum:
    """Peak-normalised dB magnitude on ``omega_k = 2*pi*k/n_fft``, ``k = 0..n_fft/2``."""

    n_fft: int
    db: np.ndarray

    @property
    def omega_over_pi(self) -> np.ndarray:
        return np.arange(len(self.db)) * (2.0 / self.n_fft)

    @property
    def bin_width(self) -> float:
        """Grid spacing in units of pi."""
        return 2.0 / self.n_fft


@dataclass(frozen=True)
class LobeMetrics:
    """Main-lobe and side-lobe figures of merit; frequencies in units of pi."""

    halfwidth_3db: float
    fullwidth_3db: float
    first_null: float
    sidelobe_peak_db: float
    equiripple_spread_db: float


def half_spectrum(coefficients: np.ndarray, n_fft: int) -> np.ndarray:
    """Zero-padded DFT magnitudes for ``k = 0..n_fft/2``."""
    return np.abs(np.fft.rfft(coefficients, n_fft))


def magnitude_spectrum(window: ArrayLike, n_fft: int = DEFAULT_NFFT) -> MagnitudeSpectrum:
    w = _coefficients(window)
    n_fft = check_grid(n_fft, len(w))
    # unit-peak input keeps the result independent of the window's overall scale
    w = w / np.max(np.abs(w))
    mag = half_spectrum(w, n_fft)
    db = to_db(mag, mag.max())
    db.flags.writeable = False
    return MagnitudeSpectrum(n_fft, db)


def dtft_direct(window: ArrayLike, omega: float) -> float:
    """``|sum_n w[n] exp(-j*omega*n)|`` by explicit summation."""
    w = _coefficients(window)
    re = 0.0
    im = 0.0
    for n, value in enumerate(w):
        re += value * np.cos(omega * n)
        im -= value * np.sin(omega * n)
    return float(np.hypot(re, im))


def strict_local_minima(db: np.ndarray, start: int = 1) -> np.ndarray:
    """Interior indices ``k >= start`` with ``db[k-1] > db[k] < db[k+1]``."""
    start = max(start, 1)
    k = np.arange(start, len(db) - 1)
    return k[(db[k] < db[k - 1]) & (db[k] < db[k + 1])]


def strict_local_maxima(db: np.ndarray, start: int) -> np.ndarray:
    """Strict local maxima at or after ``start``.

    The last bin (omega = pi) counts when it exceeds its neighbour, since the
    spectrum of a real sequence is mirror-symmetric about pi.
    """
    start = max(start, 1)
    k = np.arange(start, len(db) - 1)
    peaks = list(k[(db[k] > db[k - 1]) & (db[k] > db[k + 1])])
    last = len(db) - 1
    if last >= start and db[last] > db[last - 1]:
        peaks.append(last)
    return np.array(peaks, dtype=int)


def lobe_metrics(spectrum: MagnitudeSpectrum) -> LobeMetrics:
    db = spectrum.db
    minima = strict_local_minima(db)
    if len(minima) == 0:
        raise NoSidelobe("no local minimum after the main lobe; use a finer grid")
    null = int(minima[0])
    below = np.nonzero(db[: null + 1] <= -3.0)[0]
    if len(below) == 0:
        raise NoSidelobe("main lobe never falls 3 dB before its first null")
    halfwidth = float(below[0] * spectrum.bin_width)
    peaks = strict_local_maxima(db, null)
    spread = float(db[peaks].max() - db[peaks].min()) if len(peaks) else 0.0
    return LobeMetrics(
        halfwidth_3db=halfwidth,
        fullwidth_3db=2.0 * halfwidth,
        first_null=float(null * spectrum.bin_width),
        sidelobe_peak_db=float(db[null:].max()),
        equiripple_spread_db=spread,
    )


def analyze(window: ArrayLike, n_fft: int = DEFAULT_NFFT) -> LobeMetrics:
    """Shortcut for ``lobe_metrics(magnitude_spectrum(window, n_fft))``."""
    return lobe_metrics(magnitude_spectrum(window, n_fft))
