"""Low-pass FIR design by windowing the ideal (brick-wall) impulse response."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidCutoff, NoStopband
from .spectral import check_grid, half_spectrum, strict_local_minima, to_db
from .windows import Window, WindowSpec

DEFAULT_FILTER_NFFT = 2048


@dataclass(frozen=True, eq=False)
class FirFilter:
    taps: np.ndarray
    cutoff: float
    window_spec: WindowSpec

    @property
    def M(self) -> int:
        return len(self.taps) - 1


@dataclass(frozen=True)
class FilterMetrics:
    """Stopband figures of a designed filter, normalised to the DC gain.

    ``transition_start`` is in units of pi.
    """

    stopband_peak_db: float
    passband_ref_db: float
    transition_start: float


def _check_cutoff(cutoff: float) -> float:
    cutoff = float(cutoff)
    if not (0.0 < cutoff < math.pi):
        raise InvalidCutoff(f"cutoff must lie in (0, pi) rad, got {cutoff!r}")
    return cutoff


def ideal_lowpass(M: int, cutoff: float) -> np.ndarray:
    """Ideal low-pass response delayed by ``M/2``, truncated to ``n = 0..M``."""
    cutoff = _check_cutoff(cutoff)
    offset = np.arange(M + 1) - M / 2
    h = np.empty(M + 1)
    centre = offset == 0
    t = offset[~centre]
    h[~centre] = np.sin(cutoff * t) / (np.pi * t)
    h[centre] = cutoff / np.pi
    return h


def design_fir(window: Window, cutoff: float) -> FirFilter:
    """Taps ``h[n] = h_ideal[n] * w[n]``."""
    taps = ideal_lowpass(window.M, cutoff) * window.coefficients
    taps.flags.writeable = False
    return FirFilter(taps, float(cutoff), window.spec)


def response_db(filt: FirFilter, n_fft: int = DEFAULT_FILTER_NFFT) -> np.ndarray:
    """``|H(omega_k)|`` in dB relative to ``|H(0)|`` for ``k = 0..n_fft/2``."""
    n_fft = check_grid(n_fft, len(filt.taps))
    taps = filt.taps / np.max(np.abs(filt.taps))
    mag = half_spectrum(taps, n_fft)
    return to_db(mag, mag[0])


def filter_metrics(filt: FirFilter, n_fft: int = DEFAULT_FILTER_NFFT) -> FilterMetrics:
    db = response_db(filt, n_fft)
    # first grid index strictly above the cutoff
    first = int(math.floor(filt.cutoff / math.pi * n_fft / 2)) + 1
    minima = strict_local_minima(db, first)
    if len(minima) == 0:
        raise NoStopband("no local minimum of |H| beyond the cutoff")
    k = int(minima[0])
    return FilterMetrics(
        stopband_peak_db=float(db[k:].max()),
        passband_ref_db=0.0,
        transition_start=k * 2.0 / n_fft,
    )
