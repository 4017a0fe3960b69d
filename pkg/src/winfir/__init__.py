"""Window functions, spectral lobe measurement and windowed low-pass FIR design."""

from .errors import (
    GridTooCoarse,
    InvalidCutoff,
    InvalidSpec,
    NoSidelobe,
    NoStopband,
    WinfirError,
)
from .fir import FilterMetrics, FirFilter, design_fir, filter_metrics, ideal_lowpass
from .special import bessel_i0, chebyshev_t, sinc_normalized
from .spectral import (
    LobeMetrics,
    MagnitudeSpectrum,
    analyze,
    dtft_direct,
    lobe_metrics,
    magnitude_spectrum,
)
from .windows import (
    Window,
    WindowKind,
    WindowSpec,
    bartlett,
    dolph_chebyshev,
    gaussian,
    generate,
    hamming,
    hanning,
    kaiser,
    lanczos,
    proposed_window,
    rectangular,
    window_ref9,
    window_ref15,
)

__version__ = "0.1.0"
