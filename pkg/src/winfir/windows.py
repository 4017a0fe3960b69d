"""Window generators.

Every window has order ``M`` and ``M + 1`` coefficients indexed ``n = 0..M``,
symmetric about ``M / 2``.  Positions are computed as ``(2n - M) / M`` so that
``n`` and ``M - n`` map to exactly opposite arguments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import InvalidSpec
from .special import bessel_i0, chebyshev_t, sinc_normalized

__all__ = [
    "WindowKind",
    "WindowSpec",
    "Window",
    "generate",
    "rectangular",
    "proposed_window",
    "proposed_endpoint",
    "hamming",
    "hanning",
    "bartlett",
    "kaiser",
    "gaussian",
    "dolph_chebyshev",
    "lanczos",
    "window_ref9",
    "window_ref15",
]

# Orders above this use the polynomial endpoint value in the cos**5.3 window.
PROPOSED_SIMPLE_MAX_M = 19
PROPOSED_EXPONENT = 5.3


class WindowKind(enum.Enum):
    PROPOSED = "proposed"
    HAMMING = "hamming"
    HANNING = "hanning"
    BARTLETT = "bartlett"
    KAISER = "kaiser"
    GAUSSIAN = "gaussian"
    DOLPH_CHEBYSHEV = "dolphchebyshev"
    LANCZOS = "lanczos"
    REF9 = "ref9"
    REF15 = "ref15"
    RECTANGULAR = "rectangular"

    @classmethod
    def parse(cls, name: str) -> "WindowKind":
        """Case-insensitive lookup; ``-``, ``_`` and spaces are ignored."""
        key = name.strip().lower().replace("-", "").replace("_", "").replace(" ", "")
        for kind in cls:
            if kind.value == key:
                return kind
        known = ", ".join(k.value for k in cls)
        raise InvalidSpec(f"unknown window {name!r} (expected one of: {known})")


@dataclass(frozen=True)
class WindowSpec:
    """Window family, order and the tuning parameter the family needs."""

    kind: WindowKind
    M: int
    beta: Optional[float] = None
    sigma: Optional[float] = None
    L: Optional[int] = None
    sidelobe_db: Optional[float] = None

    def describe(self) -> str:
        """Short ``name=value`` text of the parameters relevant to ``kind``."""
        fields = {
            WindowKind.KAISER: ("beta", self.beta),
            WindowKind.GAUSSIAN: ("sigma", self.sigma),
            WindowKind.LANCZOS: ("L", self.L),
            WindowKind.DOLPH_CHEBYSHEV: ("sidelobe_db", self.sidelobe_db),
        }
        if self.kind not in fields:
            return ""
        name, value = fields[self.kind]
        return f"{name}={value:g}" if value is not None else ""


@dataclass(frozen=True, eq=False)
class Window:
    spec: WindowSpec
    coefficients: np.ndarray

    def __post_init__(self):
        coefficients = np.array(self.coefficients, dtype=float)
        coefficients.flags.writeable = False
        object.__setattr__(self, "coefficients", coefficients)

    @property
    def M(self) -> int:
        return self.spec.M

    def __len__(self) -> int:
        return len(self.coefficients)

    def __eq__(self, other):
        if not isinstance(other, Window):
            return NotImplemented
        return self.spec == other.spec and np.array_equal(
            self.coefficients, other.coefficients
        )

    def __hash__(self):
        return hash((self.spec, self.coefficients.tobytes()))


def _check_order(M) -> int:
    if isinstance(M, bool) or int(M) != M:
        raise InvalidSpec(f"window order M must be an integer, got {M!r}")
    if M < 2:
        raise InvalidSpec(f"window order M must be >= 2, got {M}")
    return int(M)


def _positions(M: int) -> np.ndarray:
    n = np.arange(M + 1)
    return (2 * n - M) / M


def _make(kind: WindowKind, M: int, values, **params) -> Window:
    return Window(WindowSpec(kind, M, **params), np.asarray(values, dtype=float))


def rectangular(M: int) -> Window:
    M = _check_order(M)
    return _make(WindowKind.RECTANGULAR, M, np.ones(M + 1))


def proposed_endpoint(M: int) -> float:
    """Endpoint value used by the cos**5.3 window for ``M >= 20``."""
    return 4.6051e-9 * M**3 + 1.8899e-6 * M**2 + 0.007339 * M + 0.036034


def proposed_window(M: int) -> Window:
    """``cos(2n/M - 1) ** 5.3`` (radians), with corrected endpoints for M >= 20."""
    M = _check_order(M)
    w = np.cos(_positions(M)) ** PROPOSED_EXPONENT
    if M > PROPOSED_SIMPLE_MAX_M:
        w[0] = w[M] = proposed_endpoint(M)
    return _make(WindowKind.PROPOSED, M, w)


def _cosine_sum(M: int, a0: float, a1: float, a3: float = 0.0) -> np.ndarray:
    # a0 - a1*cos(2 pi n/M) - a3*cos(6 pi n/M), rewritten about the centre
    phase = np.pi * _positions(M)
    return a0 + a1 * np.cos(phase) + a3 * np.cos(3 * phase)


def hamming(M: int) -> Window:
    M = _check_order(M)
    return _make(WindowKind.HAMMING, M, _cosine_sum(M, 0.54, 0.46))


def hanning(M: int) -> Window:
    M = _check_order(M)
    return _make(WindowKind.HANNING, M, _cosine_sum(M, 0.5, 0.5))


def bartlett(M: int) -> Window:
    M = _check_order(M)
    return _make(WindowKind.BARTLETT, M, 1.0 - np.abs(_positions(M)))


def kaiser(M: int, beta: float) -> Window:
    """Kaiser window ``I0(beta*sqrt(1 - x**2)) / I0(beta)``, endpoints included."""
    M = _check_order(M)
    if beta is None or not math.isfinite(beta) or beta < 0:
        raise InvalidSpec(f"kaiser window requires beta >= 0, got {beta!r}")
    beta = float(beta)
    x = _positions(M)
    arg = beta * np.sqrt(np.clip(1.0 - x * x, 0.0, None))
    denom = bessel_i0(beta)
    w = [bessel_i0(a) / denom for a in arg]
    return _make(WindowKind.KAISER, M, w, beta=beta)


def gaussian(M: int, sigma: float) -> Window:
    M = _check_order(M)
    if sigma is None or not (0.0 < sigma <= 0.5):
        raise InvalidSpec(f"gaussian window requires 0 < sigma <= 0.5, got {sigma!r}")
    sigma = float(sigma)
    offset = np.arange(M + 1) - M / 2
    w = np.exp(-0.5 * (offset / (sigma * M / 2)) ** 2)
    return _make(WindowKind.GAUSSIAN, M, w, sigma=sigma)


def dolph_chebyshev(M: int, sidelobe_db: float) -> Window:
    """Dolph-Chebyshev window with equal side lobes at ``sidelobe_db`` (< 0).

    Evaluated as the cosine series of the Chebyshev frequency samples
    ``T_M(x0 * cos(pi*i/(M+1)))`` about the centre ``M/2`` and scaled to a
    unit peak.  The same series holds for odd ``M``: the Nyquist sample is
    ``T_M(0) = 0`` there.
    """
    M = _check_order(M)
    if sidelobe_db is None or not math.isfinite(sidelobe_db) or sidelobe_db >= 0:
        raise InvalidSpec(
            f"dolph-chebyshev window requires sidelobe_db < 0, got {sidelobe_db!r}"
        )
    sidelobe_db = float(sidelobe_db)
    ripple = 10.0 ** (sidelobe_db / 20.0)
    x0 = math.cosh(math.acosh(1.0 / ripple) / M)
    N = M + 1
    offset = np.arange(N) - M / 2
    w = np.full(N, chebyshev_t(M, x0))
    for i in range(1, M // 2 + 1):
        sample = chebyshev_t(M, x0 * math.cos(math.pi * i / N))
        w += 2.0 * sample * np.cos(2.0 * np.pi * i * offset / N)
    w /= N
    w /= w.max()
    return _make(WindowKind.DOLPH_CHEBYSHEV, M, w, sidelobe_db=sidelobe_db)


def lanczos(M: int, L: int) -> Window:
    M = _check_order(M)
    if L is None or isinstance(L, bool) or int(L) != L or L < 1:
        raise InvalidSpec(f"lanczos window requires an integer L >= 1, got {L!r}")
    L = int(L)
    w = [sinc_normalized(x) ** L for x in _positions(M)]
    return _make(WindowKind.LANCZOS, M, w, L=L)


def window_ref9(M: int) -> Window:
    """``sinc((n - M/2) / (0.654 M)) ** 2.5`` with a length-dependent endpoint."""
    M = _check_order(M)
    offset = np.arange(M + 1) - M / 2
    # |offset| / (0.654 M) <= 0.765, so the sinc base stays positive.
    w = np.array([sinc_normalized(t / (0.654 * M)) ** 2.5 for t in offset])
    w[0] = w[M] = 0.02 + 0.001 * M + 1.0 / (2 * M + 50)
    return _make(WindowKind.REF9, M, w)


def window_ref15(M: int) -> Window:
    M = _check_order(M)
    return _make(WindowKind.REF15, M, _cosine_sum(M, 0.536, 0.461, 0.003))


def generate(spec: WindowSpec) -> Window:
    """Build the window described by ``spec``."""
    kind = spec.kind
    if kind is WindowKind.KAISER:
        return kaiser(spec.M, spec.beta)
    if kind is WindowKind.GAUSSIAN:
        return gaussian(spec.M, spec.sigma)
    if kind is WindowKind.DOLPH_CHEBYSHEV:
        return dolph_chebyshev(spec.M, spec.sidelobe_db)
    if kind is WindowKind.LANCZOS:
        return lanczos(spec.M, spec.L)
    simple = {
        WindowKind.PROPOSED: proposed_window,
        WindowKind.HAMMING: hamming,
        WindowKind.HANNING: hanning,
        WindowKind.BARTLETT: bartlett,
        WindowKind.REF9: window_ref9,
        WindowKind.REF15: window_ref15,
        WindowKind.RECTANGULAR: rectangular,
    }
    return simple[kind](spec.M)
