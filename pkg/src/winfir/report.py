"""Metric tables: window comparisons and regeneration of Tables 1 and 2."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Sequence

from . import published
from .fir import design_fir, filter_metrics
from .spectral import analyze, check_grid
from .windows import WindowKind, WindowSpec, generate

COMPARE_METRICS = ("halfwidth_3db", "fullwidth_3db", "sidelobe_peak_db", "first_null")
REPORT_FIELDS = (
    "window_name",
    "M",
    "parameters",
    "metric_name",
    "measured",
    "paper_value",
    "delta",
)


@dataclass(frozen=True)
class ReportRow:
    window_name: str
    M: int
    parameters: str
    metric_name: str
    measured: float
    paper_value: Optional[float] = None
    delta: Optional[float] = None
    tolerance: Optional[float] = None

    @classmethod
    def against(cls, window_name, M, parameters, metric_name, measured, reference, tolerance):
        return cls(
            window_name,
            M,
            parameters,
            metric_name,
            measured,
            reference,
            measured - reference,
            tolerance,
        )

    @property
    def within_tolerance(self) -> bool:
        if self.delta is None or self.tolerance is None:
            return True
        return abs(self.delta) <= self.tolerance

    def as_dict(self) -> dict:
        d = asdict(self)
        return {k: d[k] for k in REPORT_FIELDS}


def compare_rows(specs: Sequence[WindowSpec], n_fft: int) -> List[ReportRow]:
    """One row per (window, metric), in input order."""
    rows = []
    for spec in specs:
        metrics = analyze(generate(spec), n_fft)
        for name in COMPARE_METRICS:
            rows.append(
                ReportRow(
                    spec.kind.value,
                    spec.M,
                    spec.describe(),
                    name,
                    getattr(metrics, name),
                )
            )
    return rows


def table1_rows(n_fft: int = published.TABLE1_NFFT, extended: bool = False) -> List[ReportRow]:
    cells = dict(published.TABLE1)
    if extended:
        cells.update(published.TABLE1_EXTENDED)
    n_fft = check_grid(n_fft, 1)
    # published widths carry 5 decimals, so allow their rounding on top of the bins
    width_tol = published.TABLE1_WIDTH_TOL_BINS * 2.0 / n_fft + 5e-6
    rows = []
    for (name, M), (width, sidelobe) in cells.items():
        spec = WindowSpec(WindowKind.parse(name), M)
        metrics = analyze(generate(spec), n_fft)
        rows.append(
            ReportRow.against(
                name, M, "", "fullwidth_3db", metrics.fullwidth_3db, width, width_tol
            )
        )
        rows.append(
            ReportRow.against(
                name,
                M,
                "",
                "sidelobe_peak_db",
                metrics.sidelobe_peak_db,
                sidelobe,
                published.TABLE1_SIDELOBE_TOL_DB,
            )
        )
    return rows


def table2_spec(
    name: str,
    M: int,
    sigma: float = published.TABLE2_GAUSSIAN_SIGMA,
    sidelobe_db: float = published.TABLE2_CHEBYSHEV_DB,
    beta: float = published.TABLE2_KAISER_BETA,
) -> WindowSpec:
    kind = WindowKind.parse(name)
    params = {
        WindowKind.KAISER: {"beta": beta},
        WindowKind.GAUSSIAN: {"sigma": sigma},
        WindowKind.DOLPH_CHEBYSHEV: {"sidelobe_db": sidelobe_db},
    }.get(kind, {})
    return WindowSpec(kind, M, **params)


def table2_rows(
    n_fft: int = published.TABLE2_NFFT,
    sigma: float = published.TABLE2_GAUSSIAN_SIGMA,
    sidelobe_db: float = published.TABLE2_CHEBYSHEV_DB,
    beta: float = published.TABLE2_KAISER_BETA,
) -> List[ReportRow]:
    cutoff = published.TABLE2_CUTOFF_OVER_PI * math.pi
    rows = []
    for name, values in published.TABLE2.items():
        for M, reference in zip(published.TABLE2_ORDERS, values):
            spec = table2_spec(name, M, sigma=sigma, sidelobe_db=sidelobe_db, beta=beta)
            metrics = filter_metrics(design_fir(generate(spec), cutoff), n_fft)
            rows.append(
                ReportRow.against(
                    name,
                    M,
                    spec.describe(),
                    "stopband_peak_db",
                    metrics.stopband_peak_db,
                    reference,
                    published.TABLE2_TOL_DB,
                )
            )
    return rows


def all_within_tolerance(rows: Iterable[ReportRow]) -> bool:
    return all(row.within_tolerance for row in rows)
