import numpy as np
import pytest

from winfir import WindowKind, WindowSpec, generate

# One representative parameterisation per family.
FAMILY_PARAMS = {
    WindowKind.PROPOSED: {},
    WindowKind.HAMMING: {},
    WindowKind.HANNING: {},
    WindowKind.BARTLETT: {},
    WindowKind.KAISER: {"beta": 6.0},
    WindowKind.GAUSSIAN: {"sigma": 0.373},
    WindowKind.DOLPH_CHEBYSHEV: {"sidelobe_db": -48.0},
    WindowKind.LANCZOS: {"L": 2},
    WindowKind.REF9: {},
    WindowKind.REF15: {},
    WindowKind.RECTANGULAR: {},
}

ORDERS = (4, 10, 14, 19, 20, 34, 50, 200)


def make(kind, M):
    return generate(WindowSpec(kind, M, **FAMILY_PARAMS[kind]))


@pytest.fixture(params=list(FAMILY_PARAMS), ids=lambda k: k.value)
def kind(request):
    return request.param


def dirichlet_sidelobe(N, samples=200_001):
    """Peak side lobe (dB) of an N-point rectangular window from the closed-form kernel."""
    w = np.linspace(0.0, np.pi, samples)[1:]
    kernel = np.abs(np.sin(N * w / 2) / np.sin(w / 2)) / N
    return 20 * np.log10(kernel[w >= 2 * np.pi / N].max())


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome
    elif "test_acceptance.py" in report.nodeid and report.failed:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
