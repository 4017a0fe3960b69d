"""Published reference values and the tolerances they are checked against.

Table 1: window spectra (n_fft = 512).  The width column stores the printed
coefficient of ``2 x c pi`` and is compared as the full -3 dB width.
Table 2: stopband peaks of low-pass filters at cutoff 0.2 pi (n_fft = 2048).
"""

VERSION = "1"

# -- Table 1 --------------------------------------------------------------
TABLE1_NFFT = 512
TABLE1_SIDELOBE_TOL_DB = 0.3
TABLE1_WIDTH_TOL_BINS = 2

# (window, M): (full width / pi, side-lobe peak dB)
TABLE1 = {
    ("proposed", 10): (0.28906, -58.44563),  # row M=10
    ("proposed", 14): (0.20313, -52.62333),  # row M=14
    ("proposed", 50): (0.050781, -48.46017),  # row M=50
    ("hamming", 10): (0.27344, -35.82400),  # row M=10
    ("hamming", 14): (0.1875, -38.85582),  # row M=14
    ("hamming", 50): (0.05078, -42.47663),  # row M=50
}

# Duplicated M=50 row pairing the proposed window with a 48-point Hamming.
TABLE1_EXTENDED = {
    ("hamming", 47): (0.050781, -42.23333),
}

# -- Table 2 --------------------------------------------------------------
TABLE2_NFFT = 2048
TABLE2_CUTOFF_OVER_PI = 0.2
TABLE2_TOL_DB = 1.5
TABLE2_ORDERS = (50, 70, 100, 200)
TABLE2_KAISER_BETA = 6.0
TABLE2_GAUSSIAN_SIGMA = 0.373
TABLE2_CHEBYSHEV_DB = -48.0

# row name -> stopband peaks for TABLE2_ORDERS
TABLE2 = {
    "hamming": (-51.37, -52.09, -52.69, -53.55),
    "kaiser": (-66.61, -61.95, -62.22, -62.75),
    "gaussian": (-66.70, -66.09, -65.63, -65.36),
    "dolphchebyshev": (-61.52, -61.39, -61.59, -63.88),
    "ref9": (-60.84, -61.37, -62.26, -62.11),
    "ref15": (-58.70, -59.10, -60.80, -60.68),
    "proposed": (-68.81, -67.97, -67.28, -66.56),
}

# -- single values quoted alongside the figures -----------------------------
KAISER_VS_PROPOSED_M50 = {"kaiser_beta6": -44.22365, "proposed": -48.50949}
KAISER_VS_PROPOSED_TOL_DB = 0.5
REF9_GAIN_M14_DB = 2.7
REF9_GAIN_TOL_DB = 1.0
HAMMING_GAIN_M14_DB = 13.76751
