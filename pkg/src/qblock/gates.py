"""2x2 unitary gate constructors and precision handling.

Convention: gates are row-major 2x2 complex ndarrays acting on a single
qubit, [[u11, u12], [u21, u22]]. Everything is built at double precision
(complex128) by default; pass ``dtype=SINGLE`` for the complex64 variant
used by single-precision benchmark runs.
"""
from __future__ import annotations

import math

import numpy as np

SINGLE = np.complex64
DOUBLE = np.complex128

# Unitarity check tolerance per precision.
UNITARITY_TOL = {SINGLE: 1e-5, DOUBLE: 1e-12}
# |norm - 1| tolerance for a state after a gate sequence, per precision.
NORM_TOL = {SINGLE: 1e-4, DOUBLE: 1e-10}

_PRECISION_DTYPES = {"single": SINGLE, "double": DOUBLE}


def dtype_for(precision: str) -> np.dtype:
    """Map a precision name ('single' | 'double') to its complex dtype."""
    try:
        return _PRECISION_DTYPES[precision]
    except KeyError:
        raise ValueError(f"unknown precision {precision!r}: expected 'single' or 'double'") from None


def is_unitary(u: np.ndarray, tol: float) -> bool:
    """True if U @ U.conj().T deviates from I by at most tol per element."""
    u = np.asarray(u)
    dev = u @ u.conj().T - np.eye(u.shape[0], dtype=u.dtype)
    return bool(np.max(np.abs(dev)) <= tol)


def gate2x2(mat, dtype=DOUBLE) -> np.ndarray:
    """Validated 2x2 gate constructor: checks shape and unitarity."""
    u = np.asarray(mat, dtype=dtype)
    if u.shape != (2, 2):
        raise ValueError(f"gate must be 2x2, got shape {u.shape}")
    tol = UNITARITY_TOL[np.dtype(dtype).type]
    if not is_unitary(u, tol):
        raise ValueError(f"matrix is not unitary within {tol}")
    return u


def hadamard(dtype=DOUBLE) -> np.ndarray:
    s = 1.0 / math.sqrt(2.0)
    return gate2x2([[s, s], [s, -s]], dtype)


def pauli_x(dtype=DOUBLE) -> np.ndarray:
    return gate2x2([[0, 1], [1, 0]], dtype)


def phase(theta: float, dtype=DOUBLE) -> np.ndarray:
    """Phase gate [[1, 0], [0, e^{i*theta}]]."""
    if not math.isfinite(theta):
        raise ValueError(f"phase angle must be finite, got {theta!r}")
    return gate2x2([[1, 0], [0, np.exp(1j * theta)]], dtype)


def phase_power(theta: float, a: int, dtype=DOUBLE) -> np.ndarray:
    """a-th power of phase(theta), computed directly as phase(theta * a)."""
    if a < 0:
        raise ValueError(f"exponent must be non-negative, got {a}")
    return phase(theta * a, dtype)
