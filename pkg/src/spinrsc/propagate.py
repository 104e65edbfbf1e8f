"""Transition amplitudes and the sender-to-receiver amplitude map.

The amplitude ``p_kj(t) = <k| exp(-i H t) |j>`` is evaluated as a spectral
sum over the chain eigenpairs, so thousands of time samples reuse a single
dense eigensolve.  The 2x2 block from the sender nodes (1, 2) to the
extended-receiver nodes (N-1, N) is the matrix ``P``; for a sender state
with excitation amplitudes ``(a1, a2)`` the amplitudes arriving at the
extended receiver are ``f = P (a1, a2)^T`` while the vacuum amplitude ``f0``
stays equal to ``a0``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .chain import SpectralDecomposition

NORM_TOL = 1e-12

__all__ = [
    "polar_turns",
    "transition_amplitude",
    "amplitude_series",
    "amplitude_matrix",
    "SenderState",
    "FVector",
    "sender_to_f",
]


def polar_turns(value: complex) -> tuple[float, float]:
    """Polar form ``(r, chi)`` of a complex amplitude, phase in turns.

    ``chi`` lies in [0, 1) and ``value == r * exp(2j * pi * chi)``.
    """
    r = abs(value)
    chi = (cmath.phase(value) / (2.0 * math.pi)) % 1.0
    return r, chi


def transition_amplitude(dec: SpectralDecomposition, k: int, j: int, t: float) -> complex:
    """Amplitude ``<k| exp(-i H t) |j>`` between single-excitation nodes.

    Node indices are 1-based like the chain nodes.
    """
    n = dec.n
    if not (1 <= k <= n and 1 <= j <= n):
        raise ValueError(f"node indices must lie in 1..{n}, got k={k}, j={j}")
    w = dec.vectors[k - 1] * dec.vectors[j - 1]
    return complex(np.sum(w * np.exp(-1j * dec.energies * t)))


def amplitude_series(dec: SpectralDecomposition, ts) -> np.ndarray:
    """The matrix ``P(t)`` for every ``t`` in ``ts``, shape ``(2, 2, len(ts))``.

    Rows are the destinations (N-1, N), columns the sources (1, 2).
    """
    if dec.n < 4:
        raise ValueError("sender and extended receiver overlap for n < 4")
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    v = dec.vectors
    n = dec.n
    w = np.empty((4, n))
    w[0] = v[n - 2] * v[0]
    w[1] = v[n - 2] * v[1]
    w[2] = v[n - 1] * v[0]
    w[3] = v[n - 1] * v[1]
    phases = np.exp(-1j * np.outer(dec.energies, ts))
    return (w @ phases).reshape(2, 2, ts.shape[0])


def amplitude_matrix(dec: SpectralDecomposition, t: float) -> np.ndarray:
    """The 2x2 sender-to-extended-receiver transition matrix at time ``t``."""
    return amplitude_series(dec, [t])[:, :, 0].copy()


@dataclass(frozen=True)
class SenderState:
    """Pure one-excitation state of the two sender nodes plus vacuum weight.

    ``a0`` is the real vacuum amplitude; ``a1`` and ``a2`` are the complex
    amplitudes of an excitation on nodes 1 and 2.
    """

    a0: float
    a1: complex
    a2: complex

    def __post_init__(self) -> None:
        if not 0.0 <= self.a0 <= 1.0:
            raise ValueError(f"a0 must lie in [0, 1], got {self.a0}")
        norm = self.a0**2 + abs(self.a1) ** 2 + abs(self.a2) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValueError(f"sender state must be normalised, got |a|^2 = {norm!r}")

    @property
    def excitation(self) -> np.ndarray:
        """The column ``(a1, a2)`` that multiplies the P matrix."""
        return np.array([self.a1, self.a2], dtype=complex)


@dataclass(frozen=True)
class FVector:
    """Amplitudes that determine the extended-receiver state.

    ``f0`` equals the sender's vacuum amplitude (the vacuum is stationary);
    ``f_nm1`` and ``f_n`` are the excitation amplitudes on nodes N-1 and N.
    """

    f0: float
    f_nm1: complex
    f_n: complex

    @property
    def transfer_sq(self) -> float:
        """Probability of finding the excitation on the extended receiver."""
        return abs(self.f_nm1) ** 2 + abs(self.f_n) ** 2


def sender_to_f(p: np.ndarray, s: SenderState) -> FVector:
    """Propagate a sender state through ``P``: ``f = P (a1, a2)^T``, ``f0 = a0``."""
    f = np.asarray(p, dtype=complex) @ s.excitation
    return FVector(f0=s.a0, f_nm1=complex(f[0]), f_n=complex(f[1]))
