"""Singular structure of the P matrix and time-optimised transfer protocols.

The squared norm of ``P a`` over unit sender vectors ``a`` is bounded by the
largest squared singular value of ``P``, and that bound is attained by the
dominant right singular vector.  Everything in this module is built on that
fact: the 2x2 singular value decomposition supplies the optimal sender state
``a_opt``, the receiver-side unitary ``v0`` and the transfer probability,
and a scalar search over time locates the first maximum of whichever
objective applies (with or without the receiver-side unitary).
"""

from __future__ import annotations

import enum
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, NamedTuple, Sequence

import numpy as np

from .chain import Coupling, CouplingModel, SpectralDecomposition, chain_decomposition
from .errors import DegenerateProtocolError, MaximumNotFoundError, SpinRscError
from .propagate import SenderState, amplitude_matrix, amplitude_series

COARSE_STEP = 0.05
REFINE_TOL = 1e-8
# Smallest objective value accepted as a transfer peak.  Genuine arrival
# maxima stay above 0.19 for n <= 200 while everything earlier is either
# eigensolver noise (~1e-17 amplitudes) or long-range leakage precursors
# (<= ~1.4e-5), so three decades of margin separate the floor from both.
SIGNIFICANCE_FLOOR = 1e-3
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0

__all__ = [
    "Objective",
    "SingularPair",
    "SvdTriple",
    "OptimalProtocol",
    "SweepModel",
    "SweepRow",
    "CriticalLength",
    "singular_values",
    "svd_decompose",
    "optimal_sender_state",
    "rmax_no_v",
    "objective_series",
    "maximize_over_time",
    "optimal_protocol",
    "thread_count",
    "sweep",
    "critical_length",
]


class Objective(enum.Enum):
    """What to maximise over time."""

    LAM_PLUS_SQ = "lam_plus_sq"  # largest squared singular value of P
    ROW_NORM_SQ = "row_norm_sq"  # squared norm of P's bottom row (best |f_N|^2)


class SingularPair(NamedTuple):
    lam_minus: float
    lam_plus: float


def singular_values(p: np.ndarray) -> SingularPair:
    """Ascending singular values of the 2x2 amplitude matrix."""
    p = np.asarray(p, dtype=complex)
    evals = np.linalg.eigvalsh(p.conj().T @ p)
    lam = np.sqrt(np.clip(evals, 0.0, None))
    return SingularPair(float(lam[0]), float(lam[1]))


@dataclass(frozen=True)
class SvdTriple:
    """Decomposition ``P = v0^+ . diag(lam) . u`` with unitary ``v0`` and ``u``.

    Singular values are ascending: ``lam = (lam_minus, lam_plus)``.  The
    second row of ``v0`` is fixed to the conjugated optimal arrival
    amplitudes divided by their norm, the first row to the orthogonal
    complement ``(f_n, -f_nm1)`` of those amplitudes; this pins the gauge so
    repeated runs emit identical matrices.
    """

    v0: np.ndarray
    lam: SingularPair
    u: np.ndarray


def svd_decompose(p: np.ndarray) -> SvdTriple:
    """Singular value decomposition of ``P`` in the fixed gauge.

    Built from the eigendecomposition of ``P^+ P``: the dominant eigenvector
    is the optimal sender excitation, its image under ``P`` fixes ``v0``,
    and the subdominant phase is chosen so the reconstruction is exact.
    Degenerate singular values fall back to the sender vector ``(0, 1)``.
    """
    p = np.asarray(p, dtype=complex)
    evals, evecs = np.linalg.eigh(p.conj().T @ p)
    lam = np.sqrt(np.clip(evals, 0.0, None))
    lam_minus, lam_plus = float(lam[0]), float(lam[1])
    if lam_plus == 0.0:
        eye = np.eye(2, dtype=complex)
        return SvdTriple(v0=eye, lam=SingularPair(0.0, 0.0), u=eye)
    if lam_plus - lam_minus <= 1e-13 * lam_plus:
        a_opt = np.array([0.0, 1.0], dtype=complex)
    else:
        a_opt = evecs[:, 1]
        lead = a_opt[np.argmax(np.abs(a_opt))]
        a_opt = a_opt * (lead.conjugate() / abs(lead))
    f_opt = p @ a_opt
    r_opt = float(np.linalg.norm(f_opt))
    v0 = (
        np.array(
            [
                [f_opt[1], -f_opt[0]],
                [f_opt[0].conjugate(), f_opt[1].conjugate()],
            ]
        )
        / r_opt
    )
    x1 = np.array([a_opt[1].conjugate(), -a_opt[0].conjugate()])
    c = v0[0] @ (p @ x1)  # = w1^+ P x1 for w1 the first column of v0^+
    if abs(c) > 0.0:
        x1 = x1 * (c.conjugate() / abs(c))
    u = np.vstack([x1.conjugate(), a_opt.conjugate()])
    return SvdTriple(v0=v0, lam=SingularPair(lam_minus, lam_plus), u=u)


def optimal_sender_state(svd: SvdTriple) -> SenderState:
    """Sender state maximising the extended-receiver transfer probability.

    Returns ``(a1, a2) = u^+ (0, 1)^T`` with zero vacuum weight, for which
    ``||P a||`` equals the largest singular value.
    """
    if svd.lam.lam_plus <= 0.0:
        raise DegenerateProtocolError(
            "no excitation reaches the extended receiver (largest singular value is 0)"
        )
    a = svd.u.conj().T @ np.array([0.0, 1.0])
    return SenderState(a0=0.0, a1=complex(a[0]), a2=complex(a[1]))


def rmax_no_v(p: np.ndarray) -> float:
    """Best receiver-node probability without the receiver-side unitary.

    ``max |f_N|^2`` over unit senders, i.e. the squared norm of P's bottom row.
    """
    p = np.asarray(p, dtype=complex)
    return float(abs(p[1, 0]) ** 2 + abs(p[1, 1]) ** 2)


def _lam_plus_sq_series(ps: np.ndarray) -> np.ndarray:
    """Largest squared singular value of each 2x2 slice of a (2, 2, T) stack."""
    trace = np.sum(np.abs(ps) ** 2, axis=(0, 1))
    det = ps[0, 0] * ps[1, 1] - ps[0, 1] * ps[1, 0]
    disc = np.sqrt(np.clip(trace**2 - 4.0 * np.abs(det) ** 2, 0.0, None))
    return 0.5 * (trace + disc)


def _row_norm_sq_series(ps: np.ndarray) -> np.ndarray:
    return np.abs(ps[1, 0]) ** 2 + np.abs(ps[1, 1]) ** 2


def objective_series(
    dec: SpectralDecomposition,
    objective: Objective | Callable[[np.ndarray], np.ndarray],
    ts,
) -> np.ndarray:
    """Evaluate the transfer objective at each time in ``ts``.

    ``objective`` may be a callable mapping a time array to values, which the
    time search also accepts (used for synthetic objectives in tests).
    """
    ts = np.atleast_1d(np.asarray(ts, dtype=float))
    if callable(objective):
        return np.asarray(objective(ts), dtype=float)
    ps = amplitude_series(dec, ts)
    if objective is Objective.LAM_PLUS_SQ:
        return _lam_plus_sq_series(ps)
    if objective is Objective.ROW_NORM_SQ:
        return _row_norm_sq_series(ps)
    raise ValueError(f"unknown objective {objective!r}")


def _first_bracket(fn, t_lo: float, t_hi: float, step: float, floor: float, chunk: int = 4096):
    """Coarse-scan for the first significant local maximum; return its bracket.

    A grid point is a hit when it does not fall below its left neighbour,
    strictly exceeds its right neighbour and rises above ``floor``; the
    surrounding pair of grid points brackets the maximum.
    """
    total = int(math.floor((t_hi - t_lo) / step + 1e-9)) + 1
    tail_t = tail_g = None
    start = 0
    while start < total:
        stop = min(start + chunk, total)
        ts = t_lo + step * np.arange(start, stop)
        gs = fn(ts)
        if tail_t is not None:
            ts = np.concatenate([tail_t, ts])
            gs = np.concatenate([tail_g, gs])
        if gs.shape[0] >= 3:
            left, mid, right = gs[:-2], gs[1:-1], gs[2:]
            hits = np.nonzero((mid >= left) & (mid > right) & (mid > floor))[0]
            if hits.size:
                i = int(hits[0]) + 1
                return float(ts[i - 1]), float(ts[i + 1])
        tail_t, tail_g = ts[-2:], gs[-2:]
        start = stop
    return None


def _golden_max(fn, a: float, b: float, tol: float) -> float:
    """Golden-section search for the maximum of ``fn`` on [a, b]."""
    inv_phi = _INV_PHI
    inv_phi_sq = 1.0 - inv_phi
    h = b - a
    c = a + inv_phi_sq * h
    d = a + inv_phi * h
    yc = fn(np.array([c]))[0]
    yd = fn(np.array([d]))[0]
    while h > tol:
        if yc > yd:
            b, d, yd = d, c, yc
            h = b - a
            c = a + inv_phi_sq * h
            yc = fn(np.array([c]))[0]
        else:
            a, c, yc = c, d, yd
            h = b - a
            d = a + inv_phi * h
            yd = fn(np.array([d]))[0]
    return 0.5 * (a + b)


def maximize_over_time(
    dec: SpectralDecomposition,
    objective: Objective | Callable[[np.ndarray], np.ndarray],
    window: tuple[float, float] | None = None,
    step: float = COARSE_STEP,
    floor: float = SIGNIFICANCE_FLOOR,
) -> tuple[float, float]:
    """First significant local maximum of the objective over time.

    Scans ``[window[0], window[1]]`` (default ``[0, 4 n]``) with the coarse
    step, brackets the first interior maximum rising above ``floor`` and
    refines it by golden section until the bracket is narrower than
    ``REFINE_TOL``.  Returns ``(t0, objective(t0))``.
    """
    if window is None:
        window = (0.0, 4.0 * dec.n)
    t_lo, t_hi = float(window[0]), float(window[1])
    if not 0.0 <= t_lo < t_hi:
        raise ValueError(f"time window must satisfy 0 <= t_min < t_max, got {window!r}")

    def fn(ts: np.ndarray) -> np.ndarray:
        return objective_series(dec, objective, ts)

    bracket = _first_bracket(fn, t_lo, t_hi, step, floor)
    if bracket is None:
        raise MaximumNotFoundError(
            f"no significant local maximum of the objective in [{t_lo:g}, {t_hi:g}]; "
            "enlarge the window"
        )
    t0 = _golden_max(fn, bracket[0], bracket[1], REFINE_TOL)
    return t0, float(fn(np.array([t0]))[0])


@dataclass(frozen=True)
class OptimalProtocol:
    """Everything needed to run the creation pipeline at the optimal time.

    ``r_max_sq`` is the maximised transfer probability: the largest squared
    singular value of ``P(t0)`` when the receiver-side unitary is used,
    otherwise the squared norm of the bottom row.
    """

    t0: float
    r_max_sq: float
    svd: SvdTriple
    a_opt: SenderState
    with_v: bool = True

    @property
    def v0(self) -> np.ndarray:
        """Receiver-side unitary: the SVD left factor, or identity when disabled."""
        return self.svd.v0 if self.with_v else np.eye(2, dtype=complex)


def optimal_protocol(
    dec: SpectralDecomposition,
    with_v: bool = True,
    window: tuple[float, float] | None = None,
) -> OptimalProtocol:
    """Time-optimised transfer protocol for one chain.

    With the receiver-side unitary the objective is the largest squared
    singular value and ``a_opt`` comes from the SVD; without it the
    objective is the bottom-row norm and ``a_opt`` is the normalised
    conjugate of that row (which maximises ``|f_N|``).
    """
    objective = Objective.LAM_PLUS_SQ if with_v else Objective.ROW_NORM_SQ
    t0, value = maximize_over_time(dec, objective, window)
    p = amplitude_matrix(dec, t0)
    svd = svd_decompose(p)
    if with_v:
        a_opt = optimal_sender_state(svd)
    else:
        row = p[1].conj()
        nrm = float(np.linalg.norm(row))
        if nrm == 0.0:
            raise DegenerateProtocolError("no excitation reaches the receiver node")
        a_opt = SenderState(a0=0.0, a1=complex(row[0] / nrm), a2=complex(row[1] / nrm))
    return OptimalProtocol(t0=t0, r_max_sq=value, svd=svd, a_opt=a_opt, with_v=with_v)


class SweepModel(enum.Enum):
    """The three swept model variants."""

    NN = "nn"
    ALL_NO_V = "all"
    ALL_WITH_V = "all+v"

    @property
    def coupling(self) -> Coupling:
        return Coupling.NEAREST_NEIGHBOR if self is SweepModel.NN else Coupling.ALL_NODE

    @property
    def objective(self) -> Objective:
        return Objective.LAM_PLUS_SQ if self is SweepModel.ALL_WITH_V else Objective.ROW_NORM_SQ


@dataclass(frozen=True)
class SweepRow:
    n: int
    model: SweepModel
    t0: float
    r_max_sq: float


def _sweep_row(n: int, model: SweepModel) -> SweepRow:
    try:
        dec = chain_decomposition(CouplingModel(model.coupling, n))
        t0, value = maximize_over_time(dec, model.objective)
    except SpinRscError as exc:
        raise type(exc)(f"n={n} model={model.value}: {exc}") from exc
    return SweepRow(n=n, model=model, t0=t0, r_max_sq=value)


def thread_count(explicit: int | None = None) -> int:
    """Worker count: explicit argument, then SPINRSC_THREADS, then CPU count."""
    if explicit is not None:
        return max(1, int(explicit))
    env = os.environ.get("SPINRSC_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(
    ns: Iterable[int],
    models: Iterable[SweepModel],
    threads: int | None = None,
) -> list[SweepRow]:
    """One optimised row per (chain length, model), in deterministic order.

    Rows are independent, so they may be evaluated by a small thread pool;
    the result order is always n-major, model-minor regardless of workers.
    """
    ns = list(ns)
    models = list(models)
    for n in ns:
        if not 4 <= n <= 200:
            raise ValueError(f"swept chain lengths must lie in [4, 200], got {n}")
    tasks = [(n, model) for n in ns for model in models]
    workers = thread_count(threads)
    if workers == 1:
        return [_sweep_row(n, model) for n, model in tasks]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda task: _sweep_row(*task), tasks))


@dataclass(frozen=True)
class CriticalLength:
    """Largest swept length whose transfer probability still reaches a threshold.

    ``n_critical`` is None when the threshold is never attained in range.
    ``monotone_near_crossing`` reports whether r_max_sq is non-increasing on
    the swept lengths within two steps of the crossing.
    """

    model: SweepModel
    n_critical: int | None
    monotone_near_crossing: bool | None


def critical_length(rows: Sequence[SweepRow], threshold: float) -> list[CriticalLength]:
    """Per-model critical lengths from sweep rows.

    Values within 1e-12 of the threshold count as attained.
    """
    results = []
    seen: list[SweepModel] = []
    for row in rows:
        if row.model not in seen:
            seen.append(row.model)
    for model in seen:
        mrows = sorted((r for r in rows if r.model is model), key=lambda r: r.n)
        attained = [r.n for r in mrows if r.r_max_sq >= threshold - 1e-12]
        if not attained:
            results.append(CriticalLength(model, None, None))
            continue
        n_c = max(attained)
        near = [r for r in mrows if n_c - 2 <= r.n <= n_c + 2]
        monotone = all(
            near[i].r_max_sq >= near[i + 1].r_max_sq - 1e-12 for i in range(len(near) - 1)
        )
        results.append(CriticalLength(model, n_c, monotone))
    return results
