"""Command-line interface emitting the CSV/JSON artifacts.

Exit codes: 0 on success, 1 on a domain error (invalid physics input), 2 on
a usage error.  All numeric output is printed with 17 significant digits so
identical invocations produce byte-identical artifacts.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .chain import Coupling, CouplingModel, build_couplings, build_hamiltonian, chain_decomposition
from .errors import SpinRscError
from .optimize import (
    SweepModel,
    critical_length,
    optimal_protocol,
    sweep,
)
from .oracle import full_transition_amplitude
from .propagate import amplitude_matrix, transition_amplitude
from .rsc import ControlParams, create_state, region_grid

__all__ = ["main", "entry"]


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _render(obj) -> str:
    """Deterministic JSON with floats at 17 significant digits."""
    if isinstance(obj, dict):
        return "{" + ", ".join(f'"{k}": {_render(v)}' for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_render(v) for v in obj) + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt(obj)
    if isinstance(obj, str):
        return f'"{obj}"'
    raise TypeError(f"cannot render {type(obj)!r}")


def _pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _matrix_pairs(m: np.ndarray) -> list[list[list[float]]]:
    return [[_pair(complex(m[r, c])) for c in range(m.shape[1])] for r in range(m.shape[0])]


def _coupling(label: str) -> Coupling:
    return Coupling(label)


def _write_lines(path: str, lines: list[str]) -> None:
    with open(path, "w", newline="\n") as handle:
        handle.write("\n".join(lines) + "\n")


def _cmd_hamiltonian(args) -> int:
    h = build_hamiltonian(build_couplings(CouplingModel(_coupling(args.model), args.n)))
    for row in h:
        print(",".join(_fmt(float(x)) for x in row))
    return 0


def _cmd_amplitudes(args) -> int:
    dec = chain_decomposition(CouplingModel(_coupling(args.model), args.n))
    p = amplitude_matrix(dec, args.t)
    out = {
        "p_nm1_1": _pair(complex(p[0, 0])),
        "p_nm1_2": _pair(complex(p[0, 1])),
        "p_n_1": _pair(complex(p[1, 0])),
        "p_n_2": _pair(complex(p[1, 1])),
    }
    print(_render(out))
    return 0


def _cmd_optimize(args) -> int:
    dec = chain_decomposition(CouplingModel(_coupling(args.model), args.n))
    protocol = optimal_protocol(dec, with_v=args.with_v)
    out = {
        "t0": protocol.t0,
        "r_max_sq": protocol.r_max_sq,
        "a_opt": [_pair(protocol.a_opt.a1), _pair(protocol.a_opt.a2)],
        "u": _matrix_pairs(protocol.svd.u),
        "v0": _matrix_pairs(protocol.svd.v0),
        "lam": [protocol.svd.lam.lam_minus, protocol.svd.lam.lam_plus],
    }
    print(_render(out))
    return 0


def _parse_models(text: str) -> list[SweepModel]:
    try:
        return [SweepModel(label) for label in text.split(",") if label]
    except ValueError as exc:
        raise ValueError(f"unknown model list {text!r}; valid labels: nn, all, all+v") from exc


def _cmd_sweep(args) -> int:
    rows = sweep(range(args.n_min, args.n_max + 1), _parse_models(args.models))
    lines = ["n,model,t0,r_max_sq"]
    lines += [f"{r.n},{r.model.value},{_fmt(r.t0)},{_fmt(r.r_max_sq)}" for r in rows]
    _write_lines(args.out, lines)
    return 0


def _cmd_critical_length(args) -> int:
    rows = sweep(range(args.n_min, args.n_max + 1), _parse_models(args.models))
    lines = ["model,n_critical"]
    for result in critical_length(rows, args.threshold):
        value = "none" if result.n_critical is None else str(result.n_critical)
        lines.append(f"{result.model.value},{value}")
    print("\n".join(lines))
    return 0


def _cmd_region(args) -> int:
    dec = chain_decomposition(CouplingModel(_coupling(args.model), args.n))
    protocol = optimal_protocol(dec, with_v=args.with_v)
    rows = region_grid(protocol, dec, args.step)
    lines = ["alpha1,alpha2,lambda,beta1,beta2"]
    lines += [
        f"{_fmt(r.alpha1)},{_fmt(r.alpha2)},{_fmt(r.lam)},{_fmt(r.beta1)},{_fmt(r.beta2)}"
        for r in rows
    ]
    _write_lines(args.out, lines)
    return 0


def _cmd_create(args) -> int:
    dec = chain_decomposition(CouplingModel(_coupling(args.model), args.n))
    protocol = optimal_protocol(dec, with_v=args.with_v)
    controls = ControlParams(args.alpha1, args.alpha2, args.phi1, args.phi2)
    rho, params = create_state(protocol, dec, controls)
    out = {
        "t0": protocol.t0,
        "rho": _matrix_pairs(rho),
        "lambda": params.lam,
        "beta1": params.beta1,
        "beta2": params.beta2,
    }
    print(_render(out))
    return 0


def _cmd_verify(args) -> int:
    model = CouplingModel(_coupling(args.model), args.n)
    dec = chain_decomposition(model)
    deviation = 0.0
    for k in (model.n - 1, model.n):
        for j in (1, 2):
            fast = transition_amplitude(dec, k, j, args.t)
            full = full_transition_amplitude(model, k, j, args.t)
            deviation = max(deviation, abs(fast - full))
    print(f"max_deviation {_fmt(deviation)}")
    return 0


def _add_chain_flags(sub, with_v_flag: bool = False) -> None:
    sub.add_argument("--n", type=int, required=True, help="chain length (>= 4)")
    sub.add_argument("--model", choices=["nn", "all"], required=True, help="coupling kind")
    if with_v_flag:
        sub.add_argument(
            "--with-v",
            dest="with_v",
            action="store_true",
            help="optimise and apply the receiver-side unitary",
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinrsc",
        description="Remote state creation through homogeneous spin-1/2 XY chains.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    s = subs.add_parser("hamiltonian", help="print the one-excitation Hamiltonian as CSV")
    _add_chain_flags(s)
    s.set_defaults(func=_cmd_hamiltonian)

    s = subs.add_parser("amplitudes", help="print the 2x2 transition matrix P(t) as JSON")
    _add_chain_flags(s)
    s.add_argument("--t", type=float, required=True, help="evolution time")
    s.set_defaults(func=_cmd_amplitudes)

    s = subs.add_parser("optimize", help="print the optimal protocol as JSON")
    _add_chain_flags(s, with_v_flag=True)
    s.set_defaults(func=_cmd_optimize)

    s = subs.add_parser("sweep", help="write per-length optimised probabilities to CSV")
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--models", default="nn,all,all+v", help="comma list of nn, all, all+v")
    s.add_argument("--out", required=True, help="output CSV path")
    s.set_defaults(func=_cmd_sweep)

    s = subs.add_parser("critical-length", help="largest length reaching a threshold")
    s.add_argument("--threshold", type=float, required=True)
    s.add_argument("--n-min", type=int, default=4)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--models", default="nn,all,all+v", help="comma list of nn, all, all+v")
    s.set_defaults(func=_cmd_critical_length)

    s = subs.add_parser("region", help="write the creatable-region grid to CSV")
    _add_chain_flags(s, with_v_flag=True)
    s.add_argument("--step", type=float, required=True, help="grid step in (0, 0.5]")
    s.add_argument("--out", required=True, help="output CSV path")
    s.set_defaults(func=_cmd_region)

    s = subs.add_parser("create", help="run the creation pipeline for one control point")
    _add_chain_flags(s, with_v_flag=True)
    s.add_argument("--alpha1", type=float, required=True)
    s.add_argument("--alpha2", type=float, required=True)
    s.add_argument("--phi1", type=float, required=True)
    s.add_argument("--phi2", type=float, required=True)
    s.set_defaults(func=_cmd_create)

    s = subs.add_parser("verify", help="compare fast amplitudes against the full-space oracle")
    _add_chain_flags(s)
    s.add_argument("--t", type=float, required=True, help="evolution time")
    s.set_defaults(func=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (SpinRscError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
