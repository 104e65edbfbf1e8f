#!/usr/bin/env python3
"""Derive the optimal transfer protocol for one chain.

The 2x2 transition matrix P maps sender amplitudes to arrival amplitudes on
the last two nodes.  Its singular value decomposition hands us everything at
once: the best sender state (dominant right singular vector), the best
transfer probability (largest singular value squared) and the receiver-side
unitary that afterwards concentrates the excitation on the last node.
"""

import numpy as np

from spinrsc import (
    Coupling,
    CouplingModel,
    amplitude_matrix,
    apply_v_and_reduce,
    chain_decomposition,
    extended_receiver_density,
    optimal_protocol,
    sender_to_f,
)


def main():
    n = 20
    dec = chain_decomposition(CouplingModel(Coupling.ALL_NODE, n))

    plain = optimal_protocol(dec, with_v=False)
    rotated = optimal_protocol(dec, with_v=True)
    print(f"all-node chain, n = {n}")
    print(f"best |f_N|^2 without receiver rotation: {plain.r_max_sq:.6f} at t0 = {plain.t0:.4f}")
    print(f"best transfer with receiver rotation:   {rotated.r_max_sq:.6f} at t0 = {rotated.t0:.4f}")

    a = rotated.a_opt
    print(f"optimal sender amplitudes: a1 = {a.a1:.4f}, a2 = {a.a2:.4f}")
    print(f"singular values of P(t0): {rotated.svd.lam.lam_minus:.6f}, "
          f"{rotated.svd.lam.lam_plus:.6f}")

    # run the pipeline at the optimum: the receiver state comes out diagonal
    p = amplitude_matrix(dec, rotated.t0)
    f = sender_to_f(p, a)
    rho = apply_v_and_reduce(extended_receiver_density(f), rotated.v0)
    print("receiver state with the optimal sender and rotation:")
    print(np.array_str(rho.real, precision=6, suppress_small=True))
    print(f"expected diag(1 - R^2, R^2) with R^2 = {rotated.r_max_sq:.6f}")


if __name__ == "__main__":
    main()
