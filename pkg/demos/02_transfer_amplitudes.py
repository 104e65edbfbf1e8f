#!/usr/bin/env python3
"""Watch an excitation travel from the sender to the far end of the chain.

Prints the probability of finding the excitation on the last two nodes as a
function of time, given that it started on node 1.  The probability rises
sharply when the wavefront arrives, and the total over all nodes stays 1.
"""

import numpy as np

from spinrsc import (
    Coupling,
    CouplingModel,
    amplitude_series,
    chain_decomposition,
    polar_turns,
    transition_amplitude,
)


def main():
    n = 12
    dec = chain_decomposition(CouplingModel(Coupling.ALL_NODE, n))
    ts = np.linspace(0.0, 2.0 * n, 13)
    series = amplitude_series(dec, ts)

    print(f"all-node chain, n = {n}; excitation starts on node 1")
    print(f"{'t':>6}  {'|p_(N-1)1|^2':>12}  {'|p_N1|^2':>10}")
    for i, t in enumerate(ts):
        p_nm1 = abs(series[0, 0, i]) ** 2
        p_n = abs(series[1, 0, i]) ** 2
        print(f"{t:6.1f}  {p_nm1:12.6f}  {p_n:10.6f}")

    t = 1.7
    total = sum(abs(transition_amplitude(dec, k, 1, t)) ** 2 for k in range(1, n + 1))
    print(f"\nprobability over all nodes at t = {t}: {total:.12f} (unitarity)")

    amp = transition_amplitude(dec, n, 1, 0.75 * n)
    r, chi = polar_turns(amp)
    print(f"polar form of p_N1 at t = {0.75 * n}: r = {r:.6f}, phase = {chi:.6f} turns")


if __name__ == "__main__":
    main()
