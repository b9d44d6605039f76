#!/usr/bin/env python3
"""Time the grid kernels on the numba and pure-numpy backends.

The backend is chosen at import time, so this script re-executes itself
with QPINEM_DISABLE_NUMBA=1 to collect the fallback numbers.
"""

import os
import subprocess
import sys
import time

import numpy as np


def bench(repeat=3):
    import qpinem as q
    from qpinem import _kernels

    e = q.electron_from_kinetic_energy(1e5)
    p = q.photon_from_energy(1.5)
    consts = q.talbot_distance(e, p)
    state = q.coherent_state(625)
    l_max = q.default_l_max(0.2, state.cutoff)
    t0 = time.perf_counter()
    table = q.scattering_table(0.2, l_max, state.cutoff + l_max)
    t_table = time.perf_counter() - t0
    m = q.modulated_state(state, q.make_coupling(-0.2, state.n_mean, p), table)
    cm = q.coherence_matrix(m)

    zs = np.linspace(0, 0.004, 400)
    taus = q.period_tau_grid(p, 512)
    q.profile_map(cm, zs[:2], taus, e, p, consts)  # warm up / compile
    best = min(
        _timed(lambda: q.profile_map(cm, zs, taus, e, p, consts)) for _ in range(repeat)
    )
    taus_d = q.period_tau_grid(p, 256)
    q.density_matrix(cm, 0.0016, taus_d[:4], taus_d[:4], e, p, consts)
    best_rho = min(
        _timed(lambda: q.density_matrix(cm, 0.0016, taus_d, taus_d, e, p, consts))
        for _ in range(repeat)
    )
    print(f"backend={_kernels.backend_name():6s}  table[{table.values.shape[0]}x{table.values.shape[1]}]={t_table*1e3:8.1f} ms  "
          f"profile[400x512]={best*1e3:8.1f} ms  rho[256x256]={best_rho*1e3:8.1f} ms")


def _timed(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "--single":
        bench()
    else:
        for disable in ("0", "1"):
            env = dict(os.environ, QPINEM_DISABLE_NUMBA=disable)
            subprocess.run([sys.executable, __file__, "--single"], env=env, check=True)
