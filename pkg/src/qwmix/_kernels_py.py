"""Pure-NumPy scan kernels (fallback backend).

Same signatures as the compiled extension in ``_kernels.pyx``; chunked so
large time grids do not materialize huge intermediates.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 4096


def flatness_profile(thetas, idem_rows, times, n):
    """Flatness of U(t) = sum_k e^(i theta_k t) E_k for each t in times.

    thetas: (M,) float64; idem_rows: (M, n*n) float64 flattened idempotents;
    times: (T,) float64.  Returns (T,) float64 of
    max_jk | |U_jk|^2 - 1/n |.
    """
    thetas = np.asarray(thetas, dtype=np.float64)
    idem_rows = np.asarray(idem_rows, dtype=np.float64)
    times = np.asarray(times, dtype=np.float64)
    inv = 1.0 / n
    out = np.empty(times.shape[0], dtype=np.float64)
    for lo in range(0, times.shape[0], _CHUNK):
        chunk = times[lo : lo + _CHUNK]
        phases = np.exp(1j * np.outer(chunk, thetas))
        u = phases @ idem_rows
        dev = np.abs(u.real * u.real + u.imag * u.imag - inv)
        out[lo : lo + chunk.shape[0]] = dev.max(axis=1)
    return out


def cycle_eps_profile(thetas, targets, erow, alphas, p):
    """Distance-to-target and flatness profiles for the prime-cycle search.

    For each alpha, with t = 2*pi*alpha/p:
      dist = max_k | sqrt(p) * sum_r (e^(i(theta_r - 2)t) - targets_r) * erow[r, k] |
      flat = max_k | |u_k|^2 - 1/p |,  u_k = e^(2it)/p + sum_r e^(i theta_r t) erow[r, k]

    thetas: (d,) nontrivial eigenvalues of the cycle; targets: (d,) complex
    unit targets; erow: (d, p) first rows of the paired idempotents;
    alphas: (T,) int64.  Returns (dist, flat), both (T,) float64.
    """
    thetas = np.asarray(thetas, dtype=np.float64)
    targets = np.asarray(targets, dtype=np.complex128)
    erow = np.asarray(erow, dtype=np.float64)
    alphas = np.asarray(alphas, dtype=np.int64)
    sqrt_p = np.sqrt(float(p))
    inv = 1.0 / p
    dist = np.empty(alphas.shape[0], dtype=np.float64)
    flat = np.empty(alphas.shape[0], dtype=np.float64)
    for lo in range(0, alphas.shape[0], _CHUNK):
        a_chunk = alphas[lo : lo + _CHUNK]
        t = (2.0 * np.pi / p) * a_chunk.astype(np.float64)
        ph = np.exp(1j * np.outer(t, thetas))
        shift = np.exp(-2j * t)[:, None]
        diff = (ph * shift - targets) @ erow
        dist[lo : lo + a_chunk.shape[0]] = sqrt_p * np.abs(diff).max(axis=1)
        u = ph @ erow + (np.exp(2j * t) * inv)[:, None]
        dev = np.abs(u.real * u.real + u.imag * u.imag - inv)
        flat[lo : lo + a_chunk.shape[0]] = dev.max(axis=1)
    return dist, flat
