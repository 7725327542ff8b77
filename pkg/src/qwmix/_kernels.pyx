# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled scan kernels: flatness over dense time grids and the
prime-cycle target-distance sweep.  Mirrors ``_kernels_py``."""

from libc.math cimport cos, sin, fabs, sqrt, M_PI

import numpy as np
cimport numpy as cnp

cnp.import_array()


def flatness_profile(double[::1] thetas, double[:, ::1] idem_rows,
                     double[::1] times, Py_ssize_t n):
    cdef Py_ssize_t nt = times.shape[0]
    cdef Py_ssize_t m = thetas.shape[0]
    cdef Py_ssize_t n2 = idem_rows.shape[1]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(nt, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pre = np.empty(m, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pim = np.empty(m, dtype=np.float64)
    cdef double[::1] pre_v = pre
    cdef double[::1] pim_v = pim
    cdef double inv = 1.0 / n
    cdef double t, best, ur, ui, dev, w
    cdef Py_ssize_t ti, k, e

    for ti in range(nt):
        t = times[ti]
        for k in range(m):
            pre_v[k] = cos(thetas[k] * t)
            pim_v[k] = sin(thetas[k] * t)
        best = 0.0
        for e in range(n2):
            ur = 0.0
            ui = 0.0
            for k in range(m):
                w = idem_rows[k, e]
                ur += pre_v[k] * w
                ui += pim_v[k] * w
            dev = fabs(ur * ur + ui * ui - inv)
            if dev > best:
                best = dev
        out[ti] = best
    return out


def cycle_eps_profile(double[::1] thetas, double complex[::1] targets,
                      double[:, ::1] erow, long long[::1] alphas, Py_ssize_t p):
    cdef Py_ssize_t nt = alphas.shape[0]
    cdef Py_ssize_t d = thetas.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] dist = np.empty(nt, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] flat = np.empty(nt, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cre = np.empty(d, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] cim = np.empty(d, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pre = np.empty(d, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] pim = np.empty(d, dtype=np.float64)
    cdef double[::1] cre_v = cre
    cdef double[::1] cim_v = cim
    cdef double[::1] pre_v = pre
    cdef double[::1] pim_v = pim
    cdef double sqrt_p = sqrt(<double> p)
    cdef double inv = 1.0 / p
    cdef double t, sr, si, best_d, best_f, ar, ai, ur, ui, w, mag, c2, s2
    cdef Py_ssize_t ti, r, k

    for ti in range(nt):
        t = (2.0 * M_PI / p) * alphas[ti]
        c2 = cos(2.0 * t)
        s2 = sin(2.0 * t)
        for r in range(d):
            sr = cos(thetas[r] * t)
            si = sin(thetas[r] * t)
            pre_v[r] = sr
            pim_v[r] = si
            # e^{i(theta_r - 2)t} - target_r
            cre_v[r] = sr * c2 + si * s2 - targets[r].real
            cim_v[r] = si * c2 - sr * s2 - targets[r].imag
        best_d = 0.0
        best_f = 0.0
        for k in range(p):
            ar = 0.0
            ai = 0.0
            ur = c2 * inv
            ui = s2 * inv
            for r in range(d):
                w = erow[r, k]
                ar += cre_v[r] * w
                ai += cim_v[r] * w
                ur += pre_v[r] * w
                ui += pim_v[r] * w
            mag = sqrt_p * sqrt(ar * ar + ai * ai)
            if mag > best_d:
                best_d = mag
            mag = fabs(ur * ur + ui * ui - inv)
            if mag > best_f:
                best_f = mag
        dist[ti] = best_d
        flat[ti] = best_f
    return dist, flat
