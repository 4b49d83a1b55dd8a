# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for exact 1-d total variation denoising.

Direct non-iterative algorithm: a single forward sweep maintains the running
lower/upper string segments and emits each plateau as soon as its value is
forced.  Exact minimizer of 0.5*||y - x||^2 + lam * sum |x[i+1] - x[i]|.
"""

import numpy as np

cimport numpy as cnp


def tv1d(cnp.ndarray[cnp.float64_t, ndim=1] y, double lam):
    cdef Py_ssize_t width = y.shape[0]
    cdef cnp.ndarray[cnp.float64_t, ndim=1] out = np.empty(width, dtype=np.float64)
    cdef double[::1] yv = np.ascontiguousarray(y)
    cdef double[::1] xv = out

    if width == 0:
        return out
    if width == 1 or lam <= 0.0:
        out[:] = y
        return out

    cdef Py_ssize_t k = 0, k0 = 0, kplus = 0, kminus = 0
    cdef double umin = lam, umax = -lam
    cdef double vmin = yv[0] - lam, vmax = yv[0] + lam
    cdef double twolam = 2.0 * lam
    cdef double minlam = -lam

    while True:
        while k == width - 1:
            if umin < 0.0:
                # lower string breaks: emit the segment at vmin
                while True:
                    xv[k0] = vmin
                    k0 += 1
                    if k0 > kminus:
                        break
                kminus = k = k0
                vmin = yv[kminus]
                umin = lam
                umax = vmin + lam - vmax
            elif umax > 0.0:
                # upper string breaks: emit the segment at vmax
                while True:
                    xv[k0] = vmax
                    k0 += 1
                    if k0 > kplus:
                        break
                kplus = k = k0
                vmax = yv[kplus]
                umax = minlam
                umin = vmax - lam - vmin
            else:
                # both strings taut to the end: emit the final plateau
                vmin += umin / (k - k0 + 1)
                while True:
                    xv[k0] = vmin
                    k0 += 1
                    if k0 > k:
                        break
                return out
        if yv[k + 1] + umin < vmin - lam:
            # negative jump is certain
            while True:
                xv[k0] = vmin
                k0 += 1
                if k0 > kminus:
                    break
            kminus = kplus = k = k0
            vmin = yv[k]
            vmax = vmin + twolam
            umin = lam
            umax = minlam
        elif yv[k + 1] + umax > vmax + lam:
            # positive jump is certain
            while True:
                xv[k0] = vmax
                k0 += 1
                if k0 > kplus:
                    break
            kminus = kplus = k = k0
            vmax = yv[k]
            vmin = vmax - twolam
            umin = lam
            umax = minlam
        else:
            # no jump: absorb the sample and retighten the strings
            k += 1
            umin += yv[k] - vmin
            umax += yv[k] - vmax
            if umin >= lam:
                vmin += (umin - lam) / (k - k0 + 1)
                umin = lam
                kminus = k
            if umax <= minlam:
                vmax += (umax + lam) / (k - k0 + 1)
                umax = minlam
                kplus = k
