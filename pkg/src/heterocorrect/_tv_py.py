"""Pure-Python twin of the compiled total variation kernel.

Same sweep as ``_tv.pyx``, kept in lockstep so either backend can serve
``solve_tv_1d``.  Works on plain Python floats; the list round-trip is much
faster than repeated numpy scalar indexing.
"""

import numpy as np


def tv1d(y, lam):
    y = np.asarray(y, dtype=np.float64)
    width = y.shape[0]
    if width == 0:
        return y.copy()
    if width == 1 or lam <= 0.0:
        return y.copy()

    yv = y.tolist()
    xv = [0.0] * width
    k = k0 = kplus = kminus = 0
    umin = lam
    umax = -lam
    vmin = yv[0] - lam
    vmax = yv[0] + lam
    twolam = 2.0 * lam
    minlam = -lam

    while True:
        while k == width - 1:
            if umin < 0.0:
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
                vmin += umin / (k - k0 + 1)
                while True:
                    xv[k0] = vmin
                    k0 += 1
                    if k0 > k:
                        break
                return np.array(xv, dtype=np.float64)
        if yv[k + 1] + umin < vmin - lam:
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
