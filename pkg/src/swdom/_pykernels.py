"""Pure-Python/numpy kernels, used when the compiled ``_ckernels`` extension is unavailable.

Every function here has a twin in ``_ckernels.pyx`` with the same floating point
operation order, so both backends return bit-identical results.
"""

from __future__ import annotations

import math

import numpy as np

BACKEND = "python"


def interior_grid(n: int) -> np.ndarray:
    return (np.arange(n, dtype=np.float64) + 0.5) / n


def _swr(k, a, b):
    return (1.0 - k) * a * b + k * (a + b - 1.0)


def _sw(k, a, b):
    return np.maximum(_swr(k, a, b), 0.0)


def _slice_argmin(block: np.ndarray):
    """Minimum over the trailing two axes with first-occurrence (row-major) argmin."""
    n1, n2 = block.shape[-2:]
    flat = block.reshape(block.shape[:-2] + (n1 * n2,))
    pos = flat.argmin(axis=-1)
    val = np.take_along_axis(flat, pos[..., None], axis=-1)[..., 0]
    return val, np.stack(np.divmod(pos, n2), axis=-1)


def gap_slice_minima(lam: float, mu: float, n: int, chunk: int = 4):
    """Raw dominance gap and raw search score on the interior grid.

    Returns ``(gvals, gidx, svals, sidx)``.  ``gvals[i, j]`` is the minimum
    over ``(k, l)`` of the gap at ``(g[i], g[j], g[k], g[l])`` and
    ``gidx[i, j] = (k, l)`` its first occurrence in row-major order; ``svals``
    and ``sidx`` hold the same for the search score.
    """
    g = interior_grid(n)
    # T_lam(a, b) and T_mu(a, b) tables over the grid
    tl = _sw(lam, g[:, None], g[None, :])
    tm = _sw(mu, g[:, None], g[None, :])
    c = 1.0 - g
    gvals = np.empty((n, n))
    gidx = np.empty((n, n, 2), dtype=np.int64)
    svals = np.empty((n, n))
    sidx = np.empty((n, n, 2), dtype=np.int64)
    for i0 in range(0, n, chunk):
        i1 = min(n, i0 + chunk)
        # axes (i, j, k, l) = (x, y, u, v)
        a = _swr(lam, tm[i0:i1, :, None, None], tm[None, None, :, :])
        b = _swr(mu, tl[i0:i1, None, :, None], tl[None, :, None, :])
        gap = np.maximum(a, 0.0) - np.maximum(b, 0.0)
        den = c[None, None, :, None] * c[None, :, None, None] + c[None, None, None, :] * c[i0:i1, None, None, None]
        s = (a - b) / den
        score = np.where(s > -b, s, -b)
        gvals[i0:i1], gidx[i0:i1] = _slice_argmin(gap)
        svals[i0:i1], sidx[i0:i1] = _slice_argmin(score)
    return gvals, gidx, svals, sidx


def reduced_terms(lam, mu, x, y, u, vt):
    a = u * ((lam - 1.0) * x + 1.0) * ((mu - 1.0) * vt + 1.0) + (mu - 1.0) * vt * x + vt + x - 1.0
    b = vt * x * (1.0 - (lam - 1.0) * (mu - 1.0) * u * y) + y * (
        (lam - 1.0) * u * y * ((mu - 1.0) * x + 1.0) + u - x
    )
    return a, b


def reduced_vt(lam, y, t):
    return y + t * (1.0 + (lam - 1.0) * y)


def reduced_slice_minima(lam: float, mu: float, n: int, use_a: bool = True, chunk: int = 4):
    """Reduced search score (see ``reduced_score``) on the grid
    over ``(x, y, u, t)`` with ``vt = y + t (1 + (lam - 1) y)``; same layout as
    :func:`gap_slice_minima`."""
    g = interior_grid(n)
    vals = np.empty((n, n))
    idx = np.empty((n, n, 2), dtype=np.int64)
    y = g[None, :, None, None]
    u = g[None, None, :, None]
    vt = reduced_vt(lam, y, g[None, None, None, :])
    for i0 in range(0, n, chunk):
        i1 = min(n, i0 + chunk)
        x = g[i0:i1, None, None, None]
        a, b = reduced_terms(lam, mu, x, y, u, vt)
        h = b / (x * (vt - y) + y * u)
        if use_a:
            h = np.where(a > h, a, h)
        v, ix = _slice_argmin(h)
        vals[i0:i1] = v
        idx[i0:i1] = ix
    return vals, idx


# -- scalar refinement -------------------------------------------------------
#
# Both refiners descend on a *search score* that has the sign of the quantity
# of interest but does not vanish at the corner of the cube where all the
# bilinear forms degenerate:
#
#   raw:     max((A - B) / D, -B),  D = (1-u)(1-y) + (1-v)(1-x)
#   reduced: max(ineqA, ineqB / N), N = x (vt - y) + y u
#
# with A, B the outer arguments of the two sides.  The score is negative iff
# the point violates dominance.  Each sweep minimizes every coordinate exactly
# (pieces are affine or quadratic, so candidates are piece ends and quadratic
# roots), then line-searches along the main diagonal and along the sweep's
# displacement.

GOLDEN = 0.6180339887498949
LINE_SAMPLES = 33
GOLDEN_STEPS = 80


def _sws(k, a, b):
    t = (1.0 - k) * a * b + k * (a + b - 1.0)
    return t if t > 0.0 else 0.0


def gap(lam, mu, x, y, u, v):
    lhs = _sws(lam, _sws(mu, x, y), _sws(mu, u, v))
    rhs = _sws(mu, _sws(lam, x, u), _sws(lam, y, v))
    return lhs - rhs


def raw_sides(lam, mu, x, y, u, v):
    a = _sws(mu, x, y)
    b = _sws(mu, u, v)
    c = _sws(lam, x, u)
    d = _sws(lam, y, v)
    return (1.0 - lam) * a * b + lam * (a + b - 1.0), (1.0 - mu) * c * d + mu * (c + d - 1.0)


def raw_score(lam, mu, x, y, u, v):
    a, b = raw_sides(lam, mu, x, y, u, v)
    den = (1.0 - u) * (1.0 - y) + (1.0 - v) * (1.0 - x)
    s = (a - b) / den
    return s if s > -b else -b


def reduced_score(lam, mu, x, y, u, t, use_a):
    vt = y + t * (1.0 + (lam - 1.0) * y)
    a, b = reduced_terms(lam, mu, x, y, u, vt)
    s = b / (x * (vt - y) + y * u)
    if use_a and a > s:
        return a
    return s


def _solve(k, s, a):
    # t with (1-k) t a + k (t + a - 1) == s, or -1 when degenerate
    den = (1.0 - k) * a + k
    if den == 0.0:
        return -1.0
    return (s - k * (a - 1.0)) / den


def _quad_roots(c0, c1, c2, out):
    if c2 == 0.0:
        if c1 != 0.0:
            out.append(-c0 / c1)
        return
    out.append(-c1 / (2.0 * c2))
    disc = c1 * c1 - 4.0 * c0 * c2
    if disc >= 0.0:
        r = math.sqrt(disc)
        out.append((-c1 + r) / (2.0 * c2))
        out.append((-c1 - r) / (2.0 * c2))


def _fit2(f0, fh, f1):
    # coefficients of the quadratic through (0, f0), (1/2, fh), (1, f1)
    c2 = 2.0 * (f1 - 2.0 * fh + f0)
    return f0, f1 - f0 - c2, c2


# partner in the lam-inner term and in the mu-inner term, for x, y, u, v
_PARTNER = ((2, 1), (3, 0), (0, 3), (1, 2))


def _raw_candidates(lam, mu, p, c, lo, hi):
    a = p[_PARTNER[c][0]]
    b = p[_PARTNER[c][1]]
    kinks = [lo, hi]
    for t in (_solve(lam, 0.0, a), _solve(mu, 0.0, b)):
        if lo < t < hi:
            kinks.append(t)
    kinks.sort()
    out = list(kinks)
    q = list(p)
    for m in range(len(kinks) - 1):
        t0 = kinks[m]
        t1 = kinks[m + 1]
        # A, B and D are affine on the piece; solve A - B + B D == 0
        q[c] = t0
        a0, b0 = raw_sides(lam, mu, q[0], q[1], q[2], q[3])
        d0 = (1.0 - q[2]) * (1.0 - q[1]) + (1.0 - q[3]) * (1.0 - q[0])
        q[c] = t1
        a1, b1 = raw_sides(lam, mu, q[0], q[1], q[2], q[3])
        d1 = (1.0 - q[2]) * (1.0 - q[1]) + (1.0 - q[3]) * (1.0 - q[0])
        da = a1 - a0
        db = b1 - b0
        dd = d1 - d0
        roots = []
        _quad_roots(a0 - b0 + b0 * d0, da - db + b0 * dd + db * d0, db * dd, roots)
        w = t1 - t0
        for r in roots:
            if 0.0 < r < 1.0:
                out.append(t0 + r * w)
    return out


def _reduced_candidates(lam, mu, p, c, lo, hi, use_a):
    # every factor is at most quadratic along one coordinate: fit ineqA, ineqB
    # and N by three samples and collect the stationary points of ineqB / N
    # and the crossings ineqA == ineqB / N
    q = list(p)
    vals = []
    for t in (0.0, 0.5, 1.0):
        q[c] = t
        x, y, u, tt = q
        vt = y + tt * (1.0 + (lam - 1.0) * y)
        a, b = reduced_terms(lam, mu, x, y, u, vt)
        vals.append((a, b, x * (vt - y) + y * u))
    a0, a1, a2 = _fit2(vals[0][0], vals[1][0], vals[2][0])
    b0, b1, b2 = _fit2(vals[0][1], vals[1][1], vals[2][1])
    n0, n1, n2 = _fit2(vals[0][2], vals[1][2], vals[2][2])
    out = [lo, hi]
    # (b/N)' == 0  <=>  b' N - b N' == 0 (cubic terms cancel for the degrees here)
    _quad_roots(b1 * n0 - b0 * n1, 2.0 * b2 * n0 - 2.0 * b0 * n2, b2 * n1 - b1 * n2, out)
    if use_a:
        # a N - b == 0, dropping the quartic/cubic terms that vanish when a or N is affine
        _quad_roots(a0 * n0 - b0, a1 * n0 + a0 * n1 - b1, a2 * n0 + a1 * n1 + a0 * n2 - b2, out)
    return out


def _line_search(fn, p, d, lo, hi, best):
    """Minimize ``fn(p + alpha d)`` over the feasible alphas; returns (point, value) or None."""
    amin = -math.inf
    amax = math.inf
    for c in range(4):
        if d[c] > 0.0:
            amin = max(amin, (lo - p[c]) / d[c])
            amax = min(amax, (hi - p[c]) / d[c])
        elif d[c] < 0.0:
            amin = max(amin, (hi - p[c]) / d[c])
            amax = min(amax, (lo - p[c]) / d[c])
    if not amin < amax:
        return None

    def at(alpha):
        q = [p[c] + alpha * d[c] for c in range(4)]
        for c in range(4):
            q[c] = min(hi, max(lo, q[c]))
        return q, fn(*q)

    step = (amax - amin) / (LINE_SAMPLES - 1)
    arg = 0
    bval = math.inf
    for m in range(LINE_SAMPLES):
        val = at(amin + m * step)[1]
        if val < bval:
            bval = val
            arg = m
    a = amin + max(arg - 1, 0) * step
    b = amin + min(arg + 1, LINE_SAMPLES - 1) * step
    c1 = b - GOLDEN * (b - a)
    c2 = a + GOLDEN * (b - a)
    f1 = at(c1)[1]
    f2 = at(c2)[1]
    for _ in range(GOLDEN_STEPS):
        if f1 < f2:
            b = c2
            c2 = c1
            f2 = f1
            c1 = b - GOLDEN * (b - a)
            f1 = at(c1)[1]
        else:
            a = c1
            c1 = c2
            f1 = f2
            c2 = a + GOLDEN * (b - a)
            f2 = at(c2)[1]
    cands = (amin + arg * step, c1, c2)
    out = None
    for alpha in cands:
        q, val = at(alpha)
        if val < best:
            best = val
            out = (q, val)
    return out


def _descend(score, value, cand_fn, start, iters, lo, hi):
    p = [min(hi, max(lo, float(t))) for t in start]
    cur = score(*p)
    best_p = list(p)
    best_v = value(*p)
    diag = (1.0, 1.0, 1.0, 1.0)
    for _ in range(iters):
        before = cur
        origin = list(p)
        for c in range(4):
            arg = p[c]
            for t in cand_fn(p, c):
                if not lo <= t <= hi:
                    continue
                p[c] = t
                val = score(*p)
                if val < cur:
                    cur = val
                    arg = t
            p[c] = arg
        for d in (diag, [p[c] - origin[c] for c in range(4)]):
            hit = _line_search(score, p, d, lo, hi, cur)
            if hit is not None:
                p, cur = hit
        v = value(*p)
        if v < best_v:
            best_v = v
            best_p = list(p)
        if not before - cur > 1e-15:
            break
    return best_p, best_v


def refine_gap(lam, mu, start, iters, lo, hi):
    """Descent on the raw search score; returns the point of lowest gap visited."""
    return _descend(
        lambda x, y, u, v: raw_score(lam, mu, x, y, u, v),
        lambda x, y, u, v: gap(lam, mu, x, y, u, v),
        lambda p, c: _raw_candidates(lam, mu, p, c, lo, hi),
        start, iters, lo, hi,
    )


def refine_reduced(lam, mu, start, iters, lo, hi, use_a=True):
    """Descent on the reduced search score over ``(x, y, u, t)``; returns the
    point of lowest score visited."""
    score = lambda x, y, u, t: reduced_score(lam, mu, x, y, u, t, use_a)  # noqa: E731
    return _descend(
        score, score,
        lambda p, c: _reduced_candidates(lam, mu, p, c, lo, hi, use_a),
        start, iters, lo, hi,
    )


def _diagonal_start(score, lo, hi):
    p = [0.5, 0.5, 0.5, 0.5]
    hit = _line_search(score, p, (1.0, 1.0, 1.0, 1.0), lo, hi, score(*p))
    return p if hit is None else hit[0]


def diagonal_start_raw(lam, mu, lo, hi):
    """Best point of the main diagonal ``x = y = u = v`` under the raw search score."""
    return _diagonal_start(lambda x, y, u, v: raw_score(lam, mu, x, y, u, v), lo, hi)


def diagonal_start_reduced(lam, mu, lo, hi, use_a=True):
    return _diagonal_start(lambda x, y, u, t: reduced_score(lam, mu, x, y, u, t, use_a), lo, hi)
