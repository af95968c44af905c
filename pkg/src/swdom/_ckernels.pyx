# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels; mirrors ``_pykernels`` operation for operation."""

import numpy as np

cimport numpy as cnp
from cython.parallel cimport prange
from libc.math cimport INFINITY, sqrt

cnp.import_array()

BACKEND = "cython"

DEF LINE_SAMPLES = 33
DEF GOLDEN_STEPS = 80
DEF MAXC = 16
cdef double GOLDEN = 0.6180339887498949


def interior_grid(Py_ssize_t n):
    return (np.arange(n, dtype=np.float64) + 0.5) / n


cdef inline double _swr(double k, double a, double b) noexcept nogil:
    return (1.0 - k) * a * b + k * (a + b - 1.0)


cdef inline double _sws(double k, double a, double b) noexcept nogil:
    cdef double t = (1.0 - k) * a * b + k * (a + b - 1.0)
    return t if t > 0.0 else 0.0


cdef inline double _gap(double lam, double mu, double x, double y, double u, double v) noexcept nogil:
    cdef double lhs = _sws(lam, _sws(mu, x, y), _sws(mu, u, v))
    cdef double rhs = _sws(mu, _sws(lam, x, u), _sws(lam, y, v))
    return lhs - rhs


def gap(double lam, double mu, double x, double y, double u, double v):
    return _gap(lam, mu, x, y, u, v)


def gap_slice_minima(double lam, double mu, Py_ssize_t n):
    cdef double[::1] g = interior_grid(n)
    cdef double[::1] c = 1.0 - np.asarray(g)
    cdef double[:, ::1] tl = np.empty((n, n))
    cdef double[:, ::1] tm = np.empty((n, n))
    gvals_arr = np.empty((n, n))
    gidx_arr = np.empty((n, n, 2), dtype=np.int64)
    svals_arr = np.empty((n, n))
    sidx_arr = np.empty((n, n, 2), dtype=np.int64)
    cdef double[:, ::1] gvals = gvals_arr
    cdef double[:, ::1] svals = svals_arr
    cdef cnp.int64_t[:, :, ::1] gidx = gidx_arr
    cdef cnp.int64_t[:, :, ::1] sidx = sidx_arr
    cdef Py_ssize_t i, j, k, l, gk, gl, sk, sl
    cdef double gbest, sbest, a, b, d, s, den
    for i in range(n):
        for j in range(n):
            tl[i, j] = _sws(lam, g[i], g[j])
            tm[i, j] = _sws(mu, g[i], g[j])
    for i in prange(n, nogil=True, schedule="static"):
        for j in range(n):
            gbest = INFINITY
            sbest = INFINITY
            gk = -1
            gl = -1
            sk = -1
            sl = -1
            for k in range(n):
                for l in range(n):
                    a = _swr(lam, tm[i, j], tm[k, l])
                    b = _swr(mu, tl[i, k], tl[j, l])
                    d = (a if a > 0.0 else 0.0) - (b if b > 0.0 else 0.0)
                    if gk < 0 or d < gbest:
                        gbest = d
                        gk = k
                        gl = l
                    den = c[k] * c[j] + c[l] * c[i]
                    s = (a - b) / den
                    if not s > -b:
                        s = -b
                    if sk < 0 or s < sbest:
                        sbest = s
                        sk = k
                        sl = l
            gvals[i, j] = gbest
            gidx[i, j, 0] = gk
            gidx[i, j, 1] = gl
            svals[i, j] = sbest
            sidx[i, j, 0] = sk
            sidx[i, j, 1] = sl
    return gvals_arr, gidx_arr, svals_arr, sidx_arr


cdef inline void _terms(double lam, double mu, double x, double y, double u, double vt,
                        double* a, double* b) noexcept nogil:
    a[0] = u * ((lam - 1.0) * x + 1.0) * ((mu - 1.0) * vt + 1.0) + (mu - 1.0) * vt * x + vt + x - 1.0
    b[0] = vt * x * (1.0 - (lam - 1.0) * (mu - 1.0) * u * y) + y * (
        (lam - 1.0) * u * y * ((mu - 1.0) * x + 1.0) + u - x
    )


def reduced_terms(double lam, double mu, double x, double y, double u, double vt):
    cdef double a, b
    _terms(lam, mu, x, y, u, vt, &a, &b)
    return a, b


cdef inline double _reduced_score(double lam, double mu, double x, double y, double u, double t,
                                  bint use_a) noexcept nogil:
    cdef double a, b, s
    cdef double vt = y + t * (1.0 + (lam - 1.0) * y)
    _terms(lam, mu, x, y, u, vt, &a, &b)
    s = b / (x * (vt - y) + y * u)
    if use_a and a > s:
        return a
    return s


def reduced_score(double lam, double mu, double x, double y, double u, double t, bint use_a=True):
    return _reduced_score(lam, mu, x, y, u, t, use_a)


def reduced_slice_minima(double lam, double mu, Py_ssize_t n, bint use_a=True):
    cdef double[::1] g = interior_grid(n)
    vals_arr = np.empty((n, n))
    idx_arr = np.empty((n, n, 2), dtype=np.int64)
    cdef double[:, ::1] vals = vals_arr
    cdef cnp.int64_t[:, :, ::1] idx = idx_arr
    cdef Py_ssize_t i, j, k, l, bk, bl
    cdef double best, h
    for i in prange(n, nogil=True, schedule="static"):
        for j in range(n):
            best = INFINITY
            bk = -1
            bl = -1
            for k in range(n):
                for l in range(n):
                    h = _reduced_score(lam, mu, g[i], g[j], g[k], g[l], use_a)
                    if bk < 0 or h < best:
                        best = h
                        bk = k
                        bl = l
            vals[i, j] = best
            idx[i, j, 0] = bk
            idx[i, j, 1] = bl
    return vals_arr, idx_arr


# -- scalar refinement -------------------------------------------------------

cdef inline void _raw_sides(double lam, double mu, double* p, double* A, double* B) noexcept nogil:
    cdef double a = _sws(mu, p[0], p[1])
    cdef double b = _sws(mu, p[2], p[3])
    cdef double c = _sws(lam, p[0], p[2])
    cdef double d = _sws(lam, p[1], p[3])
    A[0] = (1.0 - lam) * a * b + lam * (a + b - 1.0)
    B[0] = (1.0 - mu) * c * d + mu * (c + d - 1.0)


cdef inline double _den(double* p) noexcept nogil:
    return (1.0 - p[2]) * (1.0 - p[1]) + (1.0 - p[3]) * (1.0 - p[0])


cdef inline double _raw_score(double lam, double mu, double* p) noexcept nogil:
    cdef double A, B, s
    _raw_sides(lam, mu, p, &A, &B)
    s = (A - B) / _den(p)
    return s if s > -B else -B


def raw_score(double lam, double mu, double x, double y, double u, double v):
    cdef double p[4]
    p[0] = x
    p[1] = y
    p[2] = u
    p[3] = v
    return _raw_score(lam, mu, p)


cdef inline double _solve(double k, double s, double a) noexcept nogil:
    cdef double den = (1.0 - k) * a + k
    if den == 0.0:
        return -1.0
    return (s - k * (a - 1.0)) / den


cdef int _quad_roots(double c0, double c1, double c2, double* out, int m) noexcept nogil:
    cdef double disc, r
    if c2 == 0.0:
        if c1 != 0.0:
            out[m] = -c0 / c1
            m += 1
        return m
    out[m] = -c1 / (2.0 * c2)
    m += 1
    disc = c1 * c1 - 4.0 * c0 * c2
    if disc >= 0.0:
        r = sqrt(disc)
        out[m] = (-c1 + r) / (2.0 * c2)
        out[m + 1] = (-c1 - r) / (2.0 * c2)
        m += 2
    return m


cdef int[4][2] _PARTNER = [[2, 1], [3, 0], [0, 3], [1, 2]]


cdef int _raw_candidates(double lam, double mu, double* p, int c, double lo, double hi,
                         double* out) noexcept nogil:
    cdef double kinks[4]
    cdef double roots[3]
    cdef double q[4]
    cdef double t, t0, t1, a0, b0, d0, a1, b1, d1, da, db, dd, w, r
    cdef int nk = 2, m, z, nr, e
    kinks[0] = lo
    kinks[1] = hi
    t = _solve(lam, 0.0, p[_PARTNER[c][0]])
    if lo < t < hi:
        kinks[nk] = t
        nk += 1
    t = _solve(mu, 0.0, p[_PARTNER[c][1]])
    if lo < t < hi:
        kinks[nk] = t
        nk += 1
    # insertion sort
    for m in range(1, nk):
        t = kinks[m]
        z = m - 1
        while z >= 0 and kinks[z] > t:
            kinks[z + 1] = kinks[z]
            z -= 1
        kinks[z + 1] = t
    for m in range(nk):
        out[m] = kinks[m]
    e = nk
    for z in range(4):
        q[z] = p[z]
    for m in range(nk - 1):
        t0 = kinks[m]
        t1 = kinks[m + 1]
        q[c] = t0
        _raw_sides(lam, mu, q, &a0, &b0)
        d0 = _den(q)
        q[c] = t1
        _raw_sides(lam, mu, q, &a1, &b1)
        d1 = _den(q)
        da = a1 - a0
        db = b1 - b0
        dd = d1 - d0
        nr = _quad_roots(a0 - b0 + b0 * d0, da - db + b0 * dd + db * d0, db * dd, roots, 0)
        w = t1 - t0
        for z in range(nr):
            r = roots[z]
            if 0.0 < r < 1.0:
                out[e] = t0 + r * w
                e += 1
    return e


cdef inline void _fit2(double f0, double fh, double f1, double* c) noexcept nogil:
    c[2] = 2.0 * (f1 - 2.0 * fh + f0)
    c[0] = f0
    c[1] = f1 - f0 - c[2]


cdef int _reduced_candidates(double lam, double mu, double* p, int c, double lo, double hi,
                             bint use_a, double* out) noexcept nogil:
    cdef double q[4]
    cdef double av[3]
    cdef double bv[3]
    cdef double nv[3]
    cdef double ac[3]
    cdef double bc[3]
    cdef double nc[3]
    cdef double ts[3]
    cdef double vt, x, y, u, tt
    cdef int z, m
    ts[0] = 0.0
    ts[1] = 0.5
    ts[2] = 1.0
    for z in range(4):
        q[z] = p[z]
    for z in range(3):
        q[c] = ts[z]
        x = q[0]
        y = q[1]
        u = q[2]
        tt = q[3]
        vt = y + tt * (1.0 + (lam - 1.0) * y)
        _terms(lam, mu, x, y, u, vt, &av[z], &bv[z])
        nv[z] = x * (vt - y) + y * u
    _fit2(av[0], av[1], av[2], ac)
    _fit2(bv[0], bv[1], bv[2], bc)
    _fit2(nv[0], nv[1], nv[2], nc)
    out[0] = lo
    out[1] = hi
    m = _quad_roots(bc[1] * nc[0] - bc[0] * nc[1], 2.0 * bc[2] * nc[0] - 2.0 * bc[0] * nc[2],
                    bc[2] * nc[1] - bc[1] * nc[2], out, 2)
    if use_a:
        m = _quad_roots(ac[0] * nc[0] - bc[0], ac[1] * nc[0] + ac[0] * nc[1] - bc[1],
                        ac[2] * nc[0] + ac[1] * nc[1] + ac[0] * nc[2] - bc[2], out, m)
    return m


ctypedef struct Ctx:
    double lam
    double mu
    bint reduced
    bint use_a
    double lo
    double hi


cdef inline double _score(Ctx* ctx, double* p) noexcept nogil:
    if ctx.reduced:
        return _reduced_score(ctx.lam, ctx.mu, p[0], p[1], p[2], p[3], ctx.use_a)
    return _raw_score(ctx.lam, ctx.mu, p)


cdef inline double _value(Ctx* ctx, double* p) noexcept nogil:
    if ctx.reduced:
        return _reduced_score(ctx.lam, ctx.mu, p[0], p[1], p[2], p[3], ctx.use_a)
    return _gap(ctx.lam, ctx.mu, p[0], p[1], p[2], p[3])


cdef inline double _clamp(double t, double lo, double hi) noexcept nogil:
    if not t > lo:
        t = lo
    if not t < hi:
        t = hi
    return t


cdef inline double _at(Ctx* ctx, double* p, double* d, double alpha, double* q) noexcept nogil:
    cdef int c
    for c in range(4):
        q[c] = _clamp(p[c] + alpha * d[c], ctx.lo, ctx.hi)
    return _score(ctx, q)


cdef bint _line_search(Ctx* ctx, double* p, double* d, double* best) noexcept nogil:
    """Minimize the score along ``p + alpha d``; on improvement update ``p`` and ``best``."""
    cdef double amin = -INFINITY, amax = INFINITY, val, step, a, b, c1, c2, f1, f2, bval
    cdef double q[4]
    cdef double cands[3]
    cdef double hit[4]
    cdef bint found = False
    cdef int c, m, arg
    for c in range(4):
        if d[c] > 0.0:
            val = (ctx.lo - p[c]) / d[c]
            if val > amin:
                amin = val
            val = (ctx.hi - p[c]) / d[c]
            if val < amax:
                amax = val
        elif d[c] < 0.0:
            val = (ctx.hi - p[c]) / d[c]
            if val > amin:
                amin = val
            val = (ctx.lo - p[c]) / d[c]
            if val < amax:
                amax = val
    if not amin < amax:
        return False
    step = (amax - amin) / (LINE_SAMPLES - 1)
    arg = 0
    bval = INFINITY
    for m in range(LINE_SAMPLES):
        val = _at(ctx, p, d, amin + m * step, q)
        if val < bval:
            bval = val
            arg = m
    a = amin + (arg - 1 if arg > 1 else 0) * step
    b = amin + (arg + 1 if arg + 1 < LINE_SAMPLES - 1 else LINE_SAMPLES - 1) * step
    c1 = b - GOLDEN * (b - a)
    c2 = a + GOLDEN * (b - a)
    f1 = _at(ctx, p, d, c1, q)
    f2 = _at(ctx, p, d, c2, q)
    for m in range(GOLDEN_STEPS):
        if f1 < f2:
            b = c2
            c2 = c1
            f2 = f1
            c1 = b - GOLDEN * (b - a)
            f1 = _at(ctx, p, d, c1, q)
        else:
            a = c1
            c1 = c2
            f1 = f2
            c2 = a + GOLDEN * (b - a)
            f2 = _at(ctx, p, d, c2, q)
    cands[0] = amin + arg * step
    cands[1] = c1
    cands[2] = c2
    for m in range(3):
        val = _at(ctx, p, d, cands[m], q)
        if val < best[0]:
            best[0] = val
            for c in range(4):
                hit[c] = q[c]
            found = True
    if found:
        for c in range(4):
            p[c] = hit[c]
    return found


cdef double _descend(Ctx* ctx, double* p, Py_ssize_t iters, double* best_p) noexcept nogil:
    cdef double cands[MAXC]
    cdef double origin[4]
    cdef double diag[4]
    cdef double pattern[4]
    cdef double cur, before, arg, t, val, v, best_v
    cdef int c, m, nc, z
    cdef Py_ssize_t it
    for c in range(4):
        p[c] = _clamp(p[c], ctx.lo, ctx.hi)
        diag[c] = 1.0
    cur = _score(ctx, p)
    for c in range(4):
        best_p[c] = p[c]
    best_v = _value(ctx, p)
    for it in range(iters):
        before = cur
        for c in range(4):
            origin[c] = p[c]
        for c in range(4):
            arg = p[c]
            if ctx.reduced:
                nc = _reduced_candidates(ctx.lam, ctx.mu, p, c, ctx.lo, ctx.hi, ctx.use_a, cands)
            else:
                nc = _raw_candidates(ctx.lam, ctx.mu, p, c, ctx.lo, ctx.hi, cands)
            for m in range(nc):
                t = cands[m]
                if not (ctx.lo <= t <= ctx.hi):
                    continue
                p[c] = t
                val = _score(ctx, p)
                if val < cur:
                    cur = val
                    arg = t
            p[c] = arg
        for c in range(4):
            pattern[c] = p[c] - origin[c]
        _line_search(ctx, p, diag, &cur)
        _line_search(ctx, p, pattern, &cur)
        v = _value(ctx, p)
        if v < best_v:
            best_v = v
            for z in range(4):
                best_p[z] = p[z]
        if not (before - cur > 1e-15):
            break
    return best_v


def refine_gap(double lam, double mu, start, Py_ssize_t iters, double lo, double hi):
    cdef Ctx ctx
    cdef double p[4]
    cdef double best_p[4]
    cdef double v
    cdef int c
    ctx.lam = lam
    ctx.mu = mu
    ctx.reduced = False
    ctx.use_a = True
    ctx.lo = lo
    ctx.hi = hi
    for c in range(4):
        p[c] = float(start[c])
    v = _descend(&ctx, p, iters, best_p)
    return [best_p[0], best_p[1], best_p[2], best_p[3]], v


def refine_reduced(double lam, double mu, start, Py_ssize_t iters, double lo, double hi,
                   bint use_a=True):
    cdef Ctx ctx
    cdef double p[4]
    cdef double best_p[4]
    cdef double v
    cdef int c
    ctx.lam = lam
    ctx.mu = mu
    ctx.reduced = True
    ctx.use_a = use_a
    ctx.lo = lo
    ctx.hi = hi
    for c in range(4):
        p[c] = float(start[c])
    v = _descend(&ctx, p, iters, best_p)
    return [best_p[0], best_p[1], best_p[2], best_p[3]], v


cdef list _diagonal_start(Ctx* ctx):
    cdef double p[4]
    cdef double d[4]
    cdef double cur
    cdef int c
    for c in range(4):
        p[c] = 0.5
        d[c] = 1.0
    cur = _score(ctx, p)
    _line_search(ctx, p, d, &cur)
    return [p[0], p[1], p[2], p[3]]


def diagonal_start_raw(double lam, double mu, double lo, double hi):
    cdef Ctx ctx
    ctx.lam = lam
    ctx.mu = mu
    ctx.reduced = False
    ctx.use_a = True
    ctx.lo = lo
    ctx.hi = hi
    return _diagonal_start(&ctx)


def diagonal_start_reduced(double lam, double mu, double lo, double hi, bint use_a=True):
    cdef Ctx ctx
    ctx.lam = lam
    ctx.mu = mu
    ctx.reduced = True
    ctx.use_a = use_a
    ctx.lo = lo
    ctx.hi = hi
    return _diagonal_start(&ctx)
