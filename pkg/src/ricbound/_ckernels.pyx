# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; mirror of ``_pykernels`` on 64-bit integers.

Any intermediate that would leave the int64 range raises OverflowError so
that the caller can rerun the pure-Python kernel on unbounded integers.
"""

import numpy as np
cimport numpy as cnp

cnp.import_array()

ctypedef long long i64

cdef extern from *:
    """
    static inline int rb_mul(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int rb_sub(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int rb_add(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int rb_mul(i64 a, i64 b, i64 *r) nogil
    int rb_sub(i64 a, i64 b, i64 *r) nogil
    int rb_add(i64 a, i64 b, i64 *r) nogil

BACKEND = "cython"


def bfs_counts(Py_ssize_t n, indptr, indices):
    cdef i64[::1] ip = np.asarray(indptr, dtype=np.int64)
    cdef i64[::1] ix = np.asarray(indices, dtype=np.int64)
    dist_arr = np.full((n, n), -1, dtype=np.int64)
    sigma_arr = np.zeros((n, n), dtype=np.int64)
    cdef i64[:, ::1] dist = dist_arr
    cdef i64[:, ::1] sigma = sigma_arr
    cdef i64[::1] queue = np.empty(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t s, head, tail, u, w, e
    cdef i64 du, tmp
    cdef int overflow = 0
    with nogil:
        for s in range(n):
            dist[s, s] = 0
            sigma[s, s] = 1
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                u = queue[head]
                head += 1
                du = dist[s, u] + 1
                for e in range(ip[u], ip[u + 1]):
                    w = ix[e]
                    if dist[s, w] < 0:
                        dist[s, w] = du
                        queue[tail] = w
                        tail += 1
                    if dist[s, w] == du:
                        if rb_add(sigma[s, w], sigma[s, u], &tmp):
                            overflow = 1
                            break
                        sigma[s, w] = tmp
                if overflow:
                    break
            if overflow:
                break
    if overflow:
        raise OverflowError("geodesic count exceeds int64")
    return dist_arr.tolist(), sigma_arr.tolist()


def simplex_bland(tab, Py_ssize_t m, Py_ssize_t k):
    arr = np.array(tab, dtype=np.int64)
    cdef i64[:, ::1] t = arr
    basic_arr = np.arange(k, k + m, dtype=np.int64)
    nonbasic_arr = np.arange(k, dtype=np.int64)
    cdef i64[::1] basic = basic_arr
    cdef i64[::1] nonbasic = nonbasic_arr
    cdef i64 D = 1, p, f, best, lhs, rhs, a, x1, x2
    cdef Py_ssize_t i, j, r, s
    cdef i64 pivots = 0
    cdef int status = -1
    cdef int overflow = 0
    with nogil:
        while True:
            s = -1
            best = -1
            for j in range(k):
                if t[m, j] < 0 and (s < 0 or nonbasic[j] < best):
                    s = j
                    best = nonbasic[j]
            if s < 0:
                status = 0
                break
            r = -1
            for i in range(m):
                a = t[i, s]
                if a > 0:
                    if r < 0:
                        r = i
                        continue
                    if rb_mul(t[i, k], t[r, s], &lhs) or rb_mul(t[r, k], a, &rhs):
                        overflow = 1
                        break
                    if lhs < rhs or (lhs == rhs and basic[i] < basic[r]):
                        r = i
            if overflow:
                break
            if r < 0:
                status = 1
                break
            p = t[r, s]
            for i in range(m + 1):
                if i == r:
                    continue
                f = t[i, s]
                for j in range(k + 1):
                    if j == s:
                        continue
                    if rb_mul(t[i, j], p, &x1) or rb_mul(f, t[r, j], &x2) or rb_sub(x1, x2, &x1):
                        overflow = 1
                        break
                    t[i, j] = x1 // D
                if overflow:
                    break
                t[i, s] = -f
            if overflow:
                break
            t[r, s] = D
            D = p
            best = basic[r]
            basic[r] = nonbasic[s]
            nonbasic[s] = best
            pivots += 1
    if overflow:
        raise OverflowError("simplex tableau entry exceeds int64")
    rows = arr.tolist()
    for i in range(m + 1):
        tab[i][:] = rows[i]
    return status, D, basic_arr.tolist(), nonbasic_arr.tolist(), pivots


cdef void _descend(Py_ssize_t i, Py_ssize_t n, i64 acc, i64[::1] lo, i64[::1] hi,
                   i64[::1] w, i64[:, ::1] d, i64[::1] rest, i64[::1] f,
                   i64 *best, int *found) noexcept nogil:
    cdef i64 v, diff
    cdef Py_ssize_t j
    cdef int ok
    if i == n:
        if not found[0] or acc < best[0]:
            best[0] = acc
            found[0] = 1
        return
    if found[0] and acc + rest[i] >= best[0]:
        return
    for v in range(lo[i], hi[i] + 1):
        ok = 1
        for j in range(i):
            diff = v - f[j]
            if diff > d[i, j] or -diff > d[i, j]:
                ok = 0
                break
        if ok:
            f[i] = v
            _descend(i + 1, n, acc + w[i] * v, lo, hi, w, d, rest, f, best, found)


def oracle_min(lo, hi, weights, dist):
    cdef Py_ssize_t n = len(lo)
    cdef i64[::1] lo_v = np.asarray(lo, dtype=np.int64)
    cdef i64[::1] hi_v = np.asarray(hi, dtype=np.int64)
    cdef i64[::1] w_v = np.asarray(weights, dtype=np.int64)
    cdef i64[:, ::1] d_v = np.ascontiguousarray(np.asarray(dist, dtype=np.int64).reshape(n, n))
    cdef i64[::1] rest = np.zeros(n + 1, dtype=np.int64)
    cdef i64[::1] f = np.zeros(max(n, 1), dtype=np.int64)
    cdef Py_ssize_t i
    cdef i64 best = 0
    cdef int found = 0
    for i in range(n - 1, -1, -1):
        rest[i] = rest[i + 1] + min(w_v[i] * lo_v[i], w_v[i] * hi_v[i])
    with nogil:
        _descend(0, n, 0, lo_v, hi_v, w_v, d_v, rest, f, &best, &found)
    return best if found else None
