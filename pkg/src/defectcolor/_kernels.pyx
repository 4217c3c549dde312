# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled backtracking kernel; same contract as ``_kernels_py.solve_csr``."""

from cpython.array cimport array, clone


def solve_csr(indptr, indices, lptr, lcol, order, int d):
    cdef int[:] ip = array("i", indptr)
    cdef int[:] ix = array("i", indices)
    cdef int[:] lp = array("i", lptr)
    cdef int[:] lc = array("i", lcol)
    cdef int[:] od = array("i", order)
    cdef Py_ssize_t n = ip.shape[0] - 1
    if n == 0:
        return []
    cdef array template = array("i", [])
    cdef int[:] color = clone(template, n, False)
    cdef int[:] same = clone(template, n, False)
    cdef int[:] choice = clone(template, n + 1, False)
    cdef Py_ssize_t pos = 0, i
    cdef int v, u, c, k, j, end, cnt
    cdef bint placed, ok
    for i in range(n):
        color[i] = -1
        same[i] = 0
    choice[0] = lp[od[0]]
    while pos >= 0:
        if pos == n:
            return [color[i] for i in range(n)]
        v = od[pos]
        if color[v] != -1:
            c = color[v]
            for k in range(ip[v], ip[v + 1]):
                u = ix[k]
                if color[u] == c:
                    same[u] -= 1
            color[v] = -1
            same[v] = 0
        placed = False
        end = lp[v + 1]
        j = choice[pos]
        while j < end:
            c = lc[j]
            j += 1
            cnt = 0
            ok = True
            for k in range(ip[v], ip[v + 1]):
                u = ix[k]
                if color[u] == c:
                    cnt += 1
                    if cnt > d or same[u] >= d:
                        ok = False
                        break
            if not ok:
                continue
            for k in range(ip[v], ip[v + 1]):
                u = ix[k]
                if color[u] == c:
                    same[u] += 1
            color[v] = c
            same[v] = cnt
            placed = True
            break
        choice[pos] = j
        if placed:
            pos += 1
            if pos < n:
                choice[pos] = lp[od[pos]]
        else:
            pos -= 1
    return None
