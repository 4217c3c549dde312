"""Pure-Python backtracking kernel; mirrors ``_kernels.pyx`` line for line."""


def solve_csr(indptr, indices, lptr, lcol, order, int_d):
    """Find an (L, d)-defective coloring of a CSR graph.

    ``indptr``/``indices`` hold adjacency, ``lptr``/``lcol`` the lists, and
    ``order`` the vertex order.  Returns a list of chosen colors per vertex
    index, or ``None`` when the search space is exhausted.
    """
    n = len(indptr) - 1
    d = int_d
    color = [-1] * n
    same = [0] * n
    choice = [0] * (n + 1)
    pos = 0
    choice[0] = lptr[order[0]] if n else 0
    if n == 0:
        return []
    while pos >= 0:
        if pos == n:
            return color
        v = order[pos]
        if color[v] != -1:
            c = color[v]
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if color[u] == c:
                    same[u] -= 1
            color[v] = -1
            same[v] = 0
        placed = False
        end = lptr[v + 1]
        j = choice[pos]
        while j < end:
            c = lcol[j]
            j += 1
            cnt = 0
            ok = True
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
                if color[u] == c:
                    cnt += 1
                    if cnt > d or same[u] >= d:
                        ok = False
                        break
            if not ok:
                continue
            for k in range(indptr[v], indptr[v + 1]):
                u = indices[k]
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
                choice[pos] = lptr[order[pos]]
        else:
            pos -= 1
    return None
