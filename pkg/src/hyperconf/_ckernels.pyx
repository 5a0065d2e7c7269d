# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; drop-in twin of ``hyperconf._pykernels``.

The subtransversal search follows the mark-array formulation literally: a
zero-initialised byte array ``A`` over the vertices, the union ``U`` built as
an explicit list while marking, and ``A`` restored from that list after each
selection.
"""

from libc.stdlib cimport malloc, calloc, free

import numpy as np
cimport numpy as cnp

cnp.import_array()

NAME = "cython"

cdef enum:
    REJECT = 0
    ACCEPT = 1
    MINIMAL = 2
    TOO_LARGE = -1
    EMPTY_FAMILY = -2


cdef struct Work:
    int *in_s        # position+1 of each vertex in S, 0 if absent
    int *cls         # per edge: -1 ignored, k for E_omega, i for E_{s[i]}
    int *fam_start   # k+2 prefix offsets into fam
    int *fam         # edge ids grouped by class
    int *odo         # odometer over selections
    char *mark       # the array A
    int *ulist       # vertices of U in insertion order


cdef int work_alloc(Work *w, int n, int m, int k) nogil:
    w.in_s = <int *> calloc(n + 1, sizeof(int))
    w.cls = <int *> malloc((m + 1) * sizeof(int))
    w.fam_start = <int *> calloc(k + 3, sizeof(int))
    w.fam = <int *> malloc((m + 1) * sizeof(int))
    w.odo = <int *> calloc(k + 1, sizeof(int))
    w.mark = <char *> calloc(n + 1, sizeof(char))
    w.ulist = <int *> malloc((n + 1) * sizeof(int))
    if (w.in_s == NULL or w.cls == NULL or w.fam_start == NULL or w.fam == NULL
            or w.odo == NULL or w.mark == NULL or w.ulist == NULL):
        return -1
    return 0


cdef void work_free(Work *w) nogil:
    free(w.in_s)
    free(w.cls)
    free(w.fam_start)
    free(w.fam)
    free(w.odo)
    free(w.mark)
    free(w.ulist)


cdef int subtrans_core(int n, int m, const int[:] eptr, const int[:] eidx,
                       const int *s, int k, Work *w, int *sel_out) nogil:
    cdef int i, j, e, v, hits, who, c, t, p, q, ulen
    cdef int omega_start, omega_end, ok, contained
    if k > m:
        return TOO_LARGE
    for i in range(k):
        w.in_s[s[i]] = i + 1
    # Step 1: classify every edge by its trace on S.
    for i in range(k + 2):
        w.fam_start[i] = 0
    for e in range(m):
        hits = 0
        who = -1
        for j in range(eptr[e], eptr[e + 1]):
            p = w.in_s[eidx[j]]
            if p:
                hits += 1
                who = p - 1
        if hits == 0:
            w.cls[e] = k
        elif hits == 1:
            w.cls[e] = who
        else:
            w.cls[e] = -1
        if w.cls[e] >= 0:
            w.fam_start[w.cls[e] + 1] += 1
    for i in range(k):
        w.in_s[s[i]] = 0
    for i in range(k + 1):
        w.fam_start[i + 1] += w.fam_start[i]
    # Fill groups, reusing odo as per-class cursors.
    for i in range(k + 1):
        w.odo[i] = w.fam_start[i]
    for e in range(m):
        c = w.cls[e]
        if c >= 0:
            w.fam[w.odo[c]] = e
            w.odo[c] += 1
    # Step 1.1 / 1.2
    for i in range(k):
        if w.fam_start[i + 1] == w.fam_start[i]:
            return EMPTY_FAMILY
    omega_start = w.fam_start[k]
    omega_end = w.fam_start[k + 1]
    if omega_start == omega_end:
        for i in range(k):
            sel_out[i] = w.fam[w.fam_start[i]]
        return MINIMAL
    # Step 2: odometer over selections, lexicographic with the last slot fastest.
    for i in range(k):
        w.odo[i] = w.fam_start[i]
    while True:
        ulen = 0
        for i in range(k):
            e = w.fam[w.odo[i]]
            for j in range(eptr[e], eptr[e + 1]):
                v = eidx[j]
                if not w.mark[v]:
                    w.mark[v] = 1
                    w.ulist[ulen] = v
                    ulen += 1
        ok = 1
        for q in range(omega_start, omega_end):
            e = w.fam[q]
            contained = 1
            for j in range(eptr[e], eptr[e + 1]):
                if not w.mark[eidx[j]]:
                    contained = 0
                    break
            if contained:
                ok = 0
                break
        for t in range(ulen):
            w.mark[w.ulist[t]] = 0
        if ok:
            for i in range(k):
                sel_out[i] = w.fam[w.odo[i]]
            return ACCEPT
        # advance odometer
        i = k - 1
        while i >= 0:
            w.odo[i] += 1
            if w.odo[i] < w.fam_start[i + 1]:
                break
            w.odo[i] = w.fam_start[i]
            i -= 1
        if i < 0:
            return REJECT


def subtransversal(h, s):
    cdef int k = len(s)
    cdef int n = h.n, m = h.m
    if k > m:
        return TOO_LARGE, ()
    eptr_a, eidx_a, _, _ = h.csr
    cdef const int[:] eptr = eptr_a
    cdef const int[:] eidx = eidx_a
    cdef Work w
    cdef int *sv = <int *> malloc((k + 1) * sizeof(int))
    cdef int *sel = <int *> malloc((k + 1) * sizeof(int))
    cdef int i, status
    try:
        if work_alloc(&w, n, m, k) != 0 or sv == NULL or sel == NULL:
            raise MemoryError()
        for i in range(k):
            sv[i] = s[i]
        status = subtrans_core(n, m, eptr, eidx, sv, k, &w, sel)
        if status == ACCEPT or status == MINIMAL:
            return status, tuple([sel[i] for i in range(k)])
        return status, ()
    finally:
        work_free(&w)
        free(sv)
        free(sel)


def dual_cooccurrence_rows(h, int lo, int hi):
    """Rows ``[lo, hi)`` of the upper triangle; releases the GIL while scanning."""
    cdef int n = h.n, m = h.m
    eptr_a, eidx_a, _, _ = h.csr
    cdef const int[:] eptr = eptr_a
    cdef const int[:] eidx = eidx_a
    cdef cnp.ndarray[cnp.uint8_t, ndim=2] out_a = np.zeros((max(hi - lo, 0), max(n, 1)), dtype=np.uint8)
    cdef cnp.uint8_t[:, :] out = out_a
    cdef Work w
    cdef int pair[2]
    cdef int sel[2]
    cdef int u, v, status
    if work_alloc(&w, n, m, 2) != 0:
        work_free(&w)
        raise MemoryError()
    try:
        with nogil:
            for u in range(lo, hi):
                for v in range(u + 1, n):
                    pair[0] = u
                    pair[1] = v
                    status = subtrans_core(n, m, eptr, eidx, pair, 2, &w, sel)
                    if status == ACCEPT or status == MINIMAL:
                        out[u - lo, v] = 1
    finally:
        work_free(&w)
    return [list(np.flatnonzero(out_a[r]).tolist()) for r in range(hi - lo)]


def gilmore_violation(h):
    cdef int m = h.m, n = h.n
    if m == 0:
        return None
    eptr_a, eidx_a, _, _ = h.csr
    cdef const int[:] eptr = eptr_a
    cdef const int[:] eidx = eidx_a
    cdef const cnp.uint8_t[:, :] inc = np.ascontiguousarray(h.incidence)
    cdef int *sbuf = <int *> malloc((n + 1) * sizeof(int))
    cdef int i, j, k, f, p, v, slen, covered, found
    cdef int ri = -1, rj = -1, rk = -1
    if sbuf == NULL:
        raise MemoryError()
    try:
        with nogil:
            found = 0
            for i in range(m):
                for j in range(i, m):
                    for k in range(j, m):
                        slen = 0
                        for p in range(eptr[i], eptr[i + 1]):
                            v = eidx[p]
                            if inc[j, v] or inc[k, v]:
                                sbuf[slen] = v
                                slen += 1
                        for p in range(eptr[j], eptr[j + 1]):
                            v = eidx[p]
                            if inc[k, v] and not inc[i, v]:
                                sbuf[slen] = v
                                slen += 1
                        covered = 0
                        for f in range(m):
                            covered = 1
                            for p in range(slen):
                                if not inc[f, sbuf[p]]:
                                    covered = 0
                                    break
                            if covered:
                                break
                        if not covered:
                            ri = i
                            rj = j
                            rk = k
                            found = 1
                            break
                    if found:
                        break
                if found:
                    break
    finally:
        free(sbuf)
    if ri < 0:
        return None
    return (ri, rj, rk)


cdef int clique_search(int n, const cnp.uint8_t[:, :] adj, const char *in_x,
                       const unsigned long long *xadj, unsigned long long full,
                       int size, int *stack, int *cursor) nogil:
    """Depth-first scan of increasing ``size``-cliques avoiding ``in_x``.

    Returns 1 with the clique left in ``stack`` when one is dominated by no
    vertex of X (its domination mask reaches zero)."""
    cdef unsigned long long dom[65]
    cdef int depth, c, t, okc
    if size == 0:
        return 0
    depth = 0
    cursor[0] = 0
    dom[0] = full
    while depth >= 0:
        c = cursor[depth]
        while c < n:
            if not in_x[c]:
                okc = 1
                for t in range(depth):
                    if not adj[stack[t], c]:
                        okc = 0
                        break
                if okc:
                    break
            c += 1
        if c >= n:
            depth -= 1
            if depth >= 0:
                cursor[depth] = stack[depth] + 1
            continue
        stack[depth] = c
        dom[depth + 1] = dom[depth] & xadj[c]
        if depth + 1 == size:
            if dom[depth + 1] == 0:
                return 1
            cursor[depth] = c + 1
            continue
        depth += 1
        cursor[depth] = c + 1
    return 0


def undominated_clique(g, x):
    cdef int k = len(x)
    cdef int n = g.n
    if k == 0:
        return ()
    if k > 64:
        raise ValueError("compiled clique-transversal check supports |X| <= 64")
    cdef const cnp.uint8_t[:, :] adj = g.matrix
    cdef char *in_x = <char *> calloc(n + 1, sizeof(char))
    cdef unsigned long long *xadj = <unsigned long long *> calloc(n + 1, sizeof(unsigned long long))
    cdef int *stack = <int *> malloc((k + 1) * sizeof(int))
    cdef int *cursor = <int *> malloc((k + 1) * sizeof(int))
    cdef unsigned long long full
    cdef int i, c, size, hit = 0, found_size = 0
    try:
        if in_x == NULL or xadj == NULL or stack == NULL or cursor == NULL:
            raise MemoryError()
        for i in range(k):
            in_x[<int> x[i]] = 1
        for c in range(n):
            for i in range(k):
                if adj[<int> x[i], c]:
                    xadj[c] |= (<unsigned long long> 1) << i
        full = ~(<unsigned long long> 0) if k == 64 else (((<unsigned long long> 1) << k) - 1)
        with nogil:
            for size in range(1, k + 1):
                if clique_search(n, adj, in_x, xadj, full, size, stack, cursor):
                    hit = 1
                    found_size = size
                    break
        if hit:
            return tuple([stack[i] for i in range(found_size)])
        return None
    finally:
        free(in_x)
        free(xadj)
        free(stack)
        free(cursor)
