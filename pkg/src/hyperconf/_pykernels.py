"""Pure-Python hot kernels.

Same signatures and same outputs (including enumeration order) as the
compiled ``_ckernels`` module; selected by ``hyperconf._backend`` when the
extension is unavailable or ``HYPERCONF_BACKEND=python`` is set. Vertex sets
are held as int bitmasks here.
"""

from __future__ import annotations

from itertools import product

NAME = "python"

# Status codes shared with the compiled kernels.
REJECT = 0          # no selection works
ACCEPT = 1          # a selection leaves no edge of E_omega inside U
MINIMAL = 2         # E_omega is empty: S is itself a minimal transversal
TOO_LARGE = -1      # |S| > |E|
EMPTY_FAMILY = -2   # some E_v(S) is empty


def subtransversal(h, s):
    """Run the subtransversal selection search for the sorted vertex tuple ``s``.

    Returns ``(status, selection)`` where ``selection[i]`` is the edge chosen
    for ``s[i]`` (empty unless the status is ACCEPT or MINIMAL).
    """
    k = len(s)
    if k > h.m:
        return TOO_LARGE, ()
    masks = h.edge_masks
    smask = 0
    pos = {}
    for i, v in enumerate(s):
        smask |= 1 << v
        pos[v] = i
    fams = [[] for _ in range(k)]
    omega = []
    for i, em in enumerate(masks):
        hit = em & smask
        if not hit:
            omega.append(em)
        elif not hit & (hit - 1):
            fams[pos[hit.bit_length() - 1]].append(i)
    if not all(fams):
        return EMPTY_FAMILY, ()
    if not omega:
        return MINIMAL, tuple(f[0] for f in fams)
    for sel in product(*fams):
        u = 0
        for i in sel:
            u |= masks[i]
        for om in omega:
            if om & u == om:
                break
        else:
            return ACCEPT, sel
    return REJECT, ()


def dual_cooccurrence_rows(h, lo, hi):
    """Neighbours ``w > u`` of each ``u`` in ``[lo, hi)`` in the dual's co-occurrence graph."""
    n, masks, vedges = h.n, h.edge_masks, h.vertex_edges
    rows = []
    for u in range(lo, hi):
        row = []
        ubit = 1 << u
        if h.m < 2:
            rows.append(row)
            continue
        for w in range(u + 1, n):
            wbit = 1 << w
            eu = [i for i in vedges[u] if not masks[i] & wbit]
            if not eu:
                continue
            ew = [i for i in vedges[w] if not masks[i] & ubit]
            if not ew:
                continue
            both = ubit | wbit
            omega = [em for em in masks if not em & both]
            if not omega:
                row.append(w)
                continue
            found = False
            for a in eu:
                ma = masks[a]
                for b in ew:
                    un = ma | masks[b]
                    for om in omega:
                        if om & un == om:
                            break
                    else:
                        found = True
                        break
                if found:
                    break
            if found:
                row.append(w)
        rows.append(row)
    return rows


def gilmore_violation(h):
    """First index triple ``i <= j <= k`` whose pairwise-intersection union no edge covers."""
    masks = h.edge_masks
    m = len(masks)
    for i in range(m):
        a = masks[i]
        for j in range(i, m):
            b = masks[j]
            ab = a & b
            for k in range(j, m):
                c = masks[k]
                s = ab | (a & c) | (b & c)
                for f in masks:
                    if s & f == s:
                        break
                else:
                    return (i, j, k)
    return None


def undominated_clique(g, x):
    """First clique ``C`` of ``g - x`` with ``|C| <= |x|`` not inside any ``N(x_i)``.

    Cliques are visited by size, then lexicographically. Returns None when no
    such clique exists.
    """
    k = len(x)
    nbr = g.nbr_masks
    xmask = 0
    for v in x:
        xmask |= 1 << v
    full = (1 << g.n) - 1
    # xadj[c]: bit i set iff x[i] is adjacent to c.
    xadj = [0] * g.n
    for i, xv in enumerate(x):
        bit = 1 << i
        m = nbr[xv]
        while m:
            low = m & -m
            xadj[low.bit_length() - 1] |= bit
            m ^= low
    alldom = (1 << k) - 1
    if alldom == 0:
        return ()
    base = full & ~xmask

    def search(prefix, cand, dom, size):
        if len(prefix) == size:
            return prefix if dom == 0 else None
        while cand:
            low = cand & -cand
            c = low.bit_length() - 1
            cand ^= low
            found = search(prefix + (c,), cand & nbr[c], dom & xadj[c], size)
            if found is not None:
                return found
        return None

    for size in range(1, k + 1):
        found = search((), base, alldom, size)
        if found is not None:
            return found
    return None
