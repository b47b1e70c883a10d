"""Compiled inner loops for the exhaustive generator-set search."""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


@njit(cache=True)
def eccentricity(n, conn, dist, queue):
    """BFS eccentricity of vertex 0, or -1 when some vertex is unreachable."""
    for i in range(n):
        dist[i] = -1
    dist[0] = 0
    queue[0] = 0
    head = 0
    tail = 1
    m = conn.shape[0]
    ecc = 0
    while head < tail:
        v = queue[head]
        head += 1
        nd = dist[v] + 1
        for j in range(m):
            w = v + conn[j]
            if w >= n:
                w -= n
            if dist[w] < 0:
                dist[w] = nd
                ecc = nd
                queue[tail] = w
                tail += 1
    if tail < n:
        return -1
    return ecc


@njit(cache=True)
def scan_block(n, k, f, half, g1, lo, hi, exact, first_only, out):
    """Test every generator set ``(g1, g2, ..., gf)`` with ``lo <= g2 < hi``.

    Sets are visited in lexicographic order. Sets that cannot be the
    lexicographically least member of their multiplier orbit (some generator
    has gcd with n below g1) are skipped, as are disconnected ones.
    Returns ``(explored, found)``; the first ``len(out)`` hits are written to
    ``out`` as generator rows.
    """
    hmax = (n - 1) // 2
    d = 2 * f + (1 if half else 0)
    conn = np.zeros(d, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    g = np.zeros(f, np.int64)
    g[0] = g1
    explored = 0
    found = 0
    cap = out.shape[0]
    base = _gcd(n, g1)
    if half:
        base = _gcd(base, n // 2)
    if f == 1:
        lo = 0
        hi = 1
    else:
        if hi > hmax - f + 3:
            hi = hmax - f + 3
        if lo <= g1:
            lo = g1 + 1
        if lo >= hi:
            return 0, 0
        g[1] = lo
        for i in range(2, f):
            g[i] = g[i - 1] + 1
    while True:
        if f > 1 and g[1] >= hi:
            break
        if f > 1 and g[f - 1] > hmax:
            break
        ok = True
        common = base
        for i in range(1, f):
            gi = _gcd(n, g[i])
            if gi < g1:
                ok = False
                break
            common = _gcd(common, gi)
        if ok and common == 1:
            explored += 1
            for i in range(f):
                conn[2 * i] = g[i]
                conn[2 * i + 1] = n - g[i]
            if half:
                conn[2 * f] = n // 2
            e = eccentricity(n, conn, dist, queue)
            if e >= 0 and (e == k if exact else e <= k):
                if found < cap:
                    for i in range(f):
                        out[found, i] = g[i]
                found += 1
                if first_only:
                    return explored, found
        if f == 1:
            break
        # odometer over positions 1..f-1, keeping g strictly increasing
        i = f - 1
        g[i] += 1
        while i > 1 and g[i] > hmax - (f - 1 - i):
            i -= 1
            g[i] += 1
        for j in range(i + 1, f):
            g[j] = g[j - 1] + 1
    return explored, found
