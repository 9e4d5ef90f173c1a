#!/usr/bin/env python3
"""Independent reference for the quantum K multiplication table of Fl(1,n-1).

A direct sympy transcription of the published reference program: the same
1D indexing, the same hand-entered Chevalley matrices for O_h1 and O_h2, and
the same matrix recurrences. Only the output stage differs: instead of a
text dump it prints the golden-file JSON used by the Rust test suite,

    {"n":N,"entries":[{"u":[i,j],"v":[k,p],"w":[s,t],
                        "poly":[{"d1":a,"d2":b,"coeff":c}, ...]}, ...]}

with entries in basis order of u, v, w and terms in increasing (d1, d2).

Usage: python3 scripts/reference_table.py N > golden_nN.json
"""

import json
import math
import sys

from sympy import Poly, Symbol, eye, zeros

q1 = Symbol("q1")
q2 = Symbol("q2")


def coeffij(k, n):
    """1-based linear position k -> pair (i, j)."""
    i = math.ceil(k / (n - 1))
    if k - (i - 1) * (n - 1) < i:
        j = k - (i - 1) * (n - 1)
    else:
        j = k + 1 - (i - 1) * (n - 1)
    return [i, j]


def invcoeffij(i, j, n):
    """Pair (i, j) -> 0-based linear index."""
    if j > i:
        t = (i - 1) * (n - 1) + j - 1
    else:
        t = (i - 1) * (n - 1) + j
    return t - 1


def h1(n):
    m = zeros(n * (n - 1))
    m[invcoeffij(n - 1, n, n), invcoeffij(1, n, n)] = q1
    m[invcoeffij(n, 1, n), invcoeffij(1, n, n)] = q1 * q2
    m[invcoeffij(n - 1, 1, n), invcoeffij(1, n, n)] = -q1 * q2
    for p in range(2, n):
        m[invcoeffij(n, p, n), invcoeffij(1, p, n)] = q1
    m[invcoeffij(1, 2, n), invcoeffij(2, 1, n)] = 1
    m[invcoeffij(n, 1, n), invcoeffij(2, 1, n)] = q1
    m[invcoeffij(n, 2, n), invcoeffij(2, 1, n)] = -q1
    for p in range(2, n):
        m[invcoeffij(p - 1, p, n), invcoeffij(p + 1, p, n)] = 1
        m[invcoeffij(p, p + 1, n), invcoeffij(p + 1, p, n)] = 1
        m[invcoeffij(p - 1, p + 1, n), invcoeffij(p + 1, p, n)] = -1
    for k in range(2, n + 1):
        for p in range(1, n + 1):
            if k != p + 1 and k != p:
                m[invcoeffij(k - 1, p, n), invcoeffij(k, p, n)] = 1
    return m


def h2(n):
    m = zeros(n * (n - 1))
    m[invcoeffij(1, 2, n), invcoeffij(1, n, n)] = q2
    m[invcoeffij(n, 1, n), invcoeffij(1, n, n)] = q1 * q2
    m[invcoeffij(n, 2, n), invcoeffij(1, n, n)] = -q1 * q2
    for k in range(2, n):
        m[invcoeffij(k, 1, n), invcoeffij(k, n, n)] = q2
    m[invcoeffij(n - 1, n, n), invcoeffij(n, n - 1, n)] = 1
    m[invcoeffij(n, 1, n), invcoeffij(n, n - 1, n)] = q2
    m[invcoeffij(n - 1, 1, n), invcoeffij(n, n - 1, n)] = -q2
    for p in range(1, n - 1):
        m[invcoeffij(p, p + 1, n), invcoeffij(p + 1, p, n)] = 1
        m[invcoeffij(p + 1, p + 2, n), invcoeffij(p + 1, p, n)] = 1
        m[invcoeffij(p, p + 2, n), invcoeffij(p + 1, p, n)] = -1
    for p in range(1, n):
        for k in range(1, n + 1):
            if k != p + 1 and k != p:
                m[invcoeffij(k, p + 1, n), invcoeffij(k, p, n)] = 1
    return m


def table(n):
    size = n * (n - 1)
    o = [None] * size
    o[invcoeffij(n, 1, n)] = eye(size)
    a = h1(n)
    b = h2(n)
    j = b - eye(size)
    for k in range(1, n - 1):
        o[invcoeffij(n - k, 1, n)] = (a * o[invcoeffij(n - k + 1, 1, n)]).expand()
    for k in range(2, n + 1):
        for p in range(2, k):
            o[invcoeffij(k, p, n)] = (b * o[invcoeffij(k, p - 1, n)]).expand()
    o[invcoeffij(1, 2, n)] = (a * o[invcoeffij(2, 1, n)] + q1 * j).expand()
    for p in range(2, n):
        o[invcoeffij(p, p + 1, n)] = (a * o[invcoeffij(p + 1, p, n)] + j * o[invcoeffij(p - 1, p, n)]).expand()
    for p in range(3, n + 1):
        for k in range(2, p):
            o[invcoeffij(p - k, p, n)] = (a * o[invcoeffij(p - k + 1, p, n)]).expand()
    return o


def golden(n):
    size = n * (n - 1)
    mats = table(n)
    entries = []
    for ku in range(size):
        for kv in range(size):
            for kw in range(size):
                c = mats[ku][kw, kv]
                if c == 0:
                    continue
                terms = sorted(
                    (mon[0], mon[1], int(coef))
                    for mon, coef in Poly(c, q1, q2).terms()
                )
                entries.append(
                    {
                        "u": coeffij(ku + 1, n),
                        "v": coeffij(kv + 1, n),
                        "w": coeffij(kw + 1, n),
                        "poly": [{"d1": a, "d2": b, "coeff": x} for a, b, x in terms],
                    }
                )
    return {"n": n, "entries": entries}


if __name__ == "__main__":
    if len(sys.argv) != 2:
        sys.exit("usage: reference_table.py N")
    print(json.dumps(golden(int(sys.argv[1])), separators=(",", ":")))
