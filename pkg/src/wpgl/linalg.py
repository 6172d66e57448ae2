"""Exact dense matrices over a coefficient domain, as lists of lists."""
from __future__ import annotations

from itertools import permutations

from .errors import NotInvertibleError


def identity(ring, n: int):
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def matmul(a, b, ring):
    n, m, k = len(a), len(b), len(b[0]) if b else 0
    return [[sum((a[i][l] * b[l][j] for l in range(m)), ring.zero) for j in range(k)] for i in range(n)]


def _perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def det(m, ring):
    n = len(m)
    if n == 0:
        return ring.one
    if ring.is_field:
        return _det_gauss(m, ring)
    # Leibniz; symbolic blocks are tiny
    total = ring.zero
    for p in permutations(range(n)):
        term = ring.one
        for i in range(n):
            term = term * m[i][p[i]]
        total = total + term if _perm_sign(p) > 0 else total - term
    return total


def _det_gauss(m, ring):
    a = [row[:] for row in m]
    n = len(a)
    result = ring.one
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return ring.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        result = result * a[col][col]
        inv = ring.inverse(a[col][col])
        for r in range(col + 1, n):
            if a[r][col]:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def inverse(m, ring):
    n = len(m)
    if not ring.is_field:
        d = det(m, ring)
        if not ring.is_unit(d):
            raise NotInvertibleError("determinant is not a unit")
        dinv = ring.inverse(d)
        adj = [[ring.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
                c = det(minor, ring)
                adj[j][i] = c if (i + j) % 2 == 0 else -c
        return [[x * dinv for x in row] for row in adj]
    a = [list(row) + [ring.one if i == j else ring.zero for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise NotInvertibleError("singular matrix")
        a[col], a[piv] = a[piv], a[col]
        inv = ring.inverse(a[col][col])
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def int_det(m) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]
