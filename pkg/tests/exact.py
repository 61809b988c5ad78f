"""Exact rational reference computations, independent of the library.

Nothing here calls numpy linear algebra or ``consensus_limits``: measures
come from the grounded Laplacian inverted by Gaussian elimination over
``Fraction``, and connectivity from union-find.
"""
from fractions import Fraction
from itertools import combinations


def laplacian(n, edges):
    L = [[Fraction(0)] * n for _ in range(n)]
    for i, j, *w in edges:
        w = Fraction(w[0]) if w else Fraction(1)
        L[i][j] -= w
        L[j][i] -= w
        L[i][i] += w
        L[j][j] += w
    return L


def inverse(A):
    k = len(A)
    M = [row[:] + [Fraction(int(r == c)) for c in range(k)] for r, row in enumerate(A)]
    for c in range(k):
        p = next(r for r in range(c, k) if M[r][c] != 0)
        M[c], M[p] = M[p], M[c]
        piv = M[c][c]
        M[c] = [x / piv for x in M[c]]
        for r in range(k):
            if r != c and M[r][c] != 0:
                f = M[r][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return [row[k:] for row in M]


def determinant(A):
    A = [row[:] for row in A]
    k = len(A)
    det = Fraction(1)
    for c in range(k):
        p = next((r for r in range(c, k) if A[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for r in range(c + 1, k):
            f = A[r][c] / A[c][c]
            A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return det


def pinv(n, edges):
    """``L^+ = M X M`` with ``X`` the node-0-grounded inverse padded by zeros."""
    L = laplacian(n, edges)
    G = inverse([row[1:] for row in L[1:]])
    X = [[Fraction(0)] * n for _ in range(n)]
    for r in range(1, n):
        for c in range(1, n):
            X[r][c] = G[r - 1][c - 1]
    row_mean = [sum(X[r]) / n for r in range(n)]
    col_mean = [sum(X[r][c] for r in range(n)) / n for c in range(n)]
    total = sum(row_mean) / n
    return [[X[r][c] - row_mean[r] - col_mean[c] + total for c in range(n)] for r in range(n)]


def matmul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def trace(A):
    return sum(A[i][i] for i in range(len(A)))


def resistance(n, edges, i, j):
    P = pinv(n, edges)
    return P[i][i] + P[j][j] - 2 * P[i][j]


def measures(n, edges):
    """``rho = zeta(1)/2``, ``zeta(2)``, ``r_total`` and the spanning-tree count."""
    P = pinv(n, edges)
    z1 = trace(P)
    z2 = trace(matmul(P, P))
    r_total = sum(P[i][i] + P[j][j] - 2 * P[i][j] for i, j in combinations(range(n), 2))
    L = laplacian(n, edges)
    T = determinant([row[1:] for row in L[1:]])
    return {"rho": z1 / 2, "zeta1": z1, "zeta2": z2, "r_total": r_total, "T": T}


def char_poly_3(L):
    """Coefficients of ``det(x I - L)`` for a 3x3 matrix, highest degree first."""
    (a, b, c), (d, e, f), (g, h, i) = L
    tr = a + e + i
    minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
    det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return [1, -tr, minors, -det]


class UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def connected(n, pairs):
    uf = UnionFind(n)
    merges = sum(uf.union(i, j) for i, j in pairs)
    return merges == n - 1


def count_connected(n):
    pairs = list(combinations(range(n), 2))
    count = 0
    for mask in range(1 << len(pairs)):
        if connected(n, [p for k, p in enumerate(pairs) if mask >> k & 1]):
            count += 1
    return count


def count_spanning_trees(n, edges):
    """Brute force: edge subsets of size n-1 that connect every node."""
    pairs = [(i, j) for i, j, *_ in edges]
    return sum(connected(n, sub) for sub in combinations(pairs, n - 1))
