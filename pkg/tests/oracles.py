"""Brute-force reference implementations used as test oracles.

Everything here works from plain Python tables (lists of lists) read off a
ring once, and follows the textbook definitions directly: no criteria, no
numpy, no shared code with the library beyond the raw operations.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product


class TableRing:
    def __init__(self, R):
        n = R.size
        self.n = n
        self.zero = int(R.zero)
        self.one = int(R.one)
        self.add = [[int(R.add(a, b)) for b in range(n)] for a in range(n)]
        self.mul = [[int(R.mul(a, b)) for b in range(n)] for a in range(n)]
        self.neg = [int(R.neg(a)) for a in range(n)]

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    def nil_exponent(self, a):
        x = a
        for k in range(1, self.n + 2):
            if x == self.zero:
                return k
            x = self.mul[x][a]
        return 0

    @cached_property
    def nil(self):
        return {a for a in range(self.n) if self.nil_exponent(a)}

    @cached_property
    def units(self):
        return {a for a in range(self.n) if any(self.mul[a][b] == self.one and self.mul[b][a] == self.one for b in range(self.n))}

    @cached_property
    def idempotents(self):
        return {a for a in range(self.n) if self.mul[a][a] == a}

    @cached_property
    def center(self):
        return {a for a in range(self.n) if all(self.mul[a][b] == self.mul[b][a] for b in range(self.n))}

    @cached_property
    def jacobson(self):
        # x in J iff 1 - r x is a unit for every r
        return {x for x in range(self.n) if all(self.sub(self.one, self.mul[r][x]) in self.units for r in range(self.n))}

    def nilclean(self, a, signs=(1, -1), commuting=True):
        for s, e in product(signs, sorted(self.idempotents)):
            q = self.sub(a, e) if s > 0 else self.add[a][e]
            if q in self.nil and (not commuting or self.mul[e][q] == self.mul[q][e]):
                return s, e, q
        return None

    def swnc(self, a):
        return self.nilclean(a) is not None

    def snc(self, a):
        return self.nilclean(a, signs=(1,)) is not None

    def swc(self, a):
        for u in sorted(self.units):
            for e in self.idempotents:
                if self.mul[u][e] != self.mul[e][u]:
                    continue
                if self.add[u][e] == a or self.sub(u, e) == a:
                    return True
        return False

    @property
    def gswnc(self):
        return all(self.swnc(a) for a in range(self.n) if a not in self.units)

    @property
    def gsnc(self):
        return all(self.snc(a) for a in range(self.n) if a not in self.units)

    @property
    def swnc_ring(self):
        return all(self.swnc(a) for a in range(self.n))

    @property
    def snc_ring(self):
        return all(self.snc(a) for a in range(self.n))

    @property
    def local(self):
        non = [a for a in range(self.n) if a not in self.units]
        return all(self.add[a][b] not in self.units for a in non for b in non)


def matmul_mod(A, B, m):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) % m for j in range(n)] for i in range(n)]


def is_p_power(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1
