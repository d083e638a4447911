"""Tabulated arithmetic for finite fields of order at most 64.

An element of GF(p^k) is encoded as the integer sum(c_i * p^i), where
c_0 + c_1 x + ... is its residue modulo a fixed irreducible polynomial.
For prime fields this is just the residue itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .groups import prime_factors

# low-to-high coefficients of the monic irreducible, leading term omitted
IRREDUCIBLE = {
    (2, 2): (1, 1),              # x^2 + x + 1
    (2, 3): (1, 1, 0),           # x^3 + x + 1
    (2, 4): (1, 1, 0, 0),        # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0),     # x^5 + x^2 + 1
    (2, 6): (1, 1, 0, 0, 0, 0),  # x^6 + x + 1
    (3, 2): (1, 0),              # x^2 + 1
    (3, 3): (1, 2, 0),           # x^3 + 2x + 1
    (5, 2): (2, 1),              # x^2 + x + 2
    (7, 2): (1, 0),              # x^2 + 1
}

MAX_FIELD_ORDER = 64


class FieldError(ValueError):
    pass


@dataclass(frozen=True)
class FieldTable:
    q: int
    p: int
    degree: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]
    neg: tuple[int, ...]
    inv: tuple[int, ...]  # inv[0] is 0 by convention
    zero: int = 0
    one: int = 1

    def sub(self, a: int, b: int) -> int:
        return self.add[a][self.neg[b]]

    def power(self, a: int, k: int) -> int:
        out = self.one
        for _ in range(k % (self.q - 1) if a else k):
            out = self.mul[out][a]
        return out

    def mult_order(self, a: int) -> int:
        if a == self.zero:
            raise FieldError("zero has no multiplicative order")
        k, b = 1, a
        while b != self.one:
            b = self.mul[b][a]
            k += 1
        return k

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p) if a else 0


def _decode(a: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(a % p)
        a //= p
    return out


def _encode(cs, p: int) -> int:
    return sum(c * p ** i for i, c in enumerate(cs))


def _polymul_mod(a: list[int], b: list[int], p: int, modulus: tuple[int, ...]) -> list[int]:
    k = len(modulus)
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d]
        if c:
            prod[d] = 0
            for i, m in enumerate(modulus):
                prod[d - k + i] = (prod[d - k + i] - c * m) % p
    return prod[:k]


@lru_cache(maxsize=None)
def field(q: int) -> FieldTable:
    """GF(q) for a prime power q <= 64."""
    ps = prime_factors(q)
    if q < 2 or len(ps) != 1:
        raise FieldError(f"{q} is not a prime power")
    if q > MAX_FIELD_ORDER:
        raise FieldError(f"field order {q} exceeds {MAX_FIELD_ORDER}")
    p = ps[0]
    k = 0
    while p ** k < q:
        k += 1
    if k == 1:
        add = tuple(tuple((a + b) % p for b in range(p)) for a in range(p))
        mul = tuple(tuple((a * b) % p for b in range(p)) for a in range(p))
    else:
        modulus = IRREDUCIBLE[(p, k)]
        vecs = [_decode(a, p, k) for a in range(q)]
        add = tuple(tuple(_encode([(x + y) % p for x, y in zip(vecs[a], vecs[b])], p) for b in range(q))
                    for a in range(q))
        mul = tuple(tuple(_encode(_polymul_mod(vecs[a], vecs[b], p, modulus), p) for b in range(q))
                    for a in range(q))
    neg = tuple(row.index(0) for row in add)
    inv = tuple([0] + [mul[a].index(1) if 1 in mul[a] else -1 for a in range(1, q)])
    if -1 in inv:
        raise FieldError(f"modulus for GF({q}) is reducible")
    return FieldTable(q=q, p=p, degree=k, add=add, mul=mul, neg=neg, inv=inv)


def check_field(F: FieldTable) -> None:
    """Exhaustively verify the field axioms; raises FieldError on failure."""
    q, add, mul = F.q, F.add, F.mul
    r = range(q)
    for a in r:
        if add[a][0] != a or mul[a][1] != a:
            raise FieldError("identity law fails")
        if add[a][F.neg[a]] != 0:
            raise FieldError("additive inverse fails")
        if a and mul[a][F.inv[a]] != 1:
            raise FieldError("multiplicative inverse fails")
        for b in r:
            if add[a][b] != add[b][a] or mul[a][b] != mul[b][a]:
                raise FieldError("commutativity fails")
            for c in r:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    raise FieldError("additive associativity fails")
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    raise FieldError("multiplicative associativity fails")
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    raise FieldError("distributivity fails")
