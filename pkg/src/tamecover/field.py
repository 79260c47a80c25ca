"""Prime fields and small extension fields with exact arithmetic.

Coefficients of a prime field are plain integers in ``[0, p)``; extension
field elements are tuples of length ``k`` giving coordinates in the power
basis ``1, w, ..., w^(k-1)`` modulo a monic irreducible polynomial supplied
by the caller.
"""

from __future__ import annotations


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """The field of integers modulo a prime ``p``."""

    __slots__ = ("p",)
    degree = 1

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def order(self) -> int:
        return self.p

    @property
    def characteristic(self) -> int:
        return self.p

    def coerce(self, n: int) -> int:
        return n % self.p

    zero = 0

    @property
    def one(self) -> int:
        return 1 % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return pow(self.inv(a), -n, self.p)
        return pow(a, n, self.p)

    def is_zero(self, a: int) -> bool:
        return a % self.p == 0

    def elements(self):
        return range(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class ExtensionField:
    """``F_p[w]/(m(w))`` for a monic irreducible ``m`` of degree ``k``.

    ``minpoly`` lists the coefficients ``c_0, ..., c_(k-1)`` of
    ``m(w) = w^k - (c_(k-1) w^(k-1) + ... + c_0)``, i.e. the reduction rule
    is ``w^k -> c_(k-1) w^(k-1) + ... + c_0``.  Irreducibility is checked
    by exhaustive root/factor search (the fields used here are tiny).
    """

    __slots__ = ("p", "k", "reduction", "_minpoly_rows")

    def __init__(self, p: int, reduction: tuple[int, ...]):
        if not is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        self.p = p
        self.k = len(reduction)
        if self.k < 2:
            raise ValueError("extension degree must be at least 2")
        self.reduction = tuple(c % p for c in reduction)
        # rows[j] = coordinates of w^(k+j) for j = 0..k-2
        rows = [list(self.reduction)]
        for _ in range(self.k - 2):
            prev = rows[-1]
            nxt = [0] + prev[:-1]
            top = prev[-1]
            for i, c in enumerate(self.reduction):
                nxt[i] = (nxt[i] + top * c) % p
            rows.append(nxt)
        self._minpoly_rows = tuple(tuple(r) for r in rows)
        if not self._is_irreducible():
            raise ValueError("supplied modulus polynomial is reducible")

    def _is_irreducible(self) -> bool:
        # m(w) = w^k - reduction; for k in {2, 3} no roots in F_p suffices.
        if self.k > 3:
            raise ValueError("only quadratic and cubic extensions supported")
        for a in range(self.p):
            val = (pow(a, self.k, self.p)
                   - sum(c * pow(a, i, self.p) for i, c in enumerate(self.reduction))) % self.p
            if val == 0:
                return False
        return True

    @property
    def order(self) -> int:
        return self.p ** self.k

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.k

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.k - 1)

    def gen(self) -> tuple[int, ...]:
        return tuple(1 if i == 1 else 0 for i in range(self.k))

    def coerce(self, n) -> tuple[int, ...]:
        if isinstance(n, tuple):
            if len(n) != self.k:
                raise ValueError("bad coordinate length")
            return tuple(c % self.p for c in n)
        return (n % self.p,) + (0,) * (self.k - 1)

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        k, p = self.k, self.p
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        out = [c % p for c in conv[:k]]
        for j in range(k - 1):
            top = conv[k + j] % p
            if top:
                row = self._minpoly_rows[j]
                for i in range(k):
                    out[i] = (out[i] + top * row[i]) % p
        return tuple(out)

    def pow(self, a, n: int):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def is_zero(self, a) -> bool:
        return all(x % self.p == 0 for x in a)

    def elements(self):
        from itertools import product
        return (t for t in product(range(self.p), repeat=self.k))

    def mult_tensor(self):
        """``T[i, j, m]`` with ``w^i * w^j = sum_m T[i,j,m] w^m``."""
        import numpy as np
        k = self.k
        T = np.zeros((k, k, k), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                prod = self.mul(tuple(int(i == t) for t in range(k)),
                                tuple(int(j == t) for t in range(k)))
                for m, c in enumerate(prod):
                    T[i, j, m] = c
        return T

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.reduction == self.reduction)

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.reduction))

    def __repr__(self):
        return f"ExtensionField(p={self.p}, k={self.k})"


def quadratic_extension(p: int) -> ExtensionField:
    """A concrete model of the degree-2 extension of ``F_p``."""
    if p == 2:
        return ExtensionField(2, (1, 1))  # w^2 = w + 1
    for c in range(1, p):
        # w^2 = c works iff c is a non-square
        if pow(c, (p - 1) // 2, p) == p - 1:
            return ExtensionField(p, (c, 0))
    raise ValueError("no quadratic non-residue found")  # unreachable for odd p
