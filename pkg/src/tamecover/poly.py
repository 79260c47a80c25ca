"""Multivariate polynomials and truncated power series over a prime field.

Terms are stored sparsely as a map from exponent tuples to nonzero
coefficients.  The canonical term order is degree-reverse-lexicographic on
the declared variable order; serialization and string formatting both list
terms in descending degrevlex order so that equal polynomials have equal
canonical forms.
"""

from __future__ import annotations

from .field import PrimeField


class PolyRing:
    """A polynomial ring ``F_p[x_1, ..., x_n]`` with a fixed variable order."""

    __slots__ = ("field", "variables", "_index")

    def __init__(self, p: int, variables):
        self.field = PrimeField(p)
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self._index = {v: i for i, v in enumerate(self.variables)}

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def var_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {})

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, c: int) -> "MultiPoly":
        c %= self.p
        if c == 0:
            return MultiPoly(self, {})
        return MultiPoly(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> "MultiPoly":
        e = [0] * self.nvars
        e[self.var_index(name)] = 1
        return self.monomial(tuple(e), 1)

    def gens(self):
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, exponents, c: int = 1) -> "MultiPoly":
        e = tuple(int(x) for x in exponents)
        if len(e) != self.nvars or any(x < 0 for x in e):
            raise ValueError("bad exponent vector")
        c %= self.p
        return MultiPoly(self, {e: c} if c else {})

    def from_terms(self, terms) -> "MultiPoly":
        acc: dict = {}
        for e, c in terms:
            e = tuple(int(x) for x in e)
            if len(e) != self.nvars or any(x < 0 for x in e):
                raise ValueError("bad exponent vector")
            c = (acc.get(e, 0) + c) % self.p
            if c:
                acc[e] = c
            else:
                acc.pop(e, None)
        return MultiPoly(self, acc)

    def random(self, rng, max_degree: int, terms: int = 6) -> "MultiPoly":
        """Random sparse polynomial of total degree <= max_degree."""
        acc = {}
        for _ in range(terms):
            e = [0] * self.nvars
            budget = rng.randint(0, max_degree)
            for _ in range(budget):
                e[rng.randrange(self.nvars)] += 1
            acc[tuple(e)] = rng.randrange(self.p)
        return self.from_terms(acc.items())

    def extend(self, extra_variables) -> "PolyRing":
        return PolyRing(self.p, self.variables + tuple(extra_variables))

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and other.p == self.p
                and other.variables == self.variables)

    def __hash__(self):
        return hash((self.p, self.variables))

    def __repr__(self):
        return f"PolyRing(p={self.p}, vars={','.join(self.variables)})"


def _degrevlex_key(e: tuple) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


class MultiPoly:
    """Immutable sparse multivariate polynomial.

    Zero coefficients are never stored.  Instances must not be mutated
    after construction; all arithmetic returns fresh objects.
    """

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- queries ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = self.ring.var_index(var)
        return max((e[i] for e in self.terms), default=-1)

    def min_degree_in(self, var: str) -> int:
        """Smallest exponent of ``var`` over all monomials; -1 if zero."""
        i = self.ring.var_index(var)
        return min((e[i] for e in self.terms), default=-1)

    def coefficient(self, exponents) -> int:
        return self.terms.get(tuple(exponents), 0)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.ring.nvars, 0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: _degrevlex_key(t[0]), reverse=True)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError("mixed polynomial rings")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.p
        acc = dict(self.terms)
        for e, c in other.terms.items():
            s = (acc.get(e, 0) + c) % p
            if s:
                acc[e] = s
            else:
                acc.pop(e, None)
        return MultiPoly(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return MultiPoly(self.ring, {e: (-c) % p for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.ring.p
            if c == 0:
                return self.ring.zero()
            return MultiPoly(self.ring,
                             {e: (c * v) % self.ring.p for e, v in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.ring.p
        acc: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = (acc.get(e, 0) + c1 * c2) % p
                if s:
                    acc[e] = s
                else:
                    acc.pop(e, None)
        return MultiPoly(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.constant(other).terms
        return (isinstance(other, MultiPoly) and other.ring == self.ring
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.ring, tuple(self.sorted_terms())))

    # -- evaluation and truncation ----------------------------------------

    def evaluate(self, point) -> int:
        """Evaluate at a point given as a sequence or a {var: value} map."""
        if isinstance(point, dict):
            point = [point[v] for v in self.ring.variables]
        p = self.ring.p
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = (v * pow(x, k, p)) % p
            total = (total + v) % p
        return total

    def substitute(self, assignment: dict) -> "MultiPoly":
        """Substitute polynomials for variables (others left alone)."""
        ring = self.ring
        out = ring.zero()
        for e, c in self.terms.items():
            term = ring.constant(c)
            for var, k in zip(ring.variables, e):
                if not k:
                    continue
                repl = assignment.get(var)
                term = term * (repl ** k if repl is not None else ring.monomial(
                    tuple(k if w == var else 0 for w in ring.variables)))
            out = out + term
        return out

    def truncate(self, max_total_degree: int) -> "MultiPoly":
        return MultiPoly(self.ring, {e: c for e, c in self.terms.items()
                                     if sum(e) <= max_total_degree})

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {"vars": list(self.ring.variables), "p": self.ring.p,
                "terms": [{"e": list(e), "c": c} for e, c in self.sorted_terms()]}

    @staticmethod
    def from_json(data: dict) -> "MultiPoly":
        ring = PolyRing(data["p"], data["vars"])
        return ring.from_terms((tuple(t["e"]), t["c"]) for t in data["terms"])

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = [str(c)] if (c != 1 or not any(e)) else []
            for v, k in zip(self.ring.variables, e):
                if k == 1:
                    factors.append(v)
                elif k > 1:
                    factors.append(f"{v}^{k}")
            parts.append("*".join(factors))
        return " + ".join(parts)


class TruncatedSeries:
    """Power series known modulo total degree ``bound + 1``.

    Backed by a MultiPoly whose terms of degree > bound are discarded
    eagerly, so all arithmetic agrees with truncate-after-multiply.
    """

    __slots__ = ("poly", "bound")

    def __init__(self, poly: MultiPoly, bound: int):
        if bound < 0:
            raise ValueError("nonnegative truncation bound required")
        self.poly = poly.truncate(bound)
        self.bound = bound

    @property
    def ring(self) -> PolyRing:
        return self.poly.ring

    def _lift(self, other):
        if isinstance(other, TruncatedSeries):
            if other.bound != self.bound:
                raise ValueError("mixed truncation bounds")
            return other.poly
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        raise TypeError(type(other))

    def __add__(self, other):
        return TruncatedSeries(self.poly + self._lift(other), self.bound)

    __radd__ = __add__

    def __sub__(self, other):
        return TruncatedSeries(self.poly - self._lift(other), self.bound)

    def __rsub__(self, other):
        return TruncatedSeries(self._lift(other) - self.poly, self.bound)

    def __neg__(self):
        return TruncatedSeries(-self.poly, self.bound)

    def __mul__(self, other):
        return TruncatedSeries(self.poly * self._lift(other), self.bound)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        result = TruncatedSeries(self.ring.one(), self.bound)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.bound == other.bound and self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash((self.poly, self.bound))

    def inverse(self) -> "TruncatedSeries":
        """Inverse of a series with invertible constant term (Newton)."""
        c0 = self.poly.constant_term()
        field = self.ring.field
        x = TruncatedSeries(self.ring.constant(field.inv(c0)), self.bound)
        prec = 1
        while prec <= self.bound:
            x = x * (2 - self * x)
            prec *= 2
        return x

    def sqrt(self) -> "TruncatedSeries":
        """Square root with constant term 1, for series ``1 + (higher order)``.

        Newton iteration a -> (a + f/a) / 2; requires odd characteristic.
        """
        if self.ring.p == 2:
            raise ValueError("square root by Newton iteration needs odd characteristic")
        if self.poly.constant_term() != 1:
            raise ValueError("square root requires constant term 1")
        half = self.ring.field.inv(2)
        a = TruncatedSeries(self.ring.one(), self.bound)
        prec = 1
        while prec <= self.bound:
            a = (a + self * a.inverse()) * half
            prec *= 2
        return a

    def __repr__(self):
        return f"({self.poly!r}) + O(deg {self.bound + 1})"
