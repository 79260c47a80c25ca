"""Quotient rings presented by terminating pure-power rewrite rules.

A presentation declares, for some of the ring variables, a single rule
``v^m -> q`` where ``q`` does not involve ``v``.  This covers the three
shapes needed here: extraction-of-roots rules ``t^r -> s``, truncation
rules ``x^(B+1) -> 0``, and cyclotomic rules ``y^n -> 1``.  At most one
rule per variable and an acyclic dependency graph make the system
terminating and confluent, so normal forms are canonical.
"""

from __future__ import annotations

from itertools import product

from .poly import MultiPoly, PolyRing


class QuotientPresentation:
    """A polynomial ring together with pure-power rewrite rules."""

    def __init__(self, ring: PolyRing, rules: dict):
        """``rules`` maps a variable name to ``(exponent, rhs)``.

        ``rhs`` may be a MultiPoly in the same ring or an integer constant.
        Non-terminating shapes (rule variable occurring in its own right
        hand side, or cyclic dependencies between rules) are rejected.
        """
        self.ring = ring
        normalized = {}
        for var, (m, rhs) in rules.items():
            ring.var_index(var)
            if m < 1:
                raise ValueError(f"rule exponent for {var} must be >= 1")
            if isinstance(rhs, int):
                rhs = ring.constant(rhs)
            if rhs.ring != ring:
                raise ValueError("rule right-hand side lives in a different ring")
            if rhs.degree_in(var) >= 1:
                raise ValueError(f"rule for {var} is non-terminating: rhs contains {var}")
            normalized[var] = (m, rhs)
        self.rules = normalized
        self._check_acyclic()

    def _check_acyclic(self):
        deps = {v: {w for e, _ in rhs.terms.items()
                    for w in (x for x, k in zip(self.ring.variables, e) if k)
                    if w in self.rules}
                for v, (_, rhs) in self.rules.items()}
        state: dict = {}

        def visit(v):
            if state.get(v) == 1:
                raise ValueError(f"cyclic rewrite rules involving {v}")
            if state.get(v) == 2:
                return
            state[v] = 1
            for w in deps[v]:
                visit(w)
            state[v] = 2

        for v in self.rules:
            visit(v)

    def is_reduced_monomial(self, exponents) -> bool:
        for var, (m, _) in self.rules.items():
            if exponents[self.ring.var_index(var)] >= m:
                return False
        return True

    def normal_form(self, poly) -> MultiPoly:
        """Canonical representative of ``poly`` in the quotient ring."""
        if isinstance(poly, int):
            poly = self.ring.constant(poly)
        if poly.ring != self.ring:
            raise ValueError("polynomial lives in a different ring")
        p = self.ring.p
        out: dict = {}
        work = list(poly.terms.items())
        rule_list = [(self.ring.var_index(v), m, rhs) for v, (m, rhs) in self.rules.items()]
        while work:
            e, c = work.pop()
            for idx, m, rhs in rule_list:
                if e[idx] >= m:
                    q, rem = divmod(e[idx], m)
                    base = list(e)
                    base[idx] = rem
                    reduced = self.ring.monomial(tuple(base), c) * (rhs ** q)
                    work.extend(reduced.terms.items())
                    break
            else:
                s = (out.get(e, 0) + c) % p
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MultiPoly(self.ring, out)

    def mul(self, a, b) -> MultiPoly:
        return self.normal_form(a * b)

    def pow(self, a, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self.normal_form(a)
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base) if n > 1 else base
            n >>= 1
        return result

    def reduced_monomials(self):
        """All reduced monomials, if every variable is ruled (else error)."""
        ranges = []
        for v in self.ring.variables:
            if v not in self.rules:
                raise ValueError(f"variable {v} unbounded; quotient is not finite-dimensional")
            ranges.append(range(self.rules[v][0]))
        return sorted(product(*ranges), key=lambda e: (sum(e), e))

    def __repr__(self):
        rs = ", ".join(f"{v}^{m}->{rhs!r}" for v, (m, rhs) in self.rules.items())
        return f"QuotientPresentation({self.ring!r}; {rs})"


class FiniteQuotientAlgebra:
    """A finite-dimensional quotient algebra with enumerable elements.

    Elements are coefficient vectors (tuples of residues) over the reduced
    monomial basis.  Used as the test-ring argument of points functors.
    """

    def __init__(self, presentation: QuotientPresentation, name: str = ""):
        self.presentation = presentation
        self.ring = presentation.ring
        self.p = self.ring.p
        self.name = name or repr(presentation)
        self.basis = presentation.reduced_monomials()
        self.dim = len(self.basis)
        self._index = {e: i for i, e in enumerate(self.basis)}
        # multiplication table: basis_i * basis_j -> coefficient vector
        self._table = {}
        for i, ei in enumerate(self.basis):
            for j in range(i, self.dim):
                prod = presentation.normal_form(
                    self.ring.monomial(tuple(a + b for a, b in zip(ei, self.basis[j]))))
                vec = self._vector_of(prod)
                self._table[(i, j)] = vec
                self._table[(j, i)] = vec

    def _vector_of(self, poly: MultiPoly) -> tuple:
        vec = [0] * self.dim
        for e, c in poly.terms.items():
            vec[self._index[e]] = c
        return tuple(vec)

    @property
    def size(self) -> int:
        return self.p ** self.dim

    @property
    def zero(self) -> tuple:
        return (0,) * self.dim

    @property
    def one(self) -> tuple:
        return self._vector_of(self.presentation.normal_form(self.ring.one()))

    def from_poly(self, poly) -> tuple:
        return self._vector_of(self.presentation.normal_form(poly))

    def scalar(self, c: int) -> tuple:
        return self._vector_of(self.presentation.normal_form(self.ring.constant(c)))

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def scale(self, c: int, a):
        c %= self.p
        return tuple((c * x) % self.p for x in a)

    def mul(self, a, b):
        out = [0] * self.dim
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                coeff = (x * y) % self.p
                for m, t in enumerate(self._table[(i, j)]):
                    if t:
                        out[m] = (out[m] + coeff * t) % self.p
        return tuple(out)

    def pow(self, a, n: int):
        result = self.one
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            n >>= 1
        return result

    def is_zero(self, a) -> bool:
        return all(x == 0 for x in a)

    def elements(self):
        return (t for t in product(range(self.p), repeat=self.dim))

    def __repr__(self):
        return f"FiniteQuotientAlgebra({self.name}, dim={self.dim}, p={self.p})"


# -- stock test rings ------------------------------------------------------

def prime_ring(p: int) -> FiniteQuotientAlgebra:
    """``F_p`` itself, as a rank-one quotient algebra."""
    ring = PolyRing(p, ())
    return FiniteQuotientAlgebra(QuotientPresentation(ring, {}), name=f"F{p}")


def nilpotent_ring(p: int, order: int) -> FiniteQuotientAlgebra:
    """``F_p[e]/(e^order)``; order 2 gives the dual numbers."""
    ring = PolyRing(p, ("e",))
    return FiniteQuotientAlgebra(QuotientPresentation(ring, {"e": (order, 0)}),
                                 name=f"F{p}[e]/(e^{order})")


def quadratic_field_ring(p: int) -> FiniteQuotientAlgebra:
    """``F_(p^2)`` presented as a quotient algebra."""
    from .field import quadratic_extension
    ext = quadratic_extension(p)
    ring = PolyRing(p, ("w",))
    rhs = ring.from_terms(((i,), c) for i, c in enumerate(ext.reduction))
    return FiniteQuotientAlgebra(QuotientPresentation(ring, {"w": (2, rhs)}),
                                 name=f"F{p ** 2}")
