"""Finite-dimensional commutative Hopf algebras via structure tensors.

The stored representation is dense (mult and comult are dim^3 coefficient
arrays over the base field), but every check and construction walks the
nonzero entries only, since function algebras of the group schemes built
here are extremely sparse.  All axiom checks are exact tensor identities.

Conventions: ``mult[i, j, k]`` is the coefficient of ``b_k`` in
``b_i * b_j``; ``comult[i, u, v]`` the coefficient of ``b_u (x) b_v`` in
the coproduct of ``b_i``; ``antipode[i, j]`` the coefficient of ``b_j``
in ``S(b_i)``.
"""

from __future__ import annotations

import numpy as np

from .field import PrimeField

MAX_DIMENSION = 64


class HopfAlgebraError(ValueError):
    """Raised when supplied structure tensors violate a Hopf axiom."""


class HopfAlgebra:
    def __init__(self, field, labels, mult, unit, comult, counit, antipode,
                 generators=(), gen_words=(), relations=(), descriptor=None,
                 validate: bool = True):
        self.field = field
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        if self.dim == 0:
            raise HopfAlgebraError("empty basis")
        if self.dim > MAX_DIMENSION:
            raise HopfAlgebraError(
                f"dimension {self.dim} exceeds the dense-tensor cap {MAX_DIMENSION}")
        p = field.characteristic
        self.p = p
        self.mult = np.asarray(mult, dtype=np.int64) % p
        self.unit = np.asarray(unit, dtype=np.int64) % p
        self.comult = np.asarray(comult, dtype=np.int64) % p
        self.counit = np.asarray(counit, dtype=np.int64) % p
        self.antipode = np.asarray(antipode, dtype=np.int64) % p
        d = self.dim
        if (self.mult.shape != (d, d, d) or self.comult.shape != (d, d, d)
                or self.unit.shape != (d,) or self.counit.shape != (d,)
                or self.antipode.shape != (d, d)):
            raise HopfAlgebraError("structure tensor shape mismatch")
        # generators are vectors in the basis; words express each basis
        # element as a monomial in the generators
        self.generators = tuple(np.asarray(g, dtype=np.int64) % p for g in generators)
        self.gen_words = tuple(tuple(w) for w in gen_words)
        self.relations = tuple(relations)
        self.descriptor = descriptor or {}
        self._prod = None
        self._cop = None
        if validate:
            self.validate()

    # -- sparse adjacency --------------------------------------------------

    def _products(self):
        if self._prod is None:
            d = self.dim
            prod = [[[] for _ in range(d)] for _ in range(d)]
            for i, j, k in zip(*np.nonzero(self.mult)):
                prod[i][j].append((int(k), int(self.mult[i, j, k])))
            self._prod = prod
        return self._prod

    def _coproducts(self):
        if self._cop is None:
            d = self.dim
            cop = [[] for _ in range(d)]
            for i, u, v in zip(*np.nonzero(self.comult)):
                cop[i].append((int(u), int(v), int(self.comult[i, u, v])))
            self._cop = cop
        return self._cop

    # -- element arithmetic (dicts index -> coefficient) --------------------

    def elem(self, vec) -> dict:
        return {int(i): int(c) % self.p for i, c in enumerate(np.asarray(vec))
                if int(c) % self.p}

    def vec(self, elem: dict) -> np.ndarray:
        out = np.zeros(self.dim, dtype=np.int64)
        for i, c in elem.items():
            out[i] = c % self.p
        return out

    def mul_elem(self, x: dict, y: dict) -> dict:
        prod = self._products()
        p = self.p
        out: dict = {}
        for i, ci in x.items():
            for j, cj in y.items():
                c = ci * cj % p
                if not c:
                    continue
                for k, ck in prod[i][j]:
                    s = (out.get(k, 0) + c * ck) % p
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
        return out

    def pow_elem(self, x: dict, n: int) -> dict:
        result = self.elem(self.unit)
        base = x
        while n:
            if n & 1:
                result = self.mul_elem(result, base)
            base = self.mul_elem(base, base) if n > 1 else base
            n >>= 1
        return result

    def comult_elem(self, x: dict) -> dict:
        cop = self._coproducts()
        p = self.p
        out: dict = {}
        for i, ci in x.items():
            for u, v, c in cop[i]:
                s = (out.get((u, v), 0) + ci * c) % p
                if s:
                    out[(u, v)] = s
                else:
                    out.pop((u, v), None)
        return out

    def mul2(self, x: dict, y: dict) -> dict:
        """Product of elements of H (x) H, keyed by index pairs."""
        prod = self._products()
        p = self.p
        out: dict = {}
        for (a, b), c1 in x.items():
            for (cc, dd), c2 in y.items():
                c = c1 * c2 % p
                if not c:
                    continue
                for e, ce in prod[a][cc]:
                    for f, cf in prod[b][dd]:
                        key = (e, f)
                        s = (out.get(key, 0) + c * ce * cf) % p
                        if s:
                            out[key] = s
                        else:
                            out.pop(key, None)
        return out

    def antipode_elem(self, x: dict) -> dict:
        p = self.p
        out: dict = {}
        for i, ci in x.items():
            for j in np.nonzero(self.antipode[i])[0]:
                s = (out.get(int(j), 0) + ci * int(self.antipode[i, j])) % p
                if s:
                    out[int(j)] = s
                else:
                    out.pop(int(j), None)
        return out

    def counit_elem(self, x: dict) -> int:
        return sum(c * int(self.counit[i]) for i, c in x.items()) % self.p

    # -- axiom suite ---------------------------------------------------------

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.transpose(1, 0, 2)))

    def is_cocommutative(self) -> bool:
        return bool(np.array_equal(self.comult, self.comult.transpose(0, 2, 1)))

    def check_unital(self) -> bool:
        one = self.elem(self.unit)
        for i in range(self.dim):
            b = {i: 1}
            if self.mul_elem(one, b) != b or self.mul_elem(b, one) != b:
                return False
        return True

    def check_associative(self) -> bool:
        prod = self._products()
        for i in range(self.dim):
            for j in range(self.dim):
                ij = dict(prodlist_to_elem(prod[i][j]))
                for k in range(self.dim):
                    lhs = self.mul_elem(ij, {k: 1})
                    rhs = self.mul_elem({i: 1}, dict(prodlist_to_elem(prod[j][k])))
                    if lhs != rhs:
                        return False
        return True

    def check_coassociative(self) -> bool:
        cop = self._coproducts()
        p = self.p
        for i in range(self.dim):
            left: dict = {}
            right: dict = {}
            for u, v, c in cop[i]:
                for a, b, c2 in cop[u]:
                    key = (a, b, v)
                    left[key] = (left.get(key, 0) + c * c2) % p
                for a, b, c2 in cop[v]:
                    key = (u, a, b)
                    right[key] = (right.get(key, 0) + c * c2) % p
            if {k: v for k, v in left.items() if v} != {k: v for k, v in right.items() if v}:
                return False
        return True

    def check_counit(self) -> bool:
        cop = self._coproducts()
        p = self.p
        for i in range(self.dim):
            left: dict = {}
            right: dict = {}
            for u, v, c in cop[i]:
                left[v] = (left.get(v, 0) + c * int(self.counit[u])) % p
                right[u] = (right.get(u, 0) + c * int(self.counit[v])) % p
            target = {i: 1}
            if ({k: v for k, v in left.items() if v} != target
                    or {k: v for k, v in right.items() if v} != target):
                return False
        return True

    def check_bialgebra(self) -> bool:
        # counit and comult must be algebra maps; comult(1) = 1 (x) 1
        one = self.elem(self.unit)
        unit2 = {}
        for i, ci in one.items():
            for j, cj in one.items():
                unit2[(i, j)] = ci * cj % self.p
        if self.comult_elem(one) != {k: v for k, v in unit2.items() if v}:
            return False
        if self.counit_elem(one) != 1 % self.p:
            return False
        prod = self._products()
        for i in range(self.dim):
            di = self.comult_elem({i: 1})
            for j in range(self.dim):
                ij = dict(prodlist_to_elem(prod[i][j]))
                if self.counit_elem(ij) != int(self.counit[i]) * int(self.counit[j]) % self.p:
                    return False
                lhs = self.comult_elem(ij)
                rhs = self.mul2(di, self.comult_elem({j: 1}))
                if lhs != rhs:
                    return False
        return True

    def check_antipode(self) -> bool:
        one = self.elem(self.unit)
        p = self.p
        for i in range(self.dim):
            target = {k: int(self.counit[i]) * c % p for k, c in one.items()}
            target = {k: v for k, v in target.items() if v}
            left: dict = {}
            right: dict = {}
            for (u, v), c in self.comult_elem({i: 1}).items():
                for k, ck in self.mul_elem(self.antipode_elem({u: 1}), {v: 1}).items():
                    left[k] = (left.get(k, 0) + c * ck) % p
                for k, ck in self.mul_elem({u: 1}, self.antipode_elem({v: 1})).items():
                    right[k] = (right.get(k, 0) + c * ck) % p
            left = {k: v for k, v in left.items() if v}
            right = {k: v for k, v in right.items() if v}
            if left != target or right != target:
                return False
        return True

    def axiom_report(self) -> dict:
        return {
            "associative": self.check_associative(),
            "commutative": self.is_commutative(),
            "unital": self.check_unital(),
            "coassociative": self.check_coassociative(),
            "counital": self.check_counit(),
            "bialgebra_compatible": self.check_bialgebra(),
            "antipode": self.check_antipode(),
        }

    def validate(self):
        report = self.axiom_report()
        failed = [name for name, ok in report.items() if not ok]
        if failed:
            raise HopfAlgebraError(f"Hopf axioms failed: {', '.join(failed)}")

    def validate_presentation(self):
        """Every basis element must equal its generator word, and the
        declared relations must hold in the algebra itself."""
        if not self.gen_words:
            return
        gens = [self.elem(g) for g in self.generators]
        for idx, word in enumerate(self.gen_words):
            acc = self.elem(self.unit)
            for g, e in zip(gens, word):
                acc = self.mul_elem(acc, self.pow_elem(g, e))
            if acc != {idx: 1}:
                raise HopfAlgebraError(f"basis element {idx} is not its generator word")
        for rel in self.relations:
            acc: dict = {}
            for exps, coeff in rel:
                term = self.elem(self.unit)
                for g, e in zip(gens, exps):
                    term = self.mul_elem(term, self.pow_elem(g, e))
                for k, c in term.items():
                    s = (acc.get(k, 0) + coeff * c) % self.p
                    if s:
                        acc[k] = s
                    else:
                        acc.pop(k, None)
            if acc:
                raise HopfAlgebraError("declared relation fails in the algebra")

    # -- scalar extension ----------------------------------------------------

    def extend_scalars(self, ext_field) -> "HopfAlgebra":
        """The same structure tensors viewed over an extension field."""
        if ext_field.characteristic != self.p:
            raise HopfAlgebraError("extension must preserve the characteristic")
        return HopfAlgebra(ext_field, self.labels, self.mult, self.unit,
                           self.comult, self.counit, self.antipode,
                           generators=self.generators, gen_words=self.gen_words,
                           relations=self.relations,
                           descriptor=dict(self.descriptor, extended=True),
                           validate=False)

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "dim": self.dim,
            "basis": list(self.labels),
            "mult": [int(x) for x in self.mult.reshape(-1)],
            "unit": [int(x) for x in self.unit],
            "comult": [int(x) for x in self.comult.reshape(-1)],
            "counit": [int(x) for x in self.counit],
            "antipode": [int(x) for x in self.antipode.reshape(-1)],
            "descriptor": self.descriptor,
        }

    @staticmethod
    def from_json(data: dict) -> "HopfAlgebra":
        d = data["dim"]
        field = PrimeField(data["p"])
        return HopfAlgebra(
            field, data["basis"],
            np.array(data["mult"], dtype=np.int64).reshape(d, d, d),
            np.array(data["unit"], dtype=np.int64),
            np.array(data["comult"], dtype=np.int64).reshape(d, d, d),
            np.array(data["counit"], dtype=np.int64),
            np.array(data["antipode"], dtype=np.int64).reshape(d, d),
            descriptor=data.get("descriptor"))

    def __repr__(self):
        name = self.descriptor.get("name", "?")
        return f"HopfAlgebra({name}, dim={self.dim}, p={self.p})"


def prodlist_to_elem(entries) -> dict:
    return {k: c for k, c in entries}
