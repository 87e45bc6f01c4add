"""Shared sparse linear-combination container over ComplexRadical coefficients.

Subclasses fix the key type (Wigner indices, monomials, index-monomial pairs)
and inherit exact module arithmetic.  Zero coefficients are never stored, so
equality of term dictionaries is equality of the represented vectors.
"""

from __future__ import annotations

from .scalars import ComplexRadical


class LinComb:
    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean: dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                coeff = ComplexRadical.of(coeff)
                if key in clean:
                    coeff = clean[key] + coeff
                if coeff.is_zero():
                    clean.pop(key, None)
                else:
                    clean[key] = coeff
        self._terms = clean

    @classmethod
    def zero(cls):
        return cls()

    def items(self):
        return self._terms.items()

    def support(self):
        return self._terms.keys()

    def get(self, key) -> ComplexRadical:
        return self._terms.get(key, ComplexRadical())

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        terms = dict(self._terms)
        for key, coeff in other._terms.items():
            acc = terms.get(key)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                terms.pop(key, None)
            else:
                terms[key] = coeff
        return type(self)(terms)

    def __neg__(self):
        return type(self)({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self + (-other)

    def scaled(self, scalar):
        scalar = ComplexRadical.of(scalar)
        if scalar.is_zero():
            return type(self)()
        return type(self)({k: c * scalar for k, c in self._terms.items()})

    def __mul__(self, scalar):
        return self.scaled(scalar)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return f"{type(self).__name__}(0)"
        body = " + ".join(f"({c!r})*{k}" for k, c in self._terms.items())
        return f"{type(self).__name__}({body})"
