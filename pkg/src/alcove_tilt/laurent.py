"""Exact integer Laurent polynomials in one variable ``v``.

>>> v = LaurentPolynomial.v()
>>> (v + v**-1) ** 2
v^-2 + 2 + v^2
>>> ((v + v**-1) ** 2)(1)
4
"""

from __future__ import annotations

from typing import Iterable, Mapping

__all__ = ["LaurentPolynomial", "ZERO", "ONE", "V"]

class LaurentPolynomial:
    """An element of Z[v, v^-1], stored as ``{exponent: coefficient}``.

    Instances are immutable and hashable; zero coefficients are never stored.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            coeffs = {0: coeffs}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, a in items:
            if not isinstance(a, int) or isinstance(a, bool):
                raise TypeError(f"coefficient {a!r} is not an integer")
            e = int(e)
            c[e] = c.get(e, 0) + a
        self._c = {e: a for e, a in sorted(c.items()) if a}
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPolynomial:
        # caller guarantees no zero coefficients
        p = cls.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def v(cls) -> LaurentPolynomial:
        return cls._raw({1: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> LaurentPolynomial:
        return cls._raw({exponent: coeff} if coeff else {})

    # -- accessors ---------------------------------------------------------

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __getitem__(self, exponent: int) -> int:
        return self._c.get(exponent, 0)

    def items(self):
        return self._c.items()

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def valuation(self) -> int | None:
        return min(self._c) if self._c else None

    def __call__(self, x=1):
        """Evaluate at ``v = x``; ``x = 1`` gives the sum of the coefficients."""
        if x == 1:
            return sum(self._c.values())
        return sum(a * x**e for e, a in self._c.items())

    def bar(self) -> LaurentPolynomial:
        """The involution ``v -> v^-1``."""
        return LaurentPolynomial._raw({-e: a for e, a in self._c.items()})

    def positive_part(self) -> LaurentPolynomial:
        """Terms of strictly positive degree."""
        return LaurentPolynomial._raw({e: a for e, a in self._c.items() if e > 0})

    def is_nonnegative(self) -> bool:
        return all(a > 0 for a in self._c.values())

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPolynomial | None:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return LaurentPolynomial._raw({0: other} if other else {})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c = dict(self._c)
        for e, a in o._c.items():
            s = c.get(e, 0) + a
            if s:
                c[e] = s
            else:
                c.pop(e, None)
        return LaurentPolynomial._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in o._c.items():
                c[e1 + e2] = c.get(e1 + e2, 0) + a1 * a2
        return LaurentPolynomial._raw({e: a for e, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._c) != 1:
                raise ValueError("only monomials are invertible")
            (e, a), = self._c.items()
            if a not in (1, -1):
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPolynomial._raw({e * n: a ** (-n)})
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict[str, int]:
        """Exponent -> coefficient map with string keys in increasing exponent order."""
        return {str(e): self._c[e] for e in sorted(self._c)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> LaurentPolynomial:
        return cls((int(e), a) for e, a in data.items())

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e, a in sorted(self._c.items()):
            if e == 0:
                mono = str(a)
            else:
                mono = "v" if e == 1 else f"v^{e}"
                if a == -1:
                    mono = "-" + mono
                elif a != 1:
                    mono = f"{a}*{mono}"
            parts.append(mono)
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentPolynomial._raw({})
ONE = LaurentPolynomial._raw({0: 1})
V = LaurentPolynomial._raw({1: 1})
