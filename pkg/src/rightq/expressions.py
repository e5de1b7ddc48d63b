"""Finite linear combinations of biwords with Laurent coefficients.

An Expression is the free module element sum(c_alpha * alpha) over
finitely many biwords alpha.  The product extends biword concatenation
bilinearly; an optional degree cutoff makes products of infinite-series
truncations exact through the cutoff.
"""

from .laurent import Laurent, ONE, as_laurent
from .words import Biword, EMPTY_BIWORD


class Expression:
    """Canonical dict of {Biword: nonzero Laurent coefficient}."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[Biword, "Laurent | int"] | None = None):
        clean: dict[Biword, Laurent] = {}
        if terms:
            for bw, c in terms.items():
                c = as_laurent(c)
                if c:
                    clean[bw] = c
        self._terms = clean

    @classmethod
    def _make(cls, terms: dict[Biword, Laurent]) -> "Expression":
        # Trusted constructor: no zero coefficients, ints already coerced.
        self = object.__new__(cls)
        self._terms = terms
        return self

    @classmethod
    def zero(cls) -> "Expression":
        return cls._make({})

    @classmethod
    def unit(cls) -> "Expression":
        return cls._make({EMPTY_BIWORD: ONE})

    @classmethod
    def single(cls, biword: Biword, coefficient: "Laurent | int" = 1) -> "Expression":
        c = as_laurent(coefficient)
        return cls._make({biword: c} if c else {})

    def terms(self) -> list[tuple[Biword, Laurent]]:
        """(biword, coefficient) pairs in canonical biword order."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def support(self) -> tuple[Biword, ...]:
        return tuple(sorted(self._terms, key=Biword.sort_key))

    def coefficient(self, biword: Biword) -> Laurent:
        return self._terms.get(biword, Laurent.integer(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Expression):
            return NotImplemented
        return self._terms == other._terms

    def __neg__(self) -> "Expression":
        return Expression._make({bw: -c for bw, c in self._terms.items()})

    def __add__(self, other: "Expression") -> "Expression":
        if not isinstance(other, Expression):
            return NotImplemented
        merged = dict(self._terms)
        for bw, c in other._terms.items():
            s = merged.get(bw)
            s = c if s is None else s + c
            if s:
                merged[bw] = s
            else:
                merged.pop(bw, None)
        return Expression._make(merged)

    def __sub__(self, other: "Expression") -> "Expression":
        if not isinstance(other, Expression):
            return NotImplemented
        return self + (-other)

    def scale(self, coefficient: "Laurent | int") -> "Expression":
        c = as_laurent(coefficient)
        if not c:
            return Expression.zero()
        return Expression._make({bw: k * c for bw, k in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Expression):
            return self.product(other)
        if isinstance(other, (Laurent, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Laurent, int)):
            return self.scale(other)
        return NotImplemented

    def product(self, other: "Expression", max_degree: int | None = None) -> "Expression":
        """Concatenation product, dropping terms longer than max_degree."""
        out: dict[Biword, Laurent] = {}
        for a, ca in self._terms.items():
            la = len(a)
            if max_degree is not None and la > max_degree:
                continue
            for b, cb in other._terms.items():
                if max_degree is not None and la + len(b) > max_degree:
                    continue
                ab = a * b
                c = ca * cb
                s = out.get(ab)
                s = c if s is None else s + c
                if s:
                    out[ab] = s
                else:
                    out.pop(ab, None)
        return Expression._make(out)

    def homogeneous_component(self, degree: int) -> "Expression":
        return Expression._make(
            {bw: c for bw, c in self._terms.items() if len(bw) == degree}
        )

    def max_length(self) -> int:
        """Length of the longest biword in the support (0 for the zero expression)."""
        return max((len(bw) for bw in self._terms), default=0)

    def is_irreducible(self) -> bool:
        """True when every support biword has no double descent."""
        return all(bw.is_irreducible() for bw in self._terms)

    def is_circular(self) -> bool:
        """True when every support biword is a circuit."""
        return all(bw.is_circuit() for bw in self._terms)

    def map_coefficients(self, fn) -> "Expression":
        """Apply fn to every coefficient, dropping terms that become zero."""
        out: dict[Biword, Laurent] = {}
        for bw, c in self._terms.items():
            nc = fn(c)
            if nc:
                out[bw] = nc
        return Expression._make(out)

    def eval_at_one(self) -> "Expression":
        """Specialize every coefficient at q = 1."""
        return self.map_coefficients(lambda c: Laurent.integer(c.eval_at_one()))

    def __str__(self) -> str:
        from .textform import print_expression

        return print_expression(self)

    def __repr__(self) -> str:
        return f"Expression({self._terms!r})"
