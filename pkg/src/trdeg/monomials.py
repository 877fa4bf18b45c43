"""Sparse monomials in variables x1, x2, ... (1-based indices)."""

from __future__ import annotations

from typing import Iterable, Iterator


class Monomial:
    """An exponent vector stored sparsely as sorted (index, exponent) pairs.

    Immutable by convention; zero exponents are never stored, so equal
    monomials compare and hash equal.  The empty monomial is the constant 1.
    """

    __slots__ = ("exps", "degree")

    def __init__(self, exps: Iterable[tuple[int, int]] = ()):
        acc: dict[int, int] = {}
        for index, exp in exps:
            if index < 1:
                raise ValueError(f"variable index must be >= 1, got {index}")
            if exp < 0:
                raise ValueError(f"exponent must be nonnegative, got {exp}")
            if exp:
                acc[index] = acc.get(index, 0) + exp
        self.exps: tuple[tuple[int, int], ...] = tuple(sorted(acc.items()))
        self.degree: int = sum(e for _, e in self.exps)

    @classmethod
    def var(cls, index: int, exp: int = 1) -> "Monomial":
        return cls(((index, exp),))

    def exponent(self, index: int) -> int:
        for i, e in self.exps:
            if i == index:
                return e
        return 0

    def is_one(self) -> bool:
        return not self.exps

    def max_index(self) -> int:
        """Largest variable index with a nonzero exponent; 0 for the constant."""
        return self.exps[-1][0] if self.exps else 0

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(self.exps + other.exps)

    def divides(self, other: "Monomial") -> bool:
        return all(e <= other.exponent(i) for i, e in self.exps)

    def div(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other; requires other.divides(self)."""
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial((i, e - other.exponent(i)) for i, e in self.exps)

    def lcm(self, other: "Monomial") -> "Monomial":
        indices = set(self.indices()) | set(other.indices())
        return Monomial((i, max(self.exponent(i), other.exponent(i))) for i in indices)

    def natural_key(self) -> tuple:
        """Ordering-independent sort key, for deterministic bookkeeping only."""
        return (self.degree, self.exps)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        return hash(self.exps)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.exps)

    def __repr__(self) -> str:
        if not self.exps:
            return "1"
        return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.exps)


ONE = Monomial()


def monomials_up_to_degree(nvars: int, maxdeg: int) -> list[Monomial]:
    """All monomials in x1..xnvars of total degree <= maxdeg.

    Produced by ascending total degree, then lexicographic exponent vector;
    callers re-sort under a monomial ordering when one is in play.
    """
    if nvars < 1:
        raise ValueError("need at least one variable")
    if maxdeg < 0:
        raise ValueError("degree bound must be nonnegative")
    out: list[Monomial] = []
    for total in range(maxdeg + 1):
        for vec in compositions(total, nvars):
            out.append(Monomial((i + 1, e) for i, e in enumerate(vec) if e))
    return out


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All nonnegative integer vectors of the given length summing to total,
    in ascending lexicographic order."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest
