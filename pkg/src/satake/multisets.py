"""
Eigenvalue multisets.

Exact modes compare through ``multiset.FrozenMultiset``; complex mode uses a
greedy tolerant matching.
"""
from typing import Iterable, List

from multiset import FrozenMultiset

from src.algebra.scalars import RATIONAL, ScalarField


class EigenMultiset:
    """Order-free multiset of scalars."""

    def __init__(self, values: Iterable = (), field: ScalarField = RATIONAL):
        self.field = field
        self.values = tuple(values)

    @classmethod
    def of(cls, values: Iterable, field: ScalarField = RATIONAL) -> "EigenMultiset":
        return cls((field.convert(v) for v in values), field)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def _counts(self) -> FrozenMultiset:
        return FrozenMultiset(self.field.canonical(v) for v in self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EigenMultiset):
            return NotImplemented
        if other.field.mode is not self.field.mode or len(self) != len(other):
            return False
        if self.field.exact:
            return self._counts() == other._counts()
        remaining = list(other.values)
        for v in self.values:
            for k, w in enumerate(remaining):
                if self.field.eq(v, w):
                    del remaining[k]
                    break
            else:
                return False
        return True

    __hash__ = None

    def union(self, other: "EigenMultiset") -> "EigenMultiset":
        self.field.require_same(other.field)
        return EigenMultiset(self.values + other.values, self.field)

    __add__ = union

    def tensor(self, other: "EigenMultiset") -> "EigenMultiset":
        self.field.require_same(other.field)
        return EigenMultiset((a * b for a in self.values for b in other.values), self.field)

    def scale(self, c) -> "EigenMultiset":
        return EigenMultiset((c * v for v in self.values), self.field)

    def inverse(self) -> "EigenMultiset":
        one = self.field.one
        return EigenMultiset((one / v for v in self.values), self.field)

    def multiplicity(self, x) -> int:
        return sum(1 for v in self.values if self.field.eq(v, x))

    def contains(self, x) -> bool:
        return any(self.field.eq(v, x) for v in self.values)

    def product(self):
        return self.field.product(self.values)

    def sorted_values(self) -> List:
        return sorted(self.values, key=self.field.sort_key)

    def to_json(self) -> list:
        return [self.field.to_json(v) for v in self.sorted_values()]

    def __repr__(self) -> str:
        return f"EigenMultiset({self.to_json()})"


class ProjectiveMultiset(EigenMultiset):
    """A multiset up to a common nonzero scalar."""

    def __eq__(self, other) -> bool:
        if not isinstance(other, EigenMultiset):
            return NotImplemented
        if other.field.mode is not self.field.mode or len(self) != len(other):
            return False
        if not self.values:
            return True
        a0 = self.values[0]
        plain = EigenMultiset(self.values, self.field)
        return any(
            EigenMultiset(other.values, other.field).scale(a0 / b) == plain
            for b in other.values
            if not self.field.is_zero(b)
        )

    __hash__ = None

    def canonical(self) -> EigenMultiset:
        """Least representative (by sorted keys) among the rescalings putting one entry at 1.

        Two projective multisets are equal exactly when their canonical
        representatives are equal.
        """
        best = None
        best_key = None
        for b in self.values:
            if self.field.is_zero(b):
                continue
            candidate = EigenMultiset(self.values, self.field).scale(self.field.one / b)
            key = tuple(self.field.sort_key(v) for v in candidate.sorted_values())
            if best_key is None or key < best_key:
                best, best_key = candidate, key
        return best if best is not None else EigenMultiset(self.values, self.field)

    def to_json(self) -> list:
        return self.canonical().to_json()

    def __repr__(self) -> str:
        return f"ProjectiveMultiset({self.to_json()})"
