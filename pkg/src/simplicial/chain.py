#!/usr/bin/env python3
"""
Integer chains for PRISMA
Finite integer combinations of basis elements of fixed arity and degree,
shared by the Barratt-Eccles complex E(r) and the surjection complex X(r).
"""

from collections import defaultdict
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Mapping, Tuple, Union

from src.utils.errors import ArityMismatchError, DegreeMismatchError

Terms = Union[Mapping, Iterable[Tuple[Hashable, int]]]


class Chain:
    """Immutable linear combination with nonzero integer coefficients in canonical order.

    Basis elements must expose ``arity``, ``degree`` and ``sort_key``.
    Subclasses decide which basis elements vanish (normalized chains).
    """

    __slots__ = ('arity', 'degree', '_terms', '_hash')

    def __init__(self, arity: int, degree: int, terms: Terms = ()):
        self.arity = arity
        self.degree = degree
        accumulated: Dict = defaultdict(int)
        items = terms.items() if isinstance(terms, Mapping) else terms
        for basis, coefficient in items:
            if not coefficient or self._vanishes(basis):
                continue
            self._check_basis(basis)
            accumulated[basis] += coefficient
        ordered = sorted(accumulated.items(), key=lambda item: item[0].sort_key)
        self._terms = {basis: c for basis, c in ordered if c}
        self._hash = None

    @staticmethod
    def _vanishes(basis) -> bool:
        return False

    def _check_basis(self, basis):
        if basis.arity != self.arity:
            raise ArityMismatchError(f"{basis} has arity {basis.arity}, chain has arity {self.arity}")
        if basis.degree != self.degree:
            raise DegreeMismatchError(f"{basis} has degree {basis.degree}, chain has degree {self.degree}")

    @classmethod
    def zero(cls, arity: int, degree: int) -> 'Chain':
        return cls(arity, degree)

    @classmethod
    def of(cls, basis, coefficient: int = 1) -> 'Chain':
        return cls(basis.arity, basis.degree, [(basis, coefficient)])

    # Container protocol
    def __iter__(self) -> Iterator[Tuple[object, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, basis) -> bool:
        return basis in self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def basis(self) -> List:
        return list(self._terms)

    def coefficient(self, basis) -> int:
        return self._terms.get(basis, 0)

    # Linear structure
    def _compatible(self, other: 'Chain'):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.arity != self.arity:
            raise ArityMismatchError(f"arities {self.arity} and {other.arity} differ")
        if other.degree != self.degree:
            raise DegreeMismatchError(f"degrees {self.degree} and {other.degree} differ")

    def __add__(self, other: 'Chain') -> 'Chain':
        self._compatible(other)
        return type(self)(self.arity, self.degree, list(self) + list(other))

    def __sub__(self, other: 'Chain') -> 'Chain':
        self._compatible(other)
        return type(self)(self.arity, self.degree, list(self) + [(b, -c) for b, c in other])

    def __neg__(self) -> 'Chain':
        return type(self)(self.arity, self.degree, [(b, -c) for b, c in self])

    def __mul__(self, scalar: int) -> 'Chain':
        if not isinstance(scalar, int):
            return NotImplemented
        return type(self)(self.arity, self.degree, [(b, scalar * c) for b, c in self])

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (self.arity, self.degree, self._terms) == (other.arity, other.degree, other._terms)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.arity, self.degree, tuple(self._terms.items())))
        return self._hash

    # Maps
    def relabeled(self, w) -> 'Chain':
        return type(self)(self.arity, self.degree, [(b.relabeled(w), c) for b, c in self])

    def map_linear(self, basis_map: Callable[[object], 'Chain'], target: type, degree: int) -> 'Chain':
        """Extend a basis map linearly; the result lives in `target` at `degree`"""
        terms = []
        for basis, coefficient in self:
            image = basis_map(basis)
            if image.degree != degree:
                raise DegreeMismatchError(f"image of {basis} has degree {image.degree}, expected {degree}")
            terms.extend((b, coefficient * c) for b, c in image)
        return target(self.arity, degree, terms)

    # Display
    def __str__(self) -> str:
        if not self._terms:
            return '0'
        parts = []
        for index, (basis, c) in enumerate(self):
            sign = '-' if c < 0 else '+'
            magnitude = '' if abs(c) == 1 else f"{abs(c)}*"
            if index == 0:
                parts.append(f"{'-' if c < 0 else ''}{magnitude}{basis}")
            else:
                parts.append(f"{sign} {magnitude}{basis}")
        return ' '.join(parts)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(arity={self.arity}, degree={self.degree}, {self})"
