# This file is part of tnpbench.
#
# Copyright 2026 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify it
# under the terms of the GNU Lesser General Public License version 3, as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranties of MERCHANTABILITY,
# SATISFACTORY QUALITY, or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License along
# with this program.  If not, see <http://www.gnu.org/licenses/>.
"""Exact row reduction over sympy's dense domain matrices.

Matrices are lists of rows of raw domain elements. Row reduction and
nullspaces go through :class:`sympy.polys.matrices.ddm.DDM`, which works
directly on ``QQ`` and ``GF(p)`` elements.
"""
from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Sequence
from typing import Any

from sympy.polys.matrices.ddm import DDM
from typing_extensions import Self

from tnpbench import errors
from tnpbench.algcore import LinearMap, Vector
from tnpbench.exactfield import FieldDescriptor

Row = Sequence[Any]


def _ddm(field: FieldDescriptor, rows: Iterable[Row], ncols: int) -> DDM:
    matrix = [list(row) for row in rows]
    if any(len(row) != ncols for row in matrix):
        raise errors.DimensionMismatchError(f"every row needs {ncols} entries")
    return DDM(matrix, (len(matrix), ncols), field.domain)


def rref(
    field: FieldDescriptor, rows: Iterable[Row], ncols: int
) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form without zero rows, and the pivot columns."""
    reduced, pivots = _ddm(field, rows, ncols).rref()
    pivots = list(pivots)
    return [list(reduced[i]) for i in range(len(pivots))], pivots


def rank(field: FieldDescriptor, rows: Iterable[Row], ncols: int) -> int:
    return len(rref(field, rows, ncols)[1])


def inverse(field: FieldDescriptor, rows: Sequence[Row]) -> list[list[Any]]:
    """The inverse of a square matrix, by reducing ``[M | I]``.

    :raises DimensionMismatchError: if the matrix is not square or is singular.
    """
    n = len(rows)
    augmented = [
        [*row, *(field.one if i == j else field.zero for j in range(n))]
        for i, row in enumerate(rows)
    ]
    reduced, pivots = rref(field, augmented, 2 * n)
    if pivots[:n] != list(range(n)) or len(pivots) != n:
        raise errors.DimensionMismatchError("the matrix is singular")
    return [row[n:] for row in reduced]


def nullspace(field: FieldDescriptor, rows: Iterable[Row], ncols: int) -> list[list[Any]]:
    """An RREF basis of ``{v : M v = 0}``."""
    matrix = _ddm(field, rows, ncols)
    if matrix.shape[0] == 0:
        basis: list[list[Any]] = [
            [field.one if i == j else field.zero for j in range(ncols)]
            for i in range(ncols)
        ]
    else:
        found, _ = matrix.nullspace()
        basis = [list(row) for row in found]
    # sympy's nullspace basis is not reduced; normalise it so equal spaces compare equal.
    return rref(field, basis, ncols)[0] if basis else []


def _reduce(
    basis: Sequence[Row], pivots: Sequence[int], vector: Sequence[Any]
) -> list[Any]:
    remainder = list(vector)
    for row, pivot in zip(basis, pivots):
        factor = remainder[pivot]
        if factor:
            for j, value in enumerate(row):
                if value:
                    remainder[j] -= factor * value
    return remainder


@dataclasses.dataclass(frozen=True)
class Subspace:
    """A subspace of ``field^ambient`` kept as an RREF basis.

    Equal subspaces have identical bases, so ``==`` decides equality.
    """

    field: FieldDescriptor
    ambient: int
    basis: tuple[tuple[Any, ...], ...] = ()
    pivots: tuple[int, ...] = ()

    @classmethod
    def span(
        cls, field: FieldDescriptor, ambient: int, vectors: Iterable[Row | Vector]
    ) -> Self:
        rows = [tuple(v) for v in vectors]
        if not rows:
            return cls(field, ambient)
        basis, pivots = rref(field, rows, ambient)
        return cls(field, ambient, tuple(map(tuple, basis)), tuple(pivots))

    @classmethod
    def zero(cls, field: FieldDescriptor, ambient: int) -> Self:
        return cls(field, ambient)

    @classmethod
    def full(cls, field: FieldDescriptor, ambient: int) -> Self:
        return cls.span(
            field,
            ambient,
            ([field.one if i == j else field.zero for j in range(ambient)] for i in range(ambient)),
        )

    @classmethod
    def solutions(
        cls, field: FieldDescriptor, ambient: int, equations: Iterable[Row]
    ) -> Self:
        """The solution space of a homogeneous system."""
        rows = list(equations)
        basis = nullspace(field, rows, ambient)
        return cls.span(field, ambient, basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient

    def _check(self, other: Subspace) -> None:
        if other.field != self.field:
            raise errors.FieldMismatchError(self.field, other.field)
        if other.ambient != self.ambient:
            raise errors.DimensionMismatchError(
                f"subspaces of dimension {self.ambient} and {other.ambient} ambient spaces"
            )

    def contains(self, vector: Row | Vector) -> bool:
        coords = tuple(vector)
        if len(coords) != self.ambient:
            raise errors.DimensionMismatchError(
                f"vector of length {len(coords)} in a {self.ambient}-dimensional space"
            )
        return not any(_reduce(self.basis, self.pivots, coords))

    def contains_subspace(self, other: Subspace) -> bool:
        self._check(other)
        return all(self.contains(row) for row in other.basis)

    def sum(self, other: Subspace) -> Subspace:
        self._check(other)
        return Subspace.span(self.field, self.ambient, (*self.basis, *other.basis))

    __add__ = sum

    def orthogonal(self) -> Subspace:
        """Vectors with zero dot product against every basis vector."""
        if self.is_zero:
            return Subspace.full(self.field, self.ambient)
        return Subspace.solutions(self.field, self.ambient, self.basis)

    def intersection(self, other: Subspace) -> Subspace:
        """``U & V``, computed as ``(U^perp + V^perp)^perp``."""
        self._check(other)
        return self.orthogonal().sum(other.orthogonal()).orthogonal()

    __and__ = intersection

    def coordinates(self, vector: Row | Vector) -> list[Any]:
        """Coordinates of a member vector in the RREF basis."""
        coords = list(vector)
        if not self.contains(coords):
            raise errors.DimensionMismatchError("vector does not lie in the subspace")
        return [coords[pivot] for pivot in self.pivots]

    def vectors(self) -> list[Vector]:
        return [Vector(self.field, row) for row in self.basis]

    def complement_basis(self) -> list[Vector]:
        """Unit vectors at the non-pivot columns, completing the basis greedily."""
        pivots = set(self.pivots)
        return [
            Vector.basis(self.field, self.ambient, j)
            for j in range(self.ambient)
            if j not in pivots
        ]

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(value) for value in row] for row in self.basis]


@dataclasses.dataclass(frozen=True)
class LinearMapSpace:
    """A space of n-by-n maps, flattened row-major (entry (i, j) at ``i*n + j``)."""

    n: int
    space: Subspace

    def __post_init__(self) -> None:
        if self.space.ambient != self.n * self.n:
            raise errors.DimensionMismatchError(
                f"a space of {self.n}x{self.n} maps lives in dimension {self.n * self.n}"
            )

    @classmethod
    def solutions(
        cls, field: FieldDescriptor, n: int, equations: Iterable[Row]
    ) -> Self:
        return cls(n, Subspace.solutions(field, n * n, equations))

    @property
    def field(self) -> FieldDescriptor:
        return self.space.field

    @property
    def dim(self) -> int:
        return self.space.dim

    def maps(self) -> list[LinearMap]:
        return [LinearMap.from_flat(self.field, self.n, row) for row in self.space.basis]

    def contains(self, phi: LinearMap) -> bool:
        if phi.dim != self.n:
            raise errors.DimensionMismatchError(
                f"a {phi.dim}-dimensional map cannot lie in a space of {self.n}x{self.n} maps"
            )
        return self.space.contains(phi.flatten())

    def intersection(self, other: LinearMapSpace) -> LinearMapSpace:
        return LinearMapSpace(self.n, self.space.intersection(other.space))

    def only_scalars(self) -> bool:
        """Whether every map in the space is a multiple of the identity."""
        return all(phi.is_scalar() for phi in self.maps())

    def to_strings(self) -> list[list[list[str]]]:
        return [phi.to_strings() for phi in self.maps()]
