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
"""Vectors, linear maps, structure-constant tensors and algebras."""
from __future__ import annotations

import dataclasses
import functools
from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from types import MappingProxyType
from typing import Any

from typing_extensions import Self

from tnpbench import errors
from tnpbench.exactfield import FieldDescriptor, Scalar

OPERATION_NAMES = ("dot", "circ")

Pair = tuple[int, int]


class Vector:
    """A dense coordinate vector of raw field elements."""

    __slots__ = ("coords", "field")

    def __init__(self, field: FieldDescriptor, coords: Iterable[Any]) -> None:
        self.field = field
        self.coords = tuple(coords)

    @classmethod
    def zero(cls, field: FieldDescriptor, dim: int) -> Self:
        return cls(field, [field.zero] * dim)

    @classmethod
    def basis(cls, field: FieldDescriptor, dim: int, index: int) -> Self:
        if not 0 <= index < dim:
            raise errors.DimensionMismatchError(
                f"basis index {index} out of range for dimension {dim}"
            )
        coords = [field.zero] * dim
        coords[index] = field.one
        return cls(field, coords)

    @classmethod
    def from_values(cls, field: FieldDescriptor, values: Iterable[Any]) -> Self:
        """Build a vector from ints, strings, Scalars or raw elements."""
        return cls(field, (field.element(value) for value in values))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Any]:
        return iter(self.coords)

    def __getitem__(self, index: int) -> Any:  # noqa: ANN401
        return self.coords[index]

    def _check(self, other: Vector) -> None:
        if other.field != self.field:
            raise errors.FieldMismatchError(self.field, other.field)
        if len(other.coords) != len(self.coords):
            raise errors.DimensionMismatchError(
                f"vector lengths differ: {len(self.coords)} and {len(other.coords)}"
            )

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(self.field, (a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(self.field, (a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Vector:
        return Vector(self.field, (-a for a in self.coords))

    def scale(self, factor: Any) -> Vector:  # noqa: ANN401
        """Multiply by a raw element, an int, or a Scalar."""
        raw = self.field.element(factor)
        return Vector(self.field, (raw * a for a in self.coords))

    def __rmul__(self, factor: int | Scalar) -> Vector:
        if isinstance(factor, (int, Scalar)):
            return self.scale(factor)
        return NotImplemented

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Vector):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(tuple(self.to_strings()))

    def __bool__(self) -> bool:
        return any(self.coords)

    def support(self) -> list[tuple[int, Any]]:
        """Non-zero coordinates as (index, value) pairs."""
        return [(i, c) for i, c in enumerate(self.coords) if c]

    def to_strings(self) -> list[str]:
        return [self.field.format(c) for c in self.coords]

    def __repr__(self) -> str:
        return f"Vector([{', '.join(self.to_strings())}], {self.field})"


@dataclasses.dataclass(frozen=True)
class LinearMap:
    """An n-by-n matrix acting on coordinates: ``phi(v)[i] = sum_j M[i][j] v[j]``.

    Column ``j`` holds the image of the basis vector ``e_j``.
    """

    field: FieldDescriptor
    rows: tuple[tuple[Any, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.rows)
        if any(len(row) != size for row in self.rows):
            raise errors.DimensionMismatchError("a linear map needs a square matrix")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def from_rows(cls, field: FieldDescriptor, rows: Iterable[Iterable[Any]]) -> Self:
        return cls(field, tuple(tuple(field.element(v) for v in row) for row in rows))

    @classmethod
    def from_columns(cls, field: FieldDescriptor, columns: Sequence[Vector]) -> Self:
        """Build the map sending ``e_j`` to ``columns[j]``."""
        size = len(columns)
        return cls(
            field,
            tuple(tuple(columns[j][i] for j in range(size)) for i in range(size)),
        )

    @classmethod
    def from_flat(cls, field: FieldDescriptor, dim: int, flat: Sequence[Any]) -> Self:
        """Inverse of :meth:`flatten`."""
        return cls(
            field, tuple(tuple(flat[i * dim : (i + 1) * dim]) for i in range(dim))
        )

    @classmethod
    def identity(cls, field: FieldDescriptor, dim: int) -> Self:
        return cls.from_columns(
            field, [Vector.basis(field, dim, j) for j in range(dim)]
        )

    @classmethod
    def zero(cls, field: FieldDescriptor, dim: int) -> Self:
        return cls(field, tuple((field.zero,) * dim for _ in range(dim)))

    def __call__(self, vector: Vector) -> Vector:
        if len(vector) != self.dim:
            raise errors.DimensionMismatchError(
                f"cannot apply a {self.dim}-dimensional map to a vector of length {len(vector)}"
            )
        zero = self.field.zero
        return Vector(
            self.field,
            (sum((m * v for m, v in zip(row, vector) if m and v), zero) for row in self.rows),
        )

    def column(self, index: int) -> Vector:
        return Vector(self.field, (row[index] for row in self.rows))

    def flatten(self) -> list[Any]:
        """Row-major coordinates: entry (i, j) sits at ``i * dim + j``."""
        return [value for row in self.rows for value in row]

    def compose(self, other: LinearMap) -> LinearMap:
        """Return ``self`` after ``other``."""
        return LinearMap.from_columns(
            self.field, [self(other.column(j)) for j in range(other.dim)]
        )

    def is_scalar(self) -> bool:
        """Whether this map is a multiple of the identity."""
        first = self.rows[0][0] if self.rows else self.field.zero
        return all(
            value == (first if i == j else self.field.zero)
            for i, row in enumerate(self.rows)
            for j, value in enumerate(row)
        )

    def __bool__(self) -> bool:
        return any(value for row in self.rows for value in row)

    def to_strings(self) -> list[list[str]]:
        return [[self.field.format(value) for value in row] for row in self.rows]


@dataclasses.dataclass(frozen=True)
class BilinearOp:
    """Structure constants ``c[i, j, k]`` with ``e_i * e_j = sum_k c[i, j, k] e_k``.

    Zero constants are never stored.
    """

    field: FieldDescriptor
    dim: int
    constants: Mapping[tuple[int, int, int], Any]
    _pairs: Mapping[Pair, tuple[tuple[int, Any], ...]] = dataclasses.field(
        init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        pairs: dict[Pair, list[tuple[int, Any]]] = {}
        clean: dict[tuple[int, int, int], Any] = {}
        for (i, j, k), value in sorted(self.constants.items()):
            if not all(0 <= index < self.dim for index in (i, j, k)):
                raise errors.DimensionMismatchError(
                    f"structure constant index {(i, j, k)} out of range for dimension {self.dim}"
                )
            if value:
                clean[i, j, k] = value
                pairs.setdefault((i, j), []).append((k, value))
        object.__setattr__(self, "constants", MappingProxyType(clean))
        object.__setattr__(
            self,
            "_pairs",
            MappingProxyType({pair: tuple(terms) for pair, terms in pairs.items()}),
        )

    @classmethod
    def zero(cls, field: FieldDescriptor, dim: int) -> Self:
        return cls(field, dim, {})

    @classmethod
    def from_entries(
        cls,
        field: FieldDescriptor,
        dim: int,
        entries: Iterable[tuple[int, int, int, Any]],
    ) -> Self:
        """Build from ``(i, j, k, value)`` entries; repeated triples are summed."""
        constants: dict[tuple[int, int, int], Any] = {}
        for i, j, k, value in entries:
            constants[i, j, k] = constants.get((i, j, k), field.zero) + field.element(
                value
            )
        return cls(field, dim, constants)

    @classmethod
    def from_products(
        cls,
        field: FieldDescriptor,
        dim: int,
        product: Callable[[int, int], Vector],
    ) -> Self:
        """Build from a function giving the product of two basis vectors."""
        constants: dict[tuple[int, int, int], Any] = {}
        for i in range(dim):
            for j in range(dim):
                for k, value in product(i, j).support():
                    constants[i, j, k] = value
        return cls(field, dim, constants)

    def entries(self) -> list[tuple[int, int, int, Any]]:
        """Non-zero constants in lexicographic order."""
        return [(i, j, k, value) for (i, j, k), value in self.constants.items()]

    @functools.cached_property
    def dense(self) -> list[list[list[Any]]]:
        """All constants as nested lists ``c[i][j][k]``, zeros included."""
        zero = self.field.zero
        table = [[[zero] * self.dim for _ in range(self.dim)] for _ in range(self.dim)]
        for (i, j, k), value in self.constants.items():
            table[i][j][k] = value
        return table

    def defined_pairs(self) -> Iterable[Pair]:
        return self._pairs.keys()

    def basis_product(self, i: int, j: int) -> Vector:
        coords = [self.field.zero] * self.dim
        for k, value in self._pairs.get((i, j), ()):
            coords[k] = value
        return Vector(self.field, coords)

    def product(
        self,
        x: Vector,
        y: Vector,
        *,
        mask: frozenset[Pair] = frozenset(),
        name: str = "product",
    ) -> Vector:
        """Bilinear extension of the structure constants to ``x`` and ``y``."""
        for vector in (x, y):
            if vector.field != self.field:
                raise errors.FieldMismatchError(vector.field, self.field)
            if len(vector) != self.dim:
                raise errors.DimensionMismatchError(
                    f"vector of length {len(vector)} used with a {self.dim}-dimensional {name}"
                )
        coords = [self.field.zero] * self.dim
        y_support = y.support()
        for i, xi in x.support():
            for j, yj in y_support:
                if (i, j) in mask:
                    raise errors.MaskedProductError(name, (i, j))
                terms = self._pairs.get((i, j))
                if not terms:
                    continue
                coefficient = xi * yj
                for k, value in terms:
                    coords[k] += coefficient * value
        return Vector(self.field, coords)

    def opposite(self) -> BilinearOp:
        """The operation ``x, y -> y * x``."""
        return BilinearOp(
            self.field, self.dim, {(j, i, k): v for (i, j, k), v in self.constants.items()}
        )

    def __bool__(self) -> bool:
        return bool(self.constants)


def product_eval(
    op: BilinearOp,
    x: Vector,
    y: Vector,
    mask: frozenset[Pair] = frozenset(),
) -> Vector:
    """Evaluate ``x * y`` for the operation ``op``."""
    return op.product(x, y, mask=mask)


@dataclasses.dataclass(frozen=True)
class Algebra:
    """A vector space with up to two bilinear operations, "dot" and "circ".

    ``masks`` mark index pairs whose product is undefined; only windowed models
    (finite degree windows of Laurent-type algebras) carry masks.
    """

    field: FieldDescriptor
    dim: int
    ops: Mapping[str, BilinearOp]
    name: str = ""
    labels: tuple[str, ...] = ()
    masks: Mapping[str, frozenset[Pair]] = dataclasses.field(default_factory=dict)
    meta: Mapping[str, Any] = dataclasses.field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise errors.DimensionMismatchError("an algebra needs dimension at least 1")
        for opname, op in self.ops.items():
            if opname not in OPERATION_NAMES:
                raise errors.InputError(
                    f"unknown operation name {opname!r}",
                    resolution="Operations are named 'dot' or 'circ'.",
                )
            if op.field != self.field:
                raise errors.FieldMismatchError(op.field, self.field)
            if op.dim != self.dim:
                raise errors.DimensionMismatchError(
                    f"operation {opname!r} has dimension {op.dim}, algebra has {self.dim}"
                )
        if not self.labels:
            object.__setattr__(
                self, "labels", tuple(f"e{i + 1}" for i in range(self.dim))
            )
        elif len(self.labels) != self.dim:
            raise errors.DimensionMismatchError(
                f"{len(self.labels)} labels given for dimension {self.dim}"
            )
        object.__setattr__(
            self, "masks", {k: frozenset(v) for k, v in self.masks.items() if v}
        )

    @property
    def is_windowed(self) -> bool:
        return bool(self.masks)

    def has(self, opname: str) -> bool:
        return opname in self.ops

    def op(self, opname: str, purpose: str = "this computation") -> BilinearOp:
        """Return the named operation or raise MissingOperationError."""
        try:
            return self.ops[opname]
        except KeyError:
            raise errors.MissingOperationError(opname, purpose) from None

    def require(self, opnames: Iterable[str], purpose: str) -> None:
        for opname in opnames:
            self.op(opname, purpose)

    def product(self, opname: str, x: Vector, y: Vector) -> Vector:
        return self.op(opname).product(
            x, y, mask=self.masks.get(opname, frozenset()), name=opname
        )

    def basis(self, index: int) -> Vector:
        return Vector.basis(self.field, self.dim, index)

    def basis_vectors(self) -> list[Vector]:
        return [self.basis(i) for i in range(self.dim)]

    def zero(self) -> Vector:
        return Vector.zero(self.field, self.dim)

    def vector(self, values: Iterable[Any]) -> Vector:
        vector = Vector.from_values(self.field, values)
        if len(vector) != self.dim:
            raise errors.DimensionMismatchError(
                f"expected {self.dim} coordinates, got {len(vector)}"
            )
        return vector

    def label_index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise errors.ArgumentValueError(
                f"unknown basis label {label!r}",
                details=f"Labels: {', '.join(self.labels)}",
            ) from None

    def with_ops(self, name: str | None = None, **ops: BilinearOp | None) -> Algebra:
        """Return a copy with operations replaced; ``None`` drops an operation."""
        merged = dict(self.ops)
        for opname, op in ops.items():
            if op is None:
                merged.pop(opname, None)
            else:
                merged[opname] = op
        return dataclasses.replace(
            self,
            ops=merged,
            name=self.name if name is None else name,
            masks={k: v for k, v in self.masks.items() if k in merged},
        )

    def with_meta(self, **meta: Any) -> Algebra:
        return dataclasses.replace(self, meta={**self.meta, **meta})
