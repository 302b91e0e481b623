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
"""Exact scalars over the rationals and prime fields.

Raw values are sympy domain elements (``QQ`` or ``GF(p)``). Algebra code keeps
raw elements in its tensors and vectors; :class:`Scalar` is the checked,
field-tagged wrapper used at API boundaries.
"""
from __future__ import annotations

import dataclasses
import enum
import functools
import re
from collections.abc import Iterator
from typing import Any, Literal

import pydantic
from sympy import isprime
from sympy.ntheory.residue_ntheory import binomial_mod
from sympy.polys.domains import GF, QQ
from typing_extensions import Self

from tnpbench import errors

_SCALAR_RE = re.compile(r"^\s*(?P<sign>-?)(?P<num>\d+)(?:/(?P<den>\d+))?\s*$")

ArithOp = Literal["add", "sub", "mul", "div"]


class FieldKind(str, enum.Enum):
    """The kind of ground field."""

    RATIONAL = "rational"
    PRIME = "prime"


@functools.cache
def _domain_for(kind: FieldKind, p: int | None) -> Any:  # noqa: ANN401
    if kind is FieldKind.RATIONAL:
        return QQ
    return GF(p, symmetric=False)


class FieldDescriptor(pydantic.BaseModel):
    """A ground field: the rationals, or GF(p) for an odd prime p."""

    model_config = pydantic.ConfigDict(frozen=True, extra="forbid")

    kind: FieldKind = FieldKind.RATIONAL
    p: int | None = None

    @pydantic.model_validator(mode="after")
    def _check_modulus(self) -> Self:
        if self.kind is FieldKind.RATIONAL:
            if self.p is not None:
                raise ValueError("a rational field takes no modulus 'p'")
        elif self.p is None or self.p == 2 or not isprime(self.p):  # noqa: PLR2004
            raise ValueError(f"prime field modulus must be an odd prime, got {self.p}")
        return self

    @classmethod
    def rational(cls) -> FieldDescriptor:
        """Return the descriptor for the rationals."""
        return cls(kind=FieldKind.RATIONAL)

    @classmethod
    def prime(cls, p: int) -> FieldDescriptor:
        """Return the descriptor for GF(p)."""
        return cls(kind=FieldKind.PRIME, p=p)

    @property
    def domain(self) -> Any:  # noqa: ANN401
        """The sympy domain backing this field."""
        return _domain_for(self.kind, self.p)

    @property
    def characteristic(self) -> int:
        """Return 0 for the rationals and p for GF(p)."""
        return self.p if self.p is not None else 0

    @property
    def is_prime(self) -> bool:
        return self.kind is FieldKind.PRIME

    @property
    def zero(self) -> Any:  # noqa: ANN401
        return self.domain.zero

    @property
    def one(self) -> Any:  # noqa: ANN401
        return self.domain.one

    def __str__(self) -> str:
        if self.kind is FieldKind.RATIONAL:
            return "QQ"
        return f"GF({self.p})"

    def parse(self, text: str) -> Any:  # noqa: ANN401
        """Parse a scalar string into a raw domain element.

        Prime fields accept the rational grammar too, reducing it mod p.
        """
        match = _SCALAR_RE.match(text)
        if match is None:
            raise errors.ScalarParseError(text, self)
        num = int(match["num"])
        den = int(match["den"]) if match["den"] is not None else 1
        if match["sign"]:
            num = -num
        if den == 0:
            raise errors.ScalarDivisionError
        K = self.domain  # noqa: N806
        if self.kind is FieldKind.RATIONAL:
            return K(num, den)
        if den % self.characteristic == 0:
            raise errors.ScalarDivisionError
        return K(num) / K(den)

    def format(self, raw: Any) -> str:  # noqa: ANN401
        """Canonical string of a raw element: 'a', 'a/b', or a residue."""
        K = self.domain  # noqa: N806
        if self.kind is FieldKind.RATIONAL:
            num, den = int(K.numer(raw)), int(K.denom(raw))
            return str(num) if den == 1 else f"{num}/{den}"
        return str(self.residue(raw))

    def residue(self, raw: Any) -> int:  # noqa: ANN401
        """The residue in [0, p) of a prime-field element."""
        return int(self.domain.to_int(raw)) % self.characteristic

    def element(self, value: Any) -> Any:  # noqa: ANN401
        """Convert an int, string, Scalar or raw element to a raw element."""
        if isinstance(value, Scalar):
            value.require_field(self)
            return value.raw
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        return self.domain.convert(value)

    def scalar(self, value: Any) -> Scalar:  # noqa: ANN401
        """Wrap ``value`` as a Scalar of this field."""
        return Scalar(self, self.element(value))

    def elements(self) -> Iterator[Any]:
        """Yield every element of a prime field in residue order."""
        if not self.is_prime:
            raise ValueError("only prime fields can be enumerated")
        K = self.domain  # noqa: N806
        for value in range(self.characteristic):
            yield K(value)

    def sort_key(self, raw: Any) -> tuple[int, int]:  # noqa: ANN401
        """Deterministic ordering key for raw elements."""
        if self.is_prime:
            return (self.residue(raw), 0)
        K = self.domain  # noqa: N806
        return (int(K.numer(raw)), int(K.denom(raw)))


@dataclasses.dataclass(frozen=True)
class Scalar:
    """An exact field element tagged with its field."""

    field: FieldDescriptor
    raw: Any

    @classmethod
    def parse(cls, field: FieldDescriptor, text: str) -> Self:
        return cls(field, field.parse(text))

    def require_field(self, field: FieldDescriptor) -> None:
        """Raise if this scalar does not belong to ``field``."""
        if self.field != field:
            raise errors.FieldMismatchError(self.field, field)

    def _other(self, other: object) -> Any:  # noqa: ANN401
        if isinstance(other, Scalar):
            other.require_field(self.field)
            return other.raw
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other: object) -> Scalar:
        raw = self._other(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.raw + raw)

    __radd__ = __add__

    def __sub__(self, other: object) -> Scalar:
        raw = self._other(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.raw - raw)

    def __mul__(self, other: object) -> Scalar:
        raw = self._other(other)
        if raw is NotImplemented:
            return NotImplemented
        return Scalar(self.field, self.raw * raw)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> Scalar:
        raw = self._other(other)
        if raw is NotImplemented:
            return NotImplemented
        if not raw:
            raise errors.ScalarDivisionError
        return Scalar(self.field, self.raw / raw)

    def __neg__(self) -> Scalar:
        return Scalar(self.field, -self.raw)

    def __bool__(self) -> bool:
        return bool(self.raw)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.raw == other.raw
        if isinstance(other, int):
            return self.raw == self.field.element(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, str(self)))

    def __str__(self) -> str:
        return self.field.format(self.raw)

    def __repr__(self) -> str:
        return f"Scalar({self}, {self.field})"


def scalar_arith(a: Scalar, b: Scalar, op: ArithOp) -> Scalar:
    """Exact field arithmetic on two scalars of the same field."""
    if a.field != b.field:
        raise errors.FieldMismatchError(a.field, b.field)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown arithmetic operation {op!r}")


def binomial_mod_p(n: int, k: int, p: int) -> Scalar:
    """Return C(n, k) mod p as an element of GF(p).

    C(n, k) is zero for k < 0 or k > n. Large n are handled through the
    digit-wise (Lucas) decomposition, so this stays cheap.
    """
    if n < 0:
        raise ValueError(f"binomial upper index must be non-negative, got {n}")
    field = FieldDescriptor.prime(p)
    if k < 0 or k > n:
        return Scalar(field, field.zero)
    return field.scalar(int(binomial_mod(n, k, p)))
