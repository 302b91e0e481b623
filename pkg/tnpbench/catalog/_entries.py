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
"""Registry of named algebra families.

Entries are registered in order by decorating their builder with
:func:`entry`; :func:`catalog_get` resolves parameters, builds the algebra
and re-checks the axiom the entry asserts.
"""
from __future__ import annotations

import dataclasses
import re
from collections.abc import Callable, Mapping
from typing import Any

from craft_cli import emit

from tnpbench import errors, util
from tnpbench.algcore import Algebra, AxiomId, BilinearOp, check_axiom, check_axiom_windowed
from tnpbench.exactfield import FieldDescriptor, Scalar

ParamValue = str | int | Scalar
Builder = Callable[[FieldDescriptor, Mapping[str, Any]], Algebra]
Constraint = Callable[[FieldDescriptor, Mapping[str, Any]], None]


@dataclasses.dataclass(frozen=True)
class ParamSlot:
    """A named parameter; integer slots size the algebra, the rest are scalars."""

    name: str
    default: str = "1"
    integer: bool = False


@dataclasses.dataclass(frozen=True)
class CatalogEntry:
    """A named, parameterized algebra family."""

    name: str
    params: tuple[ParamSlot, ...]
    builder: Builder
    provenance: str
    asserted: AxiomId
    constraint: Constraint | None = None
    extra_params: re.Pattern[str] | None = None

    @property
    def slot_names(self) -> list[str]:
        return [slot.name for slot in self.params]

    def _convert(
        self, field: FieldDescriptor, key: str, value: ParamValue, *, integer: bool
    ) -> Any:  # noqa: ANN401
        if not integer:
            return field.element(value)
        if isinstance(value, Scalar) or isinstance(value, bool):
            raise errors.CatalogParameterError(f"{self.name}: {key} must be an integer")
        try:
            return int(value)
        except ValueError:
            raise errors.CatalogParameterError(
                f"{self.name}: {key} must be an integer, got {value!r}"
            ) from None

    def resolve(
        self, field: FieldDescriptor, params: Mapping[str, ParamValue]
    ) -> dict[str, Any]:
        """Fill defaults, convert values, and run the entry's constraint."""
        slots = {slot.name: slot for slot in self.params}
        unknown = [
            key
            for key in params
            if key not in slots
            and not (self.extra_params and self.extra_params.fullmatch(key))
        ]
        if unknown:
            raise errors.CatalogParameterError(
                f"{self.name} has no parameter {util.humanize_list(unknown, 'or')}",
                details=f"Parameters: {', '.join(self.slot_names) or 'none'}",
            )
        values: dict[str, Any] = {}
        for slot in self.params:
            raw = params.get(slot.name, slot.default)
            values[slot.name] = self._convert(field, slot.name, raw, integer=slot.integer)
        for key, raw in params.items():
            if key not in slots:
                values[key] = self._convert(field, key, raw, integer=False)
        if self.constraint is not None:
            self.constraint(field, values)
        return values

    def title(self, field: FieldDescriptor, values: Mapping[str, Any]) -> str:
        if not values:
            return self.name
        shown = ",".join(
            f"{key}={value if isinstance(value, int) else field.format(value)}"
            for key, value in values.items()
        )
        return f"{self.name}({shown})"

    def build(
        self,
        field: FieldDescriptor,
        params: Mapping[str, ParamValue] | None = None,
    ) -> Algebra:
        values = self.resolve(field, params or {})
        algebra = self.builder(field, values)
        return dataclasses.replace(
            algebra, name=self.title(field, values)
        ).with_meta(provenance=self.provenance, asserted=self.asserted.value)


_REGISTRY: dict[str, CatalogEntry] = {}


def entry(
    name: str,
    *,
    asserted: AxiomId,
    provenance: str,
    params: tuple[ParamSlot, ...] = (),
    constraint: Constraint | None = None,
    extra_params: str | None = None,
) -> Callable[[Builder], Builder]:
    """Register the decorated builder as a catalog entry."""

    def register(builder: Builder) -> Builder:
        if name in _REGISTRY:
            raise ValueError(f"catalog entry {name!r} registered twice")
        _REGISTRY[name] = CatalogEntry(
            name=name,
            params=params,
            builder=builder,
            provenance=provenance,
            asserted=asserted,
            constraint=constraint,
            extra_params=re.compile(extra_params) if extra_params else None,
        )
        return builder

    return register


def catalog_list() -> list[CatalogEntry]:
    """All entries, in registration order."""
    return list(_REGISTRY.values())


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise errors.UnknownCatalogEntryError(name, list(_REGISTRY)) from None


def self_check(algebra: Algebra, axiom: AxiomId) -> None:
    """Raise CatalogSelfCheckError unless ``algebra`` passes ``axiom``."""
    check = check_axiom_windowed if algebra.is_windowed else check_axiom
    report = check(algebra, axiom)
    if not report.passed:
        raise errors.CatalogSelfCheckError(
            f"{algebra.name} fails {report.identifier}",
            details=report.witness.model_dump_json() if report.witness else None,
        )


def catalog_get(
    name: str,
    params: Mapping[str, ParamValue] | None = None,
    field: FieldDescriptor | None = None,
) -> Algebra:
    """Build a catalog algebra.

    :raises UnknownCatalogEntryError: if ``name`` is not registered.
    :raises CatalogParameterError: if the parameters do not fit the entry.
    :raises CatalogSelfCheckError: if the built algebra fails its asserted axiom.
    """
    field = field or FieldDescriptor.rational()
    algebra = catalog_entry(name).build(field, params)
    emit.debug(f"Built {algebra.name} over {field} (dim {algebra.dim})")
    self_check(algebra, catalog_entry(name).asserted)
    return algebra


def table(field: FieldDescriptor, dim: int, *products: tuple[int, int, int, Any]) -> BilinearOp:
    """An operation from ``(i, j, k, value)`` entries with 1-based indices."""
    return BilinearOp.from_entries(
        field, dim, ((i - 1, j - 1, k - 1, value) for i, j, k, value in products)
    )
