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
"""Simple Novikov algebras in characteristic p and graded Novikov windows."""
from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from craft_cli import emit
from sympy import isprime

from tnpbench import errors
from tnpbench.algcore import Algebra, AxiomId, BilinearOp
from tnpbench.catalog._entries import ParamSlot, entry, self_check
from tnpbench.exactfield import FieldDescriptor, binomial_mod_p
from tnpbench.linsolve import LinearMapSpace, Subspace, delta_derivation_equations

MAX_SIMPLE_ORDER = 3125
MAX_OSBORN_WINDOW = 64


def simple_novikov_char_p(p: int, n: int, a: Any = 0, b: Any = 0) -> Algebra:  # noqa: ANN401
    """The simple Novikov algebra on ``y_-1 .. y_(q-2)`` over GF(p), ``q = p**n``.

    ``y_i o y_j = C(i+j+1, j) y_(i+j)``, plus ``a y_(q-2)`` on ``(y_-1, y_-1)``
    and ``b y_(q-2)`` on ``(y_-1, y_0)``. Terms whose index leaves the basis are
    dropped. The result is checked against the left Novikov axioms.

    :raises CatalogParameterError: if p is not an odd prime, n < 1, or q is too large.
    :raises CatalogSelfCheckError: if the built product is not Novikov.
    """
    if p == 2 or not isprime(p):  # noqa: PLR2004
        raise errors.CatalogParameterError(f"p must be an odd prime, got {p}")
    if n < 1:
        raise errors.CatalogParameterError(f"n must be positive, got {n}")
    order = p**n
    if order > MAX_SIMPLE_ORDER:
        raise errors.CatalogParameterError(
            f"p**n = {order} is above the bound of {MAX_SIMPLE_ORDER}"
        )
    field = FieldDescriptor.prime(p)
    a_raw, b_raw = field.element(a), field.element(b)
    top = order - 1  # index of y_(q-2)
    entries: list[tuple[int, int, int, Any]] = []
    for i in range(-1, order - 1):
        for j in range(-1, order - 1):
            target = i + j
            if -1 <= target <= order - 2 and j >= 0:
                coefficient = binomial_mod_p(target + 1, j, p)
                if coefficient:
                    entries.append((i + 1, j + 1, target + 1, coefficient.raw))
    entries.extend([(0, 0, top, a_raw), (0, 1, top, b_raw)])
    algebra = Algebra(
        field,
        order,
        {"circ": BilinearOp.from_entries(field, order, entries)},
        name=f"SimpleNovikov(p={p},n={n},a={field.format(a_raw)},b={field.format(b_raw)})",
        labels=tuple(f"y{i}" for i in range(-1, order - 1)),
    )
    emit.debug(f"Self-checking {algebra.name}")
    self_check(algebra, AxiomId.NOVIKOV_LEFT)
    return algebra


def osborn_case1_window(b: Any, size: int) -> Algebra:  # noqa: ANN401
    """Degrees ``0..size`` of ``x_i o x_j = b x_(i+j) + j x_(i+j-1)`` over QQ.

    Pairs with ``i + j > size`` are undefined.
    """
    if not 1 <= size <= MAX_OSBORN_WINDOW:
        raise errors.CatalogParameterError(
            f"the window needs 1 <= N <= {MAX_OSBORN_WINDOW}, got {size}"
        )
    field = FieldDescriptor.rational()
    b_raw = field.element(b)
    dim = size + 1
    entries: list[tuple[int, int, int, Any]] = []
    mask: set[tuple[int, int]] = set()
    for i in range(dim):
        for j in range(dim):
            if i + j > size:
                mask.add((i, j))
                continue
            entries.append((i, j, i + j, b_raw))
            if j:
                entries.append((i, j, i + j - 1, field.element(j)))
    return Algebra(
        field,
        dim,
        {"circ": BilinearOp.from_entries(field, dim, entries)},
        name=f"OsbornWindow(b={field.format(b_raw)},N={size})",
        labels=tuple(f"x{i}" for i in range(dim)),
        masks={"circ": frozenset(mask)},
    )


def window_half_derivations(algebra: Algebra, support: int) -> LinearMapSpace:
    """1/2-derivations of circ on the span of the first ``support`` basis vectors.

    Maps vanish outside the span and take values in it; only equations built
    from defined products are used. The result holds ``support``-square maps.
    """
    if not 1 <= support <= algebra.dim:
        raise errors.ArgumentValueError(
            f"support must lie in [1, {algebra.dim}], got {support}"
        )
    field, n = algebra.field, algebra.dim
    half = field.one / field.element(2)
    rows = delta_derivation_equations(algebra, "circ", half, sources=range(support))
    emit.debug(f"Solving {len(rows)} windowed 1/2-derivation equations")
    full = LinearMapSpace.solutions(field, n, rows)
    blocks = (
        [row[k * n + l] for k in range(support) for l in range(support)]
        for row in full.space.basis
    )
    return LinearMapSpace(support, Subspace.span(field, support * support, blocks))


def _prime_field_only(field: FieldDescriptor, _values: Mapping[str, Any]) -> None:
    if not field.is_prime:
        raise errors.CatalogParameterError("SimpleNovikov is defined over GF(p) only")


def _rational_field_only(field: FieldDescriptor, _values: Mapping[str, Any]) -> None:
    if field.is_prime:
        raise errors.CatalogParameterError("OsbornWindow is defined over QQ only")


@entry(
    "SimpleNovikov",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance="simple Novikov algebra of dimension p^n in characteristic p",
    params=(ParamSlot("n", integer=True), ParamSlot("a", "0"), ParamSlot("b", "0")),
    constraint=_prime_field_only,
)
def _simple_novikov(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    return simple_novikov_char_p(field.characteristic, v["n"], v["a"], v["b"])


@entry(
    "OsbornWindow",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance=(
        "degrees 0..N of the graded Novikov algebra x_i o x_j = b x_(i+j) + j x_(i+j-1); "
        "pairs with i + j > N are undefined"
    ),
    params=(ParamSlot("b"), ParamSlot("N", "4", integer=True)),
    constraint=_rational_field_only,
)
def _osborn_window(_field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    return osborn_case1_window(v["b"], v["N"])
