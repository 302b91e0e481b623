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
"""The built-in algebra families.

Tables are written with 1-based indices: ``(2, 2, 1, n)`` reads
``e2 * e2 = n e1``.
"""
from __future__ import annotations

from collections.abc import Mapping
from typing import Any

from tnpbench import errors
from tnpbench.algcore import Algebra, AxiomId, BilinearOp, Vector
from tnpbench.catalog._entries import ParamSlot, entry, table
from tnpbench.exactfield import FieldDescriptor

_MN = (ParamSlot("m"), ParamSlot("n"))
_NM = (ParamSlot("n"), ParamSlot("m"))
_CLASSIFICATION = "two-dimensional complex Novikov classification"
_MAX_LAURENT_WINDOW = 64

# Novikov products of the two-dimensional classification rows.
_ROWS: dict[str, tuple[tuple[int, int, int, Any], ...]] = {
    "T2": ((2, 2, 1, 1),),
    "T3": ((2, 1, 1, -1),),
    "N1": ((1, 1, 1, 1), (2, 2, 2, 1)),
    "N2": ((2, 2, 2, 1),),
    "N3": ((1, 2, 1, 1), (2, 1, 1, 1), (2, 2, 2, 1)),
    "N4": ((1, 2, 1, 1), (2, 2, 2, 1)),
    "N5": ((1, 2, 1, 1), (2, 2, 1, 1), (2, 2, 2, 1)),
}


def _l_allowed(field: FieldDescriptor, values: Mapping[str, Any]) -> None:
    if values["l"] in (field.zero, field.one):
        raise errors.CatalogParameterError(
            f"N6 needs l different from 0 and 1, got {field.format(values['l'])}"
        )


def _n6_circ(field: FieldDescriptor, values: Mapping[str, Any]) -> BilinearOp:
    return table(field, 2, (1, 2, 1, 1), (2, 1, 1, values["l"]), (2, 2, 2, 1))


def _row_algebra(field: FieldDescriptor, row: str) -> Algebra:
    return Algebra(field, 2, {"circ": table(field, 2, *_ROWS[row])})


def _register_rows() -> None:
    for row in _ROWS:

        def build(field: FieldDescriptor, _values: Mapping[str, Any], row: str = row) -> Algebra:
            return _row_algebra(field, row)

        entry(
            row,
            asserted=AxiomId.NOVIKOV_LEFT,
            provenance=f"{_CLASSIFICATION}, row {row}",
        )(build)


_register_rows()


@entry(
    "N6",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance=f"{_CLASSIFICATION}, row N6 (l != 0, 1)",
    params=(ParamSlot("l", default="2"),),
    constraint=_l_allowed,
)
def _n6(field: FieldDescriptor, values: Mapping[str, Any]) -> Algebra:
    return Algebra(field, 2, {"circ": _n6_circ(field, values)})


def _with_dot(algebra: Algebra, dot: BilinearOp) -> Algebra:
    return algebra.with_ops(dot=dot)


@entry(
    "T2-tnp",
    asserted=AxiomId.TNP,
    provenance=f"{_CLASSIFICATION}, row T2 with its compatible dot family",
    params=_MN,
)
def _t2_tnp(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    dot = table(field, 2, (1, 2, 1, v["m"]), (2, 1, 1, v["m"]), (2, 2, 1, v["n"]), (2, 2, 2, v["m"]))
    return _with_dot(_row_algebra(field, "T2"), dot)


@entry(
    "T3-tnp",
    asserted=AxiomId.TNP,
    provenance=f"{_CLASSIFICATION}, row T3; only the zero dot is compatible",
)
def _t3_tnp(field: FieldDescriptor, _v: Mapping[str, Any]) -> Algebra:
    return _with_dot(_row_algebra(field, "T3"), BilinearOp.zero(field, 2))


def _diagonal_dot(field: FieldDescriptor, v: Mapping[str, Any]) -> BilinearOp:
    return table(field, 2, (1, 1, 1, v["n"]), (2, 2, 2, v["m"]))


@entry(
    "N1-tnp",
    asserted=AxiomId.TNP,
    provenance=f"{_CLASSIFICATION}, row N1 with its compatible dot family",
    params=_NM,
)
def _n1_tnp(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    return _with_dot(_row_algebra(field, "N1"), _diagonal_dot(field, v))


@entry(
    "N2-tnp",
    asserted=AxiomId.TNP,
    provenance=f"{_CLASSIFICATION}, row N2 with its compatible dot family",
    params=_NM,
)
def _n2_tnp(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    return _with_dot(_row_algebra(field, "N2"), _diagonal_dot(field, v))


@entry(
    "N3-tnp",
    asserted=AxiomId.TNP,
    provenance=f"{_CLASSIFICATION}, row N3 with its compatible dot family",
    params=_NM,
)
def _n3_tnp(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    dot = table(field, 2, (1, 2, 1, v["n"]), (2, 1, 1, v["n"]), (2, 2, 1, v["m"]), (2, 2, 2, v["n"]))
    return _with_dot(_row_algebra(field, "N3"), dot)


def _register_zero_dot_rows() -> None:
    for row in ("N4", "N5"):

        def build(field: FieldDescriptor, _values: Mapping[str, Any], row: str = row) -> Algebra:
            return _with_dot(_row_algebra(field, row), BilinearOp.zero(field, 2))

        entry(
            f"{row}-tnp",
            asserted=AxiomId.TNP,
            provenance=f"{_CLASSIFICATION}, row {row}; only the zero dot is compatible",
        )(build)


_register_zero_dot_rows()


@entry(
    "N6-tnp",
    asserted=AxiomId.TNP,
    provenance=f"{_CLASSIFICATION}, row N6; only the zero dot is compatible",
    params=(ParamSlot("l", default="2"),),
    constraint=_l_allowed,
)
def _n6_tnp(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    return Algebra(field, 2, {"dot": BilinearOp.zero(field, 2), "circ": _n6_circ(field, v)})


@entry(
    "Ex2.5",
    asserted=AxiomId.TNP,
    provenance="one-dimensional TNP algebra e.e = alpha e, e o e = e",
    params=(ParamSlot("alpha"),),
)
def _ex2_5(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    return Algebra(
        field,
        1,
        {"dot": table(field, 1, (1, 1, 1, v["alpha"])), "circ": table(field, 1, (1, 1, 1, 1))},
        labels=("e",),
    )


@entry(
    "Ex2.11",
    asserted=AxiomId.TNP,
    provenance="unital three-dimensional dot with unit e3; circ induced by a centroid element",
    params=(ParamSlot("a11"), ParamSlot("a13"), ParamSlot("a23")),
)
def _ex2_11(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    dot = table(
        field, 3, (1, 3, 1, 1), (3, 1, 1, 1), (2, 3, 2, 1), (3, 2, 2, 1), (3, 3, 3, 1)
    )
    a11 = v["a11"]
    circ = table(
        field,
        3,
        (1, 3, 1, a11),
        (3, 1, 1, a11),
        (2, 3, 2, a11),
        (3, 2, 2, a11),
        (3, 3, 1, v["a13"]),
        (3, 3, 2, v["a23"]),
        (3, 3, 3, a11),
    )
    return Algebra(field, 3, {"dot": dot, "circ": circ})


@entry(
    "Ex2.15",
    asserted=AxiomId.TNP,
    provenance="three-dimensional algebra that is both TNP and Novikov-Poisson",
    params=(ParamSlot("n"), ParamSlot("l"), ParamSlot("k")),
)
def _ex2_15(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    circ = table(field, 3, (2, 3, 1, 1), (3, 2, 1, -1))
    dot = table(
        field, 3, (2, 2, 1, v["n"]), (2, 3, 1, v["l"]), (3, 2, 1, v["l"]), (3, 3, 1, v["k"])
    )
    return Algebra(field, 3, {"dot": dot, "circ": circ})


@entry(
    "Ex3.17",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance="solvable Novikov algebra whose square meets the annihilator trivially",
)
def _ex3_17(field: FieldDescriptor, _v: Mapping[str, Any]) -> Algebra:
    return Algebra(field, 3, {"circ": table(field, 3, (3, 2, 2, 1))})


@entry(
    "Ex3.19",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance="non-solvable Novikov algebra with a nonzero annihilator inside its square",
)
def _ex3_19(field: FieldDescriptor, _v: Mapping[str, Any]) -> Algebra:
    return Algebra(field, 3, {"circ": table(field, 3, (1, 1, 2, 1), (3, 3, 3, 1))})


@entry(
    "Ex3.21",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance="solvable Novikov algebra with zero annihilator",
)
def _ex3_21(field: FieldDescriptor, _v: Mapping[str, Any]) -> Algebra:
    half = field.one / field.element(2)
    circ = table(field, 3, (2, 2, 1, 1), (3, 1, 1, 1), (3, 2, 2, half))
    return Algebra(field, 3, {"circ": circ})


def _cyclic_constraint(_field: FieldDescriptor, values: Mapping[str, Any]) -> None:
    size = values["N"]
    if size < 1:
        raise errors.CatalogParameterError(f"CyclicConv needs N >= 1, got {size}")
    too_big = sorted(key for key in values if key != "N" and int(key[1:]) >= size)
    if too_big:
        raise errors.CatalogParameterError(
            f"CyclicConv({size}) has no coefficient {', '.join(too_big)}",
            resolution=f"Coefficients are a0 to a{size - 1}.",
        )


@entry(
    "CyclicConv",
    asserted=AxiomId.TNP,
    provenance=(
        "Z_N quotient of the Z-graded group-algebra convolution model; "
        "e_i o e_j = e_(i+j), e_i . e_j = sum_k a_k e_(k+i+j), indices mod N"
    ),
    params=(ParamSlot("N", integer=True), ParamSlot("a0")),
    constraint=_cyclic_constraint,
    extra_params=r"a\d+",
)
def _cyclic_conv(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    size = v["N"]
    coeffs = {int(key[1:]): value for key, value in v.items() if key != "N"}

    def circ(i: int, j: int) -> Vector:
        return Vector.basis(field, size, (i + j) % size)

    def dot(i: int, j: int) -> Vector:
        coords = [field.zero] * size
        for k, value in coeffs.items():
            coords[(k + i + j) % size] += value
        return Vector(field, coords)

    return Algebra(
        field,
        size,
        {
            "dot": BilinearOp.from_products(field, size, dot),
            "circ": BilinearOp.from_products(field, size, circ),
        },
        labels=tuple(f"e{i}" for i in range(size)),
    )


def _laurent_constraint(_field: FieldDescriptor, values: Mapping[str, Any]) -> None:
    if not 1 <= values["M"] <= _MAX_LAURENT_WINDOW:
        raise errors.CatalogParameterError(
            f"Laurent needs 1 <= M <= {_MAX_LAURENT_WINDOW}, got {values['M']}"
        )


@entry(
    "Laurent",
    asserted=AxiomId.RDNP,
    provenance=(
        "degree window [-M, M] of the Laurent polynomials with t^m . t^n = t^(m+n) "
        "and the d/dt diamond t^m <> t^n = m t^(m+n-1); products leaving the window "
        "are undefined"
    ),
    params=(ParamSlot("M", integer=True),),
    constraint=_laurent_constraint,
)
def _laurent(field: FieldDescriptor, v: Mapping[str, Any]) -> Algebra:
    window = v["M"]
    dim = 2 * window + 1
    degrees = range(-window, window + 1)
    dot_entries = []
    circ_entries = []
    dot_mask = set()
    circ_mask = set()
    for m in degrees:
        for n in degrees:
            pair = (m + window, n + window)
            if abs(m + n) <= window:
                dot_entries.append((*pair, m + n + window, 1))
            else:
                dot_mask.add(pair)
            if m == 0:
                continue
            if abs(m + n - 1) <= window:
                circ_entries.append((*pair, m + n - 1 + window, m))
            else:
                circ_mask.add(pair)
    return Algebra(
        field,
        dim,
        {
            "dot": BilinearOp.from_entries(field, dim, dot_entries),
            "circ": BilinearOp.from_entries(field, dim, circ_entries),
        },
        labels=tuple(f"t^{m}" for m in degrees),
        masks={"dot": frozenset(dot_mask), "circ": frozenset(circ_mask)},
    )


@entry(
    "Idempotent2",
    asserted=AxiomId.NOVIKOV_LEFT,
    provenance="direct sum of two copies of the one-dimensional Novikov algebra e o e = e",
)
def _idempotent2(field: FieldDescriptor, _v: Mapping[str, Any]) -> Algebra:
    return Algebra(field, 2, {"circ": table(field, 2, (1, 1, 1, 1), (2, 2, 2, 1))})
