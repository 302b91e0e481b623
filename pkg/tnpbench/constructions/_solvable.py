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
"""TNP structures and 1/2-derivations built from the ideal structure of circ."""
from __future__ import annotations

from collections.abc import Callable, Sequence
from typing import Any

from craft_cli import emit

from tnpbench.algcore import (
    Algebra,
    AxiomId,
    BilinearOp,
    CheckReport,
    IdentityId,
    LinearMap,
    Vector,
    check_identity,
    delta_derivation_membership,
    is_homomorphism,
    left_multiplication,
)
from tnpbench.constructions._base import (
    ConstructionResult,
    HalfDerivationResult,
    describe,
    finish,
    nonzero_report,
    require,
    require_axiom,
)
from tnpbench.linsolve import (
    AnnihilatorKind,
    Subspace,
    annihilator,
    inverse,
    is_ideal,
    product_space,
    solvability_report,
)


def _dual_coordinates(algebra: Algebra, basis: Sequence[Vector]) -> list[list[Any]]:
    """Row ``a`` holds the coordinates of ``e_a`` in ``basis``."""
    return inverse(algebra.field, [list(b) for b in basis])


def _combine(algebra: Algebra, coefficients: Sequence[Any], vectors: Sequence[Vector]) -> Vector:
    result = algebra.zero()
    for coefficient, vector in zip(coefficients, vectors):
        if coefficient:
            result = result + vector.scale(coefficient)
    return result


def _map_on_basis(
    algebra: Algebra, basis: Sequence[Vector], images: Sequence[Vector]
) -> LinearMap:
    """The linear map sending ``basis[i]`` to ``images[i]``."""
    coords = _dual_coordinates(algebra, basis)
    return LinearMap.from_columns(
        algebra.field, [_combine(algebra, row, images) for row in coords]
    )


def _op_on_basis(
    algebra: Algebra,
    basis: Sequence[Vector],
    table: Callable[[int, int], Vector | None],
) -> BilinearOp:
    """The bilinear operation with ``basis[i] * basis[j] = table(i, j)``."""
    coords = _dual_coordinates(algebra, basis)
    n = algebra.dim

    def product(a: int, b: int) -> Vector:
        result = algebra.zero()
        for i, ci in enumerate(coords[a]):
            if not ci:
                continue
            for j, cj in enumerate(coords[b]):
                value = table(i, j) if cj else None
                if value:
                    result = result + value.scale(ci * cj)
        return result

    return BilinearOp.from_products(algebra.field, n, product)


def _extend(algebra: Algebra, start: Sequence[Vector], candidates: Sequence[Vector]) -> list[Vector]:
    """Greedily add ``candidates`` not yet in the span of ``start``."""
    chosen = list(start)
    for vector in candidates:
        if not Subspace.span(algebra.field, algebra.dim, chosen).contains(vector):
            chosen.append(vector)
    return chosen


def _novikov_part(a: Algebra) -> Algebra:
    return a.with_ops(dot=None)


def tnp_on_solvable(a: Algebra) -> ConstructionResult:
    """A non-zero TNP dot on a Novikov algebra with proper square and non-zero annihilator.

    When the square meets the annihilator trivially, the dot is
    ``x_i . x_i = 2 x_i`` on an annihilator basis, with a complement chosen to
    contain the square. Otherwise ``y_i . y_j = x_1`` on a complement of the
    square, where ``x_1`` lies in the square and the annihilator. All other
    products vanish.
    """
    name = "tnp_on_solvable"
    novikov = _novikov_part(a)
    require_axiom(name, novikov, AxiomId.NOVIKOV_LEFT)
    square = product_space(novikov, "circ")
    ann = annihilator(novikov, "circ", AnnihilatorKind.TWO_SIDED)
    require(name, "A o A != 0", not square.is_zero)
    require(name, "A o A != A", not square.is_full)
    require(name, "Ann(A) != 0", not ann.is_zero)
    common = square & ann
    if common.is_zero:
        xs = ann.vectors()
        basis = _extend(a, xs, [*square.vectors(), *(ann + square).complement_basis()])

        def table(i: int, j: int) -> Vector | None:
            if i == j < len(xs):
                return xs[i].scale(2)
            return None

        case = 1
    else:
        x1 = common.vectors()[0]
        xs = _extend(a, [x1], square.vectors())
        ys = square.complement_basis()
        basis = [*xs, *ys]

        def table(i: int, j: int) -> Vector | None:
            if i >= len(xs) and j >= len(xs):
                return x1
            return None

        case = 2
    emit.debug(f"{name}: case {case} on {describe(a)}")
    dot = _op_on_basis(a, basis, table)
    return finish(
        name,
        novikov.with_ops(dot=dot),
        AxiomId.TNP,
        f"{name}({describe(a)}, case={case})",
        extra={"nonzero-dot": nonzero_report("nonzero-dot", dot)},
    )


def find_square_annihilator_witness(a: Algebra) -> Vector | None:
    """The first basis vector of ``Ann(A o A)`` outside ``Ann_L(A)``, or None.

    Always None for a left-Novikov circ with ``Ann(A) = 0``: every ``w`` in
    ``Ann(A o A)`` satisfies ``((w o x) o x) o x = 0`` and
    ``x o (w o y) = -(w o x) o y``, which push ``w`` into ``Ann_L(A)``.
    """
    novikov = _novikov_part(a)
    square = product_space(novikov, "circ")
    left = annihilator(novikov, "circ", AnnihilatorKind.LEFT)
    candidates = annihilator(novikov, "circ", AnnihilatorKind.TWO_SIDED, of=square)
    return next((w for w in candidates.vectors() if not left.contains(w)), None)


def tnp_from_square_annihilator(a: Algebra, w: Vector) -> ConstructionResult:
    """The dot ``(w o x) o y`` on a solvable Novikov algebra with zero annihilator."""
    name = "tnp_from_square_annihilator"
    novikov = _novikov_part(a)
    require_axiom(name, novikov, AxiomId.NOVIKOV_LEFT)
    require(name, "circ is solvable", solvability_report(novikov, "circ").solvable)
    require(
        name,
        "Ann(A) = 0",
        annihilator(novikov, "circ", AnnihilatorKind.TWO_SIDED).is_zero,
    )
    square = product_space(novikov, "circ")
    require(
        name,
        "w in Ann(A o A)",
        annihilator(novikov, "circ", AnnihilatorKind.TWO_SIDED, of=square).contains(w),
    )
    require(
        name,
        "w not in Ann_L(A)",
        not annihilator(novikov, "circ", AnnihilatorKind.LEFT).contains(w),
    )
    basis = novikov.basis_vectors()
    dot = BilinearOp.from_products(
        a.field,
        a.dim,
        lambda i, j: novikov.product(
            "circ", novikov.product("circ", w, basis[i]), basis[j]
        ),
    )
    return finish(
        name,
        novikov.with_ops(dot=dot),
        AxiomId.TNP,
        f"{name}({describe(a)}, w={','.join(w.to_strings())})",
        extra={"nonzero-dot": nonzero_report("nonzero-dot", dot)},
    )


def _half_derivation(a: Algebra, phi: LinearMap, provenance: str) -> HalfDerivationResult:
    half = a.field.one / a.field.element(2)
    report = delta_derivation_membership(_novikov_part(a), "circ", phi, half)
    emit.debug(f"{provenance}: 1/2-derivation {report.status.value}")
    return HalfDerivationResult(phi=phi, report=report, provenance=provenance)


def projection_half_derivation(
    a: Algebra, ideal1: Subspace, ideal2: Subspace
) -> HalfDerivationResult:
    """The projection onto ``ideal2`` along ``ideal1`` for ``A = ideal1 + ideal2``."""
    name = "projection_half_derivation"
    novikov = _novikov_part(a)
    require(name, "ideal1 != 0", not ideal1.is_zero)
    require(name, "ideal2 != 0", not ideal2.is_zero)
    require(name, "ideal1 is a circ-ideal", is_ideal(novikov, ("circ",), ideal1))
    require(name, "ideal2 is a circ-ideal", is_ideal(novikov, ("circ",), ideal2))
    require(
        name,
        "A = ideal1 + ideal2 is direct",
        ideal1.dim + ideal2.dim == a.dim and (ideal1 + ideal2).is_full,
    )
    first, second = ideal1.vectors(), ideal2.vectors()
    phi = _map_on_basis(
        a, [*first, *second], [*(a.zero() for _ in first), *second]
    )
    return _half_derivation(a, phi, f"{name}({describe(a)})")


def complement_half_derivation(a: Algebra) -> HalfDerivationResult:
    """A map killing ``A o A`` and sending a complement to ``x_1`` in ``(A o A) & Ann(A)``."""
    name = "complement_half_derivation"
    novikov = _novikov_part(a)
    square = product_space(novikov, "circ")
    ann = annihilator(novikov, "circ", AnnihilatorKind.TWO_SIDED)
    require(name, "Ann(A) != 0", not ann.is_zero)
    require(name, "A o A != 0", not square.is_zero)
    require(name, "A o A != A", not square.is_full)
    common = square & ann
    require(name, "(A o A) & Ann(A) != 0", not common.is_zero)
    x1 = common.vectors()[0]
    inside, outside = square.vectors(), square.complement_basis()
    phi = _map_on_basis(
        a, [*inside, *outside], [*(a.zero() for _ in inside), *(x1 for _ in outside)]
    )
    return _half_derivation(a, phi, f"{name}({describe(a)})")


def hom_novikov_check(a: Algebra, p: Vector) -> CheckReport:
    """Hom-Novikov identities for ``alpha = L_dot(p)`` when it is a circ-homomorphism."""
    require_axiom("hom_novikov_check", a, AxiomId.TNP)
    alpha = left_multiplication(a, "dot", p)
    if not is_homomorphism(a, "circ", alpha).passed:
        return CheckReport.not_applicable(IdentityId.HOM_NOVIKOV.name, "hypothesis not met")
    return check_identity(a, IdentityId.HOM_NOVIKOV, alpha)
