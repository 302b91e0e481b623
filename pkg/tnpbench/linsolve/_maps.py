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
"""Spaces of linear maps: delta-derivations, derivations and centroids.

An unknown map ``M`` is flattened row-major, so the unknown for ``M[k][l]``
sits at ``k*n + l`` and ``phi(e_l) = sum_k M[k][l] e_k``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from typing import Any

from craft_cli import emit

from tnpbench.algcore import (
    Algebra,
    AxiomId,
    BilinearOp,
    IdentityId,
    NPEquivalence,
    Vector,
    centroid_membership,
    check_axiom,
    check_identity,
    left_multiplication,
)
from tnpbench.linsolve._matrix import LinearMapSpace, nullspace

Equation = list[Any]


def _pair_defined(algebra: Algebra, opname: str, i: int, j: int) -> bool:
    return (i, j) not in algebra.masks.get(opname, frozenset())


def _usable_pair(
    algebra: Algebra, opname: str, i: int, j: int, sources: frozenset[int]
) -> bool:
    """Whether the equation for ``(i, j)`` only touches defined products and known columns."""
    if not _pair_defined(algebra, opname, i, j):
        return False
    if not algebra.masks:
        return True
    op = algebra.op(opname)
    if any(k not in sources for k, _ in op.basis_product(i, j).support()):
        return False
    return all(
        _pair_defined(algebra, opname, k, j) and _pair_defined(algebra, opname, i, k)
        for k in sources
    )


def delta_derivation_equations(
    algebra: Algebra,
    opname: str,
    delta: Any,  # noqa: ANN401
    sources: Iterable[int] | None = None,
) -> list[Equation]:
    """Rows of ``phi(e_i*e_j) - delta (phi(e_i)*e_j + e_i*phi(e_j)) = 0``.

    With ``sources``, maps are restricted to the span of those basis vectors:
    they vanish on the other basis vectors and take values in the span. Only
    equations whose products are all defined are kept; this is how windowed
    models are handled.
    """
    op: BilinearOp = algebra.op(opname, "a delta-derivation space")
    field, n = algebra.field, algebra.dim
    c = op.dense
    factor = field.element(delta)
    allowed = frozenset(range(n) if sources is None else sources)
    rows: list[Equation] = []
    for i in range(n):
        for j in range(n):
            if i not in allowed or j not in allowed:
                continue
            if not _usable_pair(algebra, opname, i, j, allowed):
                continue
            for k in range(n):
                row = [field.zero] * (n * n)
                for l, value in op.basis_product(i, j).support():
                    row[k * n + l] += value
                for l in range(n):
                    row[l * n + i] -= factor * c[l][j][k]
                    row[l * n + j] -= factor * c[i][l][k]
                if any(row):
                    rows.append(row)
    for k in range(n):
        for l in range(n):
            if k not in allowed or l not in allowed:
                row = [field.zero] * (n * n)
                row[k * n + l] = field.one
                rows.append(row)
    return rows


def delta_derivation_space(
    algebra: Algebra, opname: str, delta: Any  # noqa: ANN401
) -> LinearMapSpace:
    """All maps with ``phi(x*y) = delta (phi(x)*y + x*phi(y))``."""
    emit.debug(f"Solving the delta-derivation system of {opname!r}")
    return LinearMapSpace.solutions(
        algebra.field, algebra.dim, delta_derivation_equations(algebra, opname, delta)
    )


def derivation_space(algebra: Algebra, opnames: Sequence[str]) -> LinearMapSpace:
    """Maps that are derivations of every listed operation."""
    rows: list[Equation] = []
    for opname in opnames:
        rows.extend(delta_derivation_equations(algebra, opname, 1))
    return LinearMapSpace.solutions(algebra.field, algebra.dim, rows)


def centroid_space(algebra: Algebra, opname: str) -> LinearMapSpace:
    """Maps with ``phi(x*y) = x*phi(y) = phi(x)*y``."""
    op = algebra.op(opname, "a centroid space")
    field, n = algebra.field, algebra.dim
    c = op.dense
    rows: list[Equation] = []
    for i in range(n):
        for j in range(n):
            if not _pair_defined(algebra, opname, i, j):
                continue
            product = op.basis_product(i, j).support()
            for k in range(n):
                left = [field.zero] * (n * n)
                right = [field.zero] * (n * n)
                for l, value in product:
                    left[k * n + l] += value
                    right[k * n + l] += value
                for l in range(n):
                    left[l * n + j] -= c[i][l][k]
                    right[l * n + i] -= c[l][j][k]
                rows.extend(row for row in (left, right) if any(row))
    return LinearMapSpace.solutions(field, n, rows)


def find_unit(algebra: Algebra, opname: str) -> Vector | None:
    """A two-sided unit of the operation, or None if there is none."""
    op = algebra.op(opname, "a unit search")
    field, n = algebra.field, algebra.dim
    c = op.dense
    # Unknowns (u_0..u_{n-1}, t): u*e_j = t e_j and e_j*u = t e_j.
    rows: list[Equation] = []
    for j in range(n):
        for k in range(n):
            left = [c[i][j][k] for i in range(n)]
            right = [c[j][i][k] for i in range(n)]
            target = field.one if j == k else field.zero
            rows.extend([[*left, -target], [*right, -target]])
    for solution in nullspace(field, rows, n + 1):
        if solution[n]:
            scale = field.one / solution[n]
            return Vector(field, (scale * value for value in solution[:n]))
    return None


def _commutative(algebra: Algebra, opname: str) -> bool:
    op = algebra.op(opname)
    return all(
        op.basis_product(i, j) == op.basis_product(j, i)
        for i in range(algebra.dim)
        for j in range(i + 1, algebra.dim)
    )


def np_equivalence_flags(algebra: Algebra) -> NPEquivalence:
    """Four conditions that agree on TNP algebras, plus the unit and circ symmetry."""
    basis = algebra.basis_vectors()
    unit = find_unit(algebra, "dot")
    return NPEquivalence(
        np_axioms=check_axiom(algebra, AxiomId.NP).passed,
        circ_symmetric_on_products=check_identity(algebra, IdentityId.PROP212_B).passed,
        dot_multiplications_in_circ_centroid=all(
            centroid_membership(
                algebra, "circ", left_multiplication(algebra, "dot", e)
            ).passed
            for e in basis
        ),
        circ_multiplications_in_dot_centroid=all(
            centroid_membership(
                algebra, "dot", left_multiplication(algebra, "circ", e)
            ).passed
            for e in basis
        ),
        unit=None if unit is None else unit.to_strings(),
        circ_commutative=_commutative(algebra, "circ"),
    )
