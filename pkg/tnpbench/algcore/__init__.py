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
"""Structure-constant algebras and the axiom and identity checks on them."""

from tnpbench.algcore._tensor import (
    OPERATION_NAMES,
    Algebra,
    BilinearOp,
    LinearMap,
    Vector,
    product_eval,
)
from tnpbench.algcore._models import CheckReport, CheckStatus, NPEquivalence, Witness
from tnpbench.algcore._identities import (
    AxiomId,
    Component,
    IdentityId,
    axiom_components,
    axiom_operations,
    centroid_membership,
    check_axiom,
    check_axiom_windowed,
    check_identity,
    delta_derivation_membership,
    find_violation,
    is_homomorphism,
    left_multiplication,
    residual_at,
)

__all__ = [
    "OPERATION_NAMES",
    "Algebra",
    "BilinearOp",
    "LinearMap",
    "Vector",
    "product_eval",
    "CheckReport",
    "CheckStatus",
    "NPEquivalence",
    "Witness",
    "AxiomId",
    "Component",
    "IdentityId",
    "axiom_components",
    "axiom_operations",
    "centroid_membership",
    "check_axiom",
    "check_axiom_windowed",
    "check_identity",
    "delta_derivation_membership",
    "find_violation",
    "is_homomorphism",
    "left_multiplication",
    "residual_at",
]
