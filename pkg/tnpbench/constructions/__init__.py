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
"""Constructions of TNP, transposed Poisson and related algebras.

Each construction verifies its hypotheses, builds the new algebra and checks
the axiom system it promises.
"""

from tnpbench.constructions._base import (
    ConstructionResult,
    HalfDerivationResult,
    KantorResult,
    Parameter,
    ScalarParameter,
    VectorParameter,
)
from tnpbench.constructions._products import (
    centroid_product,
    commutator_tp,
    deform_novikov,
    deform_scaled,
    deform_twist,
    kantor_product,
    rdnp_from_derivation,
    scaled_product,
    tensor_mixed_tp,
    tensor_tnp,
    twisted_bracket_tp,
)
from tnpbench.constructions._solvable import (
    complement_half_derivation,
    find_square_annihilator_witness,
    hom_novikov_check,
    projection_half_derivation,
    tnp_from_square_annihilator,
    tnp_on_solvable,
)

__all__ = [
    "ConstructionResult",
    "HalfDerivationResult",
    "KantorResult",
    "Parameter",
    "ScalarParameter",
    "VectorParameter",
    "centroid_product",
    "commutator_tp",
    "deform_novikov",
    "deform_scaled",
    "deform_twist",
    "kantor_product",
    "rdnp_from_derivation",
    "scaled_product",
    "tensor_mixed_tp",
    "tensor_tnp",
    "twisted_bracket_tp",
    "complement_half_derivation",
    "find_square_annihilator_witness",
    "hom_novikov_check",
    "projection_half_derivation",
    "tnp_from_square_annihilator",
    "tnp_on_solvable",
]
