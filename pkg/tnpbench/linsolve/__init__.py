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
"""Exact linear algebra: subspaces, map spaces, ideals and series."""

from tnpbench.linsolve._matrix import (
    LinearMapSpace,
    Subspace,
    inverse,
    nullspace,
    rank,
    rref,
)
from tnpbench.linsolve._maps import (
    centroid_space,
    delta_derivation_equations,
    delta_derivation_space,
    derivation_space,
    find_unit,
    np_equivalence_flags,
)
from tnpbench.linsolve._ideals import (
    AnnihilatorKind,
    SimplicityMethod,
    SimplicityReport,
    SimplicityWitness,
    SolvabilityReport,
    annihilator,
    ideal_closure,
    is_ideal,
    is_simple,
    is_tnp_simple,
    is_transposed_quasi_ideal,
    product_space,
    solvability_report,
    square,
)

__all__ = [
    "LinearMapSpace",
    "Subspace",
    "inverse",
    "nullspace",
    "rank",
    "rref",
    "centroid_space",
    "delta_derivation_equations",
    "delta_derivation_space",
    "derivation_space",
    "find_unit",
    "np_equivalence_flags",
    "AnnihilatorKind",
    "SimplicityMethod",
    "SimplicityReport",
    "SimplicityWitness",
    "SolvabilityReport",
    "annihilator",
    "ideal_closure",
    "is_ideal",
    "is_simple",
    "is_tnp_simple",
    "is_transposed_quasi_ideal",
    "product_space",
    "solvability_report",
    "square",
]
