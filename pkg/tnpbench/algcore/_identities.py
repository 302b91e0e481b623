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
"""Axiom and identity predicates evaluated on basis tuples.

Every check is multilinear, so evaluating its residual on all tuples of basis
vectors decides it. Tuples run in lexicographic order and components in the
order they are listed; the witness is the first non-zero residual.
"""
from __future__ import annotations

import dataclasses
import enum
import itertools
from collections.abc import Callable, Iterable, Sequence
from typing import Any

from craft_cli import emit

from tnpbench import errors
from tnpbench.algcore._models import CheckReport, Witness
from tnpbench.algcore._tensor import Algebra, LinearMap, Vector


class AxiomId(str, enum.Enum):
    """Axiom systems that :func:`check_axiom` decides."""

    COMM_ASSOC = "comm_assoc"
    NOVIKOV_LEFT = "novikov_left"
    NOVIKOV_RIGHT = "novikov_right"
    TNP = "tnp"
    NP = "np"
    LIE = "lie"
    TRANSPOSED_POISSON = "transposed_poisson"
    RDNP = "rdnp"
    POISSON_LEIBNIZ = "poisson_leibniz"


class IdentityId(str, enum.Enum):
    """Derived identities that :func:`check_identity` decides."""

    TID1 = "tid1"
    TID2 = "tid2"
    TID3 = "tid3"
    TID4 = "tid4"
    DIFFLEM = "difflem"
    HALF_ID1 = "half_id1"
    HALF_ID2 = "half_id2"
    HOM_NOVIKOV = "hom_novikov"
    PROP212_B = "prop212_b"


class _Products:
    """Product shorthands handed to residual functions."""

    def __init__(self, algebra: Algebra, aux: LinearMap | None = None) -> None:
        self._algebra = algebra
        self._aux = aux

    def dot(self, x: Vector, y: Vector) -> Vector:
        return self._algebra.product("dot", x, y)

    def circ(self, x: Vector, y: Vector) -> Vector:
        return self._algebra.product("circ", x, y)

    def opp(self, x: Vector, y: Vector) -> Vector:
        """The opposite of circ, turning a right-Novikov product into a left one."""
        return self._algebra.product("circ", y, x)

    def aux(self, x: Vector) -> Vector:
        if self._aux is None:
            raise errors.MissingAuxiliaryMapError("an auxiliary map is required")
        return self._aux(x)


Residual = Callable[..., Vector]


@dataclasses.dataclass(frozen=True)
class Component:
    """One multilinear identity: its name, arity and residual function."""

    name: str
    arity: int
    residual: Residual


def _commutative(product: str, name: str) -> Component:
    def residual(o: _Products, x: Vector, y: Vector) -> Vector:
        m = getattr(o, product)
        return m(x, y) - m(y, x)

    return Component(name, 2, residual)


def _associative(product: str, name: str) -> Component:
    def residual(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
        m = getattr(o, product)
        return m(m(x, y), z) - m(x, m(y, z))

    return Component(name, 3, residual)


def _novikov(product: str, prefix: str = "") -> tuple[Component, ...]:
    def right_commutative(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
        m = getattr(o, product)
        return m(m(x, y), z) - m(m(x, z), y)

    def left_symmetric(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
        m = getattr(o, product)
        return m(m(x, y), z) - m(x, m(y, z)) - m(m(y, x), z) + m(y, m(x, z))

    return (
        Component(f"{prefix}right-commutativity", 3, right_commutative),
        Component(f"{prefix}left-symmetry", 3, left_symmetric),
    )


def _lie() -> tuple[Component, ...]:
    def antisymmetry(o: _Products, x: Vector, y: Vector) -> Vector:
        return o.circ(x, y) + o.circ(y, x)

    def jacobi(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
        b = o.circ
        return b(b(x, y), z) + b(b(y, z), x) + b(b(z, x), y)

    return (
        Component("antisymmetry", 2, antisymmetry),
        Component("jacobi", 3, jacobi),
    )


COMM_ASSOC = (
    _commutative("dot", "dot-commutativity"),
    _associative("dot", "dot-associativity"),
)


def _tnp_right_commutative(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.dot(x, y), z) - o.circ(o.dot(x, z), y)


def _transposed_leibniz(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return (
        2 * o.dot(z, o.circ(x, y))
        - o.circ(o.dot(z, x), y)
        - o.circ(x, o.dot(z, y))
    )


def _np_left_linear(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.dot(x, y), z) - o.dot(x, o.circ(y, z))


def _np_commutator_leibniz(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return (
        o.dot(o.circ(x, y), z)
        - o.dot(o.circ(y, x), z)
        - o.circ(x, o.dot(y, z))
        + o.circ(y, o.dot(x, z))
    )


def _rdnp_linear(o: _Products, a: Vector, b: Vector, c: Vector) -> Vector:
    return o.dot(o.circ(a, b), c) - o.circ(a, o.dot(b, c))


def _rdnp_leibniz(o: _Products, a: Vector, b: Vector, c: Vector) -> Vector:
    return (
        o.circ(o.dot(a, b), c)
        - o.dot(o.circ(a, c), b)
        - o.dot(a, o.circ(b, c))
    )


def _poisson_leibniz(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return (
        o.circ(x, o.dot(y, z))
        - o.dot(o.circ(x, y), z)
        - o.dot(y, o.circ(x, z))
    )


_AXIOMS: dict[AxiomId, tuple[Component, ...]] = {
    AxiomId.COMM_ASSOC: COMM_ASSOC,
    AxiomId.NOVIKOV_LEFT: _novikov("circ"),
    AxiomId.NOVIKOV_RIGHT: _novikov("opp", prefix="opposite-"),
    AxiomId.TNP: (
        *COMM_ASSOC,
        *_novikov("circ"),
        Component("dot-circ-right-commutativity", 3, _tnp_right_commutative),
        Component("half-leibniz", 3, _transposed_leibniz),
    ),
    AxiomId.NP: (
        *COMM_ASSOC,
        *_novikov("circ"),
        Component("left-linearity", 3, _np_left_linear),
        Component("commutator-leibniz", 3, _np_commutator_leibniz),
    ),
    AxiomId.LIE: _lie(),
    AxiomId.TRANSPOSED_POISSON: (
        *COMM_ASSOC,
        *_lie(),
        Component("transposed-leibniz", 3, _transposed_leibniz),
    ),
    AxiomId.RDNP: (
        *COMM_ASSOC,
        *_novikov("opp", prefix="opposite-"),
        Component("diamond-linearity", 3, _rdnp_linear),
        Component("diamond-leibniz", 3, _rdnp_leibniz),
    ),
    AxiomId.POISSON_LEIBNIZ: (
        *COMM_ASSOC,
        *_lie(),
        Component("leibniz", 3, _poisson_leibniz),
    ),
}

_AXIOM_OPS: dict[AxiomId, tuple[str, ...]] = {
    AxiomId.COMM_ASSOC: ("dot",),
    AxiomId.NOVIKOV_LEFT: ("circ",),
    AxiomId.NOVIKOV_RIGHT: ("circ",),
    AxiomId.LIE: ("circ",),
}


def _tid1(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.dot(o.circ(x, y), z) - o.dot(o.circ(x, z), y)


def _tid2(o: _Products, h: Vector, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.circ(x, y), o.dot(h, z)) - o.circ(o.circ(x, z), o.dot(h, y))


def _tid3(o: _Products, h: Vector, x: Vector, y: Vector, z: Vector) -> Vector:
    return (
        o.circ(o.circ(x, y), o.dot(h, z))
        - o.circ(o.circ(y, x), o.dot(h, z))
        - o.circ(o.dot(h, x), o.circ(y, z))
        + o.circ(o.dot(h, y), o.circ(x, z))
    )


def _tid4(o: _Products, h: Vector, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.circ(x, y), o.dot(h, z)) - o.circ(o.circ(y, x), o.dot(h, z))


def _difflem(o: _Products, a: Vector, b: Vector, c: Vector) -> Vector:
    return (
        o.circ(o.dot(a, b), c)
        - o.circ(o.dot(a, c), b)
        - o.dot(a, o.circ(b, c))
        + o.dot(a, o.circ(c, b))
    )


def _half_id1(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.circ(x, y), o.aux(z)) - o.circ(o.circ(x, o.aux(y)), z)


def _half_id2(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return (
        o.circ(o.circ(x, y), o.aux(z))
        - o.circ(o.circ(y, x), o.aux(z))
        - o.circ(o.aux(x), o.circ(y, z))
        + o.circ(o.aux(y), o.circ(x, z))
    )


def _hom_right_commutative(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.circ(x, y), o.aux(z)) - o.circ(o.circ(x, z), o.aux(y))


def _hom_left_symmetric(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return (
        o.circ(o.circ(x, y), o.aux(z))
        - o.circ(o.aux(x), o.circ(y, z))
        - o.circ(o.circ(y, x), o.aux(z))
        + o.circ(o.aux(y), o.circ(x, z))
    )


def _symmetric_on_products(o: _Products, x: Vector, y: Vector, z: Vector) -> Vector:
    return o.circ(o.dot(x, y), z) - o.circ(z, o.dot(x, y))


_IDENTITIES: dict[IdentityId, tuple[Component, ...]] = {
    IdentityId.TID1: (Component("tid1", 3, _tid1),),
    IdentityId.TID2: (Component("tid2", 4, _tid2),),
    IdentityId.TID3: (Component("tid3", 4, _tid3),),
    IdentityId.TID4: (Component("tid4", 4, _tid4),),
    IdentityId.DIFFLEM: (Component("difflem", 3, _difflem),),
    IdentityId.HALF_ID1: (Component("half-id1", 3, _half_id1),),
    IdentityId.HALF_ID2: (Component("half-id2", 3, _half_id2),),
    IdentityId.HOM_NOVIKOV: (
        Component("hom-right-commutativity", 3, _hom_right_commutative),
        Component("hom-left-symmetry", 3, _hom_left_symmetric),
    ),
    IdentityId.PROP212_B: (Component("circ-symmetric-on-products", 3, _symmetric_on_products),),
}

_IDENTITY_OPS: dict[IdentityId, tuple[str, ...]] = {
    IdentityId.HALF_ID1: ("circ",),
    IdentityId.HALF_ID2: ("circ",),
    IdentityId.HOM_NOVIKOV: ("circ",),
}

_AUX_IDENTITIES = frozenset(
    {IdentityId.HALF_ID1, IdentityId.HALF_ID2, IdentityId.HOM_NOVIKOV}
)


def axiom_components(axiom: AxiomId) -> tuple[Component, ...]:
    """The ordered components of an axiom system."""
    return _AXIOMS[axiom]


def axiom_operations(axiom: AxiomId) -> tuple[str, ...]:
    """The operations an axiom system reads."""
    return _AXIOM_OPS.get(axiom, ("dot", "circ"))


def find_violation(
    algebra: Algebra,
    components: Sequence[Component],
    aux: LinearMap | None = None,
    *,
    skip_undefined: bool = False,
    tuples: Callable[[int], Iterable[tuple[int, ...]]] | None = None,
) -> Witness | None:
    """Return the first failing (component, basis tuple), or None.

    With ``skip_undefined``, tuples that reach an undefined product of a
    windowed algebra are passed over instead of raising. ``tuples`` maps an
    arity to the index tuples to visit; by default every tuple is visited in
    lexicographic order.
    """
    products = _Products(algebra, aux)
    basis = algebra.basis_vectors()
    for component in components:
        emit.trace(f"Evaluating {component.name} on {algebra.name or 'algebra'}")
        visit = (
            tuples(component.arity)
            if tuples is not None
            else itertools.product(range(algebra.dim), repeat=component.arity)
        )
        for indices in visit:
            try:
                residual = component.residual(products, *(basis[i] for i in indices))
            except errors.MaskedProductError:
                if not skip_undefined:
                    raise
                continue
            if residual:
                return Witness(
                    component=component.name,
                    indices=list(indices),
                    residual=residual.to_strings(),
                )
    return None


def residual_at(
    algebra: Algebra,
    component: Component,
    indices: Sequence[int],
    aux: LinearMap | None = None,
) -> Vector:
    """Evaluate one component on the basis vectors at ``indices``."""
    basis = algebra.basis_vectors()
    return component.residual(_Products(algebra, aux), *(basis[i] for i in indices))


def _require_unmasked(algebra: Algebra, what: str) -> None:
    if algebra.is_windowed:
        raise errors.WindowedAlgebraError(
            f"{what} needs a total algebra, but {algebra.name or 'the input'} is windowed",
            resolution="Use the windowed checks, which skip undefined products.",
        )


def check_axiom(algebra: Algebra, axiom: AxiomId) -> CheckReport:
    """Decide an axiom system on ``algebra``.

    :raises MissingOperationError: if an operation the axiom reads is absent.
    :raises WindowedAlgebraError: if the algebra has undefined products.
    """
    axiom = AxiomId(axiom)
    identifier = axiom.name
    algebra.require(axiom_operations(axiom), f"the {identifier} check")
    _require_unmasked(algebra, f"the {identifier} check")
    emit.debug(f"Checking {identifier} on {algebra.name or 'algebra'} (dim {algebra.dim})")
    return CheckReport.from_witness(identifier, find_violation(algebra, _AXIOMS[axiom]))


def check_axiom_windowed(algebra: Algebra, axiom: AxiomId) -> CheckReport:
    """Decide an axiom system on the tuples whose products are all defined.

    On a total algebra this is :func:`check_axiom`.
    """
    axiom = AxiomId(axiom)
    identifier = axiom.name
    algebra.require(axiom_operations(axiom), f"the {identifier} check")
    emit.debug(
        f"Checking {identifier} on the defined tuples of {algebra.name or 'algebra'}"
    )
    witness = find_violation(algebra, _AXIOMS[axiom], skip_undefined=True)
    return CheckReport.from_witness(identifier, witness)


def check_identity(
    algebra: Algebra,
    identity: IdentityId,
    aux: LinearMap | None = None,
) -> CheckReport:
    """Decide a derived identity on ``algebra``.

    TID4 is reported not-applicable in characteristic 3.

    :raises MissingAuxiliaryMapError: if the identity needs ``aux`` and none is given.
    """
    identity = IdentityId(identity)
    identifier = identity.name
    algebra.require(_IDENTITY_OPS.get(identity, ("dot", "circ")), f"the {identifier} check")
    _require_unmasked(algebra, f"the {identifier} check")
    if identity in _AUX_IDENTITIES:
        if aux is None:
            raise errors.MissingAuxiliaryMapError(
                f"{identifier} needs an auxiliary linear map",
                resolution="Pass the map with --aux.",
            )
        if aux.field != algebra.field or aux.dim != algebra.dim:
            raise errors.DimensionMismatchError(
                f"auxiliary map is {aux.dim}-dimensional over {aux.field}, "
                f"algebra is {algebra.dim}-dimensional over {algebra.field}"
            )
    if identity is IdentityId.TID4 and algebra.field.characteristic == 3:  # noqa: PLR2004
        return CheckReport.not_applicable(
            identifier, "TID4 is only derived in characteristic other than 3"
        )
    emit.debug(f"Checking {identifier} on {algebra.name or 'algebra'}")
    return CheckReport.from_witness(
        identifier, find_violation(algebra, _IDENTITIES[identity], aux)
    )


def _map_components(opname: str, phi: LinearMap, kinds: Sequence[str]) -> list[Component]:
    def left(o: _Products, x: Vector, y: Vector) -> Vector:
        m = getattr(o, opname)
        return phi(m(x, y)) - m(x, phi(y))

    def right(o: _Products, x: Vector, y: Vector) -> Vector:
        m = getattr(o, opname)
        return phi(m(x, y)) - m(phi(x), y)

    def homomorphism(o: _Products, x: Vector, y: Vector) -> Vector:
        m = getattr(o, opname)
        return phi(m(x, y)) - m(phi(x), phi(y))

    table = {
        "left": Component(f"{opname}-centroid-left", 2, left),
        "right": Component(f"{opname}-centroid-right", 2, right),
        "homomorphism": Component(f"{opname}-homomorphism", 2, homomorphism),
    }
    return [table[kind] for kind in kinds]


def _check_map(algebra: Algebra, opname: str, phi: LinearMap) -> None:
    algebra.op(opname, f"a map check on {opname!r}")
    _require_unmasked(algebra, "a map check")
    if phi.field != algebra.field or phi.dim != algebra.dim:
        raise errors.DimensionMismatchError(
            f"map is {phi.dim}-dimensional over {phi.field}, "
            f"algebra is {algebra.dim}-dimensional over {algebra.field}"
        )


def centroid_membership(algebra: Algebra, opname: str, phi: LinearMap) -> CheckReport:
    """Check ``phi(x*y) = x*phi(y) = phi(x)*y`` on all basis pairs."""
    _check_map(algebra, opname, phi)
    components = _map_components(opname, phi, ("left", "right"))
    return CheckReport.from_witness(
        f"CENTROID[{opname}]", find_violation(algebra, components)
    )


def is_homomorphism(algebra: Algebra, opname: str, phi: LinearMap) -> CheckReport:
    """Check ``phi(x*y) = phi(x)*phi(y)`` on all basis pairs."""
    _check_map(algebra, opname, phi)
    components = _map_components(opname, phi, ("homomorphism",))
    return CheckReport.from_witness(
        f"HOMOMORPHISM[{opname}]", find_violation(algebra, components)
    )


def delta_derivation_membership(
    algebra: Algebra, opname: str, phi: LinearMap, delta: Any
) -> CheckReport:
    """Check ``phi(x*y) = delta (phi(x)*y + x*phi(y))`` on all basis pairs."""
    _check_map(algebra, opname, phi)
    factor = algebra.field.element(delta)

    def residual(o: _Products, x: Vector, y: Vector) -> Vector:
        m = getattr(o, opname)
        return phi(m(x, y)) - (m(phi(x), y) + m(x, phi(y))).scale(factor)

    component = Component(f"{opname}-delta-derivation", 2, residual)
    return CheckReport.from_witness(
        f"DELTA_DERIVATION[{opname},{algebra.field.format(factor)}]",
        find_violation(algebra, [component]),
    )


def left_multiplication(algebra: Algebra, opname: str, v: Vector) -> LinearMap:
    """The map ``L(v): x -> v * x``."""
    algebra.op(opname, "left multiplication")
    return LinearMap.from_columns(
        algebra.field, [algebra.product(opname, v, e) for e in algebra.basis_vectors()]
    )
