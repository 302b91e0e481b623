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
"""Constructions that build new products from old ones.

Every construction checks its hypotheses first and raises
:class:`~tnpbench.errors.HypothesisError` naming the first one that fails.
"""
from __future__ import annotations

from collections.abc import Callable

from tnpbench import errors
from tnpbench.algcore import (
    Algebra,
    AxiomId,
    BilinearOp,
    CheckReport,
    IdentityId,
    LinearMap,
    Vector,
    centroid_membership,
    check_identity,
    delta_derivation_membership,
)
from tnpbench.constructions._base import (
    ConstructionResult,
    KantorResult,
    Parameter,
    agreement_report,
    describe,
    finish,
    require,
    require_axiom,
)

Product = Callable[[Vector, Vector], Vector]
Pair = tuple[int, int]


def _op(algebra: Algebra, product: Product) -> BilinearOp:
    basis = algebra.basis_vectors()
    return BilinearOp.from_products(
        algebra.field, algebra.dim, lambda i, j: product(basis[i], basis[j])
    )


def _dot(algebra: Algebra) -> Product:
    return lambda x, y: algebra.product("dot", x, y)


def _circ(algebra: Algebra) -> Product:
    return lambda x, y: algebra.product("circ", x, y)


def commutator_tp(a: Algebra) -> ConstructionResult:
    """Replace circ by its commutator ``x o y - y o x``."""
    name = "commutator_tp"
    require_axiom(name, a, AxiomId.TNP)
    circ = _circ(a)
    bracket = _op(a, lambda x, y: circ(x, y) - circ(y, x))
    return finish(
        name, a.with_ops(circ=bracket), AxiomId.TRANSPOSED_POISSON, f"{name}({describe(a)})"
    )


def twisted_bracket_tp(a: Algebra, derivation: LinearMap) -> ConstructionResult:
    """Bracket ``D(x) o y - D(y) o x`` for a derivation D of both products."""
    name = "twisted_bracket_tp"
    require_axiom(name, a, AxiomId.TNP)
    for opname in ("dot", "circ"):
        require(
            name,
            f"D is a derivation of {opname}",
            delta_derivation_membership(a, opname, derivation, 1).passed,
        )
    circ = _circ(a)
    bracket = _op(a, lambda x, y: circ(derivation(x), y) - circ(derivation(y), x))
    return finish(
        name, a.with_ops(circ=bracket), AxiomId.TRANSPOSED_POISSON, f"{name}({describe(a)})"
    )


def centroid_product(a: Algebra, phi: LinearMap) -> ConstructionResult:
    """Novikov product ``x . phi(y)`` from a centroid element of dot."""
    name = "centroid_product"
    require_axiom(name, a.with_ops(circ=None), AxiomId.COMM_ASSOC)
    require(name, "phi is in the centroid of dot", centroid_membership(a, "dot", phi).passed)
    dot = _dot(a)
    circ = _op(a, lambda x, y: dot(x, phi(y)))
    return finish(name, a.with_ops(circ=circ), AxiomId.TNP, f"{name}({describe(a)})")


def scaled_product(a: Algebra, p: Parameter) -> ConstructionResult:
    """Novikov product ``p . x . y``."""
    name = "scaled_product"
    require_axiom(name, a.with_ops(circ=None), AxiomId.COMM_ASSOC)
    dot = _dot(a)
    circ = _op(a, lambda x, y: p.apply(a, dot(x, y)))
    return finish(name, a.with_ops(circ=circ), AxiomId.TNP, f"{name}({describe(a)}, p={p})")


def rdnp_from_derivation(b: Algebra, derivation: LinearMap) -> ConstructionResult:
    """Diamond ``D(x) . y``, stored as circ, from a derivation D of dot."""
    name = "rdnp_from_derivation"
    require_axiom(name, b.with_ops(circ=None), AxiomId.COMM_ASSOC)
    require(
        name,
        "D is a derivation of dot",
        delta_derivation_membership(b, "dot", derivation, 1).passed,
    )
    dot = _dot(b)
    diamond = _op(b, lambda x, y: dot(derivation(x), y))
    built = b.with_ops(circ=diamond)
    return finish(
        name,
        built,
        AxiomId.RDNP,
        f"{name}({describe(b)})",
        extra={"DIFFLEM": check_identity(built, IdentityId.DIFFLEM)},
    )


def _same_field(a: Algebra, b: Algebra) -> None:
    if a.field != b.field:
        raise errors.FieldMismatchError(a.field, b.field)


def _tensor_constants(
    first: BilinearOp, second: BilinearOp, nb: int, sign: int = 1, *, swap: bool = False
) -> list[tuple[int, int, int, object]]:
    """Entries of ``first (x) second``; with ``swap`` the arguments of both are reversed."""
    entries = []
    for i, k, p, v in first.entries():
        for j, l, q, w in second.entries():
            if swap:
                entries.append((k * nb + l, i * nb + j, p * nb + q, sign * (v * w)))
            else:
                entries.append((i * nb + j, k * nb + l, p * nb + q, sign * (v * w)))
    return entries


def _tensor_mask(
    a_mask: frozenset[Pair], b_mask: frozenset[Pair], na: int, nb: int
) -> frozenset[Pair]:
    mask = set()
    for i, k in a_mask:
        mask.update((i * nb + j, k * nb + l) for j in range(nb) for l in range(nb))
    for j, l in b_mask:
        mask.update((i * nb + j, k * nb + l) for i in range(na) for k in range(na))
    return frozenset(mask)


def _masks(algebra: Algebra, *opnames: str, symmetric: bool = False) -> frozenset[Pair]:
    pairs: set[Pair] = set()
    for opname in opnames:
        pairs.update(algebra.masks.get(opname, frozenset()))
    if symmetric:
        pairs.update((j, i) for i, j in list(pairs))
    return frozenset(pairs)


def _tensor_labels(a: Algebra, b: Algebra) -> tuple[str, ...]:
    return tuple(f"{x}⊗{y}" for x in a.labels for y in b.labels)


def tensor_tnp(a: Algebra, b: Algebra) -> ConstructionResult:
    """The tensor product of two TNP algebras.

    Basis vector ``e_i (x) f_j`` sits at index ``i * dim(b) + j``.
    """
    name = "tensor_tnp"
    _same_field(a, b)
    require_axiom(name, a, AxiomId.TNP)
    require_axiom(name, b, AxiomId.TNP)
    na, nb = a.dim, b.dim
    field, dim = a.field, na * nb
    dot = BilinearOp.from_entries(
        field, dim, _tensor_constants(a.op("dot"), b.op("dot"), nb)
    )
    circ = BilinearOp.from_entries(
        field,
        dim,
        [
            *_tensor_constants(a.op("dot"), b.op("circ"), nb),
            *_tensor_constants(a.op("circ"), b.op("dot"), nb),
        ],
    )
    built = Algebra(
        field,
        dim,
        {"dot": dot, "circ": circ},
        labels=_tensor_labels(a, b),
        masks={
            "dot": _tensor_mask(_masks(a, "dot"), _masks(b, "dot"), na, nb),
            "circ": _tensor_mask(
                _masks(a, "dot", "circ"), _masks(b, "dot", "circ"), na, nb
            ),
        },
    )
    return finish(name, built, AxiomId.TNP, f"{name}({describe(a)}, {describe(b)})")


def tensor_mixed_tp(a: Algebra, b: Algebra) -> ConstructionResult:
    """A TNP algebra tensored with a right-diamond NP algebra is transposed Poisson.

    The bracket is ``[x (x) a, y (x) b] = x o y (x) a <> b - y o x (x) b <> a``.
    """
    name = "tensor_mixed_tp"
    _same_field(a, b)
    require_axiom(name, a, AxiomId.TNP)
    require_axiom(name, b, AxiomId.RDNP)
    na, nb = a.dim, b.dim
    field, dim = a.field, na * nb
    dot = BilinearOp.from_entries(
        field, dim, _tensor_constants(a.op("dot"), b.op("dot"), nb)
    )
    bracket = BilinearOp.from_entries(
        field,
        dim,
        [
            *_tensor_constants(a.op("circ"), b.op("circ"), nb),
            *_tensor_constants(a.op("circ"), b.op("circ"), nb, sign=-1, swap=True),
        ],
    )
    built = Algebra(
        field,
        dim,
        {"dot": dot, "circ": bracket},
        labels=_tensor_labels(a, b),
        masks={
            "dot": _tensor_mask(_masks(a, "dot"), _masks(b, "dot"), na, nb),
            "circ": _tensor_mask(
                _masks(a, "circ", symmetric=True), _masks(b, "circ", symmetric=True), na, nb
            ),
        },
    )
    return finish(
        name, built, AxiomId.TRANSPOSED_POISSON, f"{name}({describe(a)}, {describe(b)})"
    )


def deform_twist(a: Algebra, p: Parameter, q: Parameter) -> ConstructionResult:
    """``x ._p y = p . x . y`` and ``x o_q y = x o y + q . x . y``."""
    name = "deform_twist"
    require_axiom(name, a, AxiomId.TNP)
    dot, circ = _dot(a), _circ(a)
    new_dot = _op(a, lambda x, y: p.apply(a, dot(x, y)))
    new_circ = _op(a, lambda x, y: circ(x, y) + q.apply(a, dot(x, y)))
    return finish(
        name,
        a.with_ops(dot=new_dot, circ=new_circ),
        AxiomId.TNP,
        f"{name}({describe(a)}, p={p}, q={q})",
    )


def deform_novikov(a: Algebra, q: Parameter) -> ConstructionResult:
    """Only the circ deformation ``x o y + q . x . y``; the result is Novikov."""
    name = "deform_novikov"
    require_axiom(name, a, AxiomId.TNP)
    dot, circ = _dot(a), _circ(a)
    new_circ = _op(a, lambda x, y: circ(x, y) + q.apply(a, dot(x, y)))
    return finish(
        name, a.with_ops(circ=new_circ), AxiomId.NOVIKOV_LEFT, f"{name}({describe(a)}, q={q})"
    )


def deform_scaled(
    a: Algebra, p: Parameter, q: Parameter, r: Parameter
) -> ConstructionResult:
    """``x ._p y = x . y . p`` and ``x o_(q,r) y = q . (x o y) + r . x . y``."""
    name = "deform_scaled"
    require_axiom(name, a, AxiomId.TNP)
    dot, circ = _dot(a), _circ(a)
    new_dot = _op(a, lambda x, y: p.apply(a, dot(x, y)))
    new_circ = _op(a, lambda x, y: q.apply(a, circ(x, y)) + r.apply(a, dot(x, y)))
    return finish(
        name,
        a.with_ops(dot=new_dot, circ=new_circ),
        AxiomId.TNP,
        f"{name}({describe(a)}, p={p}, q={q}, r={r})",
    )


def _kantor(outer: Product, inner: Product, u: Vector) -> Product:
    """The left Kantor product ``[A, B]_u(x, y) = A(u, B(x, y)) - B(A(u, x), y) - B(x, A(u, y))``."""

    def product(x: Vector, y: Vector) -> Vector:
        return outer(u, inner(x, y)) - inner(outer(u, x), y) - inner(x, outer(u, y))

    return product


def kantor_product(a: Algebra, u: Vector) -> KantorResult:
    """Kantor products of a TNP algebra at ``u``.

    ``[o, .]_u`` is commutative associative, ``[., o]_u`` is Novikov and
    ``(A, ., [., o]_u)`` is TNP. Each product is computed from the Kantor
    expansion and compared with its closed form.
    """
    name = "kantor_product"
    require_axiom(name, a, AxiomId.TNP)
    if len(u) != a.dim or u.field != a.field:
        raise errors.DimensionMismatchError("u must be a vector of the input algebra")
    dot, circ = _dot(a), _circ(a)
    basis = a.basis_vectors()
    star_comm = _kantor(circ, dot, u)
    star_nov = _kantor(dot, circ, u)

    def closed_comm(x: Vector, y: Vector) -> Vector:
        return -circ(dot(x, y), u)

    def closed_nov(x: Vector, y: Vector) -> Vector:
        return -dot(u, circ(x, y))

    def agreement(general: Product, closed: Product) -> dict[str, CheckReport]:
        return {
            "closed-form": agreement_report(
                "closed-form",
                a.dim,
                lambda i, j: general(basis[i], basis[j]),
                lambda i, j: closed(basis[i], basis[j]),
            )
        }

    at = f"{describe(a)}, u={','.join(u.to_strings())}"
    comm_op, nov_op = _op(a, star_comm), _op(a, star_nov)
    return KantorResult(
        star_comm=finish(
            name,
            Algebra(a.field, a.dim, {"dot": comm_op}, labels=a.labels),
            AxiomId.COMM_ASSOC,
            f"kantor_comm({at})",
            extra=agreement(star_comm, closed_comm),
        ),
        star_nov=finish(
            name,
            Algebra(a.field, a.dim, {"circ": nov_op}, labels=a.labels),
            AxiomId.NOVIKOV_LEFT,
            f"kantor_novikov({at})",
            extra=agreement(star_nov, closed_nov),
        ),
        tnp=finish(
            name,
            a.with_ops(circ=nov_op),
            AxiomId.TNP,
            f"kantor_tnp({at})",
            extra=agreement(star_nov, closed_nov),
        ),
    )
