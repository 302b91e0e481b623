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
"""Annihilators, ideals, solvability and simplicity."""
from __future__ import annotations

import concurrent.futures
import enum
import itertools
import random
from collections.abc import Callable, Iterable, Sequence

from craft_cli import emit

from tnpbench import errors, util
from tnpbench.algcore import Algebra, Vector
from tnpbench.linsolve._matrix import Subspace
from tnpbench.models.base import BenchBaseModel

RANDOM_GENERATORS = 64
RANDOM_RANGE = 3


class AnnihilatorKind(str, enum.Enum):
    """Which side of a product an annihilator kills."""

    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two_sided"


class SimplicityMethod(str, enum.Enum):
    """How :func:`is_simple` searched for proper ideals."""

    EXHAUSTIVE = "exhaustive"
    GENERATOR_SPIN = "generator_spin"


class SolvabilityReport(BenchBaseModel):
    """Lengths of the derived, right and lower central series of one operation.

    A length counts the products taken until the series reaches zero, so a zero
    product has length 1. A length is None when the series stalls above zero.
    """

    op: str
    solvable: bool
    right_nilpotent: bool
    nilpotent: bool
    derived_length: int | None
    right_nil_index: int | None
    nil_index: int | None
    derived_dims: list[int]


class SimplicityWitness(BenchBaseModel):
    """A point whose generated ideal is proper, and that ideal."""

    point: list[str]
    closure: list[list[str]]


class SimplicityReport(BenchBaseModel):
    """Outcome of a simplicity search."""

    ops: list[str]
    simple: bool
    method: SimplicityMethod
    witness: SimplicityWitness | None = None
    seed: int | None = None
    points_checked: int
    note: str | None = None


def _require_total(algebra: Algebra, opnames: Iterable[str], purpose: str) -> None:
    algebra.require(opnames, purpose)
    if algebra.is_windowed:
        raise errors.WindowedAlgebraError(
            f"{purpose} needs a total algebra, but {algebra.name or 'the input'} is windowed"
        )


def _as_subspace(algebra: Algebra, space: Subspace | None) -> Subspace:
    if space is None:
        return Subspace.full(algebra.field, algebra.dim)
    if space.ambient != algebra.dim:
        raise errors.DimensionMismatchError(
            f"subspace of a {space.ambient}-dimensional space used with a "
            f"{algebra.dim}-dimensional algebra"
        )
    return space


def product_space(
    algebra: Algebra,
    opname: str,
    left: Subspace | None = None,
    right: Subspace | None = None,
) -> Subspace:
    """The span of ``U * V``; either side defaults to the whole algebra."""
    left, right = _as_subspace(algebra, left), _as_subspace(algebra, right)
    products = (
        algebra.product(opname, u, v)
        for u, v in itertools.product(left.vectors(), right.vectors())
    )
    return Subspace.span(algebra.field, algebra.dim, products)


def square(algebra: Algebra, opnames: Sequence[str]) -> Subspace:
    """``A*A`` summed over the listed operations."""
    result = Subspace.zero(algebra.field, algebra.dim)
    for opname in opnames:
        result = result.sum(product_space(algebra, opname))
    return result


def annihilator(
    algebra: Algebra,
    opname: str,
    kind: AnnihilatorKind | str = AnnihilatorKind.TWO_SIDED,
    of: Subspace | None = None,
) -> Subspace:
    """Vectors killing ``of`` (default: the whole algebra).

    ``left`` is ``{v : v*I = 0}``, ``right`` is ``{v : I*v = 0}``.
    """
    kind = AnnihilatorKind(kind)
    _require_total(algebra, (opname,), "an annihilator")
    target = _as_subspace(algebra, of)
    field, n = algebra.field, algebra.dim
    basis = algebra.basis_vectors()
    rows: list[list[object]] = []
    for b in target.vectors():
        if kind in (AnnihilatorKind.LEFT, AnnihilatorKind.TWO_SIDED):
            columns = [algebra.product(opname, e, b) for e in basis]
            rows.extend([col[k] for col in columns] for k in range(n))
        if kind in (AnnihilatorKind.RIGHT, AnnihilatorKind.TWO_SIDED):
            columns = [algebra.product(opname, b, e) for e in basis]
            rows.extend([col[k] for col in columns] for k in range(n))
    return Subspace.solutions(field, n, rows)


def ideal_closure(
    algebra: Algebra, opnames: Sequence[str], seed: Iterable[Vector] | Subspace
) -> Subspace:
    """The smallest subspace containing ``seed`` and closed under both-sided multiplication."""
    _require_total(algebra, opnames, "an ideal closure")
    vectors = seed.vectors() if isinstance(seed, Subspace) else list(seed)
    current = Subspace.span(algebra.field, algebra.dim, vectors)
    basis = algebra.basis_vectors()
    while True:
        generators: list[Vector] = current.vectors()
        for opname in opnames:
            for v in current.vectors():
                for e in basis:
                    generators.append(algebra.product(opname, e, v))
                    generators.append(algebra.product(opname, v, e))
        grown = Subspace.span(algebra.field, algebra.dim, generators)
        if grown.dim == current.dim:
            return current
        current = grown


def is_ideal(algebra: Algebra, opnames: Sequence[str], space: Subspace) -> bool:
    """Whether ``space`` is a two-sided ideal of every listed operation."""
    _require_total(algebra, opnames, "an ideal check")
    space = _as_subspace(algebra, space)
    return all(
        space.contains_subspace(product_space(algebra, opname, None, space))
        and space.contains_subspace(product_space(algebra, opname, space, None))
        for opname in opnames
    )


def is_transposed_quasi_ideal(algebra: Algebra, space: Subspace) -> bool:
    """A non-trivial circ-ideal with ``(A.I) o A`` and ``A o (A.I)`` inside it."""
    _require_total(algebra, ("dot", "circ"), "a transposed quasi-ideal check")
    space = _as_subspace(algebra, space)
    if space.is_zero or space.is_full or not is_ideal(algebra, ("circ",), space):
        return False
    dot_image = product_space(algebra, "dot", None, space)
    return space.contains_subspace(
        product_space(algebra, "circ", dot_image, None)
    ) and space.contains_subspace(product_space(algebra, "circ", None, dot_image))


def _series_length(
    start: Subspace, step: Callable[[Subspace], Subspace]
) -> tuple[int | None, list[int]]:
    current, dims = start, [start.dim]
    for length in itertools.count(1):
        following = step(current)
        dims.append(following.dim)
        if following.is_zero:
            return length, dims
        if following == current:
            return None, dims
        current = following
    raise AssertionError("unreachable")  # pragma: no cover


def _nil_index(algebra: Algebra, opname: str) -> int | None:
    powers = [Subspace.full(algebra.field, algebra.dim)]
    for k in itertools.count(2):
        term = Subspace.zero(algebra.field, algebra.dim)
        for i in range(1, k):
            term = term.sum(product_space(algebra, opname, powers[i - 1], powers[k - i - 1]))
        if term.is_zero:
            return k - 1
        if term == powers[-1]:
            return None
        powers.append(term)
    raise AssertionError("unreachable")  # pragma: no cover


def solvability_report(algebra: Algebra, opname: str) -> SolvabilityReport:
    """Derived, right and lower central series of one operation."""
    _require_total(algebra, (opname,), "a solvability report")
    full = Subspace.full(algebra.field, algebra.dim)
    derived, derived_dims = _series_length(
        full, lambda s: product_space(algebra, opname, s, s)
    )
    right, _ = _series_length(full, lambda s: product_space(algebra, opname, s, full))
    nil = _nil_index(algebra, opname)
    emit.debug(f"Series of {opname!r}: derived {derived}, right {right}, lower {nil}")
    return SolvabilityReport(
        op=opname,
        solvable=derived is not None,
        right_nilpotent=right is not None,
        nilpotent=nil is not None,
        derived_length=derived,
        right_nil_index=right,
        nil_index=nil,
        derived_dims=derived_dims,
    )


def _projective_point(algebra: Algebra, index: int) -> Vector:
    """The ``index``-th point of projective space: leading coordinate 1, rest lexicographic."""
    field, n = algebra.field, algebra.dim
    p = field.characteristic
    for lead in range(n):
        block = p ** (n - 1 - lead)
        if index < block:
            tail = []
            for _ in range(n - 1 - lead):
                index, digit = divmod(index, p)
                tail.append(digit)
            coords = [0] * lead + [1] + tail[::-1]
            return Vector.from_values(field, coords)
        index -= block
    raise IndexError("projective point index out of range")


def _random_generators(algebra: Algebra, seed: int) -> list[Vector]:
    rng = random.Random(seed)
    generators = algebra.basis_vectors()
    while len(generators) < algebra.dim + RANDOM_GENERATORS:
        vector = Vector.from_values(
            algebra.field,
            (rng.randint(-RANDOM_RANGE, RANDOM_RANGE) for _ in range(algebra.dim)),
        )
        if vector:
            generators.append(vector)
    return generators


def is_simple(
    algebra: Algebra,
    opnames: Sequence[str],
    seed: int = 0,
    jobs: int = 1,
    bound: int = 1_000_000,
) -> SimplicityReport:
    """Search for a proper non-zero ideal generated by a single vector.

    Over GF(p) every projective point is spun into its ideal, which decides
    simplicity. Over the rationals the basis and seeded random vectors are
    spun, which can prove non-simplicity but only supports simplicity.

    :raises EnumerationBoundError: if the projective space has more than ``bound`` points.
    """
    opnames = list(opnames)
    _require_total(algebra, opnames, "a simplicity check")
    field = algebra.field
    if field.is_prime:
        p = field.characteristic
        count = (p**algebra.dim - 1) // (p - 1)
        method = SimplicityMethod.EXHAUSTIVE

        def point(index: int) -> Vector:
            return _projective_point(algebra, index)

        report_seed = None
    else:
        generators = _random_generators(algebra, seed)
        count = len(generators)
        method = SimplicityMethod.GENERATOR_SPIN
        point = generators.__getitem__
        report_seed = seed

    if square(algebra, opnames).is_zero:
        return SimplicityReport(
            ops=opnames,
            simple=False,
            method=method,
            seed=report_seed,
            points_checked=0,
            note="the product is zero",
        )
    if count > bound:
        raise errors.EnumerationBoundError(
            f"projective enumeration of {field}^{algebra.dim}", count, bound
        )

    def first_proper(indices: range) -> tuple[int, Vector, Subspace] | None:
        for index in indices:
            vector = point(index)
            closure = ideal_closure(algebra, opnames, [vector])
            if not closure.is_full:
                return index, vector, closure
        return None

    workers = util.get_worker_count(jobs)
    chunk = -(-count // workers)
    ranges = [range(start, min(start + chunk, count)) for start in range(0, count, chunk)]
    emit.debug(f"Spinning {count} points over {len(ranges)} worker(s)")
    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
        found = [hit for hit in executor.map(first_proper, ranges) if hit is not None]

    if not found:
        return SimplicityReport(
            ops=opnames, simple=True, method=method, seed=report_seed, points_checked=count
        )
    index, vector, closure = min(found, key=lambda hit: hit[0])
    return SimplicityReport(
        ops=opnames,
        simple=False,
        method=method,
        witness=SimplicityWitness(point=vector.to_strings(), closure=closure.to_strings()),
        seed=report_seed,
        points_checked=index + 1,
    )


def is_tnp_simple(
    algebra: Algebra, seed: int = 0, jobs: int = 1, bound: int = 1_000_000
) -> SimplicityReport:
    """Simplicity where ideals must be ideals of both dot and circ."""
    return is_simple(algebra, ("dot", "circ"), seed=seed, jobs=jobs, bound=bound)
