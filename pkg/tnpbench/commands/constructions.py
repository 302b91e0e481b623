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
"""Commands in the 'Constructions' group."""
from __future__ import annotations

import argparse
import enum
import textwrap
from collections.abc import Callable
from typing import Any

from craft_cli import CommandGroup

from tnpbench import affinize, constructions, errors
from tnpbench.algcore import Algebra, CheckReport, CheckStatus
from tnpbench.commands import base
from tnpbench.models.algebra import AlgebraFile

Handler = Callable[[Algebra, argparse.Namespace], tuple[dict[str, Any], bool]]


def get_constructions_command_group() -> CommandGroup:
    """Return the 'Constructions' command group."""
    return CommandGroup("Constructions", [ConstructCommand, AffinizeCheckCommand])


class ConstructionKind(str, enum.Enum):
    """The constructions reachable through ``construct --kind``."""

    COMMUTATOR = "commutator"
    TWISTED = "twisted"
    CENTROID_PRODUCT = "centroid-product"
    SCALED = "scaled"
    RDNP = "rdnp"
    TENSOR = "tensor"
    TENSOR_MIXED = "tensor-mixed"
    DEFORM = "deform"
    DEFORM_NOVIKOV = "deform-novikov"
    DEFORM_SCALED = "deform-scaled"
    KANTOR = "kantor"
    SOLVABLE_TNP = "solvable-tnp"
    SQUARE_ANN_TNP = "square-ann-tnp"
    HALF_PROJECTION = "half-projection"
    HALF_COMPLEMENT = "half-complement"
    HOM_NOVIKOV = "hom-novikov"


def _construction_data(result: constructions.ConstructionResult) -> dict[str, Any]:
    return {
        "provenance": result.provenance,
        "promise": result.promise.value,
        "pass": result.ok,
        "report": result.report.marshal(),
        "extra": {name: report.marshal() for name, report in result.extra.items()},
        "algebra": AlgebraFile.from_algebra(result.algebra).marshal(),
    }


class ConstructCommand(base.AppCommand):
    """Build a new algebra from an existing one."""

    name = "construct"
    help_msg = "Run a construction and check what it promises"
    overview = textwrap.dedent(
        """
        Check the hypotheses of a construction, build the algebra and check
        the axiom system the construction promises. A failed hypothesis is
        an input error (status 2); a broken promise exits with status 1.

        Multipliers --p, --q and --r take s:<scalar> for a field scalar or a
        vector (a label, e<i> or v:a,b,c) acting through the dot product.
        --u and --w take vectors, as does --p for hom-novikov. Matrices are rows
        separated by ';' with entries separated by ','. The ideals of
        half-projection are ';'-separated spanning vectors.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--kind",
            required=True,
            choices=[kind.value for kind in ConstructionKind],
            help="Construction to run",
        )
        base.add_file_argument(parser)
        parser.add_argument(
            "other",
            nargs="?",
            help="Second algebra, for the tensor constructions",
        )
        for name in ("p", "q", "r"):
            parser.add_argument(f"--{name}", help=f"Multiplier {name}")
        parser.add_argument("--u", help="Vector u of the Kantor product")
        parser.add_argument("--w", help="Vector w in Ann(A o A) outside Ann_L(A)")
        parser.add_argument("--phi", metavar="matrix", help="Centroid element of dot")
        parser.add_argument("--derivation", metavar="matrix", help="Derivation D")
        parser.add_argument("--ideal1", help="Spanning vectors of the first ideal")
        parser.add_argument("--ideal2", help="Spanning vectors of the second ideal")

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        kind = ConstructionKind(parsed_args.kind)
        handlers: dict[ConstructionKind, Handler] = {
            ConstructionKind.COMMUTATOR: lambda a, _: self._built(constructions.commutator_tp(a)),
            ConstructionKind.TWISTED: lambda a, args: self._built(
                constructions.twisted_bracket_tp(a, self._matrix(a, args, "derivation"))
            ),
            ConstructionKind.CENTROID_PRODUCT: lambda a, args: self._built(
                constructions.centroid_product(a, self._matrix(a, args, "phi"))
            ),
            ConstructionKind.SCALED: lambda a, args: self._built(
                constructions.scaled_product(a, self._parameter(a, args, "p"))
            ),
            ConstructionKind.RDNP: lambda a, args: self._built(
                constructions.rdnp_from_derivation(a, self._matrix(a, args, "derivation"))
            ),
            ConstructionKind.TENSOR: lambda a, args: self._built(
                constructions.tensor_tnp(a, self._other(args))
            ),
            ConstructionKind.TENSOR_MIXED: lambda a, args: self._built(
                constructions.tensor_mixed_tp(a, self._other(args))
            ),
            ConstructionKind.DEFORM: lambda a, args: self._built(
                constructions.deform_twist(
                    a, self._parameter(a, args, "p"), self._parameter(a, args, "q")
                )
            ),
            ConstructionKind.DEFORM_NOVIKOV: lambda a, args: self._built(
                constructions.deform_novikov(a, self._parameter(a, args, "q"))
            ),
            ConstructionKind.DEFORM_SCALED: lambda a, args: self._built(
                constructions.deform_scaled(
                    a,
                    self._parameter(a, args, "p"),
                    self._parameter(a, args, "q"),
                    self._parameter(a, args, "r"),
                )
            ),
            ConstructionKind.KANTOR: self._kantor,
            ConstructionKind.SOLVABLE_TNP: lambda a, _: self._built(
                constructions.tnp_on_solvable(a)
            ),
            ConstructionKind.SQUARE_ANN_TNP: self._square_annihilator,
            ConstructionKind.HALF_PROJECTION: lambda a, args: self._half(
                constructions.projection_half_derivation(
                    a,
                    self._services.algebra.parse_subspace(a, self._required(args, "ideal1")),
                    self._services.algebra.parse_subspace(a, self._required(args, "ideal2")),
                )
            ),
            ConstructionKind.HALF_COMPLEMENT: lambda a, _: self._half(
                constructions.complement_half_derivation(a)
            ),
            ConstructionKind.HOM_NOVIKOV: self._hom_novikov,
        }
        data, passed = handlers[kind](algebra, parsed_args)
        result = {"kind": kind.value, "input": algebra.name, **data}
        arguments = {
            key: getattr(parsed_args, key)
            for key in ("p", "q", "r", "u", "w", "phi", "derivation", "ideal1", "ideal2")
            if getattr(parsed_args, key) is not None
        }
        return self.finish(
            result,
            passed=passed,
            summary=f"{kind.value}: {'pass' if passed else 'fail'}",
            arguments={"kind": kind.value, **arguments},
        )

    @staticmethod
    def _required(parsed_args: argparse.Namespace, name: str) -> str:
        value = getattr(parsed_args, name)
        if value is None:
            raise errors.ArgumentValueError(
                f"--kind {parsed_args.kind} needs --{name.replace('_', '-')}"
            )
        return value

    def _matrix(self, algebra: Algebra, parsed_args: argparse.Namespace, name: str) -> Any:  # noqa: ANN401
        return self._services.algebra.parse_matrix(algebra, self._required(parsed_args, name))

    def _parameter(
        self, algebra: Algebra, parsed_args: argparse.Namespace, name: str
    ) -> constructions.Parameter:
        return self._services.algebra.parse_parameter(
            algebra, self._required(parsed_args, name)
        )

    def _other(self, parsed_args: argparse.Namespace) -> Algebra:
        if parsed_args.other is None:
            raise errors.ArgumentValueError(f"--kind {parsed_args.kind} needs a second algebra")
        return self.load(parsed_args.other)

    @staticmethod
    def _built(result: constructions.ConstructionResult) -> tuple[dict[str, Any], bool]:
        return _construction_data(result), result.ok

    def _kantor(
        self, algebra: Algebra, parsed_args: argparse.Namespace
    ) -> tuple[dict[str, Any], bool]:
        u = self._services.algebra.parse_vector(algebra, self._required(parsed_args, "u"))
        kantor = constructions.kantor_product(algebra, u)
        data = {
            "pass": kantor.ok,
            "results": {
                "star_comm": _construction_data(kantor.star_comm),
                "star_nov": _construction_data(kantor.star_nov),
                "tnp": _construction_data(kantor.tnp),
            },
        }
        return data, kantor.ok

    def _square_annihilator(
        self, algebra: Algebra, parsed_args: argparse.Namespace
    ) -> tuple[dict[str, Any], bool]:
        if parsed_args.w is not None:
            w = self._services.algebra.parse_vector(algebra, parsed_args.w)
        else:
            w = constructions.find_square_annihilator_witness(algebra)
            if w is None:
                raise errors.HypothesisError(
                    "tnp_from_square_annihilator", "some w in Ann(A o A) lies outside Ann_L(A)"
                )
        result = constructions.tnp_from_square_annihilator(algebra, w)
        return {**_construction_data(result), "w": w.to_strings()}, result.ok

    @staticmethod
    def _half(result: constructions.HalfDerivationResult) -> tuple[dict[str, Any], bool]:
        return {
            "provenance": result.provenance,
            "pass": result.ok,
            "phi": result.phi.to_strings(),
            "report": result.report.marshal(),
        }, result.ok

    def _hom_novikov(
        self, algebra: Algebra, parsed_args: argparse.Namespace
    ) -> tuple[dict[str, Any], bool]:
        p = self._services.algebra.parse_vector(algebra, self._required(parsed_args, "p"))
        report: CheckReport = constructions.hom_novikov_check(algebra, p)
        return {
            "pass": report.passed,
            "status": report.status.value,
            "report": report.marshal(),
        }, report.status is not CheckStatus.FAIL


class AffinizeCheckCommand(base.AppCommand):
    """Compare TNP on an algebra with transposed Poisson on its affinization window."""

    name = "affinize-check"
    help_msg = "Check a TNP algebra against its windowed affinization"
    overview = textwrap.dedent(
        """
        Build the degree window -M..M of A (x) k[t, 1/t] with the dot product
        extended degreewise and the bracket
        [x t^m, y t^n] = m (x o y) t^(m+n-1) - n (y o x) t^(m+n-1),
        then check that A is TNP exactly when the window is transposed
        Poisson. Exits with status 1 when the two answers disagree.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        parser.add_argument(
            "--window", type=int, default=2, metavar="M", help="Window radius (default: 2)"
        )

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        report = affinize.affinization_equivalence_report(algebra, parsed_args.window)
        return self.finish(
            {"algebra": algebra.name, **report.marshal()},
            passed=report.agree,
            summary=(
                f"TNP {report.tnp_pass}, windowed transposed Poisson "
                f"{report.windowed_tp_pass}, agree {report.agree}"
            ),
            arguments={"window": parsed_args.window},
        )
