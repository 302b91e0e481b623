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
"""Commands in the 'Spaces' group: derivations, centroids, ideals and series."""
from __future__ import annotations

import argparse
import functools
import textwrap

from craft_cli import CommandGroup

from tnpbench import linsolve
from tnpbench.algcore import Algebra, centroid_membership
from tnpbench.catalog import window_half_derivations
from tnpbench.commands import base


def get_spaces_command_group() -> CommandGroup:
    """Return the 'Spaces' command group."""
    return CommandGroup(
        "Spaces",
        [
            DerivationsCommand,
            CentroidCommand,
            AnnihilatorCommand,
            SolvableCommand,
            SimpleCommand,
        ],
    )


class DerivationsCommand(base.AppCommand):
    """Solve for the delta-derivations of an algebra."""

    name = "derivations"
    help_msg = "Compute the space of delta-derivations"
    overview = textwrap.dedent(
        """
        Solve phi(x*y) = delta (phi(x)*y + x*phi(y)) for all linear maps phi.
        With --delta 1/2 this gives the 1/2-derivations; with --op both the
        maps must satisfy the equation for dot and circ at once.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        parser.add_argument("--delta", default="1", help="The scalar delta (default: 1)")
        base.add_op_argument(parser, both=True)
        parser.add_argument(
            "--support",
            type=int,
            help="Only 1/2-derivations of circ supported on the first K basis vectors",
        )

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        if parsed_args.support is not None:
            return self._run_window(algebra, parsed_args.support)
        delta = self._services.algebra.parse_scalar(algebra, parsed_args.delta)
        spaces = [
            linsolve.delta_derivation_space(algebra, opname, delta)
            for opname in base.opnames(parsed_args.op)
        ]
        space = functools.reduce(linsolve.LinearMapSpace.intersection, spaces)
        return self.finish(
            {
                "algebra": algebra.name,
                "op": parsed_args.op,
                "delta": algebra.field.format(delta),
                "dim": space.dim,
                "basis": space.to_strings(),
                "only_scalars": space.only_scalars(),
            },
            summary=f"{space.dim}-dimensional space of delta-derivations",
            arguments={"op": parsed_args.op, "delta": algebra.field.format(delta)},
        )

    def _run_window(self, algebra: Algebra, support: int) -> int:
        space = window_half_derivations(algebra, support)
        return self.finish(
            {
                "algebra": algebra.name,
                "op": "circ",
                "delta": algebra.field.format(algebra.field.parse("1/2")),
                "support": support,
                "dim": space.dim,
                "basis": space.to_strings(),
                "only_scalars": space.only_scalars(),
            },
            summary=f"{space.dim}-dimensional space of windowed 1/2-derivations",
            arguments={"support": support},
        )


class CentroidCommand(base.AppCommand):
    """Compute the centroid of one operation."""

    name = "centroid"
    help_msg = "Compute the centroid, or test a map for membership"

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        base.add_op_argument(parser)
        parser.add_argument("--phi", metavar="matrix", help="Map to test against the centroid")

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        space = linsolve.centroid_space(algebra, parsed_args.op)
        result: dict[str, object] = {
            "algebra": algebra.name,
            "op": parsed_args.op,
            "dim": space.dim,
            "basis": space.to_strings(),
        }
        passed = True
        arguments: dict[str, object] = {"op": parsed_args.op}
        if parsed_args.phi:
            phi = self._services.algebra.parse_matrix(algebra, parsed_args.phi)
            report = centroid_membership(algebra, parsed_args.op, phi)
            passed = report.passed
            result["member"] = passed
            result["report"] = report.marshal()
            arguments["phi"] = phi.to_strings()
        return self.finish(
            result,
            passed=passed,
            summary=f"{space.dim}-dimensional centroid of {parsed_args.op}",
            arguments=arguments,
        )


class AnnihilatorCommand(base.AppCommand):
    """Compute an annihilator."""

    name = "ann"
    help_msg = "Compute the left, right or two-sided annihilator"

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        base.add_op_argument(parser)
        parser.add_argument(
            "--kind",
            choices=[kind.value for kind in linsolve.AnnihilatorKind],
            default=linsolve.AnnihilatorKind.TWO_SIDED.value,
            help="Which side to annihilate (default: two_sided)",
        )

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        kind = linsolve.AnnihilatorKind(parsed_args.kind)
        space = linsolve.annihilator(algebra, parsed_args.op, kind)
        return self.finish(
            {
                "algebra": algebra.name,
                "op": parsed_args.op,
                "kind": kind.value,
                "dim": space.dim,
                "basis": space.to_strings(),
            },
            summary=f"{kind.value} annihilator of {parsed_args.op} has dimension {space.dim}",
            arguments={"op": parsed_args.op, "kind": kind.value},
        )


class SolvableCommand(base.AppCommand):
    """Report solvability and nilpotency."""

    name = "solvable"
    help_msg = "Report the derived and lower central series of an operation"

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        base.add_op_argument(parser)

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        report = linsolve.solvability_report(algebra, parsed_args.op)
        return self.finish(
            {"algebra": algebra.name, **report.marshal()},
            summary=(
                f"{parsed_args.op}: solvable={report.solvable} "
                f"right_nilpotent={report.right_nilpotent} nilpotent={report.nilpotent}"
            ),
            arguments={"op": parsed_args.op},
        )


class SimpleCommand(base.AppCommand):
    """Decide simplicity of one operation or of the pair."""

    name = "simple"
    help_msg = "Search for a proper non-zero ideal"
    overview = textwrap.dedent(
        """
        Over GF(p) every projective point generates an ideal that is checked
        for properness, up to the configured bound on the number of points.
        Over the rationals the basis vectors and seeded random generators are
        spun, so a negative answer is a witness and a positive one is
        heuristic. With --op both, ideals must be ideals of dot and circ.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        base.add_op_argument(parser, both=True)
        parser.add_argument("--seed", type=int, help="Seed for the random generators")
        parser.add_argument("--jobs", type=int, help="Worker threads")

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        seed = int(self.get_arg_or_config(parsed_args, "seed"))
        jobs = int(self.get_arg_or_config(parsed_args, "jobs"))
        bound = int(self._services.config.get("simple_projective_bound"))
        report = linsolve.is_simple(
            algebra, base.opnames(parsed_args.op), seed=seed, jobs=jobs, bound=bound
        )
        return self.finish(
            {"algebra": algebra.name, **report.marshal()},
            summary=f"simple={report.simple} ({report.method.value})",
            arguments={"op": parsed_args.op},
            seed=report.seed,
        )
