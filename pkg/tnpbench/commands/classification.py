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
"""Commands in the 'Classification' group: compatible dots and the catalog."""
from __future__ import annotations

import argparse
import textwrap
from typing import Any

from craft_cli import CommandGroup, emit

from tnpbench import catalog, errors, search
from tnpbench.algcore import BilinearOp
from tnpbench.commands import base
from tnpbench.exactfield import FieldDescriptor
from tnpbench.models.algebra import AlgebraFile


def get_classification_command_group() -> CommandGroup:
    """Return the 'Classification' command group."""
    return CommandGroup(
        "Classification",
        [SearchCompatibleCommand, CatalogCommand, VerifyClassificationCommand],
    )


def _entries(field: FieldDescriptor, op: BilinearOp) -> list[list[Any]]:
    return [[i, j, k, field.format(value)] for i, j, k, value in op.entries()]


class SearchCompatibleCommand(base.AppCommand):
    """Find the dots that make a Novikov algebra TNP."""

    name = "search-compatible"
    help_msg = "Solve for the commutative associative dots compatible with circ"
    overview = textwrap.dedent(
        """
        Solve the linear part of the TNP conditions for the unknown dot, then
        the associativity of the dot. Over GF(p), --enumerate lists every
        solution, provided the linear solution space has at most --max points.
        Over the rationals the command reports whether zero is provably the
        only solution.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        parser.add_argument(
            "--enumerate",
            action="store_true",
            help="List every solution over GF(p)",
        )
        parser.add_argument(
            "--max",
            type=int,
            dest="max_enumeration",
            help="Largest number of points to enumerate",
        )
        parser.add_argument("--jobs", type=int, help="Worker threads")

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        field = algebra.field
        result: dict[str, Any] = {"algebra": algebra.name, "field": str(field)}
        arguments: dict[str, Any] = {"enumerate": parsed_args.enumerate}
        if parsed_args.enumerate:
            max_points = int(self.get_arg_or_config(parsed_args, "max_enumeration"))
            jobs = int(self.get_arg_or_config(parsed_args, "jobs"))
            arguments["max"] = max_points
            space = search.enumerate_compatible(algebra, max_points=max_points, jobs=jobs)
            solutions = space.solutions or []
            summary = f"{len(solutions)} compatible dots over {field}"
        else:
            space = search.compatible_structure_space(algebra)
            solutions = None
            summary = f"linear stage of dimension {space.basis.dim}"
        result["linear_dim"] = space.basis.dim
        result["linear_basis"] = space.basis.to_strings()
        result["residual_count"] = len(space.residuals)
        if not field.is_prime:
            certificate = search.rational_zero_certificate(space)
            result["certificate"] = certificate.marshal()
            summary += f", only zero: {certificate.only_zero}"
        if solutions is not None:
            result["count"] = len(solutions)
            result["solutions"] = [_entries(field, op) for op in solutions]
        return self.finish(result, summary=summary, arguments=arguments)


class CatalogCommand(base.AppCommand):
    """List the catalog or build one entry."""

    name = "catalog"
    help_msg = "List the built-in algebras or show one of them"
    overview = textwrap.dedent(
        """
        'catalog list' names every entry with its parameters and the axiom it
        satisfies. 'catalog show NAME' builds the entry and prints it in the
        algebra file format, ready to be saved and passed to other commands.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument("action", choices=["list", "show"], help="What to do")
        parser.add_argument("entry", nargs="?", help="Entry to show")
        parser.add_argument("--params", default="", help="Parameters as k=v,k2=v2")
        parser.add_argument("--field", default="QQ", help="QQ or GF(p) (default: QQ)")

    def run(self, parsed_args: argparse.Namespace) -> int:
        if parsed_args.action == "list":
            entries = [
                {
                    "name": entry.name,
                    "params": [
                        {"name": slot.name, "default": slot.default, "integer": slot.integer}
                        for slot in entry.params
                    ],
                    "asserted": entry.asserted.value,
                    "provenance": entry.provenance,
                }
                for entry in catalog.catalog_list()
            ]
            return self.finish(
                {"entries": entries}, summary=f"{len(entries)} catalog entries"
            )
        if not parsed_args.entry:
            raise errors.ArgumentValueError("'catalog show' needs an entry name")
        algebra_service = self._services.algebra
        field = algebra_service.parse_field(parsed_args.field)
        params = algebra_service.parse_params(parsed_args.params)
        algebra = catalog.catalog_get(parsed_args.entry, params, field)
        emit.debug(f"Built {algebra.name} over {field}")
        return self.finish(
            AlgebraFile.from_algebra(algebra).marshal(),
            summary=f"{algebra.name}: dimension {algebra.dim} over {field}",
            arguments={"entry": parsed_args.entry, "params": params, "field": str(field)},
        )


class VerifyClassificationCommand(base.AppCommand):
    """Recheck the classification of two-dimensional TNP algebras."""

    name = "verify-classification"
    help_msg = "Verify the compatible dot family of every classification row"
    overview = textwrap.dedent(
        """
        For every row, check the tabulated dot family over the rationals on a
        sweep of parameter values, then enumerate the compatible dots over
        each prime field and compare them with the family. The N6 row with
        l = 1 must be rejected. Exits with status 1 on any mismatch.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        parser.add_argument(
            "--fields",
            default="GF(3),GF(5)",
            help="Comma-separated prime fields (default: GF(3),GF(5))",
        )
        parser.add_argument("--jobs", type=int, help="Worker threads")

    def run(self, parsed_args: argparse.Namespace) -> int:
        fields = [
            self._services.algebra.parse_field(item)
            for item in parsed_args.fields.split(",")
            if item.strip()
        ]
        if any(not field.is_prime for field in fields):
            raise errors.ArgumentValueError("--fields takes prime fields only")
        jobs = int(self.get_arg_or_config(parsed_args, "jobs"))
        report = search.verify_classification(fields, jobs=jobs)
        failed = [row.row for row in report.rows if not row.passed]
        return self.finish(
            report.marshal(),
            passed=report.passed,
            summary=(
                "classification verified"
                if report.passed
                else f"classification rows failed: {', '.join(failed) or 'N6 l=1'}"
            ),
            arguments={"fields": [str(field) for field in fields]},
        )
