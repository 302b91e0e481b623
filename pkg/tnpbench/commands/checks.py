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
"""Commands in the 'Checks' group: axiom systems and derived identities."""
from __future__ import annotations

import argparse
import textwrap

from craft_cli import CommandGroup

from tnpbench.algcore import AxiomId, IdentityId, check_axiom, check_axiom_windowed, check_identity
from tnpbench.commands import base


def get_checks_command_group() -> CommandGroup:
    """Return the 'Checks' command group."""
    return CommandGroup("Checks", [CheckCommand, IdentitiesCommand])


class CheckCommand(base.AppCommand):
    """Decide an axiom system on an algebra."""

    name = "check"
    help_msg = "Check an axiom system on an algebra"
    overview = textwrap.dedent(
        """
        Evaluate every component of an axiom system on all basis tuples and
        report the first failing component with its tuple and residual.
        Windowed algebras are checked on the tuples whose products are all
        defined. Exits with status 1 when the axiom fails.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        parser.add_argument(
            "--axiom",
            required=True,
            choices=[axiom.value for axiom in AxiomId],
            help="Axiom system to check",
        )

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        axiom = AxiomId(parsed_args.axiom)
        check = check_axiom_windowed if algebra.is_windowed else check_axiom
        report = check(algebra, axiom)
        summary = f"{algebra.name or parsed_args.file}: {axiom.name} {report.status.value}"
        if report.witness:
            summary += (
                f" ({report.witness.component} at {report.witness.indices})"
            )
        return self.finish(
            {
                "algebra": algebra.name,
                "axiom": axiom.value,
                "windowed": algebra.is_windowed,
                "pass": report.passed,
                "report": report.marshal(),
            },
            passed=report.passed,
            summary=summary,
            arguments={"axiom": axiom.value},
        )


class IdentitiesCommand(base.AppCommand):
    """Decide a derived identity on an algebra."""

    name = "identities"
    help_msg = "Check a derived identity, optionally with an auxiliary map"
    overview = textwrap.dedent(
        """
        Check one of the identities that hold on every TNP algebra, or one of
        the identities of a 1/2-derivation or Hom-Novikov map given with
        --aux as rows separated by ';' and entries by ','. A not-applicable
        result is not a failure.
        """
    )

    def fill_parser(self, parser: argparse.ArgumentParser) -> None:
        base.add_file_argument(parser)
        parser.add_argument(
            "--identity",
            required=True,
            choices=[identity.value for identity in IdentityId],
            help="Identity to check",
        )
        parser.add_argument("--aux", metavar="matrix", help="Auxiliary linear map")

    def run(self, parsed_args: argparse.Namespace) -> int:
        algebra = self.load(parsed_args.file)
        identity = IdentityId(parsed_args.identity)
        aux = (
            self._services.algebra.parse_matrix(algebra, parsed_args.aux)
            if parsed_args.aux
            else None
        )
        report = check_identity(algebra, identity, aux)
        return self.finish(
            {
                "algebra": algebra.name,
                "identity": identity.value,
                "pass": report.passed,
                "report": report.marshal(),
            },
            passed=report.ok,
            summary=f"{algebra.name or parsed_args.file}: {identity.name} {report.status.value}",
            arguments={"identity": identity.value, "aux": aux.to_strings() if aux else None},
        )
