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
"""Tests for the check commands."""
import pytest
import pytest_check

from tnpbench import errors
from tnpbench.commands.checks import CheckCommand, IdentitiesCommand, get_checks_command_group


def test_get_checks_command_group():
    assert get_checks_command_group().commands == [CheckCommand, IdentitiesCommand]


# region check
def test_check_pass(run_command, data_dir):
    retcode, envelope = run_command(CheckCommand, str(data_dir / "n1_tnp.json"), "--axiom", "tnp")

    assert retcode == 0
    pytest_check.equal(envelope.command, "check")
    pytest_check.is_true(envelope.result["pass"])
    pytest_check.equal(envelope.result["axiom"], "tnp")
    pytest_check.is_false(envelope.result["windowed"])
    pytest_check.is_none(envelope.result["report"]["witness"])


def test_check_fail(run_command, data_dir):
    retcode, envelope = run_command(CheckCommand, str(data_dir / "n4_bad.json"), "--axiom", "tnp")

    assert retcode == errors.CHECK_FAILED_RETCODE
    assert envelope.result["report"]["witness"] == {
        "component": "dot-circ-right-commutativity",
        "indices": [0, 0, 1],
        "residual": ["1", "0"],
    }


def test_check_summary(emitter, run_command, data_dir):
    run_command(CheckCommand, str(data_dir / "n4_bad.json"), "--axiom", "tnp")

    emitter.assert_progress(
        "N4 with an incompatible dot: TNP fail (dot-circ-right-commutativity at [0, 0, 1])",
        permanent=True,
    )


def test_check_windowed(run_command):
    retcode, envelope = run_command(CheckCommand, "catalog:Laurent(M=2)", "--axiom", "rdnp")

    assert retcode == 0
    assert envelope.result["windowed"]


def test_check_missing_operation(run_command):
    with pytest.raises(errors.MissingOperationError) as exc_info:
        run_command(CheckCommand, "catalog:T2", "--axiom", "tnp")

    assert exc_info.value.retcode == errors.USAGE_RETCODE


def test_check_digest_depends_on_axiom(run_command):
    _, first = run_command(CheckCommand, "catalog:T2-tnp", "--axiom", "tnp")
    _, second = run_command(CheckCommand, "catalog:T2-tnp", "--axiom", "novikov_left")

    assert first.input_digest != second.input_digest


def test_check_bad_axiom(run_command):
    with pytest.raises(SystemExit):
        run_command(CheckCommand, "catalog:T2", "--axiom", "nonsense")


# endregion
# region identities
@pytest.mark.parametrize("identity", ["tid1", "tid2", "tid3", "difflem"])
def test_identities_on_tnp(run_command, identity):
    retcode, envelope = run_command(
        IdentitiesCommand, "catalog:N1-tnp(n=2,m=3)", "--identity", identity
    )

    assert retcode == 0
    assert envelope.result["pass"]


def test_identity_not_applicable(run_command):
    retcode, envelope = run_command(
        IdentitiesCommand, "catalog:Ex2.15@GF(3)", "--identity", "tid4"
    )

    assert retcode == 0
    assert not envelope.result["pass"]
    assert envelope.result["report"]["status"] == "not-applicable"


def test_identity_with_aux(run_command):
    retcode, envelope = run_command(
        IdentitiesCommand, "catalog:N3", "--identity", "hom_novikov", "--aux", "1,0;0,1"
    )

    assert retcode == 0
    assert envelope.result["pass"]


def test_identity_needs_aux(run_command):
    with pytest.raises(errors.MissingAuxiliaryMapError):
        run_command(IdentitiesCommand, "catalog:N3", "--identity", "half_id1")


def test_identity_bad_aux(run_command):
    with pytest.raises(errors.ArgumentValueError, match="expected a 2x2 matrix"):
        run_command(IdentitiesCommand, "catalog:N3", "--identity", "half_id1", "--aux", "1")


# endregion
