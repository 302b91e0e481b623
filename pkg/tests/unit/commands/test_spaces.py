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
"""Tests for the space commands."""
import pytest
import pytest_check

from tnpbench import errors
from tnpbench.commands import spaces


def test_get_spaces_command_group():
    assert spaces.get_spaces_command_group().commands == [
        spaces.DerivationsCommand,
        spaces.CentroidCommand,
        spaces.AnnihilatorCommand,
        spaces.SolvableCommand,
        spaces.SimpleCommand,
    ]


# region derivations
@pytest.mark.parametrize(
    ("argv", "dim", "only_scalars"),
    [
        pytest.param(["catalog:Idempotent2"], 0, True, id="derivations"),
        pytest.param(["catalog:Idempotent2", "--delta", "1/2"], 2, False, id="half"),
        pytest.param(["catalog:Ex2.5", "--delta", "1/2"], 1, True, id="half-scalar"),
        pytest.param(["catalog:Ex2.5(alpha=3)", "--delta", "1/2", "--op", "both"], 1, True, id="both"),
    ],
)
def test_derivations(run_command, argv, dim, only_scalars):
    retcode, envelope = run_command(spaces.DerivationsCommand, *argv)

    assert retcode == 0
    pytest_check.equal(envelope.result["dim"], dim)
    pytest_check.equal(len(envelope.result["basis"]), dim)
    pytest_check.equal(envelope.result["only_scalars"], only_scalars)


def test_derivations_canonical_delta(run_command):
    _, envelope = run_command(spaces.DerivationsCommand, "catalog:T2", "--delta", "2/4")

    assert envelope.result["delta"] == "1/2"


def test_derivations_windowed(run_command):
    retcode, envelope = run_command(
        spaces.DerivationsCommand, "catalog:OsbornWindow(b=1,N=4)", "--support", "3"
    )

    assert retcode == 0
    assert envelope.result["support"] == 3
    assert envelope.result["delta"] == "1/2"
    assert envelope.result["basis"] == [[["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]]]
    assert envelope.result["only_scalars"]


def test_derivations_windowed_bad_support(run_command):
    with pytest.raises(errors.ArgumentValueError, match="support must lie in"):
        run_command(spaces.DerivationsCommand, "catalog:OsbornWindow", "--support", "0")


# endregion
# region centroid
def test_centroid(run_command):
    retcode, envelope = run_command(spaces.CentroidCommand, "catalog:Idempotent2")

    assert retcode == 0
    assert envelope.result["dim"] == 2
    assert "member" not in envelope.result


@pytest.mark.parametrize(
    ("phi", "member", "retcode"),
    [("1,0;0,0", True, 0), ("0,1;1,0", False, errors.CHECK_FAILED_RETCODE)],
)
def test_centroid_membership(run_command, phi, member, retcode):
    actual, envelope = run_command(spaces.CentroidCommand, "catalog:Idempotent2", "--phi", phi)

    assert actual == retcode
    assert envelope.result["member"] is member


# endregion
# region annihilators
@pytest.mark.parametrize(
    ("kind", "basis"),
    [
        ("two_sided", [["1", "0", "0"]]),
        ("left", [["1", "0", "0"], ["0", "1", "0"]]),
        ("right", [["1", "0", "0"], ["0", "0", "1"]]),
    ],
)
def test_annihilator(run_command, kind, basis):
    retcode, envelope = run_command(spaces.AnnihilatorCommand, "catalog:Ex3.17", "--kind", kind)

    assert retcode == 0
    assert envelope.result["kind"] == kind
    assert envelope.result["basis"] == basis


# endregion
# region solvability and simplicity
def test_solvable(run_command):
    retcode, envelope = run_command(spaces.SolvableCommand, "catalog:Ex3.17")

    assert retcode == 0
    pytest_check.is_true(envelope.result["solvable"])
    pytest_check.equal(envelope.result["derived_length"], 2)
    pytest_check.equal(envelope.result["derived_dims"], [3, 1, 0])
    pytest_check.equal(envelope.result["algebra"], "Ex3.17")


def test_simple_exhaustive(run_command):
    retcode, envelope = run_command(spaces.SimpleCommand, "catalog:Idempotent2@GF(3)")

    assert retcode == 0
    assert envelope.seed is None
    assert envelope.result["simple"] is False
    assert envelope.result["method"] == "exhaustive"
    assert envelope.result["witness"]["point"] == ["1", "0"]


def test_simple_seeded(run_command):
    retcode, envelope = run_command(
        spaces.SimpleCommand, "catalog:Ex2.5", "--seed", "7", "--jobs", "2"
    )

    assert retcode == 0
    assert envelope.seed == 7
    assert envelope.result["method"] == "generator_spin"


def test_simple_seed_from_config(monkeypatch, run_command):
    monkeypatch.setenv("TESTBENCH_SEED", "11")

    _, envelope = run_command(spaces.SimpleCommand, "catalog:Ex2.5")

    assert envelope.seed == 11


def test_simple_bound_from_config(monkeypatch, run_command):
    monkeypatch.setenv("TESTBENCH_SIMPLE_PROJECTIVE_BOUND", "3")

    with pytest.raises(errors.EnumerationBoundError):
        run_command(spaces.SimpleCommand, "catalog:Idempotent2@GF(3)")


# endregion
