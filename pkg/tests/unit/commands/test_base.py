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
"""Tests for the base command."""
import argparse

import pytest
from craft_cli import CommandGroup
from typing_extensions import override

from tnpbench import errors
from tnpbench.commands import base


@pytest.fixture
def fake_command(app_metadata, fake_services):
    class FakeCommand(base.AppCommand):
        name = "fake"
        help_msg = "Help!"
        overview = "It's an overview."

        @override
        def run(self, parsed_args: argparse.Namespace) -> int:
            return self.finish(
                {"answer": 42},
                passed=parsed_args.passed,
                summary="the answer",
                arguments={"passed": parsed_args.passed},
            )

    return FakeCommand({"app": app_metadata, "services": fake_services})


def test_services(fake_command, fake_services):
    assert fake_command.services is fake_services


@pytest.mark.parametrize(
    ("passed", "retcode"), [(True, 0), (False, errors.CHECK_FAILED_RETCODE)]
)
def test_finish(emitter, fake_command, passed, retcode):
    assert fake_command.run(argparse.Namespace(passed=passed)) == retcode

    emitter.assert_progress("the answer", permanent=True)


def test_finish_emits_report(mocker, fake_command, fake_services):
    spy = mocker.spy(fake_services.report, "emit")

    fake_command.run(argparse.Namespace(passed=True))

    spy.assert_called_once_with(
        "fake", {"answer": 42}, arguments={"passed": True}, seed=None
    )


def test_get_arg_or_config_prefers_argument(fake_command):
    assert fake_command.get_arg_or_config(argparse.Namespace(jobs=4), "jobs") == 4


def test_get_arg_or_config_falls_back(monkeypatch, fake_command):
    monkeypatch.setenv("TESTBENCH_JOBS", "3")

    assert fake_command.get_arg_or_config(argparse.Namespace(jobs=None), "jobs") == 3
    assert fake_command.get_arg_or_config(argparse.Namespace(), "seed") == 0


@pytest.mark.parametrize(
    ("op", "expected"),
    [("dot", ("dot",)), ("circ", ("circ",)), ("both", ("dot", "circ"))],
)
def test_opnames(op, expected):
    assert base.opnames(op) == expected


@pytest.mark.parametrize(("both", "argv"), [(False, ["--op", "both"]), (False, ["--op", "star"])])
def test_op_argument_choices(both, argv):
    parser = argparse.ArgumentParser()
    base.add_op_argument(parser, both=both)

    with pytest.raises(SystemExit):
        parser.parse_args(argv)


def test_op_argument_default():
    parser = argparse.ArgumentParser()
    base.add_op_argument(parser, default="dot", both=True)

    assert parser.parse_args([]).op == "dot"
    assert parser.parse_args(["--op", "both"]).op == "both"


def test_command_groups_hold_app_commands(app):
    for group in app.command_groups:
        assert isinstance(group, CommandGroup)
        for command in group.commands:
            assert issubclass(command, base.AppCommand)
