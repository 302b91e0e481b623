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
"""Unit tests for the tnpbench application classes."""
from __future__ import annotations

import argparse
import importlib.metadata
import logging
import re
import sys
from unittest import mock

import craft_cli
import pytest
import pytest_check

import tnpbench
from tnpbench import application, errors


@pytest.fixture
def mock_dispatcher(monkeypatch):
    dispatcher = mock.Mock(spec_set=craft_cli.Dispatcher)
    monkeypatch.setattr("craft_cli.Dispatcher", mock.Mock(return_value=dispatcher))
    return dispatcher


# region AppMetadata
@pytest.mark.parametrize("summary", ["A summary", None])
def test_app_metadata_post_init_correct(summary):
    app = application.AppMetadata("tnpbench", summary)

    pytest_check.equal(app.version, tnpbench.__version__)
    pytest_check.is_not_none(app.summary)


def test_app_metadata_version_attribute(tmp_path, monkeypatch):
    """Set the AppMetadata version from the main app package."""
    monkeypatch.syspath_prepend(tmp_path)
    (tmp_path / "dummybench_version.py").write_text("__version__ = '1.2.3'")

    app = application.AppMetadata(name="dummybench_version", summary="dummy")

    assert app.version == "1.2.3"


def test_app_metadata_importlib(tmp_path, monkeypatch, mocker):
    monkeypatch.syspath_prepend(tmp_path)
    (tmp_path / "dummybench_importlib.py").write_text("print('hi')")
    mocker.patch.object(importlib.metadata, "version", return_value="4.5.6")

    app = application.AppMetadata(name="dummybench_importlib", summary="dummy")

    assert app.version == "4.5.6"


def test_app_metadata_dev():
    app = application.AppMetadata(name="dummybench_dev", summary="dummy")

    assert app.version == "dev"
    assert app.summary == "dummy"


# endregion
# region Command groups
def test_command_groups(app):
    names = [group.name for group in app.command_groups]

    assert names == ["Checks", "Spaces", "Constructions", "Classification", "Other"]


def test_command_names_unique(app):
    names = [cmd.name for group in app.command_groups for cmd in group.commands]

    assert len(names) == len(set(names))
    assert {"check", "identities", "search", "construct", "version"} <= set(names)


# endregion
@pytest.mark.parametrize(
    ("parsed_args", "environ", "item", "expected"),
    [
        pytest.param(argparse.Namespace(), {}, "seed", 0, id="default"),
        pytest.param(argparse.Namespace(seed=None), {}, "seed", 0, id="none-arg"),
        pytest.param(
            argparse.Namespace(seed=None),
            {"TESTBENCH_SEED": "12"},
            "seed",
            12,
            id="from-env",
        ),
        pytest.param(
            argparse.Namespace(seed=3),
            {"TESTBENCH_SEED": "12"},
            "seed",
            3,
            id="arg-wins",
        ),
    ],
)
def test_get_arg_or_config(monkeypatch, app, parsed_args, environ, item, expected):
    for var, content in environ.items():
        monkeypatch.setenv(var, content)

    assert app.get_arg_or_config(parsed_args, item) == expected


@pytest.mark.parametrize(
    ("error", "exit_code", "message"),
    [
        pytest.param(craft_cli.ProvideHelpException("Hi"), 0, "Hi\n", id="help"),
        pytest.param(
            craft_cli.ArgumentParsingError(":-("), 2, r":-\(\n", id="bad-args"
        ),
        pytest.param(
            KeyboardInterrupt(),
            130,
            r"Interrupted.\nFull execution log: '.+'\n",
            id="interrupt",
        ),
        pytest.param(
            Exception("RIP"),
            70,
            r"Internal error while loading testbench: Exception\('RIP'\)\n",
            id="internal",
        ),
    ],
)
@pytest.mark.usefixtures("emitter")
def test_get_dispatcher_error(
    check, capsys, app, mock_dispatcher, error, exit_code, message
):
    mock_dispatcher.pre_parse_args.side_effect = error

    with pytest.raises(SystemExit) as exc_info:
        app._get_dispatcher()

    check.equal(exc_info.value.code, exit_code)
    captured = capsys.readouterr()
    check.is_true(re.fullmatch(message, captured.err), captured.err)


def test_cli_loggers_level(app_metadata, fake_services, monkeypatch):
    for name in application.DEFAULT_CLI_LOGGERS:
        logging.getLogger(name).setLevel(logging.NOTSET)
    monkeypatch.setattr(sys, "argv", ["testbench"])

    app = tnpbench.Application(app_metadata, fake_services, extra_loggers={"mylib"})
    with pytest.raises(SystemExit):
        app.run()

    for name in [*application.DEFAULT_CLI_LOGGERS, "mylib"]:
        assert logging.getLogger(name).level == logging.DEBUG


@pytest.mark.parametrize(
    "argv",
    [
        pytest.param(["testbench", "--version"], id="long"),
        pytest.param(["testbench", "-V"], id="short"),
        pytest.param(["testbench", "check", "-V"], id="after-command"),
    ],
)
@pytest.mark.usefixtures("emitter")
def test_run_outputs_version(monkeypatch, mocker, app, fake_services, argv):
    spy = mocker.spy(fake_services.report, "emit")
    monkeypatch.setattr(sys, "argv", argv)

    with pytest.raises(SystemExit) as exc_info:
        app._get_dispatcher()

    assert exc_info.value.code == 0
    envelope = spy.spy_return
    assert envelope.command == "version"
    assert envelope.result == {"name": "testbench", "version": "3.14159"}


def test_show_app_name_and_version(monkeypatch, capsys, app):
    monkeypatch.setattr(sys, "argv", ["testbench", "--verbosity=trace"])

    with pytest.raises(SystemExit):
        app.run()

    _, err = capsys.readouterr()
    assert f"Starting testbench, version {app.app.version}" in err


@pytest.mark.parametrize("variable", ["CRAFT_VERBOSITY_LEVEL", "TESTBENCH_VERBOSITY_LEVEL"])
@pytest.mark.parametrize("verbosity", list(craft_cli.EmitterMode))
def test_set_verbosity_from_env(monkeypatch, capsys, app, variable, verbosity):
    monkeypatch.setattr(sys, "argv", ["testbench"])
    monkeypatch.setenv(variable, verbosity.name)

    with pytest.raises(SystemExit):
        app.run()

    _, err = capsys.readouterr()
    assert "testbench [help]" in err
    assert craft_cli.emit._mode == verbosity


def test_set_verbosity_from_env_incorrect(monkeypatch, capsys, app):
    monkeypatch.setattr(sys, "argv", ["testbench"])
    monkeypatch.setenv("CRAFT_VERBOSITY_LEVEL", "incorrect")

    with pytest.raises(SystemExit):
        app.run()

    _, err = capsys.readouterr()
    assert "Invalid verbosity level 'incorrect'" in err
    assert "Valid levels are: QUIET, BRIEF, VERBOSE, DEBUG, TRACE" in err
    assert craft_cli.emit._mode == craft_cli.EmitterMode.BRIEF


# region Run errors
@pytest.mark.parametrize(
    ("error", "return_code", "error_msg"),
    [
        pytest.param(KeyboardInterrupt(), 130, "Interrupted.\n", id="interrupt"),
        pytest.param(craft_cli.CraftError("msg"), 1, "msg\n", id="craft-error"),
        pytest.param(
            errors.AlgebraFileError("cannot read 'a.json'"),
            2,
            "cannot read 'a.json'\n",
            id="input-error",
        ),
        pytest.param(
            Exception(), 70, "testbench internal error: Exception()\n", id="internal"
        ),
        pytest.param(
            craft_cli.ArgumentParsingError("Argument parsing error"),
            2,
            "Argument parsing error\n",
            id="argument-parsing",
        ),
        pytest.param(
            craft_cli.CraftError("Arbitrary return code", retcode=69),
            69,
            "Arbitrary return code\n",
            id="custom-retcode",
        ),
    ],
)
@pytest.mark.usefixtures("emitter")
def test_run_error(monkeypatch, capsys, mock_dispatcher, app, error, return_code, error_msg):
    mock_dispatcher.load_command.side_effect = error
    mock_dispatcher.pre_parse_args.return_value = {}
    monkeypatch.setattr(sys, "argv", ["testbench", "check"])

    pytest_check.equal(app.run(), return_code)
    _, err = capsys.readouterr()
    assert err.startswith(error_msg)


@pytest.mark.parametrize("error", [KeyError(), ValueError(), Exception()])
@pytest.mark.usefixtures("emitter")
def test_run_error_debug(monkeypatch, mock_dispatcher, app, error):
    mock_dispatcher.load_command.side_effect = error
    mock_dispatcher.pre_parse_args.return_value = {}
    monkeypatch.setattr(sys, "argv", ["testbench", "check"])
    monkeypatch.setenv("CRAFT_DEBUG", "1")

    with pytest.raises(error.__class__):
        app.run()


@pytest.mark.usefixtures("emitter")
def test_run_success(monkeypatch, mock_dispatcher, app):
    mock_dispatcher.pre_parse_args.return_value = {}
    mock_dispatcher.run.return_value = 1
    monkeypatch.setattr(sys, "argv", ["testbench", "check"])

    assert app.run() == 1
    mock_dispatcher.run.assert_called_once_with()


# endregion
