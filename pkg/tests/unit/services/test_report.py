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
"""Tests for the report service."""
import json

import pytest

from tnpbench.models.report import input_digest


@pytest.fixture
def report_service(fake_services):
    return fake_services.report


def test_build(report_service):
    envelope = report_service.build("check", {"pass": True}, arguments={"axiom": "TNP"})

    assert envelope.tool == "tnpbench"
    assert envelope.version == "3.14159"
    assert envelope.command == "check"
    assert envelope.seed is None
    assert envelope.input_digest == input_digest(
        {"algebras": [], "arguments": {"axiom": "TNP"}}
    )


def test_digest_covers_loaded_algebras(fake_services, report_service):
    before = report_service.build("check", {}).input_digest

    fake_services.algebra.load("catalog:T2")

    assert report_service.build("check", {}).input_digest != before


def test_digest_covers_arguments(report_service):
    first = report_service.build("simple", {}, arguments={"seed": 1})
    second = report_service.build("simple", {}, arguments={"seed": 2})

    assert first.input_digest != second.input_digest


def test_emit(emitter, report_service):
    envelope = report_service.emit("simple", {"simple": True}, seed=7)

    emitter.assert_message(envelope.to_json())
    assert json.loads(envelope.to_json())["seed"] == 7
