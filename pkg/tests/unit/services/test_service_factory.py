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
"""Tests for the lazy-loading service factory."""
from unittest import mock

import pytest
import pytest_check

from tnpbench import services


class FakeService(services.AppService):
    """A fake service for testing."""

    def __init__(self, app, services, **kwargs):
        super().__init__(app, services)
        self.kwargs = kwargs
        self.setup_count = 0

    def setup(self):
        super().setup()
        self.setup_count += 1


@pytest.mark.parametrize(
    ("service_class", "module"),
    [
        ("ConfigService", "tnpbench.services.config"),
        ("AlgebraService", "tnpbench.services.algebra"),
        ("ReportService", "tnpbench.services.report"),
    ],
)
def test_register_service_by_path(service_class, module):
    services.ServiceFactory.register("testy", service_class, module=module)

    service = services.ServiceFactory.get_class("testy")
    pytest_check.equal(service.__module__, module)
    pytest_check.equal(service.__name__, service_class)


def test_register_service_by_reference():
    services.ServiceFactory.register("testy", FakeService)

    assert services.ServiceFactory.get_class("testy") is FakeService


def test_register_service_by_path_no_module():
    with pytest.raises(KeyError, match="Must set module"):
        services.ServiceFactory.register("testy", "FakeService")


def test_register_service_by_reference_with_module():
    with pytest.raises(KeyError, match="Must not set module"):
        services.ServiceFactory.register("testy", FakeService, module="__main__")


def test_get_class_unregistered():
    with pytest.raises(AttributeError, match="Not a registered service: nothing"):
        services.ServiceFactory.get_class("nothing")


def test_default_services(fake_services):
    pytest_check.is_instance(fake_services.config, services.ConfigService)
    pytest_check.is_instance(fake_services.algebra, services.AlgebraService)
    pytest_check.is_instance(fake_services.report, services.ReportService)


def test_get_caches_instance(app_metadata):
    services.ServiceFactory.register("fake", FakeService)
    factory = services.ServiceFactory(app_metadata)

    first = factory.get("fake")

    assert factory.get("fake") is first
    assert factory.fake is first
    assert first.setup_count == 1


def test_private_attribute_not_a_service(fake_services):
    with pytest.raises(AttributeError):
        fake_services._not_a_service  # noqa: B018


@pytest.mark.parametrize(
    ("first_kwargs", "second_kwargs", "expected"),
    [
        ({}, {}, {}),
        ({"arg_1": None}, {"arg_b": "something"}, {"arg_1": None, "arg_b": "something"}),
        ({"overridden": False}, {"overridden": True}, {"overridden": True}),
    ],
)
def test_update_kwargs(app_metadata, first_kwargs, second_kwargs, expected):
    mock_class = mock.Mock(return_value=mock.Mock(spec=services.AppService))
    services.ServiceFactory.register("fake", mock_class)
    factory = services.ServiceFactory(app_metadata)

    factory.update_kwargs("fake", **first_kwargs)
    factory.update_kwargs("fake", **second_kwargs)

    pytest_check.is_(factory.fake, mock_class.return_value)
    with pytest_check.check():
        mock_class.assert_called_once_with(app=app_metadata, services=factory, **expected)
    with pytest_check.check():
        mock_class.return_value.setup.assert_called_once_with()


def test_reset_restores_defaults():
    services.ServiceFactory.register("config", FakeService)

    services.ServiceFactory.reset()

    assert services.ServiceFactory.get_class("config") is services.ConfigService
