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
"""Shared data for all tnpbench tests."""
from __future__ import annotations

import pathlib
from importlib import metadata

import pytest

import tnpbench
from tnpbench import catalog
from tnpbench.algcore import Algebra
from tnpbench.exactfield import FieldDescriptor
from tnpbench.models.algebra import AlgebraFile
from tnpbench.services import service_factory

DATA_DIR = pathlib.Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def reset_services():
    yield
    service_factory.ServiceFactory.reset()


@pytest.fixture(scope="session")
def default_app_metadata() -> tnpbench.AppMetadata:
    with pytest.MonkeyPatch.context() as m:
        m.setattr(metadata, "version", lambda _: "3.14159")
        return tnpbench.AppMetadata(
            "testbench",
            "A fake app for testing tnpbench",
        )


@pytest.fixture
def app_metadata(default_app_metadata) -> tnpbench.AppMetadata:
    return default_app_metadata


@pytest.fixture
def fake_services(app_metadata) -> tnpbench.ServiceFactory:
    return tnpbench.ServiceFactory(app_metadata)


@pytest.fixture
def app(app_metadata, fake_services) -> tnpbench.Application:
    return tnpbench.Application(app_metadata, fake_services)


@pytest.fixture(scope="session")
def rational() -> FieldDescriptor:
    return FieldDescriptor.rational()


@pytest.fixture(scope="session")
def gf3() -> FieldDescriptor:
    return FieldDescriptor.prime(3)


@pytest.fixture(scope="session")
def gf5() -> FieldDescriptor:
    return FieldDescriptor.prime(5)


@pytest.fixture(scope="session")
def data_dir() -> pathlib.Path:
    return DATA_DIR


@pytest.fixture
def n1_tnp() -> Algebra:
    return AlgebraFile.from_file(DATA_DIR / "n1_tnp.json").to_algebra()


@pytest.fixture
def n4_bad() -> Algebra:
    return AlgebraFile.from_file(DATA_DIR / "n4_bad.json").to_algebra()


@pytest.fixture
def get_algebra():
    """Build a catalog algebra, over QQ unless a field is given."""

    def _get(name: str, field: FieldDescriptor | None = None, **params) -> Algebra:
        return catalog.catalog_get(name, {k: str(v) for k, v in params.items()}, field)

    return _get
