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
"""Named algebra families: classification rows, worked examples and windows."""

from tnpbench.catalog._entries import (
    CatalogEntry,
    ParamSlot,
    ParamValue,
    catalog_entry,
    catalog_get,
    catalog_list,
)
from tnpbench.catalog import _families  # noqa: F401  (registers the entries)
from tnpbench.catalog._simple import (
    MAX_OSBORN_WINDOW,
    MAX_SIMPLE_ORDER,
    osborn_case1_window,
    simple_novikov_char_p,
    window_half_derivations,
)

__all__ = [
    "CatalogEntry",
    "ParamSlot",
    "ParamValue",
    "catalog_entry",
    "catalog_get",
    "catalog_list",
    "MAX_OSBORN_WINDOW",
    "MAX_SIMPLE_ORDER",
    "osborn_case1_window",
    "simple_novikov_char_p",
    "window_half_derivations",
]
