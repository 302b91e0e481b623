# Copyright 2023-2024 Canonical Ltd.
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU Lesser General Public
# License version 3 as published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU
# Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program; if not, write to the Free Software Foundation,
# Inc., 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA.
#
"""Configuration for tnpbench documentation."""

import datetime

project = "tnpbench"
author = "Canonical Group Ltd"

copyright = f"2026-{datetime.date.today().year}, {author}"  # noqa: A001

# region Configuration for canonical-sphinx
ogp_site_name = project

extensions = [
    "canonical_sphinx",
    "sphinx.ext.autodoc",
]
# endregion
