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
"""Tests for the algebra catalog."""

import itertools

import pytest
import pytest_check

from tnpbench import catalog, errors
from tnpbench.algcore import AxiomId, check_axiom
from tnpbench.exactfield import FieldDescriptor
from tnpbench.linsolve import delta_derivation_space, is_simple

QQ = FieldDescriptor.rational()
GF3 = FieldDescriptor.prime(3)
SWEEP = ("-1", "0", "1", "2")


def products(algebra, opname):
    return [
        (i, j, k, algebra.field.format(v)) for i, j, k, v in algebra.op(opname).entries()
    ]


def test_catalog_list_order():
    names = [entry.name for entry in catalog.catalog_list()]

    assert names[:8] == ["T2", "T3", "N1", "N2", "N3", "N4", "N5", "N6"]
    for name in ["N1-tnp", "Ex2.15", "Ex3.21", "CyclicConv", "Laurent", "SimpleNovikov"]:
        pytest_check.is_in(name, names)


def test_unknown_entry():
    with pytest.raises(errors.UnknownCatalogEntryError) as exc_info:
        catalog.catalog_get("N7")

    assert exc_info.value.retcode == errors.USAGE_RETCODE


def test_unknown_parameter():
    with pytest.raises(errors.CatalogParameterError, match="no parameter 'q'"):
        catalog.catalog_get("N1-tnp", {"q": "1"})


@pytest.mark.parametrize("value", ["0", "1"])
def test_n6_forbidden_values(value):
    with pytest.raises(errors.CatalogParameterError, match="l different from 0 and 1"):
        catalog.catalog_get("N6", {"l": value})


def test_integer_parameter():
    with pytest.raises(errors.CatalogParameterError, match="must be an integer"):
        catalog.catalog_get("CyclicConv", {"N": "x"})


def test_cyclic_coefficient_out_of_range():
    with pytest.raises(errors.CatalogParameterError, match="no coefficient a4"):
        catalog.catalog_get("CyclicConv", {"N": 4, "a4": "1"})


def test_defaults_are_one():
    algebra = catalog.catalog_get("N1-tnp")

    assert algebra.name == "N1-tnp(n=1,m=1)"
    assert products(algebra, "dot") == [(0, 0, 0, "1"), (1, 1, 1, "1")]


def test_metadata():
    algebra = catalog.catalog_get("Ex3.17")

    assert algebra.name == "Ex3.17"
    assert algebra.meta["asserted"] == "novikov_left"
    assert "solvable" in algebra.meta["provenance"]


def test_n3_tnp_constants():
    algebra = catalog.catalog_get("N3-tnp", {"n": 1, "m": 0})

    assert products(algebra, "circ") == [(0, 1, 0, "1"), (1, 0, 0, "1"), (1, 1, 1, "1")]
    assert products(algebra, "dot") == [(0, 1, 0, "1"), (1, 0, 0, "1"), (1, 1, 1, "1")]


def test_ex2_5_zero_alpha():
    algebra = catalog.catalog_get("Ex2.5", {"alpha": "0"})

    assert algebra.labels == ("e",)
    assert products(algebra, "dot") == []
    assert products(algebra, "circ") == [(0, 0, 0, "1")]


def test_cyclic_convolution():
    algebra = catalog.catalog_get("CyclicConv", {"N": 4, "a0": "1", "a2": "-1"})

    assert algebra.dim == 4
    assert algebra.labels[0] == "e0"
    assert check_axiom(algebra, AxiomId.TNP).passed


def test_ex2_11_unit_and_commutative_circ():
    algebra = catalog.catalog_get("Ex2.11", {"a11": 2, "a13": 1, "a23": 3})
    circ = algebra.op("circ")

    assert circ == circ.opposite()


def test_parameters_over_prime_field():
    algebra = catalog.catalog_get("N1-tnp", {"n": "4", "m": "1/2"}, GF3)

    assert products(algebra, "dot") == [(0, 0, 0, "1"), (1, 1, 1, "2")]


def _sweep_params(entry, values):
    names = [slot.name for slot in entry.params]
    for combo in itertools.product(values, repeat=len(names)):
        params = dict(zip(names, combo))
        if entry.name.startswith("N6") and params["l"] in ("0", "1"):
            continue
        yield params


def _sweep_cases():
    for entry in catalog.catalog_list():
        if entry.name in ("SimpleNovikov", "OsbornWindow", "CyclicConv", "Laurent"):
            continue
        yield pytest.param(entry, id=entry.name)


@pytest.mark.parametrize("entry", _sweep_cases())
@pytest.mark.parametrize(
    ("field", "values"),
    [
        pytest.param(QQ, SWEEP, id="QQ"),
        pytest.param(GF3, ("0", "1", "2"), id="GF3"),
    ],
)
def test_entries_pass_asserted_axiom(entry, field, values):
    for params in _sweep_params(entry, values):
        algebra = entry.build(field, params)
        pytest_check.is_true(
            check_axiom(algebra, entry.asserted).passed, f"{algebra.name} over {field}"
        )


@pytest.mark.parametrize("params", [{"n": 1, "l": 2, "k": 3}, {"n": 0, "l": -1, "k": 1}])
def test_ex2_15_is_both(params):
    algebra = catalog.catalog_get("Ex2.15", params)

    assert check_axiom(algebra, AxiomId.TNP).passed
    assert check_axiom(algebra, AxiomId.NP).passed


@pytest.mark.parametrize("window", [0, 65])
def test_laurent_window_bounds(window):
    with pytest.raises(errors.CatalogParameterError, match="1 <= M <= 64"):
        catalog.catalog_get("Laurent", {"M": window})


def test_laurent_window():
    algebra = catalog.catalog_get("Laurent", {"M": 1})

    assert algebra.labels == ("t^-1", "t^0", "t^1")
    assert algebra.is_windowed
    # t^1 o t^0 = t^0, while t^-1 o t^-1 leaves the window.
    assert (2, 1, 1, "1") in products(algebra, "circ")
    assert (0, 0) in algebra.masks["circ"]


# region Simple Novikov algebras
def test_simple_novikov_constants():
    algebra = catalog.simple_novikov_char_p(3, 1)

    assert algebra.labels == ("y-1", "y0", "y1")
    assert algebra.field == GF3
    circ = products(algebra, "circ")
    pytest_check.is_in((1, 1, 1, "1"), circ)
    pytest_check.is_in((1, 2, 2, "2"), circ)
    pytest_check.is_in((0, 1, 0, "1"), circ)


def test_simple_novikov_a_term():
    algebra = catalog.simple_novikov_char_p(3, 1, a=1)

    assert (0, 0, 2, "1") in products(algebra, "circ")


@pytest.mark.parametrize(
    ("p", "n"), [pytest.param(2, 1, id="even"), pytest.param(9, 1, id="composite"),
                 pytest.param(3, 0, id="n-zero"), pytest.param(3, 8, id="too-big")]
)
def test_simple_novikov_rejects(p, n):
    with pytest.raises(errors.CatalogParameterError):
        catalog.simple_novikov_char_p(p, n)


@pytest.mark.parametrize("p", [3, 5])
def test_simple_novikov_half_derivations_are_scalar(p):
    field = FieldDescriptor.prime(p)
    half = field.one / field.element(2)
    for a, b in itertools.product(range(p), repeat=2):
        algebra = catalog.simple_novikov_char_p(p, 1, a, b)
        space = delta_derivation_space(algebra, "circ", half)
        pytest_check.equal(space.dim, 1, f"{algebra.name}")
        pytest_check.is_true(space.only_scalars(), f"{algebra.name}")


@pytest.mark.parametrize(("a", "b"), list(itertools.product(range(3), repeat=2)))
def test_simple_novikov_is_simple_p3(a, b):
    assert is_simple(catalog.simple_novikov_char_p(3, 1, a, b), ["circ"]).simple


def test_simple_novikov_is_simple_p5():
    report = is_simple(catalog.simple_novikov_char_p(5, 1), ["circ"])

    assert report.simple
    assert report.points_checked == 781


def test_simple_novikov_entry():
    algebra = catalog.catalog_get("SimpleNovikov", {"n": 1, "a": 2}, GF3)

    assert algebra.name == "SimpleNovikov(n=1,a=2,b=0)"
    assert algebra.dim == 3


def test_simple_novikov_entry_needs_prime_field():
    with pytest.raises(errors.CatalogParameterError, match="GF"):
        catalog.catalog_get("SimpleNovikov")


# endregion
# region Graded windows
def test_osborn_window_products():
    algebra = catalog.osborn_case1_window(0, 3)
    x1 = algebra.basis(1)

    assert algebra.labels == ("x0", "x1", "x2", "x3")
    assert algebra.product("circ", x1, x1) == x1
    assert (2, 2) in algebra.masks["circ"]


def test_osborn_window_right_unit():
    algebra = catalog.osborn_case1_window("1/2", 3)
    x2 = algebra.basis(2)

    assert algebra.product("circ", x2, algebra.basis(0)) == x2.scale(QQ.parse("1/2"))


@pytest.mark.parametrize("size", [0, 65])
def test_osborn_window_bounds(size):
    with pytest.raises(errors.CatalogParameterError):
        catalog.osborn_case1_window(1, size)


def test_osborn_entry_needs_rational_field():
    with pytest.raises(errors.CatalogParameterError, match="QQ"):
        catalog.catalog_get("OsbornWindow", {}, GF3)


def test_window_half_derivations_are_scalar():
    algebra = catalog.catalog_get("OsbornWindow", {"b": 1, "N": 4})

    space = catalog.window_half_derivations(algebra, 3)

    assert space.n == 3
    assert space.dim == 1
    assert space.only_scalars()


def test_window_half_derivations_support_range():
    algebra = catalog.osborn_case1_window(1, 4)

    with pytest.raises(errors.ArgumentValueError):
        catalog.window_half_derivations(algebra, 6)


# endregion
