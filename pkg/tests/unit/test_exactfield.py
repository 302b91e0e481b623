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
"""Tests for exact scalars."""

import pydantic
import pytest
import pytest_check
from hypothesis import given, strategies

from tnpbench import errors
from tnpbench.exactfield import (
    FieldDescriptor,
    Scalar,
    binomial_mod_p,
    scalar_arith,
)

FIELDS = [
    FieldDescriptor.rational(),
    FieldDescriptor.prime(3),
    FieldDescriptor.prime(5),
    FieldDescriptor.prime(7),
]
fractions = strategies.builds(
    lambda num, den: f"{num}/{den}",
    strategies.integers(min_value=-50, max_value=50),
    strategies.sampled_from([1, 2, 4, 8, 11, 13]),
)


@pytest.mark.parametrize(
    ("field", "expected"),
    [
        pytest.param(FieldDescriptor.rational(), "QQ", id="rational"),
        pytest.param(FieldDescriptor.prime(5), "GF(5)", id="gf5"),
    ],
)
def test_field_str(field, expected):
    assert str(field) == expected


@pytest.mark.parametrize("p", [2, 4, 9, 1, 0, -3])
def test_prime_field_rejects_bad_modulus(p):
    with pytest.raises(pydantic.ValidationError, match="odd prime"):
        FieldDescriptor.prime(p)


def test_rational_field_rejects_modulus():
    with pytest.raises(pydantic.ValidationError):
        FieldDescriptor(kind="rational", p=3)


def test_characteristic():
    pytest_check.equal(FieldDescriptor.rational().characteristic, 0)
    pytest_check.equal(FieldDescriptor.prime(7).characteristic, 7)


@pytest.mark.parametrize(
    ("field", "text", "expected"),
    [
        pytest.param(FieldDescriptor.rational(), "3/6", "1/2", id="reduces"),
        pytest.param(FieldDescriptor.rational(), "-4/2", "-2", id="integral"),
        pytest.param(FieldDescriptor.rational(), " 7 ", "7", id="whitespace"),
        pytest.param(FieldDescriptor.prime(3), "1/2", "2", id="gf3-half"),
        pytest.param(FieldDescriptor.prime(5), "-1", "4", id="gf5-negative"),
        pytest.param(FieldDescriptor.prime(5), "12", "2", id="gf5-reduces"),
    ],
)
def test_parse_and_format(field, text, expected):
    assert field.format(field.parse(text)) == expected


@pytest.mark.parametrize("text", ["", "abc", "1.5", "1/-2", "--1", "1/"])
def test_parse_rejects_garbage(text):
    with pytest.raises(errors.ScalarParseError):
        FieldDescriptor.rational().parse(text)


@pytest.mark.parametrize(
    ("field", "text"),
    [
        pytest.param(FieldDescriptor.rational(), "1/0", id="rational"),
        pytest.param(FieldDescriptor.prime(3), "1/3", id="gf3-denominator-p"),
        pytest.param(FieldDescriptor.prime(3), "2/6", id="gf3-denominator-multiple"),
    ],
)
def test_parse_zero_denominator(field, text):
    with pytest.raises(errors.ScalarDivisionError):
        field.parse(text)


def test_scalar_division_by_zero():
    field = FieldDescriptor.prime(5)
    with pytest.raises(ZeroDivisionError):
        field.scalar(1) / field.scalar(0)


def test_scalar_arith_field_mismatch():
    with pytest.raises(errors.FieldMismatchError):
        scalar_arith(
            FieldDescriptor.rational().scalar(1), FieldDescriptor.prime(3).scalar(1), "add"
        )


def test_element_rejects_foreign_scalar():
    with pytest.raises(errors.FieldMismatchError):
        FieldDescriptor.prime(3).element(FieldDescriptor.prime(5).scalar(1))


def test_element_rejects_bool():
    with pytest.raises(TypeError):
        FieldDescriptor.rational().element(True)


def test_prime_elements_in_residue_order(gf5):
    assert [gf5.format(value) for value in gf5.elements()] == ["0", "1", "2", "3", "4"]


def test_rational_elements_not_enumerable(rational):
    with pytest.raises(ValueError, match="prime fields"):
        list(rational.elements())


@pytest.mark.parametrize(
    ("n", "k", "p", "expected"),
    [
        pytest.param(5, 2, 3, "1", id="c52-mod3"),
        pytest.param(6, 3, 5, "0", id="c63-mod5"),
        pytest.param(4, 5, 3, "0", id="k-above-n"),
        pytest.param(4, -1, 3, "0", id="negative-k"),
        pytest.param(3**6, 3**5, 3, "0", id="lucas-zero-digit"),
        pytest.param(3**20 + 3**5, 3**5, 3, "1", id="lucas-large"),
        pytest.param(3**7 + 1, 1, 3, "1", id="lucas-digit"),
    ],
)
def test_binomial_mod_p(n, k, p, expected):
    assert str(binomial_mod_p(n, k, p)) == expected


def test_binomial_negative_n():
    with pytest.raises(ValueError, match="non-negative"):
        binomial_mod_p(-1, 0, 3)


@pytest.mark.parametrize("field", FIELDS, ids=str)
@given(a=fractions, b=fractions, c=fractions)
def test_field_axioms(field, a, b, c):
    x, y, z = (Scalar.parse(field, text) for text in (a, b, c))
    pytest_check.equal(x + y, y + x)
    pytest_check.equal(x * y, y * x)
    pytest_check.equal((x + y) + z, x + (y + z))
    pytest_check.equal((x * y) * z, x * (y * z))
    pytest_check.equal(x * (y + z), x * y + x * z)
    pytest_check.equal(x - x, 0)
    if y:
        pytest_check.equal((x / y) * y, x)


@given(text=fractions)
def test_rational_format_is_canonical(text):
    field = FieldDescriptor.rational()
    canonical = field.format(field.parse(text))
    assert field.format(field.parse(canonical)) == canonical


def test_scalar_hash_and_equality(gf3):
    pytest_check.equal(gf3.scalar("4"), gf3.scalar(1))
    pytest_check.equal(hash(gf3.scalar("4")), hash(gf3.scalar(1)))
    pytest_check.not_equal(gf3.scalar(1), FieldDescriptor.prime(5).scalar(1))
