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
"""Tests for the algebra file model."""
import json
from pathlib import Path

import pytest
import pytest_check

from tnpbench import errors
from tnpbench.algcore import Algebra, BilinearOp
from tnpbench.exactfield import FieldDescriptor
from tnpbench.models.algebra import AlgebraFile

BASIC = {
    "name": "plane",
    "dim": 2,
    "ops": {"circ": [[0, 0, 0, "1"], [1, 1, 1, "1"]]},
}


def load(data: dict) -> AlgebraFile:
    return AlgebraFile.from_data(data, Path("plane.json"))


def test_defaults():
    model = load(BASIC)

    assert model.field == FieldDescriptor.rational()
    assert model.labels == []
    assert model.masks == {}
    assert model.meta == {}


def test_to_algebra(n1_tnp):
    assert n1_tnp.name == "N1-tnp(n=2,m=3)"
    assert n1_tnp.labels == ("e1", "e2")
    assert n1_tnp.op("dot").entries() == [
        (0, 0, 0, n1_tnp.field.element(2)),
        (1, 1, 1, n1_tnp.field.element(3)),
    ]


def test_default_labels(n4_bad):
    assert n4_bad.labels == ("e1", "e2")


def test_prime_field_reduces_scalars():
    data = {**BASIC, "field": {"kind": "prime", "p": 3}, "ops": {"circ": [[0, 0, 0, "-1/2"]]}}

    algebra = load(data).to_algebra()

    assert algebra.field == FieldDescriptor.prime(3)
    assert algebra.field.format(algebra.op("circ").entries()[0][3]) == "1"


def test_numbers_coerced_to_scalars():
    data = {**BASIC, "ops": {"circ": [[0, 0, 0, 5]]}}

    assert load(data).ops["circ"] == [(0, 0, 0, "5")]


def test_repeated_entries_sum():
    data = {**BASIC, "ops": {"circ": [[0, 0, 0, "1"], [0, 0, 0, "1/2"]]}}

    algebra = load(data).to_algebra()

    assert algebra.op("circ").entries() == [(0, 0, 0, algebra.field.parse("3/2"))]


def test_masks():
    data = {**BASIC, "masks": {"circ": [[1, 1]]}}

    algebra = load(data).to_algebra()

    assert algebra.masks == {"circ": frozenset({(1, 1)})}
    assert algebra.is_windowed


@pytest.mark.parametrize(
    ("update", "message"),
    [
        pytest.param(
            {"dim": 0}, "greater than or equal to 1", id="zero-dim"
        ),
        pytest.param(
            {"labels": ["a", "b", "c"]},
            "3 labels given for an algebra of dimension 2",
            id="label-count",
        ),
        pytest.param({"labels": ["a", "a"]}, "duplicate values in list", id="duplicate-labels"),
        pytest.param({"labels": ["a b", "c"]}, "invalid label", id="bad-label"),
        pytest.param(
            {"ops": {"circ": [[0, 2, 0, "1"]]}},
            "circ entry [0, 2, 0, '1'] has an index outside 0..1",
            id="index-range",
        ),
        pytest.param({"ops": {"circ": [[0, -1, 0, "1"]]}}, "greater than or equal to 0", id="negative-index"),
        pytest.param({"ops": {"circ": [[0, 0, 0, "1.5"]]}}, "invalid scalar", id="bad-scalar"),
        pytest.param({"ops": {"star": []}}, "input should be 'dot' or 'circ'", id="bad-op"),
        pytest.param(
            {"masks": {"dot": [[0, 0]]}},
            "mask given for missing operation 'dot'",
            id="mask-without-op",
        ),
        pytest.param({"masks": {"circ": [[0, 5]]}}, "circ mask has an index outside 0..1", id="mask-range"),
        pytest.param(
            {"field": {"kind": "prime", "p": 4}},
            "prime field modulus must be an odd prime, got 4",
            id="bad-modulus",
        ),
        pytest.param({"field": {"kind": "rational", "p": 3}}, "takes no modulus", id="rational-modulus"),
        pytest.param({"extra": 1}, "extra field 'extra' not permitted", id="extra-field"),
    ],
)
def test_invalid_files(update, message):
    with pytest.raises(errors.AlgebraValidationError) as exc_info:
        load({**BASIC, **update})

    assert str(exc_info.value).startswith("Bad plane.json content:\n")
    assert message in str(exc_info.value)


def test_missing_ops():
    with pytest.raises(errors.AlgebraValidationError, match="field 'ops' required"):
        load({"dim": 2})


@pytest.mark.parametrize(
    ("field", "scalar"),
    [
        pytest.param({"kind": "rational"}, "1/0", id="zero-denominator"),
        pytest.param({"kind": "prime", "p": 3}, "1/3", id="denominator-divisible-by-p"),
    ],
)
def test_bad_constant(field, scalar):
    data = {**BASIC, "field": field, "ops": {"dot": [[0, 0, 0, scalar]]}}

    with pytest.raises(errors.AlgebraValidationError, match="bad dot constant in plane"):
        load(data).to_algebra()


def test_from_algebra_canonical(rational):
    algebra = Algebra(
        rational,
        2,
        {
            "dot": BilinearOp.from_entries(rational, 2, [(1, 1, 0, "2/4"), (0, 0, 0, 0)]),
            "circ": BilinearOp.from_entries(rational, 2, [(1, 0, 1, -3)]),
        },
        name="sample",
        meta={"source": "test"},
    )

    data = AlgebraFile.from_algebra(algebra).marshal()

    pytest_check.equal(list(data["ops"]), ["circ", "dot"])
    pytest_check.equal(data["ops"]["dot"], [[1, 1, 0, "1/2"]])
    pytest_check.equal(data["ops"]["circ"], [[1, 0, 1, "-3"]])
    pytest_check.equal(data["labels"], ["e1", "e2"])
    pytest_check.equal(data["meta"], {"source": "test"})
    pytest_check.equal(data["field"]["kind"], "rational")


def test_from_algebra_reloads(n1_tnp, data_dir):
    written = AlgebraFile.from_algebra(n1_tnp).marshal()
    original = json.loads((data_dir / "n1_tnp.json").read_text())

    assert written["ops"] == original["ops"]
    assert AlgebraFile.unmarshal(written).to_algebra() == n1_tnp


def test_from_algebra_windowed(get_algebra):
    laurent = get_algebra("Laurent", M=1)

    data = AlgebraFile.from_algebra(laurent).marshal()

    assert [0, 0] in data["masks"]["circ"]
    assert data["masks"]["circ"] == sorted(data["masks"]["circ"])
    assert data["meta"]["asserted"] == "rdnp"
