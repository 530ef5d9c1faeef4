import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchon import jsonio
from cauchon.grid import CauchonDiagram, GridShape, enumerate_diagrams
from cauchon.minors import MinorIndex, enumerate_minors
from cauchon.tnn import cell_witness, realize_tnn, sample_weights, unit_weights

S22 = GridShape(2, 2)


def test_corner_black_unit_weights():
    d = CauchonDiagram.from_black(S22, [(1, 1)])
    w = realize_tnn(d, unit_weights(d))
    assert [list(r) for r in w.matrix] == [[1, 1], [1, 1]]
    assert w.zero_set.members == {MinorIndex((1, 2), (1, 2))}
    assert sum(s == "positive" for s in w.minor_signs.values()) == 4


def test_all_black_is_zero_matrix(small_shape):
    w = realize_tnn(CauchonDiagram.all_black(small_shape), {})
    assert all(x == 0 for row in w.matrix for x in row)
    assert w.zero_set.members == set(enumerate_minors(small_shape))


def test_single_box():
    w = realize_tnn(CauchonDiagram.all_white(GridShape(1, 1)), {(1, 1): F(3)})
    assert w.matrix == ((F(3),),)
    assert w.minor_signs == {MinorIndex((1,), (1,)): "positive"}


def test_rejects_nonpositive_weights():
    d = CauchonDiagram.all_white(GridShape(1, 1))
    with pytest.raises(ValueError):
        realize_tnn(d, {(1, 1): F(-1)})


def test_weights_lie_in_range():
    d = CauchonDiagram.all_white(GridShape(3, 3))
    ws = sample_weights(d, random.Random(0))
    assert len(ws) == 9
    for x in ws.values():
        assert 1 <= x.numerator <= 10**6 * 10**6 and x > 0


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 10**9))
def test_witness_minors_nonnegative(m, p, seed):
    rng = random.Random(seed)
    d = rng.choice(list(enumerate_diagrams(GridShape(m, p))))
    w = realize_tnn(d, sample_weights(d, rng))
    assert set(w.minor_signs.values()) <= {"zero", "positive"}


def test_cell_witness_corner():
    d = CauchonDiagram.from_black(S22, [(1, 1)])
    cw = cell_witness(d, samples=10, seed=3)
    assert cw.consistent
    assert all(z.members == {MinorIndex((1, 2), (1, 2))} for z in cw.zero_sets)


def test_zero_sets_distinct_at_two_by_two():
    zero_sets = [cell_witness(d, samples=2).witness.zero_set.members for d in enumerate_diagrams(S22)]
    assert len(set(zero_sets)) == 14


@pytest.mark.parametrize("shape", [GridShape(1, 3), GridShape(2, 3), GridShape(3, 3)], ids=str)
def test_all_white_has_no_zero_minor(shape):
    cw = cell_witness(CauchonDiagram.all_white(shape), samples=3)
    assert cw.consistent and len(cw.witness.zero_set) == 0


def test_witness_json_round_trip():
    d = CauchonDiagram.from_black(GridShape(2, 3), [(1, 1), (2, 1)])
    w = cell_witness(d, samples=1, seed=8).witness
    obj = jsonio.witness_to_json(w)
    assert all("/" in x for row in obj["matrix"] for x in row)
    assert {s["sign"] for s in obj["minor_signs"]} <= {"zero", "positive"}
    assert jsonio.witness_from_json(obj) == w
