from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cauchon import jsonio
from cauchon.grid import (
    BoundError,
    CauchonDiagram,
    GridShape,
    count_diagrams,
    enumerate_diagrams,
    is_valid_diagram,
    step_successor,
    steps,
)

FIGURE_1 = [(1, 1), (1, 2), (1, 4), (2, 4), (3, 1), (3, 2), (3, 3), (3, 4), (3, 5), (4, 1), (4, 2), (4, 4)]


def test_figure_one_diagram_is_valid():
    assert is_valid_diagram(GridShape(4, 5), FIGURE_1)


def test_lonely_corner_box_is_invalid():
    assert not is_valid_diagram(GridShape(2, 2), [(2, 2)])


@pytest.mark.parametrize("shape", [GridShape(1, 1), GridShape(3, 4), GridShape(5, 2)], ids=str)
def test_empty_diagram_is_valid(shape):
    assert is_valid_diagram(shape, [])


def test_out_of_grid_position_raises():
    with pytest.raises(ValueError):
        is_valid_diagram(GridShape(2, 2), [(3, 1)])
    with pytest.raises(ValueError):
        is_valid_diagram(GridShape(2, 2), [(1, 0)])


def test_bad_shape_raises():
    with pytest.raises(ValueError):
        GridShape(0, 3)


def brute_force_diagrams(shape):
    # independent of the bitmask code: filter every subset with the set-based check
    cells = shape.positions()
    out = []
    for bits in product([0, 1], repeat=len(cells)):
        black = [c for c, b in zip(cells, bits) if b]
        if is_valid_diagram(shape, black):
            out.append(frozenset(black))
    return out


@pytest.mark.parametrize("shape,count", [(GridShape(1, 1), 2), (GridShape(2, 2), 14), (GridShape(3, 3), 230)], ids=str)
def test_enumeration_counts(shape, count):
    assert len(list(enumerate_diagrams(shape))) == count
    assert count_diagrams(shape) == count


@pytest.mark.parametrize("m,p", [(m, p) for m in range(1, 10) for p in range(1, 10) if m * p <= 9])
def test_enumeration_matches_brute_force(m, p):
    shape = GridShape(m, p)
    got = [frozenset(d.black) for d in enumerate_diagrams(shape)]
    assert len(got) == len(set(got))
    assert set(got) == set(brute_force_diagrams(shape))


def test_enumeration_order_is_ascending_bitmask():
    masks = [d.mask for d in enumerate_diagrams(GridShape(3, 3))]
    assert masks == sorted(masks)


def test_enumeration_bound():
    with pytest.raises(BoundError):
        list(enumerate_diagrams(GridShape(5, 5)))
    with pytest.raises(BoundError):
        list(enumerate_diagrams(GridShape(3, 3), bound=8))


def test_from_black_rejects_invalid():
    with pytest.raises(ValueError):
        CauchonDiagram.from_black(GridShape(2, 2), [(2, 2)])
    with pytest.raises(ValueError):
        CauchonDiagram.from_mask(GridShape(2, 2), 0b1000)


def _add_black_row(d: CauchonDiagram) -> CauchonDiagram:
    shape = GridShape(d.shape.m + 1, d.shape.p)
    return CauchonDiagram.from_black(shape, d.black + [(shape.m, a) for a in range(1, shape.p + 1)])


def _add_black_col(d: CauchonDiagram) -> CauchonDiagram:
    shape = GridShape(d.shape.m, d.shape.p + 1)
    return CauchonDiagram.from_black(shape, d.black + [(i, shape.p) for i in range(1, shape.m + 1)])


@pytest.mark.parametrize("shape", [GridShape(2, 2), GridShape(2, 3), GridShape(3, 2)], ids=str)
def test_adding_black_row_or_column_preserves_validity(shape):
    for d in enumerate_diagrams(shape):
        assert is_valid_diagram(_add_black_row(d).shape, _add_black_row(d).black)
        assert is_valid_diagram(_add_black_col(d).shape, _add_black_col(d).black)


@pytest.mark.parametrize(
    "r,shape,expected",
    [((1, 2), GridShape(2, 2), (2, 1)), ((1, 4), GridShape(3, 4), (2, 1)), ((3, 4), GridShape(3, 4), (3, 5)), ((2, 2), GridShape(2, 2), (2, 3))],
)
def test_step_successor_examples(r, shape, expected):
    assert step_successor(r, shape) == expected


def test_step_successor_rejects_non_steps():
    shape = GridShape(2, 3)
    for bad in [(1, 1), (0, 2), (3, 1), (2, 4)]:
        with pytest.raises(ValueError):
            step_successor(bad, shape)


@given(st.integers(1, 5), st.integers(1, 5))
def test_successor_walk_covers_step_set(m, p):
    shape = GridShape(m, p)
    if m * p == 1:
        assert steps(shape) == []
        return
    seen = []
    r = min(steps(shape))
    while r != (m, p + 1):
        seen.append(r)
        r = step_successor(r, shape)
    assert seen == steps(shape)
    assert len(seen) == m * p - 1


@settings(max_examples=50)
@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_diagram_json_round_trip(m, p, data):
    diagrams = list(enumerate_diagrams(GridShape(m, p)))
    d = data.draw(st.sampled_from(diagrams))
    obj = jsonio.diagram_to_json(d)
    assert obj["black"] == sorted(obj["black"])
    assert jsonio.diagram_from_json(obj) == d


def test_rows_rendering():
    d = CauchonDiagram.from_black(GridShape(2, 3), [(1, 1), (1, 2), (2, 1)])
    assert d.rows() == ["##.", "#.."]
