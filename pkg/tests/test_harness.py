import pytest

from cauchon.grid import CauchonDiagram, GridShape
from cauchon.harness import (
    EquivalenceRecord,
    distinct_vanishing_sets,
    equivalence_record,
    select_diagrams,
    verify_bijection,
    verify_bruhat_interval,
    verify_counts,
    verify_equivalence,
)
from cauchon.grid import BoundError
from cauchon.minors import MinorFamily, enumerate_minors
from cauchon.perms import Permutation


@pytest.mark.parametrize("shape,count", [(GridShape(1, 1), 2), (GridShape(2, 2), 14), (GridShape(3, 3), 230)], ids=str)
def test_counts(shape, count):
    rep = verify_counts(shape)
    assert rep.diagrams == rep.restricted == count and rep.equal


@pytest.mark.parametrize("shape", [GridShape(1, 1), GridShape(2, 2), GridShape(1, 2)], ids=str)
def test_bruhat_interval(shape):
    rep = verify_bruhat_interval(shape)
    assert rep.equal and rep.lhs == rep.rhs


def test_bruhat_interval_bound():
    with pytest.raises(BoundError):
        verify_bruhat_interval(GridShape(4, 5))


def test_bijection_report():
    assert verify_bijection(GridShape(2, 3)).ok


@pytest.mark.parametrize("shape", [GridShape(1, 1), GridShape(2, 2), GridShape(1, 3)], ids=str)
def test_equivalence_all_equal(shape):
    records = list(verify_equivalence(shape, samples=3))
    assert records and all(r.verdict == "all-equal" for r in records)


def test_equivalence_parallel_matches_serial():
    shape = GridShape(2, 3)
    serial = list(verify_equivalence(shape, samples=2, seed=4))
    parallel = list(verify_equivalence(shape, samples=2, seed=4, workers=2))
    assert serial == parallel


def test_sampled_mode_default_and_order():
    picked = select_diagrams(GridShape(4, 4), 25, seed=1)
    assert len(picked) == 25
    assert [d.mask for d in picked] == sorted(d.mask for d in picked)
    assert picked == select_diagrams(GridShape(4, 4), 25, seed=1)


def test_vanishing_sets_injective():
    assert distinct_vanishing_sets(GridShape(2, 3))


def test_anchor_records():
    s = GridShape(2, 2)
    white = equivalence_record(CauchonDiagram.all_white(s), samples=2)
    black = equivalence_record(CauchonDiagram.all_black(s), samples=2)
    assert len(white.family) == 0
    assert black.family.members == set(enumerate_minors(s))


def test_mismatch_record_reports_difference():
    s = GridShape(2, 2)
    rec = equivalence_record(CauchonDiagram.from_black(s, [(1, 1)]), samples=1)
    wrong = MinorFamily(s, frozenset())
    bad = EquivalenceRecord(rec.diagram, Permutation.identity(4), wrong, rec.vanishing, rec.zero_set)
    assert bad.verdict == "mismatch"
    assert rec.verdict == "all-equal" and rec.diff == {}
