import pytest

from wittvanish.dynkin import build_diagram
from wittvanish.enumeration import decorations, enumerate_decorations, filter_rows
from wittvanish.errors import RankLimitExceeded
from wittvanish.picard import lambda_to_class, parabolic
from wittvanish.vanishing import MainTheorem, Status, classify

D4 = build_diagram([("D", 4)])


def test_a1_rows():
    t = enumerate_decorations(build_diagram([("A", 1)]))
    got = [(set(r.theta), set(r.lam), r.verdict.status) for r in t]
    assert got == [
        (set(), set(), Status.INCONCLUSIVE),
        (set(), {1}, Status.VANISHES),
        ({1}, set(), Status.INCONCLUSIVE),
    ]


def test_d4_counts():
    t = enumerate_decorations(D4)
    assert len(t) == 81
    # 39 from the brute-force oracle over all 81 decorations (tests/oracles.py)
    assert t.totals["MainTheorem"] == 39
    assert t.totals["VanishesAllDegrees"] == 39
    assert t.totals["Inconclusive"] == 42


def test_canonical_order():
    pairs = list(decorations(3))
    assert len(pairs) == 27
    assert pairs == sorted(pairs)
    assert all(t & l == 0 for t, l in pairs)


@pytest.mark.parametrize("spec", [[("A", 1)], [("B", 3)], [("D", 4)], [("A", 1), ("G", 2)]])
def test_rows_match_classify(spec):
    d = build_diagram(spec)
    t = enumerate_decorations(d)
    assert len(t) == 3 ** d.rank
    for r in t:
        assert r.verdict == classify(lambda_to_class(parabolic(d, r.theta), r.lam))


def test_deterministic():
    assert enumerate_decorations(D4) == enumerate_decorations(D4)


def test_filters():
    t = enumerate_decorations(D4)
    legs = filter_rows(t, lambda th, lam, v: th == {1, 4})
    assert [(sorted(r.lam), r.verdict.rule) for r in legs] == [
        ([], None), ([2], None), ([3], MainTheorem(3)), ([2, 3], MainTheorem(3)),
    ]
    assert legs.totals["VanishesAllDegrees"] == 2
    empty = filter_rows(t, lambda th, lam, v: not lam)
    assert all(r.verdict.status is Status.INCONCLUSIVE for r in empty)
    borel = filter_rows(t, lambda th, lam, v: not th)
    assert all(r.verdict.vanishes == bool(r.lam) for r in borel)
    center = filter_rows(t, lambda th, lam, v: th == {2})
    assert len(center) == 8 and center.totals["Inconclusive"] == 8


def test_rank_limit():
    with pytest.raises(RankLimitExceeded):
        enumerate_decorations(build_diagram([("E", 8), ("A", 5)]))
    with pytest.raises(RankLimitExceeded):
        enumerate_decorations(D4, rank_limit=3)
