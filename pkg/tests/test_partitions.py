from __future__ import annotations

import pytest

from bcinterp.partitions import (
    arm_leg,
    boxes,
    clean,
    conjugate,
    contains,
    dominates,
    double,
    enumerate_partitions,
    partitions_of,
    rc_set,
    reverse_tableaux,
)


def test_clean_strips_trailing_zeros():
    assert clean((3, 2, 0, 0)) == (3, 2)
    assert clean(()) == ()
    assert clean((0,)) == ()


def test_clean_rejects_bad_input():
    with pytest.raises(ValueError):
        clean((1, 2))
    with pytest.raises(ValueError):
        clean((2, -1))


def test_contains_examples():
    assert contains((1,), (2, 1)) is True
    assert contains((2,), (1, 1)) is False
    assert contains((), (3, 2)) is True


def test_contains_is_partial_order():
    universe = enumerate_partitions(5, 5)
    for lam in universe:
        assert contains(lam, lam)
    for a in universe:
        for b in universe:
            if contains(a, b) and contains(b, a):
                assert a == b
            for c in universe:
                if contains(a, b) and contains(b, c):
                    assert contains(a, c)


def test_arm_leg_examples():
    assert arm_leg((2, 1), (1, 1)) == (1, 1, 0, 0)
    assert arm_leg((2, 1), (1, 2)) == (0, 0, 1, 0)
    assert arm_leg((1,), (1, 1)) == (0, 0, 0, 0)


def test_arm_leg_outside_diagram():
    with pytest.raises(ValueError):
        arm_leg((2, 1), (2, 2))
    with pytest.raises(ValueError):
        arm_leg((2, 1), (3, 1))


def test_arm_coarm_sum_identity():
    for lam in enumerate_partitions(5, 4):
        conj = conjugate(lam)
        for b in boxes(lam):
            arm, leg, coarm, coleg = arm_leg(lam, b)
            assert arm + coarm == lam[b[0] - 1] - 1
            assert leg + coleg == conj[b[1] - 1] - 1


def test_reverse_tableaux_examples():
    assert len(reverse_tableaux((1,), 2)) == 2
    two = reverse_tableaux((2, 1), 2)
    assert len(two) == 2
    rows = {tuple(t.entries[b] for b in boxes((2, 1))) for t in two}
    assert rows == {(2, 2, 1), (2, 1, 1)}
    assert reverse_tableaux((1, 1, 1), 2) == []


def test_reverse_tableaux_shape_validity():
    for t in reverse_tableaux((3, 2), 3):
        for (i, j) in boxes((3, 2)):
            if j > 1:
                assert t.entries[(i, j)] <= t.entries[(i, j - 1)]
            if i > 1:
                assert t.entries[(i, j)] < t.entries[(i - 1, j)]


def test_strip_partitions_are_nested():
    for t in reverse_tableaux((2, 2, 1), 3):
        strips = [t.strip_partition(k) for k in range(0, 4)]
        assert strips[0] == (2, 2, 1)
        assert strips[3] == ()
        for outer, inner in zip(strips, strips[1:]):
            assert contains(inner, outer)


def _count_ssyt(lam, r):
    """Independent oracle: semistandard tableaux, rows weakly increasing,
    columns strictly increasing, entries in 1..r."""
    lam = clean(lam)
    cells = list(boxes(lam))
    entries = {}

    def fill(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        lo = 1
        if j > 1:
            lo = max(lo, entries[(i, j - 1)])
        if i > 1:
            lo = max(lo, entries[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, r + 1):
            entries[(i, j)] = v
            total += fill(pos + 1)
        entries.pop((i, j), None)
        return total

    return fill(0)


def test_reverse_tableaux_count_matches_ssyt():
    # e -> r+1-e is a bijection between the two families
    for lam in enumerate_partitions(4, 4):
        for r in (1, 2, 3):
            assert len(reverse_tableaux(lam, r)) == _count_ssyt(lam, r)


def test_rc_set_examples():
    assert rc_set((1,), ()) == set()
    assert rc_set((2,), (1,)) == {(1, 1)}
    assert rc_set((2, 2), (2, 2)) == set()


def test_rc_set_avoids_strip_and_checks_containment():
    for outer in enumerate_partitions(4, 3):
        for inner in enumerate_partitions(4, 3):
            if not contains(inner, outer):
                with pytest.raises(ValueError):
                    rc_set(outer, inner)
                continue
            strip = {b for b in boxes(outer) if b[1] > (inner[b[0] - 1] if b[0] <= len(inner) else 0)}
            assert rc_set(outer, inner).isdisjoint(strip)


def test_enumerate_partitions_examples():
    assert enumerate_partitions(1, 2) == [(), (1,)]
    assert enumerate_partitions(2, 2) == [(), (1,), (2,), (1, 1)]
    assert enumerate_partitions(2, 1) == [(), (1,), (2,)]


def test_enumerate_partitions_graded_lex():
    out = enumerate_partitions(3, 3)
    assert out == [(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1)]


def test_partitions_of_bounds():
    assert partitions_of(4, 2, 3) == [(3, 1), (2, 2)]
    assert partitions_of(0, 3) == [()]


def test_double_examples():
    assert double((2, 1), "stretch") == (4, 2)
    assert double((2, 1), "duplicate") == (2, 2, 1, 1)
    assert double((), "stretch") == ()
    assert double((), "duplicate") == ()
    with pytest.raises(ValueError):
        double((1,), "triple")


def test_dominance():
    assert dominates((2,), (1, 1))
    assert not dominates((1, 1), (2,))
    assert dominates((2, 1), (2, 1))
    assert dominates((3, 1), (2, 2))
    with pytest.raises(ValueError):
        dominates((2,), (1,))
