from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from focklab.basis import (
    ChargedPartition as CP, HalfInt, MayaSpec, addable_boxes, black_positions, box_color, conjugate,
    cp, from_wedge, maya_to_partition, normalize_wedge, parse_state, partition_to_maya, partitions,
    removable_boxes, ribbon_removals, to_twice,
)

partitions_st = st.lists(st.integers(1, 9), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True)))
states_st = st.builds(CP, partitions_st, st.integers(-6, 6))


def test_halfint_parsing():
    assert to_twice("7/2") == 7
    assert to_twice("-1/2") == -1
    assert to_twice(Fraction(-5, 2)) == -5
    assert to_twice(2.5) == 5
    assert HalfInt.of("3/2") == Fraction(3, 2)
    for bad in (3, "1", "2/3", "1/1", Fraction(1, 3)):
        with pytest.raises(ValueError):
            to_twice(bad)
    with pytest.raises(ValueError):
        HalfInt(4)


def test_partition_counts():
    # p(n) for n = 0..12
    assert [len(partitions(n)) for n in range(13)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]


def test_parse_state_and_validation():
    assert parse_state("(4,3,3,1,1);-1") == CP((4, 3, 3, 1, 1), -1)
    assert parse_state("();0") == CP((), 0)
    for bad in ("(1,2);0", "(3,1)", "3,1;0", "(0);0"):
        with pytest.raises(ValueError):
            parse_state(bad)
    with pytest.raises(ValueError):
        cp((2, 3))


def test_figure_state():
    s = CP((4, 3, 3, 1, 1), -1)
    assert [x.twice for x in black_positions(s, 7)] == [5, 1, -1, -7, -9, -13, -15]
    m = partition_to_maya(s)
    assert maya_to_partition(m) == s
    assert maya_to_partition(MayaSpec(-13, frozenset({5, 1, -1, -7, -9, -13}))) == s
    # a window that starts inside the black tail but is padded below
    assert maya_to_partition(MayaSpec(-17, frozenset({5, 1, -1, -7, -9, -13, -15, -17}))) == s


def test_vacuum_beads():
    assert [x.twice for x in black_positions(CP((), 0), 3)] == [-1, -3, -5]
    assert [x.twice for x in black_positions(CP((), 2), 2)] == [3, 1]


@given(states_st)
def test_maya_roundtrip(s):
    assert maya_to_partition(partition_to_maya(s)) == s
    assert maya_to_partition(MayaSpec.from_json(partition_to_maya(s).to_json())) == s


@given(states_st, st.randoms(use_true_random=False))
def test_wedge_sign_is_permutation_parity(s, rnd):
    idx = black_positions(s, len(s.lam) + 2)
    shuffled = list(idx)
    rnd.shuffle(shuffled)
    sign, back = from_wedge(shuffled)
    assert back == s
    inv = sum(1 for a in range(len(shuffled)) for b in range(a + 1, len(shuffled))
              if shuffled[a] < shuffled[b])
    assert sign == (-1) ** inv


def test_wedge_repeated_index_vanishes():
    assert from_wedge(["1/2", "-1/2", "1/2"]) == (0, None)
    assert normalize_wedge(["-1/2", "1/2"]) == (-1, [HalfInt(1), HalfInt(-1)])


def test_colors_and_corners():
    s = CP((2, 1), 0)
    assert box_color(0, (1, 1), 2) == 0
    assert box_color(1, (2, 1), 3) == 0
    assert addable_boxes(s, 1, 2) == []
    assert addable_boxes(s, 0, 2) == [(1, 3), (2, 2), (3, 1)]  # decreasing content
    assert addable_boxes(s, 2, 3) == [(1, 3)]
    assert removable_boxes(s, 1, 2) == [(1, 2), (2, 1)]
    with pytest.raises(ValueError):
        box_color(0, (1, 1), 1)


@given(partitions_st)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert sum(conjugate(lam)) == sum(lam)


def test_ribbons():
    # only cell (1,2) of (3,2) has hook length 3
    assert ribbon_removals((3, 2), 3) == [((1, 1), 2)]
    assert ribbon_removals((3, 2), 2) == [((3,), 1)]
    assert ribbon_removals((1,), 1) == [((), 1)]
    with pytest.raises(ValueError):
        ribbon_removals((1,), 0)
