"""Root-system construction: counts, pairings, reflections, highest root."""

import pytest

from su2branch.rootsys import DiagramType, build_root_system

from conftest import bundle


def rs_for(name):
    return bundle(name).rs


def test_parse():
    assert str(DiagramType.parse("e8")) == "E8"
    assert DiagramType.parse(" D5 ") == DiagramType("D", 5)


@pytest.mark.parametrize("bad", ["A4", "A2", "A0", "D3", "E5", "E9", "F4", "B2", "x", "8E"])
def test_rejected_types(bad):
    with pytest.raises(ValueError):
        build_root_system(bad)


def test_e8_counts():
    rs = rs_for("E8")
    assert rs.rank == 8
    assert rs.num_positive == 120
    assert rs.coxeter_number == 30


def test_a3_counts():
    rs = rs_for("A3")
    assert rs.num_positive == 6
    assert rs.coxeter_number == 4


def test_d5_counts():
    rs = rs_for("D5")
    assert rs.coxeter_number == 8
    assert rs.num_positive == 20


@pytest.mark.parametrize(
    "name,h",
    [("A3", 4), ("A7", 8), ("A13", 14), ("D4", 6), ("D7", 12), ("D12", 22), ("E6", 12), ("E7", 18)],
)
def test_family_coxeter_numbers(name, h):
    rs = rs_for(name)
    assert rs.coxeter_number == h
    assert rs.num_positive == h * rs.rank // 2
    assert len(rs.roots) == h * rs.rank


def test_inner_products():
    rs = rs_for("A3")
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    assert rs.inner(a1, a1) == 2
    assert rs.inner(a1, a2) == -1
    assert rs.inner(rs.simple_root(1), rs.simple_root(3)) == 0
    assert rs.inner(rs.highest_root, rs.highest_root) == 2


def test_reflections():
    rs = rs_for("A3")
    a1, a2 = rs.simple_root(1), rs.simple_root(2)
    assert rs.reflect(1, a1) == (-1, 0, 0)
    assert rs.reflect(1, a2) == (1, 1, 0)
    d4 = rs_for("D4")
    # nodes 3 and 4 are both fork tails: non-adjacent, so fixed
    assert d4.reflect(3, d4.simple_root(4)) == d4.simple_root(4)
    with pytest.raises(IndexError):
        rs.reflect(4, a1)


def test_reflection_involution_permutes_roots():
    rs = rs_for("D5")
    for i in rs.nodes:
        images = [rs.reflect(i, r) for r in rs.roots]
        assert sorted(images) == sorted(rs.roots)
        assert all(rs.reflect(i, s) == r for r, s in zip(rs.roots, images))


def test_highest_root_marks():
    assert rs_for("A3").highest_root == (1, 1, 1)
    assert max(rs_for("E8").marks) == 6
    assert rs_for("D4").highest_root == (1, 2, 1, 1)


def test_highest_root_maximal():
    rs = rs_for("E6")
    for i in rs.nodes:
        above = tuple(
            c + int(j == i - 1) for j, c in enumerate(rs.highest_root)
        )
        assert not rs.is_root(above)


def test_pairings_bounded():
    rs = rs_for("D4")
    vals = {rs.inner(x, y) for x in rs.roots for y in rs.roots}
    assert vals <= {-2, -1, 0, 1, 2}


def test_affine_attachment():
    assert rs_for("A7").affine_attachment() == (1, 7)
    assert rs_for("D6").affine_attachment() == (2,)
    assert rs_for("E8").affine_attachment() == (7,)
    assert rs_for("E6").affine_attachment() == (6,)


def test_roots_negation_layout():
    rs = rs_for("A5")
    p = rs.num_positive
    for idx in range(p):
        assert rs.root_at(rs.negation(idx)) == tuple(-c for c in rs.root_at(idx))
