"""Extended graph structure and the tensor recursion oracle."""

import pytest

from su2branch.mckay import recursion_oracle

from conftest import bundle, graph_for


def test_a3_extended_is_a_cycle():
    g = graph_for("A3")
    assert g.size == 4
    degrees = [sum(row) for row in g.adjacency]
    assert degrees == [2, 2, 2, 2]
    assert g.adjacency[0][1] == g.adjacency[0][3] == 1
    assert g.adjacency[0][2] == 0


def test_e8_marks_sum_to_h():
    g = graph_for("E8")
    assert sum(g.marks_ext) == 30
    assert g.marks_ext[0] == 1


@pytest.mark.parametrize("name", ["D4", "D9", "E6", "E7", "E8"])
def test_affine_node_has_one_neighbor_in_d_e(name):
    g = graph_for(name)
    assert sum(g.adjacency[0]) == 1


@pytest.mark.parametrize("name", ["A5", "D6", "E7"])
def test_extended_cartan_kernel(name):
    g = graph_for(name)
    for i in range(g.size):
        row = sum(
            (2 * (i == j) - g.adjacency[i][j]) * g.marks_ext[j] for j in range(g.size)
        )
        assert row == 0


def test_recursion_start():
    g = graph_for("E8")
    vecs = recursion_oracle(g, 1)
    assert vecs[0] == (1, 0, 0, 0, 0, 0, 0, 0, 0)
    assert vecs[1] == tuple(g.adjacency[0])


def test_recursion_a3_level_two():
    # v2 = A v1 - v0 on the 4-cycle: (1, 0, 2, 0)
    vecs = recursion_oracle(graph_for("A3"), 2)
    assert vecs[1] == (0, 1, 0, 1)
    assert vecs[2] == (1, 0, 2, 0)


def test_e8_invariants_match_series():
    vecs = recursion_oracle(graph_for("E8"), 200)
    series = bundle("E8").series(0, 200)
    assert tuple(v[0] for v in vecs) == series


@pytest.mark.parametrize("name", ["A7", "D6", "E6"])
def test_recursion_nonnegative_and_sum(name):
    g = graph_for(name)
    vecs = recursion_oracle(g, 150)
    for n, v in enumerate(vecs):
        assert all(c >= 0 for c in v)
        assert sum(m * c for m, c in zip(g.marks_ext, v)) == n + 1


def test_recursion_parity():
    b = bundle("D5")
    g = graph_for("D5")
    vecs = recursion_oracle(g, 80)
    for n, v in enumerate(vecs):
        for i, c in enumerate(v):
            if c:
                assert n % 2 == b.node_parity(i) % 2


def test_recursion_rejects_negative_order():
    with pytest.raises(ValueError):
        recursion_oracle(graph_for("A3"), -1)
