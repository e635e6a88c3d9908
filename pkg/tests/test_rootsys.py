import pytest

from rootsys import (
    LieType,
    RootSystemError,
    all_lie_types,
    build_root_system,
    cartan_matrix,
    format_root,
    negate,
)


def make_rs(label):
    return build_root_system(LieType(label[0], int(label[1:])))


@pytest.mark.parametrize(
    "label, dim",
    [("A1", 3), ("A4", 24), ("B3", 21), ("C4", 36), ("D5", 45), ("G2", 14), ("F4", 52), ("E6", 78), ("E7", 133), ("E8", 248)],
)
def test_dimensions(label, dim):
    assert make_rs(label).dim == dim


@pytest.mark.parametrize(
    "label, theta",
    [
        ("A3", (1, 1, 1)),
        ("B3", (1, 2, 2)),
        ("C3", (2, 2, 1)),
        ("D5", (1, 2, 2, 1, 1)),
        ("G2", (3, 2)),
        ("F4", (2, 3, 4, 2)),
        ("E6", (1, 2, 2, 3, 2, 1)),
        ("E8", (2, 3, 4, 6, 5, 4, 3, 2)),
    ],
)
def test_highest_root(label, theta):
    assert make_rs(label).highest_root == theta


def test_cartan_conventions():
    assert cartan_matrix(LieType("B", 3))[2, 1] == -2
    assert cartan_matrix(LieType("C", 3))[1, 2] == -2
    assert cartan_matrix(LieType("G", 2))[0, 1] == -3
    assert cartan_matrix(LieType("F", 4))[2, 1] == -2
    e6 = cartan_matrix(LieType("E", 6))
    assert e6[1, 3] == -1 and e6[0, 2] == -1 and e6[1, 2] == 0


def test_root_lengths():
    assert not make_rs("B3").is_long((0, 0, 1))
    assert make_rs("C3").is_long((0, 0, 1))
    assert not make_rs("G2").is_long((1, 0))
    assert make_rs("G2").is_long((0, 1))
    f4 = make_rs("F4")
    assert [f4.is_long(f4.simple_root(i)) for i in range(1, 5)] == [True, True, False, False]


def test_positive_roots_ordered_by_height_then_lex():
    rs = make_rs("A3")
    heights = [sum(beta) for beta in rs.positive_roots]
    assert heights == sorted(heights)
    assert rs.positive_roots[:3] == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    assert rs.roots()[len(rs.positive_roots)] == negate(rs.positive_roots[0])


def test_reflection_and_pairing():
    rs = make_rs("A2")
    assert rs.reflect(1, (0, 1)) == (1, 1)
    assert rs.pairing((1, 1), 1) == 1
    g2 = make_rs("G2")
    assert g2.reflect(2, (1, 0)) == (1, 1)
    assert g2.reflect(1, (0, 1)) == (3, 1)


def test_coroot_of_short_root():
    rs = make_rs("B2")
    assert rs.coroot((1, 1)) == (2, 1)
    assert rs.coroot((1, 2)) == (1, 1)
    assert rs.coroot((-1, -1)) == (-2, -1)


def test_add_root_and_inner():
    rs = make_rs("B2")
    assert rs.add_root((1, 0), (0, 1)) == (1, 1)
    assert rs.add_root((1, 0), (1, 0)) is None
    assert rs.inner((0, 1), (0, 1)) == 1
    assert rs.inner((1, 0), (0, 1)) == -1


def test_neighbors_follow_bourbaki_numbering():
    assert make_rs("E6").neighbors(4) == [2, 3, 5]
    assert make_rs("D5").neighbors(3) == [2, 4, 5]
    assert make_rs("A1").neighbors(1) == []


def test_only_one_node_pairs_with_theta_outside_type_a():
    rs = make_rs("E8")
    assert [i for i in range(1, 9) if rs.pairing(rs.highest_root, i)] == [8]


def test_format_root():
    assert format_root((1, 2)) == "a1+2a2"
    assert format_root((-1, -1)) == "-(a1+a2)"
    assert format_root((0, -1)) == "-a2"


def test_invalid_types_and_roots():
    with pytest.raises(RootSystemError):
        LieType("B", 1)
    with pytest.raises(RootSystemError):
        LieType("H", 3)
    with pytest.raises(RootSystemError):
        make_rs("A2").require_root((2, 0))
    with pytest.raises(RootSystemError):
        make_rs("A2").check_node(3)


def test_all_lie_types_order():
    types = all_lie_types(8)
    labels = [t.label for t in types]
    assert labels[0] == "A1"
    assert "E8" in labels and "G2" in labels and "D3" in labels and "B1" not in labels
    assert labels == sorted(labels, key=lambda s: (s[0], int(s[1:])))
