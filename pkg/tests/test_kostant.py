import pytest

from grading import CaseKind
from kostant import (
    UnsupportedConfigurationError,
    classify_h2_positive,
    h0_quotient_components,
    h2_components,
    hasse_length2,
    weyl_dimension,
)
from nested import build_nested
from rootsys import LieType, all_lie_types, build_root_system, negate


def make_type(label):
    return LieType(label[0], int(label[1:]))


def test_hasse_words_follow_neighbors():
    assert [(w.i, w.j) for w in hasse_length2(make_type("A2"), 1)] == [(1, 2)]
    assert [(w.i, w.j) for w in hasse_length2(make_type("A4"), 2)] == [(2, 1), (2, 3)]
    assert [(w.i, w.j) for w in hasse_length2(make_type("D5"), 3)] == [(3, 2), (3, 4), (3, 5)]
    assert hasse_length2(make_type("A2"), 1)[0].label == "s1s2"


def test_long_root_words_add_simple_roots():
    word = hasse_length2(make_type("B4"), 2)[1]
    assert word.phi == ((0, 1, 0, 0), (0, 1, 1, 0))


def test_only_maximal_parabolics():
    with pytest.raises(UnsupportedConfigurationError):
        hasse_length2(make_type("A3"), {1, 2})
    assert hasse_length2(make_type("A3"), {2}) == hasse_length2(make_type("A3"), 2)


def test_a2_component():
    (comp,) = h2_components(make_type("A2"), 1)
    assert comp.lw_triple == ((1, 0), (1, 1), (1, 0))
    assert comp.homogeneity == 3
    assert comp.levi_dim == 2
    assert comp.lowest_weight == (3, 1)
    assert comp.classified


def test_g2_long_component():
    (comp,) = h2_components(make_type("G2"), 2)
    assert comp.lw_triple == ((0, 1), (1, 1), (-3, -1))
    assert comp.homogeneity == 1
    assert comp.q_degree == -1


@pytest.mark.parametrize(
    "label, node, expected",
    [
        ("C4", 4, (1,)),
        ("A3", 2, (2, 2)),
        ("A5", 3, (1, 1)),
        ("G2", 2, (1,)),
        ("F4", 1, (1,)),
        ("E6", 1, (1,)),
        ("E6", 2, (1,)),
        ("E6", 6, (1,)),
        ("E7", 1, (1,)),
        ("E7", 7, (1,)),
        ("E8", 8, (1,)),
        ("D5", 4, (1,)),
        ("D5", 5, (1,)),
        ("D4", 2, (1, 1, 1)),
        ("B3", 2, (1, 1)),
        ("B4", 3, (1,)),
        ("A4", 1, (2,)),
        ("A4", 4, (2,)),
        ("B3", 1, (2,)),
        ("B4", 1, (2,)),
        ("D4", 1, (2,)),
        ("D4", 3, (2,)),
        ("D4", 4, (2,)),
        ("D3", 1, (2, 2)),
        ("D3", 2, (2,)),
        ("D3", 3, (2,)),
        ("A2", 1, (3,)),
        ("B2", 1, (3,)),
        ("C2", 2, (3,)),
        ("A4", 2, (1, 2)),
        ("A6", 2, (1, 2)),
        ("D6", 4, ()),
        ("E8", 1, ()),
        ("F4", 2, ()),
    ],
)
def test_classify_h2_positive(label, node, expected):
    assert classify_h2_positive(make_type(label), node).positive_rs == expected


def test_positive_homogeneities_only_for_symmetric_contact_bd3():
    allowed = {CaseKind.SYMMETRIC, CaseKind.CONTACT, CaseKind.BD3}
    for t in all_lie_types(8):
        if t.family == "A" and t.rank == 1:
            continue
        for i in range(1, t.rank + 1):
            result = classify_h2_positive(t, i)
            if result.case is CaseKind.SHORT_ROOT:
                continue
            assert bool(result.positive_rs) == (result.case in allowed), (t, i)


def test_component_count_is_node_degree_and_r_formula():
    for t in all_lie_types(8):
        if t.family == "A" and t.rank == 1:
            continue
        rs = build_root_system(t)
        for i in range(1, t.rank + 1):
            if not rs.is_long(rs.simple_root(i)):
                continue
            comps = h2_components(t, i)
            assert len(comps) == len(rs.neighbors(i))
            for comp in comps:
                assert comp.homogeneity == comp.lw_triple[2][i - 1] + 2
                assert comp.levi_dim >= 1


def test_q_degrees_of_positive_components():
    for comp in h0_quotient_components(build_nested(make_type("A5"), 3)):
        assert (comp.homogeneity, comp.q_degree) == (1, 0)
    r2 = [c for c in h0_quotient_components(build_nested(make_type("A4"), 2)) if c.homogeneity == 2]
    assert [c.q_degree for c in r2] == [2]
    for label, node in [("G2", 2), ("B4", 3), ("E6", 2)]:
        comps = h0_quotient_components(build_nested(make_type(label), node))
        assert [c.q_degree for c in comps if c.homogeneity == 1] == [-1]


def test_short_root_components_are_flagged():
    comps = h2_components(make_type("B3"), 3)
    assert comps and not any(c.classified for c in comps)
    (comp,) = comps
    assert comp.lw_triple == ((0, 0, 1), (0, 1, 2), (-1, -1, 0))
    assert comp.homogeneity == 3
    assert comp.lw_triple[2][2] + 2 == 2


def test_weyl_dimension():
    a3 = build_root_system(make_type("A3"))
    assert weyl_dimension(a3, [1, 2, 3], a3.highest_root) == 15
    b2 = build_root_system(make_type("B2"))
    assert weyl_dimension(b2, [1, 2], b2.highest_root) == 10
    g2 = build_root_system(make_type("G2"))
    assert weyl_dimension(g2, [1, 2], g2.highest_root) == 14
    assert weyl_dimension(a3, [2], (0, 1, 0)) == 3
    with pytest.raises(ValueError):
        weyl_dimension(a3, [1, 2, 3], negate(a3.highest_root))
