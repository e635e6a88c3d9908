from fractions import Fraction
from types import SimpleNamespace

import pytest

from grading import CaseKind, CrossedDiagram, build_grading
from homology import (
    SizeCapExceeded,
    apply_boundary,
    boundary_matrix,
    build_complex,
    chain_space,
    coboundary_matrix,
    compare_with_kostant,
    harm_curv_checks,
    hodge_report,
    inclusion_intertwines,
    squares_vanish,
    verify_lowest_weight_harmonic,
)
from homology import is_harmonic_vector
from kostant import h2_components
from nested import ContractError, build_nested, component, is_projective_space_case
from rootsys import LieType, all_lie_types, build_root_system, negate


def make_type(label):
    return LieType(label[0], int(label[1:]))


def make_grading(label, node):
    return build_grading(CrossedDiagram(make_type(label), frozenset({node})))


def test_chain_space_dimensions():
    complex_ = build_complex(make_grading("A2", 1))
    assert len(complex_.plus) == 2
    assert complex_.dim(2) == 8
    assert complex_.dim(3) == 0
    assert sum(complex_.degree_dims(2).values()) == 8
    assert complex_.chain_space(2).dim == 8


def test_matrix_shapes():
    grading = make_grading("A2", 1)
    assert boundary_matrix(grading, 2).shape == (16, 8)
    assert coboundary_matrix(grading, 1).shape == (8, 16)
    with pytest.raises(ValueError):
        boundary_matrix(grading, 0)


@pytest.mark.parametrize("label, node, ell", [("A2", 1, 1), ("B2", 1, 2), ("G2", 2, 2), ("A4", 2, 2)])
def test_differentials_square_to_zero(label, node, ell):
    assert squares_vanish(build_complex(make_grading(label, node)), ell) == {"boundary": True, "coboundary": True}


@pytest.mark.parametrize(
    "label, node, degrees",
    [("A2", 1, (3,)), ("B2", 1, (3,)), ("A4", 2, (1, 2)), ("G2", 2, (1,)), ("C3", 3, (1,))],
)
def test_harmonic_degrees(label, node, degrees):
    report = hodge_report(make_grading(label, node))
    assert report.harmonic_degrees == degrees
    assert report.identities_hold
    assert report.totals["ker_box"] == sum(c.levi_dim for c in h2_components(make_type(label), node))


def test_a2_harmonic_total():
    report = hodge_report(make_grading("A2", 1))
    assert report.totals["ker_box"] == 2
    assert report.totals["dim"] == 8
    document = report.as_dict()
    assert document["grading"] == "A2:x*" and document["ell"] == 2


def test_lowest_weight_vectors_are_harmonic():
    for label, node in [("A2", 1), ("G2", 2), ("B4", 3), ("A4", 2)]:
        for comp in h2_components(make_type(label), node):
            assert verify_lowest_weight_harmonic(comp), (label, comp.word.label)


def test_non_harmonic_chain():
    complex_ = build_complex(make_grading("A2", 1))
    cb = complex_.cb
    vector = {((cb.e((1, 0)),), cb.e((-1, 0))): Fraction(1)}
    assert apply_boundary(complex_, vector)
    assert not is_harmonic_vector(complex_, vector)


@pytest.mark.parametrize(
    "label, node, degrees",
    [("A2", 1, (3,)), ("G2", 2, (1,)), ("B4", 1, (2,)), ("B3", 2, (1,))],
)
def test_oracle_agrees_with_kostant(label, node, degrees):
    verdict = compare_with_kostant(make_type(label), node)
    assert verdict.passed
    assert verdict.harmonic_degrees == degrees
    assert verdict.total_matches


def test_size_cap_refusal():
    with pytest.raises(SizeCapExceeded) as info:
        hodge_report(make_grading("A2", 1), cap=10)
    assert info.value.cap == 10
    assert info.value.required[1] == 16
    with pytest.raises(SizeCapExceeded):
        compare_with_kostant(make_type("A2"), 1, cap=10, partial=False)


def test_partial_verdict_over_cap():
    verdict = compare_with_kostant(make_type("A2"), 1, cap=10)
    assert verdict.partial
    assert verdict.harmonic_total is None and verdict.total_matches is None
    assert verdict.harmonic_degrees == (3,)
    assert verdict.passed
    assert all(d >= 1 for d in verdict.computed_degrees)


def test_symmetric_correspondence_blocks():
    checks = harm_curv_checks(build_nested(make_type("C3"), 3))
    assert all(check["status"] == "pass" for check in checks.values())
    assert checks["traceless_block"]["witness"] == [3, 3]
    checks = harm_curv_checks(build_nested(make_type("A5"), 3))
    assert checks["coboundary_injective"]["witness"] == [4, 4]


@pytest.mark.parametrize("label, node", [("B4", 3), ("G2", 2), ("B3", 2)])
def test_contact_and_bd3_correspondence_blocks(label, node):
    checks = harm_curv_checks(build_nested(make_type(label), node))
    failed = [name for name, check in checks.items() if check["status"] != "pass"]
    assert not failed
    assert "boundary_vanishes_q-4" in checks


@pytest.mark.parametrize("label, node", [("A3", 1), ("C3", 1), ("D6", 4)])
def test_correspondence_blocks_reject_other_cases(label, node):
    with pytest.raises(ContractError):
        harm_curv_checks(build_nested(make_type(label), node))


def test_inclusion_intertwines_boundaries():
    assert inclusion_intertwines(build_nested(make_type("B3"), 2))
    assert inclusion_intertwines(build_nested(make_type("A4"), 2), degrees=[1, 2])


def test_inclusion_fails_when_gradings_are_swapped():
    np_ = build_nested(make_type("A4"), 2)
    swapped = SimpleNamespace(p_grading=np_.q_grading, q_grading=np_.p_grading, label="A4 swapped")
    assert not inclusion_intertwines(swapped, degrees=[2])


def test_refinement_tags_follow_bigrade():
    np_ = build_nested(make_type("C3"), 3)
    complex_ = build_complex(np_.q_grading, nested=np_)
    cb = complex_.cb
    alpha = cb.e(np_.alpha)
    space = complex_.chain_space(1)
    assert space.refinement[((alpha,), cb.e(negate(np_.alpha)))] == ("+1F", "-1F")
    assert {space.refinement[((alpha,), cb.e(x))] for x in np_.v1_minus} == {("+1F", "-1V")}
    assert space.refinement[((alpha,), cb.h(1))] == ("+1F", "0")
    tagged = [tags for tags in complex_.chain_space(2, 2).refinement.values() if tags == ("+1F", "+2", "-1V")]
    assert len(tagged) == len(component(np_, "q2")) * len(np_.v1_minus)
    assert build_complex(np_.q_grading).chain_space(1).refinement is None


def test_degree_restricted_chain_space():
    grading = make_grading("A2", 1)
    space = chain_space(grading, 2, degree=3)
    assert space.dim == 2
    assert set(space.degree.values()) == {3}


def test_hodge_report_on_nested_grading():
    np_ = build_nested(make_type("B3"), 2)
    report = hodge_report(np_.q_grading)
    assert report.identities_hold
    assert report.totals["dim"] == build_complex(np_.q_grading).dim(2)


def _cases_up_to_dim(max_dim):
    cases = []
    for t in all_lie_types(8):
        if t.family == "A" and t.rank == 1:
            continue
        rs = build_root_system(t)
        if 2 * len(rs.positive_roots) + rs.rank <= max_dim:
            cases.extend((t, i) for i in range(1, t.rank + 1))
    return cases


@pytest.mark.slow
@pytest.mark.parametrize("t, node", _cases_up_to_dim(60), ids=lambda v: str(v))
def test_oracle_sweep_up_to_dim_60(t, node):
    verdict = compare_with_kostant(t, node, partial=False)
    assert verdict.passed, verdict.as_dict()
    grading = build_grading(CrossedDiagram(t, frozenset({node})))
    assert squares_vanish(build_complex(grading), 2) == {"boundary": True, "coboundary": True}


@pytest.mark.slow
@pytest.mark.parametrize("t, node", _cases_up_to_dim(60), ids=lambda v: str(v))
def test_correspondence_blocks_sweep_up_to_dim_60(t, node):
    np_ = build_nested(t, node)
    if not np_.is_long or np_.case not in (CaseKind.SYMMETRIC, CaseKind.CONTACT, CaseKind.BD3):
        pytest.skip("no correspondence-space statement")
    if is_projective_space_case(np_):
        pytest.skip("projective-space case")
    checks = harm_curv_checks(np_)
    failed = {name: check for name, check in checks.items() if check["status"] != "pass"}
    assert not failed
