"""The nested parabolic pair q <= p attached to a simple root, with its bigrading."""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, List, Tuple

from grading import CaseKind, CrossedDiagram, ParabolicGrading, build_grading, classify_case, ht_sigma
from rootsys import LieType, Root, build_root_system, negate

__all__ = [
    "BracketReport",
    "ContractError",
    "NestedPair",
    "build_nested",
    "check_abelian",
    "check_abelian_v",
    "check_bracket_zero",
    "check_p1_eq_q4",
    "component",
    "depth_q",
    "ff_model_iso",
    "filtration_levels",
    "is_projective_space_case",
    "long_root_neighbor_pairings",
    "nested_checks",
    "neighbor_sum_bounds",
    "q2_proof_steps",
    "short_root_failure",
]

LOGGER = logging.getLogger(__name__)

SELECTOR_PATTERN = re.compile(r"^(?P<grading>[pq])(?:(?P<degree>[+-]?\d+)(?P<part>[FV])?|(?P<sign>[+-]))$")


class ContractError(RuntimeError):
    """Raised when an operation is called outside the cases it is stated for."""


@dataclass(frozen=True)
class BracketReport:
    pair: Tuple[str, str]
    zero: bool
    witnesses: Tuple[Tuple[Root, Root], ...]
    empty_component: bool = False


class NestedPair:
    """q <= p for (g, alpha): Sigma_p = {alpha}, Sigma_q = alpha plus its Dynkin neighbors."""

    def __init__(self, lie_type: LieType, node: int) -> None:
        self.rs = build_root_system(lie_type)
        self.rs.check_node(node)
        self.base = (lie_type, node)
        self.node = node
        self.alpha: Root = self.rs.simple_root(node)
        self.is_long = self.rs.is_long(self.alpha)
        self.neighbors: Tuple[int, ...] = tuple(self.rs.neighbors(node))
        self.sigma_q: FrozenSet[int] = frozenset((node,) + self.neighbors)
        self.p_grading: ParabolicGrading = build_grading(CrossedDiagram(lie_type, frozenset({node})))
        self.q_grading: ParabolicGrading = build_grading(CrossedDiagram(lie_type, self.sigma_q))
        self.bigrade: Dict[Root, Tuple[int, int]] = {
            beta: (self.p_grading.degree[beta], self.q_grading.degree[beta]) for beta in self.rs.roots()
        }
        self.f_roots: Tuple[Root, Root] = (self.alpha, negate(self.alpha))
        self.v1_minus: Tuple[Root, ...] = tuple(b for b, bg in self.bigrade.items() if bg == (0, -1))
        self.v1_plus: Tuple[Root, ...] = tuple(b for b, bg in self.bigrade.items() if bg == (0, 1))
        self.case = classify_case(lie_type, node)
        self._check_splitting()
        if not self.is_long:
            LOGGER.warning(
                "%s node %d is a short root; results are reported without classification", lie_type, node
            )

    def _check_splitting(self) -> None:
        for sign in (1, -1):
            level = self.q_grading.component(sign)
            f_part = [b for b in level if self.bigrade[b][0] == sign]
            v_part = [b for b in level if self.bigrade[b][0] == 0]
            if f_part != [self.f_roots[0 if sign == 1 else 1]] or len(f_part) + len(v_part) != len(level):
                raise ContractError(f"{self.label}: q_{sign} does not split as F + V")

    @property
    def label(self) -> str:
        t, i = self.base
        return f"({t.label}, alpha{i})"

    def p0_meets_q_minus(self) -> Tuple[Root, ...]:
        """Roots of p_0 with negative q-degree."""
        return tuple(b for b, (pd, qd) in self.bigrade.items() if pd == 0 and qd < 0)


@lru_cache(maxsize=None)
def build_nested(t: LieType, i: int) -> NestedPair:
    return NestedPair(t, i)


# ----------------------------------------------------------------------
# Component selectors
# ----------------------------------------------------------------------
def component(np_: NestedPair, selector: str) -> Tuple[Root, ...]:
    """Roots of a bigraded component: q-2, q-1F, q1V, p0, q- (all negative), ..."""
    match = SELECTOR_PATTERN.match(selector)
    if not match:
        raise ContractError(f"Unknown component selector {selector!r}")
    index = 0 if match.group("grading") == "p" else 1
    if match.group("sign"):
        positive = match.group("sign") == "+"
        return tuple(b for b, bg in np_.bigrade.items() if (bg[index] > 0 if positive else bg[index] < 0))
    degree = int(match.group("degree"))
    roots = [b for b, bg in np_.bigrade.items() if bg[index] == degree]
    part = match.group("part")
    if part:
        if index != 1 or abs(degree) != 1:
            raise ContractError(f"F/V refinement only applies to q+1 and q-1, got {selector!r}")
        p_degree = degree if part == "F" else 0
        roots = [b for b in roots if np_.bigrade[b][0] == p_degree]
    return tuple(roots)


def check_bracket_zero(np_: NestedPair, a: str, b: str) -> BracketReport:
    """[A, B] = 0 at root level: no beta in A, gamma in B with beta+gamma a root or zero."""
    left, right = component(np_, a), component(np_, b)
    witnesses: List[Tuple[Root, Root]] = []
    for beta in left:
        for gamma in right:
            total = tuple(x + y for x, y in zip(beta, gamma))
            if not any(total) or np_.rs.is_root(total):
                witnesses.append((beta, gamma))
    empty = not left or not right
    if empty:
        LOGGER.warning("%s: bracket [%s, %s] has an empty side", np_.label, a, b)
    return BracketReport((a, b), not witnesses, tuple(witnesses), empty)


def check_abelian(np_: NestedPair, selector: str) -> bool:
    roots = component(np_, selector)
    return not any(np_.rs.add_root(beta, gamma) for beta in roots for gamma in roots)


def check_abelian_v(np_: NestedPair) -> bool:
    return check_abelian(np_, "q-1V")


def depth_q(np_: NestedPair) -> int:
    if not np_.is_long:
        LOGGER.warning("%s: depth of q reported without classification claim", np_.label)
    return np_.q_grading.depth


def ff_model_iso(np_: NestedPair) -> bool:
    """beta -> beta - alpha maps q-1V bijectively onto the roots of q-2."""
    minus_alpha = np_.f_roots[1]
    images = []
    for beta in np_.v1_minus:
        image = np_.rs.add_root(beta, minus_alpha)
        if image is None:
            return False
        images.append(image)
    target = set(component(np_, "q-2"))
    return len(set(images)) == len(images) and set(images) == target


def check_p1_eq_q4(np_: NestedPair) -> bool:
    """Filtration match p^-1 = q^-4 and its Killing dual p^2 = q^5.

    p^j and q^j are the sums of components of degree >= j. p^1 is strictly
    larger than q^4: p_1 holds roots of q-degree 1 to 4.
    """
    if np_.case not in (CaseKind.CONTACT, CaseKind.BD3):
        raise ContractError(f"{np_.label}: p^-1 = q^-4 is stated for contact and BD3 cases, got {np_.case.value}")
    for p_level, q_level in ((-1, -4), (2, 5)):
        p_side = {b for b, (pd, _) in np_.bigrade.items() if pd >= p_level}
        q_side = {b for b, (_, qd) in np_.bigrade.items() if qd >= q_level}
        if p_side != q_side:
            LOGGER.warning("%s: p^%d differs from q^%d", np_.label, p_level, q_level)
            return False
    return True


# ----------------------------------------------------------------------
# Root arithmetic behind the long-root statements
# ----------------------------------------------------------------------
def q2_proof_steps(np_: NestedPair) -> List[Root]:
    """Roots of q-2 violating ht_alpha = ht_{Sigma_q - alpha} = -1 or <beta, alpha^vee> = -1."""
    rest = np_.sigma_q - {np_.node}
    bad = []
    for beta in component(np_, "q-2"):
        if (
            ht_sigma(beta, {np_.node}) != -1
            or ht_sigma(beta, rest) != -1
            or np_.rs.pairing(beta, np_.node) != -1
        ):
            bad.append(beta)
    return bad


def neighbor_sum_bounds(np_: NestedPair) -> Tuple[int, int]:
    """Range of neighbor-coefficient sums -ht_{Sigma_q - alpha}(beta) over roots of p_-1."""
    sums = [-ht_sigma(beta, np_.neighbors) for beta in np_.p_grading.component(-1)]
    return min(sums), max(sums)


def filtration_levels(np_: NestedPair) -> Dict[int, Tuple[Root, ...]]:
    """q-degrees of the roots with ht_alpha = -1."""
    levels: Dict[int, List[Root]] = {}
    for beta, (pd, qd) in np_.bigrade.items():
        if pd == -1:
            levels.setdefault(qd, []).append(beta)
    return {qd: tuple(levels[qd]) for qd in sorted(levels, reverse=True)}


def is_projective_space_case(np_: NestedPair) -> bool:
    """Symmetric with q of depth 2: G/P is a projective space (A_n end nodes)."""
    return np_.case is CaseKind.SYMMETRIC and np_.q_grading.depth == 2


def long_root_neighbor_pairings(np_: NestedPair) -> Dict[int, int]:
    """<alpha_j, alpha^vee> for each neighbor j; all equal -1 when alpha is long."""
    return {j: np_.rs.pairing(np_.rs.simple_root(j), np_.node) for j in np_.neighbors}


def expected_depth_q(np_: NestedPair) -> int | None:
    """q-depth attached to the case, None when no statement applies."""
    if np_.case is CaseKind.SYMMETRIC:
        return 2 if is_projective_space_case(np_) else 3
    return {CaseKind.CONTACT: 5, CaseKind.BD3: 6}.get(np_.case)


def nested_checks(np_: NestedPair) -> Dict[str, Dict[str, object]]:
    """All bracket and root-arithmetic checks for a long-root case, keyed by name."""
    checks: Dict[str, Dict[str, object]] = {}

    def record(name: str, passed: bool, witness: object = None) -> None:
        checks[name] = {"status": "pass" if passed else "fail", "witness": witness}

    if not np_.is_long:
        return checks
    characteristic = check_bracket_zero(np_, "q-1F", "q-2")
    record("characteristic_bracket", characteristic.zero, list(characteristic.witnesses))
    preserved = check_bracket_zero(np_, "q-1F", "q-3")
    record("filtration_preserved", preserved.zero, list(preserved.witnesses))
    record("abelian_v", check_abelian_v(np_))
    record("p0_meets_q_minus_is_v", set(np_.p0_meets_q_minus()) == set(np_.v1_minus))
    record("ff_model_iso", ff_model_iso(np_))
    record("q2_proof_steps", not q2_proof_steps(np_), q2_proof_steps(np_))
    low, high = neighbor_sum_bounds(np_)
    record("neighbor_sum_bounds", 0 <= low and high <= 3, [low, high])
    levels = filtration_levels(np_)
    record(
        "filtration_levels",
        set(levels) <= {-1, -2, -3, -4} and levels.get(-1) == (np_.f_roots[1],),
        sorted(levels),
    )
    record("neighbor_pairings", all(v == -1 for v in long_root_neighbor_pairings(np_).values()))
    expected = expected_depth_q(np_)
    if expected is not None:
        record("depth_q", depth_q(np_) == expected, [depth_q(np_), expected])
    if np_.case in (CaseKind.CONTACT, CaseKind.BD3):
        record("p1_eq_q4", check_p1_eq_q4(np_))
        for a, b in (("q2", "q-4"), ("q1F", "q-4")):
            report = check_bracket_zero(np_, a, b)
            record(f"bracket_{a}_{b}", report.zero, list(report.witnesses))
    return checks


def short_root_failure(np_: NestedPair) -> BracketReport:
    """Witnessed failure of [q-1F, q-2] = 0 when alpha is short."""
    if np_.is_long:
        raise ContractError(f"{np_.label}: alpha is long, [q-1F, q-2] vanishes")
    report = check_bracket_zero(np_, "q-1F", "q-2")
    if report.zero:
        LOGGER.warning("%s: short root without a characteristic-bracket witness", np_.label)
    return report
