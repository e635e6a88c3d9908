"""Parabolic gradings of simple Lie algebras induced by a set of crossed simple roots."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from rootsys import LieType, Root, RootSystem, build_root_system

__all__ = [
    "CaseKind",
    "CrossedDiagram",
    "GradingError",
    "LeviFactor",
    "LeviType",
    "ParabolicGrading",
    "build_grading",
    "classify_case",
    "dim_lie_algebra",
    "ht_sigma",
    "levi_label",
    "levi_type",
]

LOGGER = logging.getLogger(__name__)

EXCEPTIONAL_DIMS = {("G", 2): 14, ("F", 4): 52, ("E", 6): 78, ("E", 7): 133, ("E", 8): 248}


class GradingError(ValueError):
    """Raised when a crossed diagram is malformed or a grading invariant fails."""


class CaseKind(str, Enum):
    SYMMETRIC = "Symmetric"
    CONTACT = "Contact"
    BD3 = "BD3"
    OTHER = "Other"
    SHORT_ROOT = "ShortRoot"


@dataclass(frozen=True)
class CrossedDiagram:
    lie_type: LieType
    sigma: FrozenSet[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", frozenset(int(i) for i in self.sigma))
        bad = sorted(i for i in self.sigma if not 1 <= i <= self.lie_type.rank)
        if bad:
            raise GradingError(f"Crossed nodes {bad} out of range 1..{self.lie_type.rank} for {self.lie_type}")

    @property
    def mask(self) -> str:
        return "".join("x" if k in self.sigma else "*" for k in range(1, self.lie_type.rank + 1))

    def __str__(self) -> str:
        return f"{self.lie_type.label}:{self.mask}"


def ht_sigma(beta: Sequence[int], sigma: Iterable[int]) -> int:
    """Sum of the coefficients of beta at the crossed nodes (1-based)."""
    return sum(beta[i - 1] for i in sigma)


def dim_lie_algebra(family: str, rank: int) -> int:
    if family == "A":
        return rank * (rank + 2)
    if family in ("B", "C"):
        return rank * (2 * rank + 1)
    if family == "D":
        return rank * (2 * rank - 1)
    return EXCEPTIONAL_DIMS[(family, rank)]


class ParabolicGrading:
    """The |k|-grading g = p_{-k} + ... + p_k with p_i spanned by roots of ht_Sigma = i."""

    def __init__(self, diagram: CrossedDiagram) -> None:
        self.diagram = diagram
        self.rs: RootSystem = build_root_system(diagram.lie_type)
        self.sigma = diagram.sigma
        self.degree: Dict[Root, int] = {beta: ht_sigma(beta, self.sigma) for beta in self.rs.roots()}
        self.depth = ht_sigma(self.rs.highest_root, self.sigma)
        components: Dict[int, List[Root]] = {i: [] for i in range(-self.depth, self.depth + 1)}
        for beta in self.rs.roots():
            components[self.degree[beta]].append(beta)
        self.components: Dict[int, Tuple[Root, ...]] = {i: tuple(roots) for i, roots in components.items()}
        self.dims: Dict[int, int] = {i: len(roots) + self.cartan_dim(i) for i, roots in self.components.items()}
        if any(self.dims[i] != self.dims[-i] for i in self.dims):
            raise GradingError(f"{diagram}: graded dimensions are not symmetric: {self.dims}")
        if sum(self.dims.values()) != self.rs.dim:
            raise GradingError(f"{diagram}: graded dimensions do not add up to dim g = {self.rs.dim}")
        if not self.bracket_generates():
            raise GradingError(f"{diagram}: p_-1 does not generate p_-")
        LOGGER.debug("Grading %s: depth %d, dims %s", diagram, self.depth, self.dims)

    def cartan_dim(self, i: int) -> int:
        return self.rs.rank if i == 0 else 0

    def component(self, i: int) -> Tuple[Root, ...]:
        return self.components.get(i, ())

    def positive_roots(self) -> Tuple[Root, ...]:
        """Roots spanning p_+ ordered by degree, then by the root order."""
        return tuple(beta for i in range(1, self.depth + 1) for beta in self.components[i])

    def bracket_generates(self) -> bool:
        """Iterated root sums starting in degree -1 reach every negative-degree root."""
        generators = self.component(-1)
        negative = {beta for beta, d in self.degree.items() if d < 0}
        reached = set(generators)
        frontier = list(generators)
        while frontier:
            fresh = []
            for beta in frontier:
                for gamma in generators:
                    total = self.rs.add_root(beta, gamma)
                    if total is not None and total not in reached:
                        reached.add(total)
                        fresh.append(total)
            frontier = fresh
        return reached == negative


@lru_cache(maxsize=None)
def build_grading(d: CrossedDiagram) -> ParabolicGrading:
    return ParabolicGrading(d)


# ----------------------------------------------------------------------
# Levi type
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class LeviFactor:
    family: str
    rank: int
    nodes: Tuple[int, ...]

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def dim(self) -> int:
        return dim_lie_algebra(self.family, self.rank)


@dataclass(frozen=True)
class LeviType:
    simple_factors: Tuple[LeviFactor, ...]
    center_dim: int

    @property
    def label(self) -> str:
        return "×".join(f.label for f in self.simple_factors) or "trivial"

    @property
    def semisimple_dim(self) -> int:
        return sum(f.dim for f in self.simple_factors)


def _connected_components(rs: RootSystem, nodes: Iterable[int]) -> List[Tuple[int, ...]]:
    remaining = set(nodes)
    result = []
    while remaining:
        start = min(remaining)
        stack, seen = [start], {start}
        while stack:
            k = stack.pop()
            for j in rs.neighbors(k):
                if j in remaining and j not in seen:
                    seen.add(j)
                    stack.append(j)
        remaining -= seen
        result.append(tuple(sorted(seen)))
    return sorted(result)


def _shape_family(rs: RootSystem, nodes: Tuple[int, ...]) -> str:
    """Identify a connected subdiagram by its bonds, root lengths and branching."""
    r = len(nodes)
    if r == 1:
        return "A"
    bonds = [
        int(rs.cartan[a - 1, b - 1] * rs.cartan[b - 1, a - 1])
        for idx, a in enumerate(nodes)
        for b in nodes[idx + 1:]
    ]
    if 3 in bonds:
        return "G"
    if 2 in bonds:
        short = sum(1 for k in nodes if rs.simple_lengths[k - 1] != 2)
        if r == 4 and short == 2:
            return "F"
        if r == 2 or short == 1:
            return "B"
        return "C"
    inside = set(nodes)
    degree = {k: [j for j in rs.neighbors(k) if j in inside] for k in nodes}
    branch = [k for k in nodes if len(degree[k]) == 3]
    if not branch:
        return "A"
    arms = []
    for start in degree[branch[0]]:
        length, prev, cur = 1, branch[0], start
        while True:
            nxt = [j for j in degree[cur] if j != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return "D"
    return "E"


def levi_type(g: ParabolicGrading) -> LeviType:
    """Delete crossed nodes and name the remaining components."""
    rs = g.rs
    t = rs.lie_type
    n = t.rank
    uncrossed = [k for k in range(1, n + 1) if k not in g.sigma]
    components = _connected_components(rs, uncrossed)
    factors: List[LeviFactor] = []
    if t.family == "D" and n - 1 in uncrossed and n in uncrossed:
        # the fork n-1, n together with the chain above it forms a D tail
        tail = tuple(sorted({k for c in components if n in c or n - 1 in c for k in c}))
        components = [c for c in components if not set(c) & {n - 1, n}]
        factors.append(LeviFactor("D", len(tail), tail))
    for comp in components:
        family = _shape_family(rs, comp)
        if t.family in ("B", "C") and n in comp:
            family = t.family
        factors.append(LeviFactor(family, len(comp), comp))
    factors.sort(key=lambda f: f.nodes[0])
    levi = LeviType(tuple(factors), len(g.sigma))
    total = levi.semisimple_dim + levi.center_dim + sum(d for i, d in g.dims.items() if i != 0)
    if total != rs.dim:
        raise GradingError(f"{g.diagram}: Levi {levi.label} does not account for dim g ({total} != {rs.dim})")
    return levi


def levi_label(levi: LeviType) -> str:
    return levi.label


# ----------------------------------------------------------------------
# Classification of long-root maximal parabolics
# ----------------------------------------------------------------------
def is_bd3(t: LieType, i: int) -> bool:
    return i == 3 and ((t.family == "B" and t.rank >= 4) or (t.family == "D" and t.rank >= 5))


def classify_case(t: LieType, i: int) -> CaseKind:
    rs = build_root_system(t)
    alpha = rs.simple_root(i)
    if not rs.is_long(alpha):
        return CaseKind.SHORT_ROOT
    g = build_grading(CrossedDiagram(t, frozenset({i})))
    if g.depth == 1:
        return CaseKind.SYMMETRIC
    if g.depth == 2 and g.dims[2] == 1:
        return CaseKind.CONTACT
    if is_bd3(t, i):
        return CaseKind.BD3
    return CaseKind.OTHER
