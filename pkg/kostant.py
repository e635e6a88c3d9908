"""Kostant-side prediction of H_2(p_+, g) for maximal parabolics via length-2 Hasse words."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Collection, List, Sequence, Tuple, Union

from grading import CaseKind, classify_case, ht_sigma
from nested import NestedPair
from rootsys import LieType, Root, RootSystem, build_root_system, negate

__all__ = [
    "H2Classification",
    "H2Component",
    "HasseWord2",
    "UnsupportedConfigurationError",
    "classify_h2_positive",
    "h0_quotient_components",
    "h2_components",
    "hasse_length2",
    "weyl_dimension",
]

LOGGER = logging.getLogger(__name__)

NodeSpec = Union[int, Collection[int]]


class UnsupportedConfigurationError(RuntimeError):
    """Raised when a computation needs a maximal parabolic and gets another crossing."""


@dataclass(frozen=True)
class HasseWord2:
    i: int
    j: int
    phi: Tuple[Root, Root]

    @property
    def label(self) -> str:
        return f"s{self.i}s{self.j}"


@dataclass(frozen=True)
class H2Component:
    """One irreducible piece of H_2(p_+, g), generated in lowest weight by lw_triple.

    homogeneity is the total alpha_i-degree of the triple. For long alpha_i
    that equals ht_{alpha_i}(-s_i s_j theta) + 2. For short alpha_i the two
    differ, and classified is False.
    """

    lie_type: LieType
    word: HasseWord2
    lw_triple: Tuple[Root, Root, Root]
    homogeneity: int
    q_degree: int
    levi_dim: int
    classified: bool

    @property
    def lowest_weight(self) -> Root:
        return tuple(sum(coords) for coords in zip(*self.lw_triple))


@dataclass(frozen=True)
class H2Classification:
    lie_type: LieType
    node: int
    case: CaseKind
    positive_rs: Tuple[int, ...]


def _single_node(node: NodeSpec) -> int:
    if isinstance(node, int):
        return node
    nodes = sorted(node)
    if len(nodes) != 1:
        raise UnsupportedConfigurationError(
            f"Only maximal parabolics are supported; got crossed nodes {nodes}"
        )
    return nodes[0]


def hasse_length2(t: LieType, node: NodeSpec) -> List[HasseWord2]:
    """One word s_i s_j per Dynkin neighbor j of the crossed node i."""
    i = _single_node(node)
    rs = build_root_system(t)
    alpha_i = rs.simple_root(i)
    words = []
    for j in rs.neighbors(i):
        words.append(HasseWord2(i, j, (alpha_i, rs.reflect(i, rs.simple_root(j)))))
    return words


def weyl_dimension(rs: RootSystem, levi_nodes: Sequence[int], highest_weight: Sequence[int]) -> int:
    """Weyl dimension formula over the semisimple Levi spanned by levi_nodes.

    highest_weight is given in simple-root coordinates and must pair
    nonnegatively with every coroot of levi_nodes.
    """
    inside = set(levi_nodes)
    pairings = [rs.pairing(highest_weight, k) for k in sorted(inside)]
    if any(p < 0 for p in pairings):
        raise ValueError(f"Weight {tuple(highest_weight)} is not dominant for Levi nodes {sorted(inside)}")
    levi_roots = [
        beta for beta in rs.positive_roots if all(c == 0 or k + 1 in inside for k, c in enumerate(beta))
    ]
    rho = [Fraction(sum(beta[k] for beta in levi_roots), 2) for k in range(rs.rank)]
    shifted = [Fraction(w) + r for w, r in zip(highest_weight, rho)]
    dim = Fraction(1)
    for beta in levi_roots:
        dim *= rs.inner(shifted, beta) / rs.inner(rho, beta)
    if dim.denominator != 1:
        raise ValueError(f"Non-integral Weyl dimension {dim}")
    return int(dim)


def h2_components(t: LieType, node: NodeSpec) -> List[H2Component]:
    """Lowest-weight triples (alpha_i, s_i(alpha_j), -s_i s_j(theta)) and their gradings."""
    i = _single_node(node)
    rs = build_root_system(t)
    long_root = rs.is_long(rs.simple_root(i))
    if not long_root:
        LOGGER.warning("%s node %d is short; components are computed but not classified", t, i)
    sigma_q = {i, *rs.neighbors(i)}
    levi_nodes = [k for k in range(1, rs.rank + 1) if k != i]
    components = []
    for word in hasse_length2(t, i):
        w_theta = rs.reflect(i, rs.reflect(word.j, rs.highest_root))
        triple = (word.phi[0], word.phi[1], negate(w_theta))
        r = sum(ht_sigma(root, {i}) for root in triple)
        q_degree = sum(ht_sigma(root, sigma_q) for root in triple)
        lowest = tuple(sum(coords) for coords in zip(*triple))
        levi_dim = weyl_dimension(rs, levi_nodes, negate(lowest))
        components.append(H2Component(t, word, triple, r, q_degree, levi_dim, long_root))
        LOGGER.debug("%s %s: triple %s, r=%d, q-degree %d, dim %d", t, word.label, triple, r, q_degree, levi_dim)
    return components


def classify_h2_positive(t: LieType, node: NodeSpec) -> H2Classification:
    i = _single_node(node)
    rs = build_root_system(t)
    case = classify_case(t, i)
    if not rs.is_long(rs.simple_root(i)):
        LOGGER.warning("%s node %d is short; homogeneities carry no classification", t, i)
    rs_values = tuple(sorted(c.homogeneity for c in h2_components(t, i) if c.homogeneity >= 1))
    return H2Classification(t, i, case, rs_values)


def h0_quotient_components(np_: NestedPair) -> List[H2Component]:
    """The same generators, read in the q-grading (their q_degree field)."""
    if not np_.is_long:
        LOGGER.warning("%s: q-degrees of short-root components carry no statement", np_.label)
    t, i = np_.base
    return h2_components(t, i)
