"""Chevalley basis structure constants and the Killing form of a simple Lie algebra."""
from __future__ import annotations

import itertools
import logging
import random
from collections import defaultdict
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple

from exact_linalg import ExactMatrix
from grading import ParabolicGrading
from rootsys import LieType, Root, RootSystem, build_root_system, height, negate

__all__ = [
    "ChevalleyBasis",
    "bracket",
    "bracket_zero_by_constants",
    "build_chevalley",
    "jacobi_violations",
    "killing_pairing_matrix",
    "random_triples",
    "all_triples",
    "killing_form",
    "killing_pairing_rank",
]

LOGGER = logging.getLogger(__name__)

Vector = Dict[int, Fraction]
Term = Tuple[int, int]


class ChevalleyBasis:
    """Basis [h_1..h_rank] + [e_beta] with integral structure constants.

    Index layout: 0..rank-1 are the h_i, then positive roots in (height, lex)
    order, then their negatives in the same order.
    """

    def __init__(self, rs: RootSystem) -> None:
        self.rs = rs
        self.rank = rs.rank
        self.root_list: Tuple[Root, ...] = rs.positive_roots + rs.negative_roots
        self.index: Dict[Root, int] = {beta: self.rank + k for k, beta in enumerate(self.root_list)}
        self.dim = self.rank + len(self.root_list)
        self._order = {beta: k for k, beta in enumerate(rs.positive_roots)}
        self._positive_n: Dict[Tuple[Root, Root], int] = {}
        self._compute_positive_constants()
        self.constants: Dict[Tuple[int, int], Tuple[Term, ...]] = self._build_table()
        LOGGER.debug(
            "Chevalley basis for %s: dim %d, %d nonzero bracket pairs",
            rs.lie_type,
            self.dim,
            len(self.constants),
        )

    # ------------------------------------------------------------------
    # Basis labels
    # ------------------------------------------------------------------
    def h(self, i: int) -> int:
        self.rs.check_node(i)
        return i - 1

    def e(self, beta: Sequence[int]) -> int:
        return self.index[self.rs.require_root(beta)]

    def root_of(self, idx: int) -> Root | None:
        return None if idx < self.rank else self.root_list[idx - self.rank]

    def label(self, idx: int) -> str:
        root = self.root_of(idx)
        return f"h{idx + 1}" if root is None else f"e[{','.join(map(str, root))}]"

    def degree(self, idx: int, grading: ParabolicGrading) -> int:
        root = self.root_of(idx)
        return 0 if root is None else grading.degree[root]

    # ------------------------------------------------------------------
    # Structure constants
    # ------------------------------------------------------------------
    def _string_below(self, gamma: Root, delta: Root) -> int:
        """Largest p with delta - p*gamma a root."""
        p = 0
        current = tuple(d - g for d, g in zip(delta, gamma))
        while self.rs.is_root(current):
            p += 1
            current = tuple(d - g for d, g in zip(current, gamma))
        return p

    def _norm(self, beta: Sequence[int]) -> Fraction:
        return self.rs.inner(beta, beta)

    def _compute_positive_constants(self) -> None:
        positive = self.rs.positive_roots
        for xi in positive:
            if height(xi) == 1:
                continue
            special = []
            for a in positive:
                if height(a) >= height(xi):
                    break
                b = tuple(x - y for x, y in zip(xi, a))
                if b in self._order and self._order[a] < self._order[b]:
                    special.append((a, b))
            gamma, delta = special[0]
            n_extra = self._string_below(gamma, delta) + 1
            self._positive_n[(gamma, delta)] = n_extra
            self._positive_n[(delta, gamma)] = -n_extra
            xi_norm = self._norm(xi)
            minus_gamma, minus_delta = negate(gamma), negate(delta)
            for a, b in special[1:]:
                total = Fraction(0)
                b_minus_gamma = tuple(x - y for x, y in zip(b, gamma))
                if self.rs.is_root(b_minus_gamma):
                    total += (
                        self.structure_constant(b, minus_gamma)
                        * self.structure_constant(a, minus_delta)
                        / self._norm(b_minus_gamma)
                    )
                a_minus_gamma = tuple(x - y for x, y in zip(a, gamma))
                if self.rs.is_root(a_minus_gamma):
                    total += (
                        self.structure_constant(minus_gamma, a)
                        * self.structure_constant(b, minus_delta)
                        / self._norm(a_minus_gamma)
                    )
                value = xi_norm * total / n_extra
                if value.denominator != 1:
                    raise ArithmeticError(f"Non-integral structure constant N{a, b} = {value}")
                self._positive_n[(a, b)] = int(value)
                self._positive_n[(b, a)] = -int(value)

    def structure_constant(self, beta: Sequence[int], gamma: Sequence[int]) -> int:
        """N_{beta,gamma} with [e_beta, e_gamma] = N e_{beta+gamma}; 0 if beta+gamma is not a root."""
        beta, gamma = tuple(beta), tuple(gamma)
        total = self.rs.add_root(beta, gamma)
        if total is None:
            return 0
        beta_pos, gamma_pos = height(beta) > 0, height(gamma) > 0
        if beta_pos and gamma_pos:
            return self._positive_n[(beta, gamma)]
        if not beta_pos and not gamma_pos:
            return -self.structure_constant(negate(beta), negate(gamma))
        # beta + gamma + zeta = 0: N_{b,g}/(z,z) = N_{g,z}/(b,b) = N_{z,b}/(g,g)
        zeta = negate(total)
        if (height(zeta) > 0) == gamma_pos:
            value = self._norm(zeta) / self._norm(beta) * self.structure_constant(gamma, zeta)
        else:
            value = self._norm(zeta) / self._norm(gamma) * self.structure_constant(zeta, beta)
        return int(value)

    def _basis_bracket(self, a: int, b: int) -> Tuple[Term, ...]:
        ra, rb = self.root_of(a), self.root_of(b)
        if ra is None and rb is None:
            return ()
        if ra is None:
            c = self.rs.pairing(rb, a + 1)
            return ((b, c),) if c else ()
        if rb is None:
            c = self.rs.pairing(ra, b + 1)
            return ((a, -c),) if c else ()
        total = tuple(x + y for x, y in zip(ra, rb))
        if not any(total):
            return tuple((k, c) for k, c in enumerate(self.rs.coroot(ra)) if c)
        if self.rs.is_root(total):
            return ((self.index[total], self.structure_constant(ra, rb)),)
        return ()

    def _build_table(self) -> Dict[Tuple[int, int], Tuple[Term, ...]]:
        table = {}
        for a in range(self.dim):
            for b in range(self.dim):
                terms = self._basis_bracket(a, b)
                if terms:
                    table[(a, b)] = terms
        return table

    # ------------------------------------------------------------------
    # Bracket and Killing form
    # ------------------------------------------------------------------
    def bracket(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vector:
        result: Dict[int, Fraction] = defaultdict(Fraction)
        for a, ca in x.items():
            if not ca:
                continue
            for b, cb in y.items():
                if not cb:
                    continue
                for k, c in self.constants.get((a, b), ()):
                    result[k] += ca * cb * c
        return {k: v for k, v in result.items() if v}

    def ad_trace(self, a: int, b: int) -> Fraction:
        """tr(ad e_a ad e_b) over the basis."""
        total = Fraction(0)
        for c in range(self.dim):
            inner = self.constants.get((b, c), ())
            for k, coeff in inner:
                for m, coeff2 in self.constants.get((a, k), ()):
                    if m == c:
                        total += coeff * coeff2
        return total

    @cached_property
    def killing(self) -> Dict[Tuple[int, int], Fraction]:
        """Nonzero entries of the trace form; only weight-cancelling pairs can be nonzero."""
        values: Dict[Tuple[int, int], Fraction] = {}
        for a in range(self.rank):
            for b in range(self.rank):
                value = self.ad_trace(a, b)
                if value:
                    values[(a, b)] = value
        for beta, idx in self.index.items():
            value = self.ad_trace(idx, self.index[negate(beta)])
            if value:
                values[(idx, self.index[negate(beta)])] = value
        return values

    def killing_form(self, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for a, ca in x.items():
            for b, cb in y.items():
                value = self.killing.get((a, b))
                if value:
                    total += ca * cb * value
        return total

    def root_pair_norm(self, beta: Root) -> Fraction:
        """B(e_beta, e_-beta)."""
        return self.killing[(self.index[beta], self.index[negate(beta)])]


@lru_cache(maxsize=None)
def _chevalley_for(t: LieType) -> ChevalleyBasis:
    return ChevalleyBasis(build_root_system(t))


def build_chevalley(rs: RootSystem) -> ChevalleyBasis:
    return _chevalley_for(rs.lie_type)


def basis_vector(idx: int) -> Vector:
    return {idx: Fraction(1)}


def bracket(cb: ChevalleyBasis, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Vector:
    return cb.bracket(x, y)


def killing_form(cb: ChevalleyBasis, x: Mapping[int, Fraction], y: Mapping[int, Fraction]) -> Fraction:
    return cb.killing_form(x, y)


# ----------------------------------------------------------------------
# Well-formedness checks
# ----------------------------------------------------------------------
def _add(*vectors: Vector) -> Vector:
    result: Dict[int, Fraction] = defaultdict(Fraction)
    for vector in vectors:
        for k, v in vector.items():
            result[k] += v
    return {k: v for k, v in result.items() if v}


def jacobi_violations(cb: ChevalleyBasis, triples: Iterable[Tuple[int, int, int]]) -> List[Tuple[int, int, int]]:
    violations = []
    for a, b, c in triples:
        x, y, z = basis_vector(a), basis_vector(b), basis_vector(c)
        total = _add(
            cb.bracket(x, cb.bracket(y, z)),
            cb.bracket(y, cb.bracket(z, x)),
            cb.bracket(z, cb.bracket(x, y)),
        )
        if total:
            violations.append((a, b, c))
    return violations


def all_triples(cb: ChevalleyBasis) -> Iterator[Tuple[int, int, int]]:
    """Strictly increasing basis triples; repeated entries follow from antisymmetry."""
    return itertools.combinations(range(cb.dim), 3)


def random_triples(cb: ChevalleyBasis, count: int, seed: int) -> List[Tuple[int, int, int]]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(cb.dim) for _ in range(3)) for _ in range(count)]  # type: ignore[misc]


def killing_pairing_matrix(cb: ChevalleyBasis, grading: ParabolicGrading, i: int) -> ExactMatrix:
    """B restricted to p_i x p_-i in the Chevalley basis."""
    left = [k for k in range(cb.dim) if cb.degree(k, grading) == i]
    right = [k for k in range(cb.dim) if cb.degree(k, grading) == -i]
    entries: Dict[int, Dict[int, Fraction]] = {}
    for a in left:
        for b in right:
            value = cb.killing.get((a, b))
            if value:
                entries.setdefault(a, {})[b] = value
    return ExactMatrix(left, right, entries)


def killing_pairing_rank(cb: ChevalleyBasis, grading: ParabolicGrading, i: int) -> int:
    return killing_pairing_matrix(cb, grading, i).rank()


def bracket_zero_by_constants(cb: ChevalleyBasis, left: Sequence[Root], right: Sequence[Root]) -> bool:
    """[e_beta, e_gamma] = 0 for all pairs, read from the structure constants."""
    return not any(cb.constants.get((cb.e(beta), cb.e(gamma))) for beta in left for gamma in right)
