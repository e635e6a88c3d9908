"""Irreducible root systems of types A-G in Bourbaki numbering, with exact arithmetic."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import numpy as np

__all__ = [
    "LieType",
    "Root",
    "RootSystem",
    "RootSystemError",
    "build_root_system",
    "cartan_matrix",
    "reflect",
    "pairing",
    "is_root",
    "add_root",
    "all_lie_types",
    "format_root",
    "height",
    "is_long",
    "negate",
]

LOGGER = logging.getLogger(__name__)

Root = Tuple[int, ...]

FAMILY_RANKS = {
    "A": "n >= 1",
    "B": "n >= 2",
    "C": "n >= 2",
    "D": "n >= 3",
    "E": "n in {6, 7, 8}",
    "F": "n = 4",
    "G": "n = 2",
}

POSITIVE_ROOT_COUNTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


class RootSystemError(ValueError):
    """Raised when a Lie type is invalid or a vector is not a root."""


def _rank_is_valid(family: str, rank: int) -> bool:
    if family == "A":
        return rank >= 1
    if family in ("B", "C"):
        return rank >= 2
    if family == "D":
        return rank >= 3
    if family == "E":
        return rank in (6, 7, 8)
    if family == "F":
        return rank == 4
    if family == "G":
        return rank == 2
    return False


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in FAMILY_RANKS:
            raise RootSystemError(f"Unknown Lie family {self.family!r}; expected one of A-G")
        if not isinstance(self.rank, int) or not _rank_is_valid(self.family, self.rank):
            raise RootSystemError(
                f"Invalid rank {self.rank!r} for family {self.family}: requires {FAMILY_RANKS[self.family]}"
            )

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def __str__(self) -> str:
        return self.label


def positive_root_count(t: LieType) -> int:
    """Classical number of positive roots."""
    n = t.rank
    if t.family == "A":
        return n * (n + 1) // 2
    if t.family in ("B", "C"):
        return n * n
    if t.family == "D":
        return n * (n - 1)
    return POSITIVE_ROOT_COUNTS[t.label]


def cartan_matrix(t: LieType) -> np.ndarray:
    """Cartan matrix with A[i, j] = <alpha_j, alpha_i^vee> (0-based array indices)."""
    n = t.rank
    A = 2 * np.eye(n, dtype=int)
    if t.family in ("A", "B", "C"):
        for k in range(n - 1):
            A[k, k + 1] = A[k + 1, k] = -1
        if t.family == "B":
            # alpha_n short
            A[n - 1, n - 2] = -2
        elif t.family == "C":
            # alpha_n long
            A[n - 2, n - 1] = -2
    elif t.family == "D":
        for k in range(n - 2):
            A[k, k + 1] = A[k + 1, k] = -1
        A[n - 3, n - 1] = A[n - 1, n - 3] = -1
    elif t.family == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        chain = [0] + list(range(2, n))
        for a, b in zip(chain, chain[1:]):
            A[a, b] = A[b, a] = -1
        A[1, 3] = A[3, 1] = -1
    elif t.family == "F":
        A[0, 1] = A[1, 0] = -1
        A[1, 2] = -1
        A[2, 1] = -2
        A[2, 3] = A[3, 2] = -1
    elif t.family == "G":
        # alpha_1 short, alpha_2 long
        A[0, 1] = -3
        A[1, 0] = -1
    A.setflags(write=False)
    return A


def _simple_lengths(A: np.ndarray) -> List[Fraction]:
    """Squared lengths of simple roots, long ones normalized to 2."""
    n = A.shape[0]
    lengths: List[Optional[Fraction]] = [None] * n
    lengths[0] = Fraction(1)
    pending = [0]
    while pending:
        i = pending.pop()
        for j in range(n):
            if j != i and A[i, j] != 0 and lengths[j] is None:
                lengths[j] = lengths[i] * Fraction(int(A[i, j]), int(A[j, i]))
                pending.append(j)
    scale = Fraction(2) / max(lengths)  # type: ignore[type-var]
    return [length * scale for length in lengths]  # type: ignore[operator]


class RootSystem:
    """Positive roots, symmetrized form and highest root of an irreducible root system."""

    def __init__(self, lie_type: LieType) -> None:
        self.lie_type = lie_type
        self.rank = lie_type.rank
        self.cartan = cartan_matrix(lie_type)
        self.simple_lengths = _simple_lengths(self.cartan)
        self.form: Tuple[Tuple[Fraction, ...], ...] = tuple(
            tuple(int(self.cartan[i, j]) * self.simple_lengths[i] / 2 for j in range(self.rank))
            for i in range(self.rank)
        )
        self.positive_roots: Tuple[Root, ...] = self._close_positive_roots()
        self.negative_roots: Tuple[Root, ...] = tuple(negate(beta) for beta in self.positive_roots)
        self._root_set: FrozenSet[Root] = frozenset(self.positive_roots) | frozenset(self.negative_roots)
        self.highest_root: Root = self._find_highest_root()
        expected = positive_root_count(lie_type)
        if len(self.positive_roots) != expected:
            raise RootSystemError(
                f"{lie_type}: closure produced {len(self.positive_roots)} positive roots, expected {expected}"
            )
        LOGGER.debug(
            "Built root system %s with %d positive roots, theta=%s",
            lie_type,
            len(self.positive_roots),
            self.highest_root,
        )

    # ------------------------------------------------------------------
    # Construction
    # ------------------------------------------------------------------
    def _close_positive_roots(self) -> Tuple[Root, ...]:
        simple = [self.simple_root(i) for i in range(1, self.rank + 1)]
        known = set(simple)
        ordered: List[Root] = list(simple)
        level = list(simple)
        while level:
            next_level: List[Root] = []
            for beta in level:
                for i in range(self.rank):
                    # alpha_i-string through beta: beta - p alpha_i, ..., beta + q alpha_i
                    p = 0
                    lower = _shift(beta, i, -1)
                    while lower in known:
                        p += 1
                        lower = _shift(lower, i, -1)
                    q = p - self._pairing0(beta, i)
                    if q > 0:
                        upper = _shift(beta, i, 1)
                        if upper not in known:
                            known.add(upper)
                            next_level.append(upper)
            next_level.sort(key=_root_order_key)
            ordered.extend(next_level)
            level = next_level
        return tuple(sorted(ordered, key=_root_order_key))

    def _find_highest_root(self) -> Root:
        tops = [
            beta
            for beta in self.positive_roots
            if all(_shift(beta, i, 1) not in self._root_set for i in range(self.rank))
        ]
        if len(tops) != 1:
            raise RootSystemError(f"{self.lie_type}: expected a unique highest root, found {tops}")
        return tops[0]

    # ------------------------------------------------------------------
    # Queries
    # ------------------------------------------------------------------
    @property
    def dim(self) -> int:
        """Dimension of the Lie algebra."""
        return self.rank + 2 * len(self.positive_roots)

    def simple_root(self, i: int) -> Root:
        self.check_node(i)
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    def roots(self) -> Tuple[Root, ...]:
        """Positive roots followed by negative roots."""
        return self.positive_roots + self.negative_roots

    def check_node(self, i: int) -> None:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= self.rank:
            raise RootSystemError(f"Node index {i!r} out of range 1..{self.rank} for {self.lie_type}")

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(int(c) for c in v) in self._root_set

    def require_root(self, beta: Sequence[int]) -> Root:
        root = tuple(int(c) for c in beta)
        if root not in self._root_set:
            raise RootSystemError(f"{root} is not a root of {self.lie_type}")
        return root

    def _pairing0(self, beta: Root, i0: int) -> int:
        return int(np.dot(self.cartan[i0], beta))

    def pairing(self, beta: Sequence[int], i: int) -> int:
        """<beta, alpha_i^vee> for 1-based node i."""
        self.check_node(i)
        return self._pairing0(tuple(beta), i - 1)

    def reflect(self, i: int, beta: Sequence[int]) -> Root:
        root = self.require_root(beta)
        c = self.pairing(root, i)
        return _shift(root, i - 1, -c)

    def add_root(self, beta: Sequence[int], gamma: Sequence[int]) -> Optional[Root]:
        total = tuple(int(a) + int(b) for a, b in zip(beta, gamma))
        return total if total in self._root_set else None

    def inner(self, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
        """Symmetrized form on coordinates over the simple roots."""
        total = Fraction(0)
        for i, bi in enumerate(beta):
            if bi == 0:
                continue
            row = self.form[i]
            for j, gj in enumerate(gamma):
                if gj:
                    total += bi * gj * row[j]
        return total

    def is_long(self, beta: Sequence[int]) -> bool:
        return self.inner(beta, beta) == 2

    def coroot(self, beta: Sequence[int]) -> Tuple[int, ...]:
        """Coefficients of beta^vee over the simple coroots."""
        root = self.require_root(beta)
        norm = self.inner(root, root)
        coeffs = [c * self.simple_lengths[k] / norm for k, c in enumerate(root)]
        if any(c.denominator != 1 for c in coeffs):
            raise RootSystemError(f"Coroot of {root} is not integral: {coeffs}")
        return tuple(int(c) for c in coeffs)

    def neighbors(self, i: int) -> List[int]:
        self.check_node(i)
        return [j + 1 for j in range(self.rank) if j != i - 1 and self.cartan[i - 1, j] != 0]

    def theta_coefficient(self, i: int) -> int:
        self.check_node(i)
        return self.highest_root[i - 1]


# ----------------------------------------------------------------------
# Root helpers
# ----------------------------------------------------------------------
def _shift(beta: Root, i0: int, amount: int) -> Root:
    return tuple(c + amount if k == i0 else c for k, c in enumerate(beta))


def negate(beta: Iterable[int]) -> Root:
    return tuple(-c for c in beta)


def height(beta: Iterable[int]) -> int:
    return sum(beta)


def _root_order_key(beta: Root) -> Tuple[int, Root]:
    return (height(beta), beta)


def format_root(beta: Sequence[int]) -> str:
    """Human readable form such as 'a1+2a2' or '-(a1+a2)'."""
    sign = "-" if sum(beta) < 0 else ""
    terms = []
    for k, c in enumerate(beta):
        c = abs(c)
        if c == 1:
            terms.append(f"a{k + 1}")
        elif c:
            terms.append(f"{c}a{k + 1}")
    body = "+".join(terms) or "0"
    if sign and len(terms) > 1:
        return f"-({body})"
    return sign + body


@lru_cache(maxsize=None)
def build_root_system(t: LieType) -> RootSystem:
    """Cached constructor; RootSystem values are immutable after construction."""
    return RootSystem(t)


def reflect(rs: RootSystem, i: int, beta: Sequence[int]) -> Root:
    return rs.reflect(i, beta)


def pairing(rs: RootSystem, beta: Sequence[int], i: int) -> int:
    return rs.pairing(beta, i)


def is_root(rs: RootSystem, v: Sequence[int]) -> bool:
    return rs.is_root(v)


def add_root(rs: RootSystem, beta: Sequence[int], gamma: Sequence[int]) -> Optional[Root]:
    return rs.add_root(beta, gamma)


def is_long(rs: RootSystem, beta: Sequence[int]) -> bool:
    return rs.is_long(beta)


def all_lie_types(max_rank: int = 8) -> List[LieType]:
    """Every valid LieType up to max_rank, ordered by (family, rank)."""
    types: List[LieType] = []
    for family in "ABCDEFG":
        for rank in range(1, max_rank + 1):
            if _rank_is_valid(family, rank):
                types.append(LieType(family, rank))
    return types
