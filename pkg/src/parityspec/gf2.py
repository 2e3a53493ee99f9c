"""Linear algebra over GF(2) on int bitsets.

A vector is a non-negative Python int read as its support bitmask: coordinate
``j`` (1-based) is bit ``j - 1``. The atom ``e_j`` is ``1 << (j - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import SizeGuardError

Vector = int

# Search-space cap for min_sumset: number of (A, B) candidate pairs examined.
SUMSET_PAIR_CAP = 5_000_000


def vec_add(a: Vector, b: Vector) -> Vector:
    return a ^ b


def atom(j: int) -> Vector:
    """The weight-one vector with its 1 in coordinate ``j`` (1-based)."""
    if j < 1:
        raise ValueError(f"coordinates are 1-based, got {j}")
    return 1 << (j - 1)


def weight(v: Vector) -> int:
    return v.bit_count()


def is_atom(v: Vector) -> bool:
    return v > 0 and v & (v - 1) == 0


def support(v: Vector) -> list[int]:
    """1-based coordinates where ``v`` is 1, ascending."""
    out = []
    j = 1
    while v:
        if v & 1:
            out.append(j)
        v >>= 1
        j += 1
    return out


def from_support(coords: Iterable[int]) -> Vector:
    v = 0
    for j in coords:
        v ^= atom(j)
    return v


def leading_coordinate(v: Vector) -> int:
    """Lowest 1-based coordinate set in ``v`` (0 for the zero vector)."""
    return (v & -v).bit_length()


def top_coordinate(v: Vector) -> int:
    """Highest 1-based coordinate set in ``v`` (0 for the zero vector)."""
    return v.bit_length()


def to_hex(v: Vector) -> str:
    return format(v, "x")


def from_hex(s: str) -> Vector:
    return int(s, 16)


def check_width(v: Vector, width: int) -> Vector:
    """Return ``v`` unchanged, or raise if it has support beyond ``width`` coordinates."""
    if v < 0 or v.bit_length() > width:
        raise ValueError(f"vector {to_hex(v)} does not fit in {width} coordinates")
    return v


@dataclass(frozen=True)
class Gf2Basis:
    """Reduced row-echelon basis of a subspace.

    Each row's leading coordinate is its lowest set coordinate, and that
    coordinate is zero in every other row. Rows are kept sorted by leading
    coordinate, so two bases of the same subspace compare equal.
    """

    rows: tuple[Vector, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(r & -r for r in self.rows)

    def reduce(self, v: Vector) -> Vector:
        """Canonical representative of the coset ``v + span``.

        The result is zero in every leading coordinate of the basis. Because
        the basis is fully reduced, the order rows are applied in is irrelevant.
        """
        for row in self.rows:
            if v & (row & -row):
                v ^= row
        return v

    def contains(self, v: Vector) -> bool:
        return self.reduce(v) == 0

    def insert(self, v: Vector) -> tuple["Gf2Basis", bool]:
        """Basis of ``span(self) + <v>`` and whether ``v`` was independent."""
        w = self.reduce(v)
        if w == 0:
            return self, False
        pivot = w & -w
        rows = [r ^ w if r & pivot else r for r in self.rows]
        rows.append(w)
        rows.sort(key=lambda r: r & -r)
        return Gf2Basis(tuple(rows)), True

    def extend(self, vectors: Iterable[Vector]) -> "Gf2Basis":
        basis = self
        for v in vectors:
            basis, _ = basis.insert(v)
        return basis

    def span(self) -> Iterator[Vector]:
        """Every vector in the subspace (``2**dim`` of them)."""
        for mask in range(1 << self.dim):
            v = 0
            for i, row in enumerate(self.rows):
                if mask >> i & 1:
                    v ^= row
            yield v

    @classmethod
    def of(cls, vectors: Iterable[Vector]) -> "Gf2Basis":
        return cls().extend(vectors)


def basis_insert(basis: Gf2Basis, v: Vector) -> tuple[Gf2Basis, bool]:
    return basis.insert(v)


def reduce(basis: Gf2Basis, v: Vector) -> Vector:
    return basis.reduce(v)


def rank(vectors: Iterable[Vector]) -> int:
    return Gf2Basis.of(vectors).dim


def combination(vectors: Sequence[Vector], target: Vector) -> int | None:
    """Find a subset of ``vectors`` summing to ``target``.

    Returns a bitmask over indices into ``vectors`` (bit ``i`` set means
    ``vectors[i]`` is used), or None when ``target`` is outside their span.
    """
    # rows carry (vector, tag) where tag records which inputs were xored in
    rows: list[tuple[Vector, int]] = []
    for i, v in enumerate(vectors):
        tag = 1 << i
        for r, t in rows:
            if v & (r & -r):
                v ^= r
                tag ^= t
        if v:
            pivot = v & -v
            rows = [(r ^ v, t ^ tag) if r & pivot else (r, t) for r, t in rows]
            rows.append((v, tag))
    tag = 0
    for r, t in rows:
        if target & (r & -r):
            target ^= r
            tag ^= t
    return tag if target == 0 else None


def sumset(a: Iterable[Vector], b: Iterable[Vector]) -> frozenset[Vector]:
    b = tuple(b)
    return frozenset(x ^ y for x in a for y in b)


def colex_subsets(k: int, universe: int) -> Iterator[tuple[int, ...]]:
    """``k``-subsets of ``range(universe)`` in colexicographic order."""
    if k == 0:
        yield ()
        return
    for top in range(k - 1, universe):
        for rest in colex_subsets(k - 1, top):
            yield rest + (top,)


@dataclass(frozen=True)
class SumsetResult:
    size: int
    a: frozenset[Vector]
    b: frozenset[Vector]


def min_sumset(s: int, t: int, d: int, *, pair_cap: int = SUMSET_PAIR_CAP) -> SumsetResult:
    """Minimum ``|A + B|`` over ``A, B`` in ``F_2^d`` with ``|A| = s``, ``|B| = t``.

    Exhaustive search with both sets translated to contain 0 (translation
    does not change the sumset size). Candidates are visited in colex order,
    so the first pair tried is the pair of initial counting segments. The
    search stops early once the trivial floor ``max(s, t)`` is met.
    """
    if s < 1 or t < 1:
        raise ValueError("set sizes must be positive")
    if d < 0 or (1 << d) < max(s, t):
        raise ValueError(f"F_2^{d} has fewer than {max(s, t)} elements")
    universe = 1 << d
    n_a = comb(universe - 1, s - 1)
    n_b = comb(universe - 1, t - 1)
    if n_a * n_b > pair_cap:
        raise SizeGuardError(f"min_sumset({s},{t},{d}) needs {n_a * n_b} pairs > cap {pair_cap}")

    floor = max(s, t)
    best: SumsetResult | None = None
    b_sets = [(0,) + tuple(x + 1 for x in rest) for rest in colex_subsets(t - 1, universe - 1)]
    for rest in colex_subsets(s - 1, universe - 1):
        a_members = (0,) + tuple(x + 1 for x in rest)
        for b_members in b_sets:
            sums = 0
            for x in a_members:
                for y in b_members:
                    sums |= 1 << (x ^ y)
            size = sums.bit_count()
            if best is None or size < best.size:
                best = SumsetResult(size, frozenset(a_members), frozenset(b_members))
                if size == floor:
                    return best
    assert best is not None
    return best


__all__ = [
    "Vector",
    "Gf2Basis",
    "SumsetResult",
    "atom",
    "basis_insert",
    "check_width",
    "colex_subsets",
    "combination",
    "from_hex",
    "from_support",
    "is_atom",
    "leading_coordinate",
    "min_sumset",
    "rank",
    "reduce",
    "sumset",
    "support",
    "to_hex",
    "top_coordinate",
    "vec_add",
    "weight",
]
