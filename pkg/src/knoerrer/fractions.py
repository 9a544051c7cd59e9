"""Exact minus-sign (Hirzebruch-Jung) continued-fraction arithmetic.

For a coprime pair 0 < a < r the expansion r/a = [alpha_1, ..., alpha_n]
is defined by r/a = alpha_1 - 1/(alpha_2 - 1/(... - 1/alpha_n)) with every
entry >= 2.  The dual expansion r/(r-a) = [beta_1, ..., beta_l] is related
to the original by transposing a staircase point diagram.  This module
computes expansions, duals, point diagrams, the lambda rank sequence, the
tail map t, and subfraction evaluation, all over exact integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterator, Sequence, Union

# Inputs are validated against this bound so that every intermediate value
# (products alpha_i * lambda_i <= r^2) stays well inside signed 64 bits.
MAX_R = 2**31
_INT64_MAX = 2**63 - 1


class SmoothMarker:
    """Singleton result of evaluating the empty expansion.

    The empty chain corresponds to a regular (smooth) point rather than a
    genuine coprime pair, so evaluation returns this marker instead of a
    CoprimePair.  It is falsy and equal only to itself.
    """

    _instance = None

    def __new__(cls) -> "SmoothMarker":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SMOOTH"

    def __bool__(self) -> bool:
        return False


SMOOTH = SmoothMarker()


@dataclass(frozen=True, order=True)
class CoprimePair:
    """A coprime pair 0 < a < r."""

    r: int
    a: int

    def __post_init__(self) -> None:
        if not isinstance(self.r, int) or not isinstance(self.a, int):
            raise ValueError(f"pair entries must be integers, got ({self.r!r}, {self.a!r})")
        if not 0 < self.a < self.r:
            raise ValueError(f"need 0 < a < r, got (r, a) = ({self.r}, {self.a})")
        if self.r > MAX_R:
            raise OverflowError(f"r = {self.r} exceeds the supported bound 2^31")
        if gcd(self.r, self.a) != 1:
            raise ValueError(f"(r, a) = ({self.r}, {self.a}) is not coprime")

    def __repr__(self) -> str:
        return f"CoprimePair({self.r}, {self.a})"


PairOrSmooth = Union[CoprimePair, SmoothMarker]


@dataclass(frozen=True)
class HJSeq:
    """A continued-fraction entry sequence [alpha_1, ..., alpha_n], entries >= 2.

    May be empty (the smooth case).  Iterable and indexable like a tuple.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if not isinstance(e, int) or e < 2:
                raise ValueError(f"expansion entries must be integers >= 2, got {e!r}")
            if e > MAX_R:
                raise OverflowError(f"entry {e} exceeds the supported bound 2^31")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __repr__(self) -> str:
        return f"HJSeq({list(self.entries)})"


def _as_seq(seq: Union[HJSeq, Sequence[int]]) -> HJSeq:
    return seq if isinstance(seq, HJSeq) else HJSeq(tuple(seq))


def _as_pair(pair: Union[CoprimePair, tuple[int, int]]) -> CoprimePair:
    return pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)


@dataclass(frozen=True)
class DualData:
    """An expansion together with its dual and their lengths n, l."""

    alpha: HJSeq
    beta: HJSeq

    @property
    def n(self) -> int:
        return len(self.alpha)

    @property
    def l(self) -> int:
        return len(self.beta)


@dataclass(frozen=True)
class PointDiagram:
    """Staircase point diagram of an expansion.

    Row i (1-indexed, top to bottom) holds alpha_i - 1 consecutive points and
    starts at the column of the last point of row i-1; ``rows`` stores
    (start_column, point_count) per row, columns 1-indexed.
    """

    rows: tuple[tuple[int, int], ...]

    @property
    def column_count(self) -> int:
        return max((start + count - 1 for start, count in self.rows), default=0)

    def column_counts(self) -> tuple[int, ...]:
        """Number of points in each column, left to right."""
        counts = [0] * self.column_count
        for start, count in self.rows:
            for col in range(start, start + count):
                counts[col - 1] += 1
        return tuple(counts)

    def ascii(self) -> str:
        """Plain-text rendering, one '*' per point."""
        lines = []
        for start, count in self.rows:
            lines.append(" " * (start - 1) + "*" * count)
        return "\n".join(lines)


@dataclass(frozen=True)
class LambdaSeq:
    """The rank sequence lambda_0 > lambda_1 > ... > lambda_n (sentinel lambda_{n+1} = 0).

    Defined downward from lambda_n = 1 by lambda_{i-1} = alpha_i*lambda_i - lambda_{i+1};
    then lambda_0 = r and lambda_1 = a.
    """

    values: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i: int) -> int:
        """lambda_i for 0 <= i <= n+1 (the sentinel index n+1 gives 0)."""
        if i == len(self.values):
            return 0
        return self.values[i]


@dataclass(frozen=True)
class TailMap:
    """Tail indices t(1..l), plus the convention value t(l+1) = n.

    t(j) = sum_{i<j}(beta_i - 2) + 1 is the quiver vertex at which the arrow
    k_j starts; the convention index l+1 maps to n.
    """

    values: tuple[int, ...]
    convention: int

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, j: int) -> int:
        """t(j) for 1 <= j <= l+1 (1-indexed; j = l+1 gives the convention value)."""
        if j == len(self.values) + 1:
            return self.convention
        if not 1 <= j <= len(self.values):
            raise IndexError(f"tail index {j} out of range 1..{len(self.values) + 1}")
        return self.values[j - 1]


def _checked(x: int) -> int:
    if abs(x) > _INT64_MAX:
        raise OverflowError(f"intermediate value {x} exceeds 64-bit range")
    return x


def expand(pair: Union[CoprimePair, tuple[int, int]]) -> HJSeq:
    """Minus-sign continued-fraction expansion of r/a; every entry >= 2."""
    pair = _as_pair(pair)
    r, a = pair.r, pair.a
    entries = []
    while a > 0:
        q = -(-r // a)  # ceil(r / a)
        entries.append(q)
        r, a = a, _checked(q * a - r)
    return HJSeq(tuple(entries))


def evaluate(seq: Union[HJSeq, Sequence[int]]) -> PairOrSmooth:
    """Evaluate an expansion back to its reduced pair; [] gives SMOOTH."""
    seq = _as_seq(seq)
    if len(seq) == 0:
        return SMOOTH
    p, q = 1, 0
    for alpha in reversed(seq.entries):
        p, q = _checked(alpha * p - q), p
    return CoprimePair(p, q)


def point_diagram(seq: Union[HJSeq, Sequence[int]]) -> PointDiagram:
    """Staircase diagram: row i has alpha_i - 1 points, starting under the
    last point of the previous row."""
    seq = _as_seq(seq)
    if len(seq) == 0:
        raise ValueError("point diagram requires a nonempty expansion")
    rows = []
    start = 1
    for alpha in seq:
        rows.append((start, alpha - 1))
        start += alpha - 2
    return PointDiagram(tuple(rows))


def dual(seq: Union[HJSeq, Sequence[int]]) -> HJSeq:
    """Dual expansion: column point-counts of the diagram, plus one each.

    dual(dual(s)) = s, and evaluate(dual(expand(r, a))) = (r, r - a).
    The empty sequence is self-dual by convention.
    """
    seq = _as_seq(seq)
    if len(seq) == 0:
        return HJSeq(())
    counts = point_diagram(seq).column_counts()
    return HJSeq(tuple(c + 1 for c in counts))


def dual_data(seq: Union[HJSeq, Sequence[int]]) -> DualData:
    seq = _as_seq(seq)
    return DualData(alpha=seq, beta=dual(seq))


def lambda_seq(seq: Union[HJSeq, Sequence[int]]) -> LambdaSeq:
    """Rank sequence of the expansion: lambda_n = 1, lambda_{i-1} = alpha_i*lambda_i - lambda_{i+1}."""
    seq = _as_seq(seq)
    if len(seq) == 0:
        raise ValueError("lambda sequence requires a nonempty expansion")
    lam = [0, 1]  # [lambda_{n+1}, lambda_n], extended leftward
    for alpha in reversed(seq.entries):
        lam.append(_checked(alpha * lam[-1] - lam[-2]))
    values = tuple(reversed(lam[1:]))
    return LambdaSeq(values)


def t_map(seq: Union[HJSeq, Sequence[int]]) -> TailMap:
    """Tail map t(j) = sum_{i<j}(beta_i - 2) + 1 for j = 1..l, with t(l+1) = n."""
    seq = _as_seq(seq)
    if len(seq) == 0:
        raise ValueError("tail map requires a nonempty expansion")
    beta = dual(seq)
    values = []
    acc = 1
    for b in beta:
        values.append(acc)
        acc += b - 2
    return TailMap(tuple(values), convention=len(seq))


def subfraction(seq: Union[HJSeq, Sequence[int]], lo: int, hi: int) -> PairOrSmooth:
    """Evaluate the contiguous subsequence [alpha_lo, ..., alpha_hi] (1-indexed,
    inclusive); an empty range gives SMOOTH."""
    seq = _as_seq(seq)
    if lo > hi:
        return SMOOTH
    if not (1 <= lo and hi <= len(seq)):
        raise ValueError(f"range {lo}..{hi} outside 1..{len(seq)}")
    return evaluate(HJSeq(seq.entries[lo - 1 : hi]))


def coprime_pairs(rmax: int, rmin: int = 2) -> Iterator[CoprimePair]:
    """All coprime pairs 0 < a < r with rmin <= r <= rmax, ordered by (r, a)."""
    for r in range(rmin, rmax + 1):
        for a in range(1, r):
            if gcd(r, a) == 1:
                yield CoprimePair(r, a)
