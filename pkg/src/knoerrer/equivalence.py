"""Partial-resolution equivalence calculus and K-theoretic obstructions.

Keeping a subset of the chain vertices (always containing vertex 0) cuts the
continued-fraction entries into chunks: the runs strictly between
consecutive kept indices.  Each nonempty chunk evaluates to its own coprime
pair, and the singularity data of the kept configuration decomposes as the
direct sum over the chunks.  Two configurations are declared equivalent when
their multisets of nonempty chunk fractions coincide.  An alternative
sufficient criterion compares only the concatenations of the removed
entries; the two readings can disagree, so verdicts carry both answers and
a divergence flag.

The K-theory side encodes the class-group arithmetic of quotient
singularities (cyclic, Gorenstein D/E, and the non-Gorenstein dihedral
family) as finite abelian groups in invariant-factor form, plus the local
finite-dimensional obstruction test: a non-cyclic group rules out any local
finite dimensional algebra on the other side of a singular equivalence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from knoerrer.fractions import (
    SMOOTH,
    CoprimePair,
    HJSeq,
    PairOrSmooth,
    evaluate,
)


@dataclass(frozen=True)
class KeptSet:
    """A sorted set of kept vertices; vertex 0 is always kept."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        verts = tuple(sorted(set(self.vertices)))
        object.__setattr__(self, "vertices", verts)
        if not verts or verts[0] != 0:
            raise ValueError("kept set must contain vertex 0")
        if any(v < 0 for v in verts):
            raise ValueError("kept vertices must be nonnegative")

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)


Config = tuple[Union[HJSeq, Sequence[int]], Union["KeptSet", Iterable[int]]]


@dataclass(frozen=True)
class ChunkDecomposition:
    """Chunks of alpha between consecutive kept vertices (sentinel n+1).

    ``chunks`` records every run, empty ones included; ``values`` carries the
    evaluated pair of each chunk (the smooth marker for empty runs);
    ``gamma`` is the concatenation of the chunks, i.e. alpha with the
    kept-index entries removed.
    """

    alpha: HJSeq
    kept: KeptSet
    chunks: tuple[HJSeq, ...]
    values: tuple[PairOrSmooth, ...]

    @property
    def gamma(self) -> tuple[int, ...]:
        return tuple(entry for chunk in self.chunks for entry in chunk)

    @property
    def nonempty_values(self) -> tuple[CoprimePair, ...]:
        return tuple(v for v in self.values if v is not SMOOTH)

    def multiset(self) -> Counter:
        return Counter((p.r, p.a) for p in self.nonempty_values)


def _as_alpha(alpha: Union[HJSeq, Sequence[int]]) -> HJSeq:
    return alpha if isinstance(alpha, HJSeq) else HJSeq(tuple(alpha))


def _as_kept(kept: Union[KeptSet, Iterable[int]]) -> KeptSet:
    return kept if isinstance(kept, KeptSet) else KeptSet(tuple(kept))


def decompose(alpha: Union[HJSeq, Sequence[int]], kept: Union[KeptSet, Iterable[int]]) -> ChunkDecomposition:
    """Cut alpha into the runs strictly between consecutive kept vertices:
    chunk j spans entries i_j+1 .. i_{j+1}-1, with the sentinel i_{k+1}=n+1."""
    alpha = _as_alpha(alpha)
    kept = _as_kept(kept)
    n = len(alpha)
    if kept.vertices[-1] > n:
        raise ValueError(f"kept vertex {kept.vertices[-1]} exceeds n = {n}")
    bounds = list(kept.vertices) + [n + 1]
    chunks = []
    values = []
    for j in range(len(kept)):
        lo, hi = bounds[j] + 1, bounds[j + 1] - 1
        chunk = HJSeq(tuple(alpha[i - 1] for i in range(lo, hi + 1)))
        chunks.append(chunk)
        values.append(evaluate(chunk))
    return ChunkDecomposition(alpha, kept, tuple(chunks), tuple(values))


def singular_equivalent(cfg1: Config, cfg2: Config) -> bool:
    """True when the multisets of nonempty chunk fractions coincide."""
    d1 = decompose(*cfg1)
    d2 = decompose(*cfg2)
    return d1.multiset() == d2.multiset()


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Both readings of the equivalence criterion: by chunk multisets (the
    decision procedure) and by equality of the removed-entry concatenations;
    ``criteria_agree`` is False on inputs where the readings diverge."""

    chunk_equivalent: bool
    concatenation_equivalent: bool

    @property
    def criteria_agree(self) -> bool:
        return self.chunk_equivalent == self.concatenation_equivalent

    @property
    def verdict(self) -> bool:
        return self.chunk_equivalent


def equivalence_verdict(cfg1: Config, cfg2: Config) -> EquivalenceVerdict:
    d1 = decompose(*cfg1)
    d2 = decompose(*cfg2)
    return EquivalenceVerdict(
        chunk_equivalent=d1.multiset() == d2.multiset(),
        concatenation_equivalent=d1.gamma == d2.gamma,
    )


def corner_restriction(alpha: Union[HJSeq, Sequence[int]], j: int) -> tuple[HJSeq, HJSeq]:
    """The two subfractions attached to cutting at vertex j (1 <= j <= n+1):
    the kept-corner tail [alpha_j .. alpha_n] and the quotient head
    [alpha_1 .. alpha_{j-2}]."""
    alpha = _as_alpha(alpha)
    n = len(alpha)
    if not 1 <= j <= n + 1:
        raise ValueError(f"j must be in 1..{n + 1}, got {j}")
    tail = HJSeq(alpha.entries[j - 1:])
    head = HJSeq(alpha.entries[: max(j - 2, 0)])
    return tail, head


# ---------------------------------------------------------------------------
# K-theory of the singularity categories
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """A finite abelian group in invariant-factor form d_1 | d_2 | ... | d_m
    (each >= 2, empty for the trivial group).  ``factors`` is None when only
    the order is certified (the Gorenstein D family)."""

    factors: Optional[tuple[int, ...]]
    order: int

    def __post_init__(self) -> None:
        if self.factors is not None:
            if any(d < 2 for d in self.factors):
                raise ValueError("invariant factors must be >= 2")
            for d, e in zip(self.factors, self.factors[1:]):
                if e % d:
                    raise ValueError("invariant factors must divide in order")
            if math.prod(self.factors) != self.order:
                raise ValueError("order must equal the product of the factors")
        elif self.order < 1:
            raise ValueError("order must be positive")

    @property
    def is_cyclic(self) -> Optional[bool]:
        if self.factors is None:
            return None
        return len(self.factors) <= 1

    def __str__(self) -> str:
        if self.factors is None:
            return f"group of order {self.order} (structure unspecified)"
        if not self.factors:
            return "trivial group"
        return " x ".join(f"Z/{d}" for d in self.factors)


def cyclic_group(order: int) -> FiniteAbelianGroup:
    if order < 1:
        raise ValueError("order must be positive")
    factors = (order,) if order >= 2 else ()
    return FiniteAbelianGroup(factors, order)


def k0_singularity(kind: str, params: Sequence[int]) -> FiniteAbelianGroup:
    """K_0 of the singularity category of the named quotient singularity,
    via its divisor class group:

    - cyclic(r, a): Z/r
    - gorensteinD(n): order 4, cyclic-ness not certified
    - gorensteinE(n), n in {6,7,8}: cyclic of order 9-n
    - dihedralD(n, m), 1 < 2m < n, gcd(2m, n) = 1: Z/2 x Z/2(n-2m)
    """
    params = tuple(int(p) for p in params)
    if kind == "cyclic":
        if len(params) != 2:
            raise ValueError("cyclic expects (r, a)")
        pair = CoprimePair(*params)  # validates 0 < a < r, coprimality
        return cyclic_group(pair.r)
    if kind == "gorensteinD":
        if len(params) != 1 or params[0] < 4:
            raise ValueError("gorensteinD expects (n,) with n >= 4")
        return FiniteAbelianGroup(None, 4)
    if kind == "gorensteinE":
        if len(params) != 1 or params[0] not in (6, 7, 8):
            raise ValueError("gorensteinE expects (n,) with n in {6,7,8}")
        return cyclic_group(9 - params[0])
    if kind == "dihedralD":
        if len(params) != 2:
            raise ValueError("dihedralD expects (n, m)")
        n, m = params
        if not (m >= 1 and 2 * m < n):
            raise ValueError("dihedralD requires 1 < 2m < n")
        if math.gcd(2 * m, n) != 1:
            raise ValueError("dihedralD requires gcd(2m, n) = 1")
        return FiniteAbelianGroup((2, 2 * (n - 2 * m)), 4 * (n - 2 * m))
    raise ValueError(f"unknown singularity kind {kind!r}")


@dataclass(frozen=True)
class ObstructionVerdict:
    status: str  # "obstructed" | "compatible" | "indeterminate"
    dim: Optional[int]
    message: str


def local_fd_obstruction(group: FiniteAbelianGroup) -> ObstructionVerdict:
    """A local finite dimensional algebra has cyclic K_0 of its singularity
    category (of order its dimension), so a non-cyclic group obstructs any
    singular equivalence with one; a cyclic group of order d is compatible
    with dimension d (existence not implied)."""
    cyclic = group.is_cyclic
    if cyclic is None:
        return ObstructionVerdict(
            "indeterminate",
            None,
            f"only the order ({group.order}) is certified; cyclic-ness unknown",
        )
    if not cyclic:
        return ObstructionVerdict(
            "obstructed",
            None,
            f"{group} is not cyclic: no local finite dimensional algebra "
            "can be singular equivalent",
        )
    return ObstructionVerdict(
        "compatible",
        group.order,
        f"K-theory compatible with a local algebra of dimension {group.order}",
    )
