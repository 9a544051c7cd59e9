"""The one-vertex monomial algebra on generators z_1..z_l.

Relations: z_i z_j = 0 for i < j, and the staircase monomials
z_i (z_i^{beta_i-2} z_{i-1}^{beta_{i-1}-2} ... z_j^{beta_j-2}) z_j = 0 for
j <= i.  Every nonzero monomial has a unique normal form
z_l^{b_l} ... z_1^{b_1} with 0 <= b_i <= beta_i - 1 and no pair j < i such
that b_i = beta_i - 1, b_j = beta_j - 1 and b_k = beta_k - 2 for all
j < k < i.  The algebra has dimension r, its nonzero monomials form a tree
under left multiplication by generators (the monomial diagram), and its
indecomposable monomial ideals are classified by the right suffixes m_i of
the distinguished monomial m_n = z_l^{beta_l-2} ... z_2^{beta_2-2} z_1^{beta_1-1}.

Words of generator indices are read in written order: the word (i1, ..., ik)
denotes the product z_{i1} z_{i2} ... z_{ik}.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from knoerrer.fractions import (
    SMOOTH,
    CoprimePair,
    HJSeq,
    PairOrSmooth,
    dual,
    evaluate,
    expand,
    lambda_seq,
)


class ZeroMonomial:
    """The absorbing zero product; a singleton distinct from every monomial."""

    _instance = None
    is_zero = True

    def __new__(cls) -> "ZeroMonomial":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "0"

    def __bool__(self) -> bool:
        return False


ZERO = ZeroMonomial()


class Monomial:
    """A nonzero normal-form monomial, stored by its exponent vector.

    ``exps[i-1]`` is the exponent of z_i; ``top``/``low`` are the largest and
    smallest indices with nonzero exponent (0 for the identity); ``supp`` lists
    the support indices in descending order (the written order of the factors).
    """

    __slots__ = ("exps", "degree", "top", "low", "supp", "_hash")
    is_zero = False

    def __init__(self, exps: tuple[int, ...], degree: int, top: int, low: int,
                 supp: tuple[int, ...]):
        self.exps = exps
        self.degree = degree
        self.top = top
        self.low = low
        self.supp = supp
        self._hash = None  # hashing the exponent tuple is deferred to first use

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self.exps == other.exps

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = self._hash = hash(self.exps)
        return h

    def __repr__(self) -> str:
        return f"Monomial({self})"

    def __str__(self) -> str:
        """Compact power form in written (descending) order: "z3^2z1", "1"."""
        if self.degree == 0:
            return "1"
        parts = []
        for i in self.supp:
            e = self.exps[i - 1]
            parts.append(f"z{i}" if e == 1 else f"z{i}^{e}")
        return "".join(parts)

    @property
    def dotted(self) -> str:
        """Diagram node name: explicit exponents joined by dots ("z3^1.z1^2")."""
        if self.degree == 0:
            return "1"
        return ".".join(f"z{i}^{self.exps[i - 1]}" for i in self.supp)


@dataclass(frozen=True)
class MonomialIdeal:
    """The indecomposable monomial ideal I_i = (m_i)."""

    index: int
    generator: Monomial
    dim: int
    monomials: tuple[Monomial, ...]


@dataclass(frozen=True)
class MonomialModule:
    """The quotient presentation M_i = algebra/J_i of the ideal I_i.

    ``ann_generators`` is the documented generating set of the annihilator
    J_i of m_i; ``monomials`` are the basis representatives (the monomials
    not annihilating m_i); ``subfraction`` identifies the smaller algebra
    M_i is isomorphic to (the tail [alpha_{i+1}..alpha_n] evaluated).
    """

    index: int
    ann_generators: tuple[Monomial, ...]
    monomials: tuple[Monomial, ...]
    subfraction: PairOrSmooth

    @property
    def dim(self) -> int:
        return len(self.monomials)


class KappaAlgebra:
    """The monomial algebra for a coprime pair (or an explicit beta sequence)."""

    def __init__(self, beta: Union[HJSeq, Sequence[int]], *,
                 _alpha: Optional[HJSeq] = None,
                 _pair: Optional[CoprimePair] = None):
        """The keyword arguments let ``from_pair`` hand over the expansion
        and pair it already holds (duality makes them redundant data)."""
        beta = beta if isinstance(beta, HJSeq) else HJSeq(tuple(beta))
        self.beta = beta
        self.alpha = dual(beta) if _alpha is None else _alpha
        value = evaluate(self.alpha) if _pair is None else _pair
        if value is SMOOTH:
            self.pair: Optional[CoprimePair] = None
            self.r = 1
        else:
            self.pair = value
            self.r = value.r
        self.l = len(beta)
        self.n = len(self.alpha)
        # 1-indexed beta for the hot loops (position 0 unused)
        self._beta = (0,) + beta.entries
        # largest position <= k whose beta entry is not 2 (0 if none): lets the
        # staircase scan jump across runs of beta = 2 in one step
        nontwo = [0] * (self.l + 1)
        last = 0
        for k in range(1, self.l + 1):
            if self._beta[k] != 2:
                last = k
            nontwo[k] = last
        self._nontwo_below = tuple(nontwo)
        # smallest position > k whose beta entry is not 2 (l+1 if none): the
        # basis walk uses it to skip a dead run of new letters in one step
        nxt = [self.l + 1] * (self.l + 1)
        first = self.l + 1
        for k in range(self.l, -1, -1):
            nxt[k] = first
            if k and self._beta[k] != 2:
                first = k
        self._next_nontwo = tuple(nxt)
        self.one = Monomial((0,) * self.l, 0, 0, 0, ())
        self._basis: Optional[tuple[Monomial, ...]] = None
        self._basis_index: Optional[dict[Monomial, int]] = None
        self._ideals: Optional[tuple[MonomialIdeal, ...]] = None
        self._ann_sets: Optional[tuple[frozenset[Monomial], ...]] = None

    @classmethod
    def from_pair(cls, pair: Union[CoprimePair, tuple[int, int]]) -> "KappaAlgebra":
        pair = pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)
        alpha = expand(pair)
        return cls(dual(alpha), _alpha=alpha, _pair=pair)

    def __repr__(self) -> str:
        return f"KappaAlgebra(beta={list(self.beta)})"

    # -- multiplication ----------------------------------------------------

    def _blocked(self, m: Monomial, k: int, si: int) -> bool:
        """Maximal-exponent staircase scan: with a new maximal exponent just
        above position k, walk downward through an exact beta-2 chain of
        maximal exponents (supp cursor si); True means the product is zero."""
        supp = m.supp
        ns = len(supp)
        exps = m.exps
        beta = self._beta
        nontwo_below = self._nontwo_below
        while k >= 1:
            s = supp[si] if si < ns else 0
            if s < k:
                # zero exponents on (s, k]; they continue the chain only
                # if every beta there is 2
                if nontwo_below[k] > s:
                    return False
                if s == 0:
                    return False
                k = s
                continue
            b = exps[k - 1]
            bk = beta[k]
            if b == bk - 1:
                return True
            if b != bk - 2:
                return False
            si += 1
            k -= 1
        return False

    def prepend(self, i: int, m: Monomial):
        """Left-multiply the nonzero monomial m by z_i; Monomial or ZERO."""
        t = m.top
        if i < t:
            return ZERO
        c = m.exps[i - 1] + 1
        bi = self._beta[i]
        if c >= bi:
            return ZERO
        if c == bi - 1 and self._blocked(m, i - 1, 1 if i == t else 0):
            return ZERO
        if i == t:
            exps = m.exps[: i - 1] + (c,) + m.exps[i:]
            return Monomial(exps, m.degree + 1, i, m.low, m.supp)
        exps = m.exps[: i - 1] + (1,) + m.exps[i:]
        return Monomial(exps, m.degree + 1, i, m.low or i, (i,) + m.supp)

    def multiply(self, x, y):
        """Product x * y (x written on the left)."""
        if x.is_zero or y.is_zero:
            return ZERO
        if not x.degree:
            return y
        if not y.degree:
            return x
        result = y
        for i in reversed(x.supp):  # x's factors applied right-to-left
            for _ in range(x.exps[i - 1]):
                result = self.prepend(i, result)
                if result.is_zero:
                    return ZERO
        return result

    def normal_form(self, word: Iterable[int]):
        """Normal form of the written-order word z_{w1} z_{w2} ... z_{wk}."""
        word = tuple(word)
        for i in word:
            if not 1 <= i <= self.l:
                raise ValueError(f"generator index {i} out of range 1..{self.l}")
        result = self.one
        for i in reversed(word):
            result = self.prepend(i, result)
            if result.is_zero:
                return ZERO
        return result

    # -- basis ---------------------------------------------------------------

    @property
    def basis(self) -> tuple[Monomial, ...]:
        """All r nonzero monomials, sorted by (degree, exponents read
        (b_l, ..., b_1) ascending lexicographically).

        Reachability search needs no visited set: stripping one factor of
        the leading letter is a well-defined parent map, so each nonzero
        monomial is produced exactly once, from its parent by its own top
        letter.
        """
        if self._basis is None:
            blocked = self._blocked
            beta = self._beta
            next_nontwo = self._next_nontwo
            l = self.l
            found = [self.one]
            frontier = [self.one]
            while frontier:
                nxt: list[Monomial] = []
                for m in frontier:
                    t = m.top
                    exps = m.exps
                    deg = m.degree + 1
                    low = m.low
                    start = 1
                    if t:
                        # raise the top letter (the staircase scan is needed
                        # only when the raised exponent becomes maximal)
                        c = exps[t - 1] + 1
                        cap = beta[t] - 1
                        if c < cap or (c == cap and not blocked(m, t - 1, 1)):
                            nxt.append(
                                Monomial(
                                    exps[: t - 1] + (c,) + exps[t:],
                                    deg, t, low, m.supp,
                                )
                            )
                        # new letters above the top: exponent 1 is maximal
                        # exactly on a beta-2 run, and every letter in the
                        # run directly above the top shares one staircase
                        # verdict, so a dead run is skipped in one step;
                        # letters past the first non-2 entry always survive
                        start = t + 1
                        j0 = next_nontwo[t]
                        if j0 > start and blocked(m, t, 0):
                            start = j0
                    supp = m.supp
                    for i in range(start, l + 1):
                        nxt.append(
                            Monomial(
                                exps[: i - 1] + (1,) + exps[i:],
                                deg, i, low or i, (i,) + supp,
                            )
                        )
                # a BFS level is exactly one degree, so sorting each level by
                # reversed exponents yields the documented global order
                nxt.sort(key=lambda m: m.exps[::-1])
                frontier = nxt
                found.extend(nxt)
            self._basis = tuple(found)
        return self._basis

    @property
    def basis_index(self) -> dict[Monomial, int]:
        if self._basis_index is None:
            self._basis_index = {m: k for k, m in enumerate(self.basis)}
        return self._basis_index

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def max_degree(self) -> int:
        # the basis is sorted by degree first, so the last entry is maximal
        return self.basis[-1].degree

    def largest_proper_ideal_dim(self) -> int:
        """Largest dimension of a proper monomial left ideal (m), m != 1.

        Every (m) with m != 1 is contained in (z_t) for t the lowest letter
        of m, and (z_t) consists exactly of the basis monomials whose lowest
        letter is t -- so the maximum is a bucket count, no products needed.
        """
        if not self.l:
            return 0
        counts = Counter(m.low for m in self.basis)
        counts.pop(0, None)  # the unit spans no proper ideal
        return max(counts.values())

    # -- ideals ----------------------------------------------------------------

    def ideal_letters(self) -> tuple[int, ...]:
        """The letters of m_n read right to left: z_1 appears beta_1 - 1
        times, z_k appears beta_k - 2 times for k >= 2; m_i is the product of
        the first i letters."""
        if self.l == 0:
            return ()
        letters = [1] * (self._beta[1] - 1)
        for k in range(2, self.l + 1):
            letters.extend([k] * (self._beta[k] - 2))
        return tuple(letters)

    def ideal_monomials(self, m: Monomial) -> frozenset[Monomial]:
        """All nonzero monomial multiples q * m (including m itself)."""
        if m.is_zero:
            raise ValueError("zero generates the zero ideal")
        seen = {m}
        frontier = [m]
        while frontier:
            nxt = []
            for x in frontier:
                for i in range(max(x.top, 1), self.l + 1):
                    prod = self.prepend(i, x)
                    if not prod.is_zero and prod not in seen:
                        seen.add(prod)
                        nxt.append(prod)
            frontier = nxt
        return frozenset(seen)

    @property
    def ideals(self) -> tuple[MonomialIdeal, ...]:
        """The n+1 indecomposable monomial ideals I_0, ..., I_n."""
        if self._ideals is None:
            result = []
            m = self.one
            items = [(0, m)]
            for index, letter in enumerate(self.ideal_letters(), start=1):
                m = self.prepend(letter, m)
                assert not m.is_zero, "ideal generator chain left the basis"
                items.append((index, m))
            for index, gen in items:
                monomials = tuple(
                    sorted(self.ideal_monomials(gen), key=self.basis_index.__getitem__)
                )
                result.append(MonomialIdeal(index, gen, len(monomials), monomials))
            self._ideals = tuple(result)
        return self._ideals

    def annihilator_set(self, m: Monomial) -> frozenset[Monomial]:
        """Brute force: the basis monomials q with q * m = 0."""
        if m.is_zero:
            raise ValueError("zero monomial has no annihilator class")
        return frozenset(q for q in self.basis if self.multiply(q, m).is_zero)

    @property
    def ideal_annihilators(self) -> tuple[frozenset[Monomial], ...]:
        if self._ann_sets is None:
            self._ann_sets = tuple(
                self.annihilator_set(ideal.generator) for ideal in self.ideals
            )
        return self._ann_sets

    def classify_ideal(self, m: Monomial) -> int:
        """The unique i with (m) isomorphic to I_i as left modules, found by
        comparing left-annihilator monomial sets."""
        if m.is_zero:
            raise ValueError("cannot classify the zero ideal")
        ann = self.annihilator_set(m)
        for ideal, ideal_ann in zip(self.ideals, self.ideal_annihilators):
            if ann == ideal_ann:
                return ideal.index
        raise AssertionError(f"monomial {m} matches no ideal class")

    def module_of(self, ideal: MonomialIdeal) -> MonomialModule:
        """Quotient presentation of I_i: documented annihilator generators,
        basis representatives, and the tail-subfraction isomorphism type."""
        i = ideal.index
        alpha = self.alpha
        sub = evaluate(HJSeq(alpha.entries[i:])) if i < self.n else SMOOTH
        ann = self.ideal_annihilators[i]
        monomials = tuple(q for q in self.basis if q not in ann)
        if i == 0:
            return MonomialModule(0, (), monomials, sub)
        letters = self.ideal_letters()
        j = letters[i - 1]
        # c is fixed by sum_{k<j}(beta_k - 2) + c + 1 = i
        c = i - 1 - sum(self._beta[k] - 2 for k in range(1, j))
        gens: list[Monomial] = []
        for t in range(1, j):
            gens.append(self.normal_form((t,)))
        power = self._beta[j] - c - 1
        gens.append(self.normal_form((j,) * power))
        for k in range(j + 1, self.l + 1):
            word = [k] * (self._beta[k] - 1)
            for t in range(k - 1, j, -1):
                word.extend([t] * (self._beta[t] - 2))
            word.extend([j] * (self._beta[j] - c - 2))
            gens.append(self.normal_form(word))
        assert all(not g.is_zero for g in gens)
        return MonomialModule(i, tuple(gens), monomials, sub)

    def left_ideal_closure(self, gens: Iterable[Monomial]) -> frozenset[Monomial]:
        """Monomials of the left ideal generated by the given monomials."""
        out: set[Monomial] = set()
        for g in gens:
            if not g.is_zero:
                out |= self.ideal_monomials(g)
        return frozenset(out)

    # -- diagram ---------------------------------------------------------------

    def diagram_edges(self) -> list[tuple[Monomial, int, Monomial]]:
        """(source, generator index, target) for every nonzero left
        multiplication between basis monomials, in (basis order, index) order."""
        edges = []
        for m in self.basis:
            for i in range(max(m.top, 1), self.l + 1):
                prod = self.prepend(i, m)
                if not prod.is_zero:
                    edges.append((m, i, prod))
        return edges


# ---------------------------------------------------------------------------
# Module-level operation wrappers (argument order: data, then algebra)
# ---------------------------------------------------------------------------


def normal_form(word: Iterable[int], algebra: KappaAlgebra):
    return algebra.normal_form(word)


def basis(algebra: KappaAlgebra) -> tuple[Monomial, ...]:
    return algebra.basis


def multiply(x, y, algebra: KappaAlgebra):
    return algebra.multiply(x, y)


def ideals(algebra: KappaAlgebra) -> tuple[MonomialIdeal, ...]:
    return algebra.ideals


def module_of(ideal: MonomialIdeal, algebra: KappaAlgebra) -> MonomialModule:
    return algebra.module_of(ideal)


def classify_ideal(m: Monomial, algebra: KappaAlgebra) -> int:
    return algebra.classify_ideal(m)


def monomial_diagram(algebra: KappaAlgebra, format: str = "dot") -> str:
    """The monomial diagram: nodes are basis monomials, edges are nonzero
    left multiplications by generators, labelled by generator index."""
    edges = algebra.diagram_edges()
    root = algebra.one
    if format == "dot":
        pair = algebra.pair
        name = f"kappa_{pair.r}_{pair.a}" if pair else "kappa_smooth"
        lines = [f"digraph {name} {{", "  rankdir=TB;"]
        for m in algebra.basis:
            lines.append(f'  "{m.dotted}";')
        for src, i, tgt in edges:
            lines.append(f'  "{src.dotted}" -> "{tgt.dotted}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "text":
        pair = algebra.pair
        head = f"({pair.r},{pair.a})" if pair else "(smooth)"
        out_degree = sum(1 for src, _, _ in edges if src is root)
        lines = [
            f"monomial-diagram {head}",
            f"nodes {algebra.dim}",
            f"edges {len(edges)}",
            f"root-out-degree {out_degree}",
        ]
        for src, i, tgt in edges:
            lines.append(f"edge {src.dotted} -{i}-> {tgt.dotted}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")


def kappa_dims_by_recurrence(beta: Sequence[int]) -> int:
    """Independent dimension oracle: dim k[beta_1, ...] = beta_1 * dim
    k[beta_2, ...] - dim k[beta_3, ...], with dim k[] = 1."""
    dims = [1, 0]  # dim of tail starting at position len(beta)+1, +2
    for b in reversed(tuple(beta)):
        dims = [b * dims[0] - dims[1], dims[0]]
    return dims[0]


def ideal_dims(pair: Union[CoprimePair, tuple[int, int]]) -> tuple[int, ...]:
    """The expected ideal dimension sequence: the lambda ranks of the pair."""
    pair = pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)
    return tuple(lambda_seq(expand(pair)).values)
