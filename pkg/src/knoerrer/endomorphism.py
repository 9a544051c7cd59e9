"""The endomorphism algebra of the direct sum of the monomial ideals.

Hom(M_i, M_j) between the quotient modules M_i (of the indecomposable
monomial ideals I_i) has a monomial basis: a map is determined by the image
of 1, a monomial x of M_j whose products with the annihilator J_i of m_i
vanish in M_j; the map sends v to v*x.  Composition is monomial
multiplication followed by reduction mod the target annihilator, so all
structure constants are 0 or 1 and the whole endomorphism algebra is a
finite semigroup-with-zero algebra.

``phi`` realizes the chain-algebra presentation inside this endomorphism
algebra: e_i -> id_{M_i}, the c_i become the canonical quotient maps
(defining monomial 1), k_j -> multiplication by z_j, and a_i ->
multiplication by z_{s_i}, where z_{s_i} is the i-th letter of the
distinguished monomial m_n (so m_i = z_{s_i} * m_{i-1}; this is the
inclusion I_i into I_{i-1} read through the quotient identification).
``verify_iso`` machine-checks that this is an isomorphism: relations hold,
the images generate every block, and block dimensions agree with the rank
bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from knoerrer.fractions import CoprimePair, HJSeq, lambda_seq
from knoerrer.monomial import KappaAlgebra, Monomial, MonomialModule
from knoerrer.presentations import Presentation, lambda_presentation, render_relation


@dataclass(frozen=True)
class EndElement:
    """A basis map of the endomorphism algebra: source block, target block,
    and the defining monomial (the image of 1)."""

    source: int
    target: int
    monomial: Monomial

    def __str__(self) -> str:
        return f"[{self.monomial}]:{self.source}->{self.target}"


@dataclass(frozen=True)
class HomSpace:
    source: int
    target: int
    monomials: tuple[Monomial, ...]

    @property
    def dim(self) -> int:
        return len(self.monomials)


class EndAlgebra:
    """End of the direct sum of the n+1 monomial ideals, block by block.

    Products of basis maps are single basis maps or zero (``compose``), the
    identities are the only idempotents, and every other basis map is
    nilpotent: monomial multiplication adds degrees, and the degree-zero
    non-identity maps strictly increase the block index, so long products
    die.  No product of non-identity maps returns to an identity for the
    same reason.  Hence the basis multiplies like a finite semigroup with
    zero and the radical is the span of the non-identity maps
    (``semigroup_certified``, cross-checked against the trace-form radical
    in the test suite).
    """

    semigroup_certified = True

    def __init__(self, kappa: KappaAlgebra):
        self.kappa = kappa
        self.n = kappa.n
        self.modules: tuple[MonomialModule, ...] = tuple(
            kappa.module_of(ideal) for ideal in kappa.ideals
        )
        self.ann_sets = kappa.ideal_annihilators
        self._module_sets = tuple(frozenset(m.monomials) for m in self.modules)
        self._hom: dict[tuple[int, int], HomSpace] = {}
        self._basis: Optional[tuple[EndElement, ...]] = None
        self._index: Optional[dict[EndElement, int]] = None
        self._products: dict[tuple[int, int], dict[int, int]] = {}

    # -- hom spaces --------------------------------------------------------

    def hom_space(self, i: int, j: int) -> HomSpace:
        """Basis of Hom(M_i, M_j): monomials x of M_j with J_i * x = 0 in M_j.

        It suffices to test the annihilator generators of m_i: the set of
        monomials vanishing in M_j is closed under left multiplication.
        """
        key = (i, j)
        if key not in self._hom:
            kappa = self.kappa
            gens = self.modules[i].ann_generators
            target_ann = self.ann_sets[j]
            chosen = []
            for x in self.modules[j].monomials:
                ok = True
                for g in gens:
                    prod = kappa.multiply(g, x)
                    if not (prod.is_zero or prod in target_ann):
                        ok = False
                        break
                if ok:
                    chosen.append(x)
            self._hom[key] = HomSpace(i, j, tuple(chosen))
        return self._hom[key]

    def identity(self, i: int) -> EndElement:
        return EndElement(i, i, self.kappa.one)

    def element(self, i: int, j: int, monomial: Monomial) -> EndElement:
        if monomial not in self.hom_space(i, j).monomials:
            raise ValueError(f"monomial {monomial} is not a map {i} -> {j}")
        return EndElement(i, j, monomial)

    def compose(self, f: EndElement, g: EndElement) -> Optional[EndElement]:
        """f then g (f acting first); None encodes the zero map."""
        if f.target != g.source:
            raise ValueError(
                f"cannot compose {f} then {g}: block mismatch {f.target} != {g.source}"
            )
        prod = self.kappa.multiply(f.monomial, g.monomial)
        if prod.is_zero or prod in self.ann_sets[g.target]:
            return None
        return EndElement(f.source, g.target, prod)

    # -- flat basis (the finite dimensional algebra view) -------------------

    @property
    def basis(self) -> tuple[EndElement, ...]:
        if self._basis is None:
            out = []
            for i in range(self.n + 1):
                for j in range(self.n + 1):
                    for x in self.hom_space(i, j).monomials:
                        out.append(EndElement(i, j, x))
            self._basis = tuple(out)
            self._index = {f: k for k, f in enumerate(out)}
        return self._basis

    @property
    def index(self) -> dict[EndElement, int]:
        self.basis
        assert self._index is not None
        return self._index

    @property
    def size(self) -> int:
        return len(self.basis)

    def label(self, k: int) -> str:
        return str(self.basis[k])

    @property
    def idempotent_indices(self) -> tuple[int, ...]:
        return tuple(self.index[self.identity(i)] for i in range(self.n + 1))

    def product(self, x: int, y: int) -> dict[int, int]:
        """Sparse product of basis elements x * y ("x then y")."""
        key = (x, y)
        cached = self._products.get(key)
        if cached is not None:
            return cached
        f, g = self.basis[x], self.basis[y]
        if f.target != g.source:
            return {}
        # identity factors act trivially; skip the memo for them so the
        # idempotent-by-everything grid never bloats it
        if f.source == f.target and not f.monomial.degree:
            return {y: 1}
        if g.source == g.target and not g.monomial.degree:
            return {x: 1}
        h = self.compose(f, g)
        result = {} if h is None else {self.index[h]: 1}
        self._products[key] = result
        return result

    @property
    def radical_generator_indices(self) -> tuple[int, ...]:
        """Images of the presentation arrows; they generate the radical
        (the homology engine re-certifies this by closure before relying
        on it)."""
        morphism = phi(lambda_presentation(self.kappa.alpha), self)
        return tuple(sorted(self.index[el] for el in morphism.images.values()))

    def block_dims(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(self.hom_space(i, j).dim for j in range(self.n + 1))
            for i in range(self.n + 1)
        )


def end_algebra(kappa: KappaAlgebra) -> EndAlgebra:
    return EndAlgebra(kappa)


def hom_space(i: int, j: int, algebra: EndAlgebra) -> HomSpace:
    return algebra.hom_space(i, j)


def expected_hom_dims(alpha: Union[HJSeq, list[int], tuple[int, ...]]) -> tuple[tuple[int, ...], ...]:
    """The rank bookkeeping for hom dims: dim Hom(M_i, M_j) = lambda_j for
    j >= i, and for j < i the recurrence
    hom(i, j) = sum_{k=j+1}^{n} (alpha_k - 2) hom(i, k) + hom(i, j+1)."""
    alpha = alpha if isinstance(alpha, HJSeq) else HJSeq(tuple(alpha))
    lam = lambda_seq(alpha)
    n = len(alpha)
    table = [[0] * (n + 1) for _ in range(n + 1)]
    for i in range(n + 1):
        for j in range(n, i - 1, -1):
            table[i][j] = lam[j]
        for j in range(i - 1, -1, -1):
            acc = table[i][j + 1]
            for k in range(j + 1, n + 1):
                acc += (alpha[k - 1] - 2) * table[i][k]
            table[i][j] = acc
    return tuple(tuple(row) for row in table)


# ---------------------------------------------------------------------------
# The morphism from the chain-algebra presentation
# ---------------------------------------------------------------------------


@dataclass
class AlgebraMorphism:
    presentation: Presentation
    end: EndAlgebra
    images: dict[str, EndElement] = field(default_factory=dict)

    def image_of_word(self, word: tuple[str, ...]) -> Optional[EndElement]:
        """Evaluate a path word (left to right); None is the zero map."""
        current: Optional[EndElement] = None
        for name in word:
            arrow_image = self.images[name]
            if current is None:
                current = arrow_image
            else:
                current = self.end.compose(current, arrow_image)
                if current is None:
                    return None
        return current


def phi(pres: Presentation, end: EndAlgebra) -> AlgebraMorphism:
    """Arrow assignment: c_i -> quotient map (monomial 1), k_j -> z_j,
    a_i -> z_{s_i} (the i-th letter of m_n).  Every image is checked to lie
    in the hom block matching the arrow's endpoints."""
    if pres.algebra != "lambda":
        raise ValueError("phi is defined for the chain-algebra presentation")
    if pres.alpha != end.kappa.alpha:
        raise ValueError("presentation and endomorphism algebra disagree on alpha")
    kappa = end.kappa
    letters = kappa.ideal_letters()
    morphism = AlgebraMorphism(pres, end)
    for arrow in pres.quiver.arrows:
        kind, idx = arrow.name[0], int(arrow.name[1:])
        if kind == "c":
            monomial = kappa.one
        elif kind == "a":
            monomial = kappa.normal_form((letters[idx - 1],))
        elif kind == "k":
            monomial = kappa.normal_form((idx,))
        else:
            raise ValueError(f"unexpected arrow {arrow.name!r}")
        # quiver arrow i -> j corresponds to a map M_i -> M_j
        try:
            morphism.images[arrow.name] = end.element(arrow.tail, arrow.head, monomial)
        except ValueError as exc:
            raise ValueError(f"arrow {arrow.name}: {exc}") from exc
    return morphism


@dataclass(frozen=True)
class VerifyReport:
    passed: bool
    failures: tuple[str, ...]
    relations_checked: int
    block_dims: tuple[tuple[int, ...], ...]
    expected_dims: tuple[tuple[int, ...], ...]
    basis_size: int


def verify_iso(morphism: AlgebraMorphism) -> VerifyReport:
    """Machine check that the morphism is an isomorphism: (1) every relation
    evaluates to equality (or zero), (2) idempotents and arrow images
    generate every hom block (surjectivity; products of basis maps are basis
    maps, so span closure is set closure), (3) block dimensions equal the
    rank bookkeeping (so surjectivity forces bijectivity)."""
    end = morphism.end
    pres = morphism.presentation
    failures: list[str] = []

    arrow_map = pres.quiver.arrow_map()
    for name, el in morphism.images.items():
        arrow = arrow_map[name]
        if (el.source, el.target) != (arrow.tail, arrow.head):
            failures.append(
                f"arrow {name} image lies in block ({el.source},{el.target}), "
                f"expected ({arrow.tail},{arrow.head})"
            )

    for rel in pres.relations:
        try:
            lhs = morphism.image_of_word(rel.lhs)
            rhs = morphism.image_of_word(rel.rhs) if rel.rhs is not None else None
        except ValueError as exc:
            failures.append(f"relation {render_relation(rel)} fails: {exc}")
            continue
        if lhs != rhs:
            failures.append(
                f"relation {render_relation(rel)} fails: lhs -> {lhs}, rhs -> {rhs}"
            )

    # surjectivity by closure: extend paths on the right by arrow images
    images_by_source: dict[int, list[EndElement]] = {}
    for el in morphism.images.values():
        images_by_source.setdefault(el.source, []).append(el)
    reached: set[EndElement] = {end.identity(i) for i in range(end.n + 1)}
    frontier = list(reached)
    while frontier:
        nxt = []
        for f in frontier:
            for g in images_by_source.get(f.target, ()):
                h = end.compose(f, g)
                if h is not None and h not in reached:
                    reached.add(h)
                    nxt.append(h)
        frontier = nxt
    reached_by_block: dict[tuple[int, int], int] = {}
    for el in reached:
        key = (el.source, el.target)
        reached_by_block[key] = reached_by_block.get(key, 0) + 1
    for i in range(end.n + 1):
        for j in range(end.n + 1):
            space = end.hom_space(i, j)
            got = reached_by_block.get((i, j), 0)
            if got != space.dim:
                failures.append(
                    f"block ({i},{j}): generated span has dim {got}, hom space has {space.dim}"
                )

    dims = end.block_dims()
    expected = expected_hom_dims(end.kappa.alpha)
    if dims != expected:
        failures.append(f"block dims {dims} != expected {expected}")

    return VerifyReport(
        passed=not failures,
        failures=tuple(failures),
        relations_checked=len(pres.relations),
        block_dims=dims,
        expected_dims=expected,
        basis_size=end.size,
    )


def inject_fault(morphism: AlgebraMorphism) -> AlgebraMorphism:
    """Deliberately corrupt the morphism (swap the images of a1 and c1) so
    that verification reports a named diagnostic; used by self-tests."""
    corrupted = AlgebraMorphism(morphism.presentation, morphism.end, dict(morphism.images))
    corrupted.images["a1"], corrupted.images["c1"] = (
        corrupted.images["c1"],
        corrupted.images["a1"],
    )
    return corrupted


# ---------------------------------------------------------------------------
# Corner algebra
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CornerResult:
    algebra: "object"  # a homology.TableAlgebra
    matches_kappa: bool
    mismatches: tuple[str, ...]


def corner(end: EndAlgebra, vertex: int = 0) -> CornerResult:
    """The corner block e_vertex * End * e_vertex as an explicit table
    algebra, compared entry by entry against the monomial algebra under the
    identification map-defined-by-x <-> x (only meaningful at vertex 0,
    where the block basis is the whole monomial basis)."""
    from knoerrer.homology import TableAlgebra  # local import to avoid a cycle

    kappa = end.kappa
    space = end.hom_space(vertex, vertex)
    monomials = space.monomials
    position = {x: k for k, x in enumerate(monomials)}
    table: dict[tuple[int, int], dict[int, int]] = {}
    mismatches: list[str] = []
    for xi, x in enumerate(monomials):
        fx = EndElement(vertex, vertex, x)
        for yi, y in enumerate(monomials):
            fy = EndElement(vertex, vertex, y)
            h = end.compose(fx, fy)
            table[(xi, yi)] = {} if h is None else {position[h.monomial]: 1}
            if vertex == 0:
                direct = kappa.multiply(x, y)
                composed = None if h is None else h.monomial
                expected = None if direct.is_zero else direct
                if composed != expected:
                    mismatches.append(f"{x} * {y}: corner {composed}, algebra {expected}")
    labels = tuple(str(x) for x in monomials)
    unit_index = position[kappa.one]
    algebra = TableAlgebra(labels, table, idempotent_indices=(unit_index,))
    return CornerResult(algebra, not mismatches, tuple(mismatches))
