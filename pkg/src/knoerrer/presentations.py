"""Quiver-with-relations presentations of the four algebras attached to (r, a).

Given the expansion r/a = [alpha_1..alpha_n] and its dual [beta_1..beta_l]:

* ``lambda_presentation`` -- the finite dimensional chain algebra on vertices
  0..n with arrows c_i: i-1 -> i, a_i: i -> i-1 and extra arrows k_j: t(j) -> 0.
* ``recon_presentation`` -- the reconstruction algebra (opposite presentation),
  the same quiver plus a cycle-closing pair a_0: 0 -> n, c_0: n -> 0.
* ``knoerrer_presentation`` -- the one-vertex monomial algebra on loops
  z_1..z_l with vanishing products z_i z_j (i < j) and staircase monomials.
* ``riemenschneider_presentation`` -- the commutative presentation of the
  invariant ring: l + 2 power-series generators with l(l+1)/2 binomials.

Words compose left to right: the word (f, g) means "f followed by g", so the
head of each arrow must equal the tail of the next.  Relation rendering and
serialization are deterministic; the emission order is fixed (vertices n down
to 1, a_ic_i before the k-family at each vertex, then the vertex-0 family in
descending order for the reconstruction algebra) so that output is stable and
golden-testable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence, Union

from knoerrer.fractions import (
    CoprimePair,
    HJSeq,
    dual,
    evaluate,
    expand,
    t_map,
)


@dataclass(frozen=True)
class Arrow:
    name: str
    tail: int
    head: int


@dataclass(frozen=True)
class Quiver:
    """A finite quiver: ``vertices`` counts them (labelled 0..vertices-1)."""

    vertices: int
    arrows: tuple[Arrow, ...]

    def arrow(self, name: str) -> Arrow:
        for arrow in self.arrows:
            if arrow.name == name:
                return arrow
        raise KeyError(name)

    def arrow_map(self) -> dict[str, Arrow]:
        return {arrow.name: arrow for arrow in self.arrows}


@dataclass(frozen=True)
class Relation:
    """lhs = rhs with both sides composable path words; rhs None means lhs = 0."""

    lhs: tuple[str, ...]
    rhs: Optional[tuple[str, ...]]


@dataclass(frozen=True)
class Presentation:
    algebra: str  # "lambda" | "recon" | "knoerrer"
    pair: CoprimePair
    alpha: HJSeq
    beta: HJSeq
    quiver: Quiver
    relations: tuple[Relation, ...]


@dataclass(frozen=True)
class CommutativePresentation:
    """Power-series presentation: generators z_0..z_{l+1}, binomial relations.

    Each relation side is stored exponent-annotated: a tuple of
    (generator index, exponent) pairs with ascending indices.  The full
    relation list is quadratic in the generator count with linear-size
    right-hand sides, so it is built lazily on first access; constructing
    the presentation itself costs only the generator list.
    """

    algebra: str  # "riemenschneider"
    pair: CoprimePair
    alpha: HJSeq
    beta: HJSeq
    generators: tuple[str, ...]

    @cached_property
    def relations(
        self,
    ) -> tuple[tuple[tuple[tuple[int, int], ...], tuple[tuple[int, int], ...]], ...]:
        """For each pair 0 <= i < j <= l, the binomial
        z_{j+1} z_i = z_{i+1} (prod_{k=i+1}^{j} z_k^{beta_k - 2}) z_j."""
        beta = self.beta
        l = len(beta)
        relations = []
        for i in range(0, l + 1):
            for j in range(i + 1, l + 1):
                lhs = _merge_factors([(i, 1), (j + 1, 1)])
                rhs_factors = [(i + 1, 1)]
                rhs_factors += [(k, beta[k - 1] - 2) for k in range(i + 1, j + 1)]
                rhs_factors.append((j, 1))
                rhs = _merge_factors(rhs_factors)
                relations.append((lhs, rhs))
        return tuple(relations)


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    problems: tuple[str, ...]
    relation_counts: dict[int, int]


def _as_alpha(alpha: Union[HJSeq, Sequence[int]]) -> HJSeq:
    seq = alpha if isinstance(alpha, HJSeq) else HJSeq(tuple(alpha))
    if len(seq) == 0:
        raise ValueError("presentation requires a nonempty expansion")
    return seq


def uv_indices(alpha: HJSeq) -> tuple[list[int], list[int]]:
    """u_i = sum_{k<i}(alpha_k - 2) and v_i = u_i + alpha_i - 1, 1-indexed
    (position 0 unused).  The half-open intervals (u_i + 1, v_i] partition
    (1, v_n] and v_n = l."""
    n = len(alpha)
    u = [0] * (n + 1)
    v = [0] * (n + 1)
    acc = 0
    for i in range(1, n + 1):
        u[i] = acc
        acc += alpha[i - 1] - 2
        v[i] = acc + 1
    return u, v


def _chain_arrows(alpha: HJSeq) -> list[Arrow]:
    n = len(alpha)
    u, v = uv_indices(alpha)
    arrows = [Arrow(f"c{i}", i - 1, i) for i in range(1, n + 1)]
    arrows += [Arrow(f"a{i}", i, i - 1) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(u[i] + 2, v[i] + 1):
            arrows.append(Arrow(f"k{j}", i, 0))
    # k-arrows were appended per vertex; re-emit sorted by index j for a
    # stable overall order c*, a*, k2..k_{v_n}.
    karrows = sorted((a for a in arrows if a.name.startswith("k")), key=lambda a: int(a.name[1:]))
    return [a for a in arrows if not a.name.startswith("k")] + karrows


def _c_prefix(i: int) -> tuple[str, ...]:
    """C_0^i = c1 c2 ... c_i (the path 0 -> i)."""
    return tuple(f"c{t}" for t in range(1, i + 1))


def _a_suffix(n: int, t: int) -> tuple[str, ...]:
    """A_0^t = a0 a_n a_{n-1} ... a_{t+1} (the path 0 -> t through n)."""
    return ("a0",) + tuple(f"a{i}" for i in range(n, t, -1))


def _vertex_relations(alpha: HJSeq, i: int, recon: bool) -> list[Relation]:
    """The alpha_i - 1 relations at vertex i (1 <= i <= n)."""
    n = len(alpha)
    u, v = uv_indices(alpha)
    loops: list[tuple[str, ...]] = [(f"a{i}", f"c{i}")]
    loops += [(f"k{j}",) + _c_prefix(i) for j in range(u[i] + 2, v[i] + 1)]
    if i < n:
        closing: Optional[tuple[str, ...]] = (f"c{i + 1}", f"a{i + 1}")
    else:
        closing = ("c0", "a0") if recon else None
    relations = []
    for pos, lhs in enumerate(loops):
        last = pos == len(loops) - 1
        if last:
            rhs = closing
        elif recon:
            # next loop continued through vertex 0: k_{j+1} A_0^i, where the
            # first loop's successor index is u_i + 2.
            nxt = u[i] + 2 + pos
            rhs = (f"k{nxt}",) + _a_suffix(n, i)
        else:
            rhs = None
        relations.append(Relation(lhs, rhs))
    return relations


def lambda_presentation(alpha: Union[HJSeq, Sequence[int]]) -> Presentation:
    """Chain-algebra presentation on vertices 0..n; alpha_i - 1 relations at
    each vertex i >= 1 and none at vertex 0."""
    alpha = _as_alpha(alpha)
    pair = evaluate(alpha)
    beta = dual(alpha)
    n = len(alpha)
    quiver = Quiver(n + 1, tuple(_chain_arrows(alpha)))
    relations: list[Relation] = []
    for i in range(n, 0, -1):
        relations.extend(_vertex_relations(alpha, i, recon=False))
    return Presentation("lambda", pair, alpha, beta, quiver, tuple(relations))


def recon_presentation(alpha: Union[HJSeq, Sequence[int]]) -> Presentation:
    """Reconstruction-algebra presentation: the chain quiver plus a_0: 0 -> n
    and c_0: n -> 0, with the closed-up relation scheme; sum(alpha_i - 2) + 1
    relations at vertex 0."""
    alpha = _as_alpha(alpha)
    pair = evaluate(alpha)
    beta = dual(alpha)
    n = len(alpha)
    _, v = uv_indices(alpha)
    tails = t_map(alpha)
    arrows = tuple(_chain_arrows(alpha) + [Arrow("a0", 0, n), Arrow("c0", n, 0)])
    quiver = Quiver(n + 1, arrows)
    relations: list[Relation] = []
    for i in range(n, 0, -1):
        relations.extend(_vertex_relations(alpha, i, recon=True))
    # Vertex-0 family, descending j, with conventions k_1 = a_1 and
    # k_{v_n + 1} = c_0, t(v_n + 1) = n.
    vmax = v[n]

    def kname(j: int) -> str:
        if j == 1:
            return "a1"
        if j == vmax + 1:
            return "c0"
        return f"k{j}"

    for j in range(vmax, 0, -1):
        lhs = _a_suffix(n, tails[j + 1]) + (kname(j + 1),)
        rhs = _c_prefix(tails[j]) + (kname(j),)
        relations.append(Relation(lhs, rhs))
    return Presentation("recon", pair, alpha, beta, quiver, tuple(relations))


def staircase_word(beta: HJSeq, i: int, j: int) -> tuple[int, ...]:
    """The vanishing monomial z_i (z_i^{beta_i-2} z_{i-1}^{beta_{i-1}-2} ...
    z_j^{beta_j-2}) z_j for j <= i, as a flat index word (written order)."""
    if not 1 <= j <= i <= len(beta):
        raise ValueError(f"staircase indices out of range: ({i}, {j})")
    word = [i]
    for k in range(i, j - 1, -1):
        word.extend([k] * (beta[k - 1] - 2))
    word.append(j)
    return tuple(word)


def knoerrer_presentation(pair: Union[CoprimePair, tuple[int, int]]) -> Presentation:
    """One-vertex monomial presentation on loops z_1..z_l."""
    pair = pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)
    alpha = expand(pair)
    beta = dual(alpha)
    l = len(beta)
    arrows = tuple(Arrow(f"z{i}", 0, 0) for i in range(1, l + 1))
    quiver = Quiver(1, arrows)
    relations: list[Relation] = []
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            relations.append(Relation((f"z{i}", f"z{j}"), None))
    for i in range(1, l + 1):
        for j in range(1, i + 1):
            word = staircase_word(beta, i, j)
            relations.append(Relation(tuple(f"z{k}" for k in word), None))
    return Presentation("knoerrer", pair, alpha, beta, quiver, tuple(relations))


def _merge_factors(factors: list[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    """Merge (generator, exponent) factors, dropping zero exponents; the
    result is ascending in generator index (inputs are already ordered)."""
    merged: list[list[int]] = []
    for gen, exp in factors:
        if exp == 0:
            continue
        if merged and merged[-1][0] == gen:
            merged[-1][1] += exp
        else:
            merged.append([gen, exp])
    return tuple((g, e) for g, e in merged)


def riemenschneider_presentation(
    pair: Union[CoprimePair, tuple[int, int]]
) -> CommutativePresentation:
    """Commutative presentation: generators z_0..z_{l+1}, with the binomial
    relations (one per pair 0 <= i < j <= l) materialized on first access."""
    pair = pair if isinstance(pair, CoprimePair) else CoprimePair(*pair)
    alpha = expand(pair)
    beta = dual(alpha)
    l = len(beta)
    generators = tuple(f"z{i}" for i in range(l + 2))
    return CommutativePresentation("riemenschneider", pair, alpha, beta, generators)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


def _word_endpoints(word: tuple[str, ...], arrows: dict[str, Arrow]) -> tuple[int, int]:
    """(source, target) of a composable word; raises ValueError if broken."""
    if not word:
        raise ValueError("empty path word")
    for name in word:
        if name not in arrows:
            raise ValueError(f"unknown arrow {name!r}")
    for first, second in zip(word, word[1:]):
        if arrows[first].head != arrows[second].tail:
            raise ValueError(
                f"word {''.join(word)} breaks at {first}->{second}: "
                f"head({first}) = {arrows[first].head} but tail({second}) = {arrows[second].tail}"
            )
    return arrows[word[0]].tail, arrows[word[-1]].head


def expected_relation_counts(p: Presentation) -> dict[int, int]:
    """Per-vertex relation counts the construction must produce (the same
    numbers as the second Ext table of the algebra)."""
    alpha = p.alpha
    n = len(alpha)
    if p.algebra == "lambda":
        counts = {i: alpha[i - 1] - 1 for i in range(1, n + 1)}
        counts[0] = 0
        return counts
    if p.algebra == "recon":
        counts = {i: alpha[i - 1] - 1 for i in range(1, n + 1)}
        counts[0] = sum(x - 2 for x in alpha) + 1
        return counts
    if p.algebra == "knoerrer":
        l = len(p.beta)
        return {0: l * (l - 1) // 2 + l * (l + 1) // 2}
    raise ValueError(f"unknown algebra kind {p.algebra!r}")


def validate(p: Union[Presentation, CommutativePresentation]) -> ValidationReport:
    """Structural validation: arrow-name uniqueness, relation composability
    and endpoint agreement, and per-vertex relation counts."""
    problems: list[str] = []
    if isinstance(p, CommutativePresentation):
        expected = len(p.beta) * (len(p.beta) + 1) // 2
        if len(p.relations) != expected:
            problems.append(
                f"relation count {len(p.relations)} != expected {expected}"
            )
        for lhs, rhs in p.relations:
            for side in (lhs, rhs):
                for gen, exp in side:
                    if not (0 <= gen < len(p.generators)) or exp < 1:
                        problems.append(f"bad factor z{gen}^{exp}")
        return ValidationReport(not problems, tuple(problems), {0: len(p.relations)})

    arrows = p.quiver.arrow_map()
    if len(arrows) != len(p.quiver.arrows):
        problems.append("duplicate arrow names")
    for arrow in p.quiver.arrows:
        if not (0 <= arrow.tail < p.quiver.vertices and 0 <= arrow.head < p.quiver.vertices):
            problems.append(f"arrow {arrow.name} endpoints out of range")
    counts: dict[int, int] = {}
    for rel in p.relations:
        try:
            src, tgt = _word_endpoints(rel.lhs, arrows)
        except ValueError as exc:
            problems.append(f"lhs of {render_relation(rel)}: {exc}")
            continue
        if rel.rhs is not None:
            try:
                rsrc, rtgt = _word_endpoints(rel.rhs, arrows)
            except ValueError as exc:
                problems.append(f"rhs of {render_relation(rel)}: {exc}")
                continue
            if (src, tgt) != (rsrc, rtgt):
                problems.append(
                    f"relation {render_relation(rel)}: endpoints {src}->{tgt} vs {rsrc}->{rtgt}"
                )
        counts[src] = counts.get(src, 0) + 1
    expected = expected_relation_counts(p)
    for vertex in range(p.quiver.vertices):
        got = counts.get(vertex, 0)
        want = expected.get(vertex, 0)
        if got != want:
            problems.append(f"vertex {vertex}: {got} relations, expected {want}")
    return ValidationReport(not problems, tuple(problems), counts)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def _compress(word: tuple[str, ...]) -> str:
    """Concatenate a word, compressing consecutive repeats: (z2,z2,z1) -> z2^2z1."""
    out = []
    idx = 0
    while idx < len(word):
        run = 1
        while idx + run < len(word) and word[idx + run] == word[idx]:
            run += 1
        out.append(word[idx] if run == 1 else f"{word[idx]}^{run}")
        idx += run
    return "".join(out)


def render_relation(rel: Relation) -> str:
    rhs = "0" if rel.rhs is None else _compress(rel.rhs)
    return f"{_compress(rel.lhs)}={rhs}"


def _render_commutative_side(side: tuple[tuple[int, int], ...]) -> str:
    return "".join(f"z{g}" if e == 1 else f"z{g}^{e}" for g, e in side)


def _seq_str(seq: HJSeq) -> str:
    return "[" + ",".join(str(x) for x in seq) + "]"


def render_text(p: Union[Presentation, CommutativePresentation]) -> str:
    """Deterministic plain-text rendering (the golden-file format)."""
    lines = [
        f"{p.algebra} ({p.pair.r},{p.pair.a})",
        f"alpha {_seq_str(p.alpha)}",
        f"beta {_seq_str(p.beta)}",
    ]
    if isinstance(p, CommutativePresentation):
        lines.append("generators " + " ".join(p.generators))
        for lhs, rhs in p.relations:
            lines.append(
                f"relation {_render_commutative_side(lhs)}={_render_commutative_side(rhs)}"
            )
    else:
        lines.append(f"vertices {p.quiver.vertices}")
        for arrow in p.quiver.arrows:
            lines.append(f"arrow {arrow.name}: {arrow.tail}->{arrow.head}")
        for rel in p.relations:
            lines.append(f"relation {render_relation(rel)}")
    return "\n".join(lines) + "\n"


def to_json(p: Union[Presentation, CommutativePresentation]) -> str:
    """Schema: algebra/r/a/alpha/beta/vertices/arrows/relations; words are
    flat name lists (commutative relations flatten exponents)."""
    if isinstance(p, CommutativePresentation):
        def flatten(side: tuple[tuple[int, int], ...]) -> list[str]:
            return [f"z{g}" for g, e in side for _ in range(e)]

        obj = {
            "algebra": p.algebra,
            "r": p.pair.r,
            "a": p.pair.a,
            "alpha": list(p.alpha),
            "beta": list(p.beta),
            "vertices": 1,
            "arrows": [{"name": g, "tail": 0, "head": 0} for g in p.generators],
            "relations": [
                {"lhs": flatten(lhs), "rhs": flatten(rhs)} for lhs, rhs in p.relations
            ],
        }
    else:
        obj = {
            "algebra": p.algebra,
            "r": p.pair.r,
            "a": p.pair.a,
            "alpha": list(p.alpha),
            "beta": list(p.beta),
            "vertices": p.quiver.vertices,
            "arrows": [
                {"name": a.name, "tail": a.tail, "head": a.head} for a in p.quiver.arrows
            ],
            "relations": [
                {"lhs": list(rel.lhs), "rhs": None if rel.rhs is None else list(rel.rhs)}
                for rel in p.relations
            ],
        }
    return json.dumps(obj, indent=2) + "\n"


def to_dot(p: Presentation) -> str:
    """Graphviz rendering of the quiver, arrows labelled by name."""
    if isinstance(p, CommutativePresentation):
        raise ValueError("the commutative presentation has no quiver to render")
    name = f"{p.algebra}_{p.pair.r}_{p.pair.a}"
    lines = [f"digraph {name} {{", "  rankdir=LR;"]
    for vertex in range(p.quiver.vertices):
        lines.append(f"  {vertex};")
    for arrow in p.quiver.arrows:
        lines.append(f'  {arrow.tail} -> {arrow.head} [label="{arrow.name}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def render(p: Union[Presentation, CommutativePresentation], format: str = "text") -> str:
    if format == "text":
        return render_text(p)
    if format == "json":
        return to_json(p)
    if format == "dot":
        return to_dot(p)
    raise ValueError(f"unknown format {format!r}")
