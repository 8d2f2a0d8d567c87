"""Colored braid words, their closures, and planar-diagram conversion.

A braid on n strands is a word in the signed Artin generators +-1 ... +-(n-1).
The positive generator sigma_i crosses the strand at position i+1 OVER the
strand at position i (one global convention, validated downstream by the
skein and Jones cross-checks: flipping it mirrors every invariant).

Links are presented as trace closures: the strand ending at top position k is
joined to bottom position k.  Per-component writhe counts self-crossings
only; crossings between distinct components are linking, not framing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .uqsl2 import Spin


class ColorMismatch(ValueError):
    """The braid closure forces two different colors onto one component."""


@dataclass(frozen=True)
class ColoredBraidWord:
    strands: int
    colors: tuple[Spin, ...]
    word: tuple[int, ...]

    def __init__(self, strands: int, colors: Iterable[Spin], word: Iterable[int] = ()):
        object.__setattr__(self, "strands", strands)
        object.__setattr__(self, "colors", tuple(colors))
        object.__setattr__(self, "word", tuple(word))
        if strands < 1:
            raise ValueError("a braid needs at least one strand")
        if len(self.colors) != strands:
            raise ValueError(f"expected {strands} colors, got {len(self.colors)}")
        for g in self.word:
            if g == 0 or abs(g) >= strands:
                raise ValueError(f"generator {g} out of range for {strands} strands")

    def permutation(self) -> tuple[int, ...]:
        """perm[k] = top position reached by the strand starting at bottom
        position k (0-based)."""
        pos = list(range(self.strands))  # pos[p] = strand currently at position p
        for g in self.word:
            i = abs(g) - 1
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
        perm = [0] * self.strands
        for p, strand in enumerate(pos):
            perm[strand] = p
        return tuple(perm)

    def sign_sum(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.word)

    def to_spec_string(self) -> str:
        colors = ",".join(str(c) for c in self.colors)
        word = " ".join(f"{g:+d}" for g in self.word)
        return f"n={self.strands}; colors={colors}; word={word}"


def closure_components(b: ColoredBraidWord) -> tuple[tuple[frozenset[int], Spin], ...]:
    """Cycles of the closure permutation with their (consistent) colors,
    ordered by smallest strand position; raises ColorMismatch otherwise."""
    perm = b.permutation()
    seen = [False] * b.strands
    components = []
    for start in range(b.strands):
        if seen[start]:
            continue
        cycle = []
        k = start
        while not seen[k]:
            seen[k] = True
            cycle.append(k)
            k = perm[k]
        color = b.colors[start]
        for k in cycle:
            if b.colors[k] != color:
                raise ColorMismatch(
                    f"strands {start} and {k} lie on one component but carry "
                    f"colors {color} and {b.colors[k]}")
        components.append((frozenset(cycle), color))
    return tuple(components)


def writhe_per_component(b: ColoredBraidWord) -> tuple[int, ...]:
    """Self-crossing sign sums n_i, in the order of closure_components."""
    components = closure_components(b)
    index_of = {}
    for idx, (strands, _) in enumerate(components):
        for k in strands:
            index_of[k] = idx
    writhes = [0] * len(components)
    pos = list(range(b.strands))
    for g in b.word:
        i = abs(g) - 1
        s1, s2 = pos[i], pos[i + 1]
        if index_of[s1] == index_of[s2]:
            writhes[index_of[s1]] += 1 if g > 0 else -1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    return tuple(writhes)


# ---------------------------------------------------------------------------
# Markov moves
# ---------------------------------------------------------------------------


def markov_moves(b: ColoredBraidWord) -> list[ColoredBraidWord]:
    """Neighbours of b under braid relations, far commutation, free
    cancellation, conjugation, stabilisation and (single-occurrence)
    destabilisation.  All returned braids have isotopic framed closures up to
    the framing change of the stabilisation moves."""
    out: list[ColoredBraidWord] = []
    w, n = b.word, b.strands

    def with_word(word: Sequence[int]) -> ColoredBraidWord:
        return ColoredBraidWord(n, b.colors, word)

    # braid relation sigma_i sigma_(i+1) sigma_i = sigma_(i+1) sigma_i sigma_(i+1)
    for k in range(len(w) - 2):
        x, y, z = w[k], w[k + 1], w[k + 2]
        if x == z and (x > 0) == (y > 0) and abs(abs(x) - abs(y)) == 1:
            out.append(with_word(w[:k] + (y, x, y) + w[k + 3:]))
    # far commutation
    for k in range(len(w) - 1):
        if abs(abs(w[k]) - abs(w[k + 1])) >= 2:
            out.append(with_word(w[:k] + (w[k + 1], w[k]) + w[k + 2:]))
    # free cancellation
    for k in range(len(w) - 1):
        if w[k] == -w[k + 1]:
            out.append(with_word(w[:k] + w[k + 2:]))
    # conjugation (Markov I): strand labels pass through the new bottom
    # crossing, so the color tuple is conjugated by the same transposition
    for i in range(1, n):
        conj_colors = list(b.colors)
        conj_colors[i - 1], conj_colors[i] = conj_colors[i], conj_colors[i - 1]
        for s in (i, -i):
            out.append(ColoredBraidWord(n, conj_colors, (-s,) + w + (s,)))
    # stabilisation (Markov II): append sigma_n^(+-1) on n+1 strands; the new
    # strand joins the component passing through top position n
    perm = b.permutation()
    top_strand = perm.index(n - 1)
    stab_colors = b.colors + (b.colors[top_strand],)
    for s in (n, -n):
        out.append(ColoredBraidWord(n + 1, stab_colors, w + (s,)))
    # destabilisation when the top generator occurs exactly once
    if n >= 2:
        occurrences = [k for k, g in enumerate(w) if abs(g) == n - 1]
        if len(occurrences) == 1:
            k = occurrences[0]
            out.append(ColoredBraidWord(n - 1, b.colors[:-1], w[:k] + w[k + 1:]))
    return out


# ---------------------------------------------------------------------------
# Planar diagrams
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Crossing:
    """Four edge identifiers counterclockwise from the incoming under-edge,
    plus the crossing sign."""

    slots: tuple[int, int, int, int]
    sign: int


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...]
    #: per component: (frozenset of edge ids, color); crossing-free components
    #: have an empty edge set and count as standalone circles
    components: tuple[tuple[frozenset[int], Spin], ...]
    free_loops: tuple[Spin, ...] = field(default=())

    def validate(self) -> None:
        counts: dict[int, int] = {}
        for c in self.crossings:
            if c.sign not in (1, -1):
                raise ValueError("crossing sign must be +-1")
            for e in c.slots:
                counts[e] = counts.get(e, 0) + 1
        for e, k in counts.items():
            if k != 2:
                raise ValueError(f"edge {e} appears {k} times in crossings, expected 2")
        edge_union = set()
        for edges, _ in self.components:
            edge_union |= edges
        if edge_union != set(counts):
            raise ValueError("component edge partition does not match crossing edges")

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def self_writhe(self) -> int:
        """Sum of signs of crossings both of whose strands belong to one
        component (the framing part of the writhe)."""
        comp_of = {}
        for idx, (edges, _) in enumerate(self.components):
            for e in edges:
                comp_of[e] = idx
        total = 0
        for c in self.crossings:
            under, over = c.slots[0], c.slots[1]
            if comp_of[under] == comp_of[over]:
                total += c.sign
        return total


def braid_to_diagram(b: ColoredBraidWord) -> LinkDiagram:
    """Planar diagram of the trace closure.  Edge ids are assigned to maximal
    arcs between crossings; the closure identifies top arcs with bottom arcs.

    For a positive generator the strand at position i+1 passes over, so the
    incoming under-edge is the bottom-left one; rotating counterclockwise
    from it reads bottom-left, bottom-right, top-right, top-left.  For a
    negative generator the under-edge enters bottom-right.
    """
    components = closure_components(b)  # raises ColorMismatch early
    n = b.strands
    current = list(range(n))
    next_id = n
    raw: list[tuple[tuple[int, int, int, int], int]] = []
    for g in b.word:
        i = abs(g) - 1
        e_left, e_right = current[i], current[i + 1]
        o_left, o_right = next_id, next_id + 1
        next_id += 2
        if g > 0:
            slots = (e_left, e_right, o_right, o_left)
        else:
            slots = (e_right, o_right, o_left, e_left)
        raw.append((slots, 1 if g > 0 else -1))
        current[i], current[i + 1] = o_left, o_right

    # trace closure: top arc k is the same edge as bottom arc k
    parent = list(range(next_id))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for k in range(n):
        ra, rb = find(current[k]), find(k)
        if ra != rb:
            parent[ra] = rb

    crossings = tuple(
        Crossing(tuple(find(e) for e in slots), sign) for slots, sign in raw)

    # group edges into link components by strand continuation at crossings
    edge_parent: dict[int, int] = {}

    def efind(x: int) -> int:
        edge_parent.setdefault(x, x)
        while edge_parent[x] != x:
            edge_parent[x] = edge_parent[edge_parent[x]]
            x = edge_parent[x]
        return x

    def eunion(x: int, y: int) -> None:
        rx, ry = efind(x), efind(y)
        if rx != ry:
            edge_parent[rx] = ry

    for c in crossings:
        eunion(c.slots[0], c.slots[2])
        eunion(c.slots[1], c.slots[3])

    color_of_root: dict[int, Spin] = {}
    for k in range(n):
        color_of_root.setdefault(efind(find(k)), b.colors[k])

    crossing_edges = {e for c in crossings for e in c.slots}
    # strands never involved in a crossing close up into standalone circles
    free = [b.colors[k] for k in range(n) if find(k) not in crossing_edges]
    groups: dict[int, set[int]] = {}
    for e in crossing_edges:
        groups.setdefault(efind(e), set()).add(e)

    comp_list = []
    for root, edges in sorted(groups.items(), key=lambda kv: min(kv[1])):
        comp_list.append((frozenset(edges), color_of_root[efind(root)]))
    diagram = LinkDiagram(crossings, tuple(comp_list), tuple(free))
    diagram.validate()
    return diagram
