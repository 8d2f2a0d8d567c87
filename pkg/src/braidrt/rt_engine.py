"""Pipeline A: braid evaluation by quantum traces of braiding operators.

The closed-up invariant of a colored braid word g_r ... g_1 is

    w  =  qtr( S(g_r) o ... o S(g_1) ),

where S(g) places the braiding (or its inverse) at the generator's slot with
the colors currently occupying it, and qtr is the mu-weighted trace.  Framing
enters through the per-component self-writhe n_i: each positive self-crossing
contributes ribbon_scalar^(-1), so

    framed_invariant  =  prod_i ribbon_scalar(color_i)^(n_i) * w

is invariant under all Markov moves (conjugation changes nothing, a
stabilisation multiplies w by ribbon_scalar^(-+1) and shifts n_i by +-1).
"""

from __future__ import annotations

from .braid import ColoredBraidWord, closure_components, writhe_per_component
from .laurent import LaurentScalar
from .uqsl2 import Spin, TensorOperator, braiding, quantum_trace, ribbon_scalar


def _colors_before(b: ColoredBraidWord, position: int) -> list[Spin]:
    """Colors at each strand position just before word[position] acts."""
    if not 0 <= position <= len(b.word):
        raise ValueError(f"position {position} out of range")
    colors = list(b.colors)
    for g in b.word[:position]:
        i = abs(g) - 1
        colors[i], colors[i + 1] = colors[i + 1], colors[i]
    return colors


def strip_operator(b: ColoredBraidWord, position: int) -> TensorOperator:
    """The operator of the single generator word[position]: identity on all
    slots except the braiding of the two colors currently at the generator's
    slot.  Columns are indexed by the incoming color tuple, rows by the
    outgoing (swapped) tuple."""
    if not 0 <= position < len(b.word):
        raise ValueError(f"position {position} out of range for word of length {len(b.word)}")
    g = b.word[position]
    i = abs(g) - 1
    colors = _colors_before(b, position)
    op = braiding(colors[i], colors[i + 1], 1 if g > 0 else -1)
    if i > 0:
        op = TensorOperator.identity(tuple(colors[:i])).tensor(op)
    if i + 2 < b.strands:
        op = op.tensor(TensorOperator.identity(tuple(colors[i + 2:])))
    return op


def braid_operator(b: ColoredBraidWord) -> TensorOperator:
    """Product of all strip operators, first letter applied first."""
    op = TensorOperator.identity(b.colors)
    for position in range(len(b.word)):
        op = strip_operator(b, position).compose(op)
    return op


def evaluate_rt(b: ColoredBraidWord) -> LaurentScalar:
    """The closed-braid invariant w as a Laurent polynomial.

    The empty word on colors (j_1 ... j_n) gives prod qdim(j_k).
    """
    closure_components(b)  # raises ColorMismatch for inconsistent colorings
    return quantum_trace(braid_operator(b))


def framing_correction(b: ColoredBraidWord) -> LaurentScalar:
    """The unit monomial prod_i ribbon_scalar(color_i)^(n_i) over the closure
    components; multiplying w by it removes the framing dependence."""
    out = LaurentScalar.one()
    for (_, color), n_i in zip(closure_components(b), writhe_per_component(b)):
        out = out * ribbon_scalar(color) ** n_i
    return out


def framed_invariant(b: ColoredBraidWord) -> LaurentScalar:
    """The Markov-invariant value: self-writhe correction applied to w."""
    return framing_correction(b) * evaluate_rt(b)


def two_cabling(
    b: ColoredBraidWord,
    component: int | None = None,
    color_a: Spin | None = None,
    color_b: Spin | None = None,
) -> ColoredBraidWord:
    """Replace the chosen knot component by two blackboard-framed parallel
    strands colored (color_a, color_b); other components are untouched.

    component=None requires the closure to be a knot and cables it.  Each
    original crossing becomes the block of elementary crossings moving one
    strand group past the other; no twist factors are inserted (the framing
    stays the blackboard framing carried by the writhe).
    """
    components = closure_components(b)
    if component is None:
        if len(components) != 1:
            raise ValueError(
                f"closure has {len(components)} components; select a single knot component")
        component = 0
    if not 0 <= component < len(components):
        raise ValueError(f"no component {component}")
    selected = components[component][0]
    if color_a is None or color_b is None:
        raise ValueError("both cable colors are required")

    widths = [2 if k in selected else 1 for k in range(b.strands)]
    colors: list[Spin] = []
    for k in range(b.strands):
        colors.extend((color_a, color_b) if k in selected else (b.colors[k],))

    word: list[int] = []
    cur = list(widths)
    for g in b.word:
        i = abs(g) - 1
        base = 1 + sum(cur[:i])  # leftmost cabled position of the left group
        u, v = cur[i], cur[i + 1]
        block = [base + u + s - 2 - t for s in range(1, v + 1) for t in range(u)]
        if g > 0:
            word.extend(block)
        else:
            word.extend(-x for x in reversed(block))
        cur[i], cur[i + 1] = cur[i + 1], cur[i]
    return ColoredBraidWord(sum(widths), colors, word)


def split_union(left: ColoredBraidWord, right: ColoredBraidWord) -> ColoredBraidWord:
    """Block-diagonal juxtaposition: a distant split union of the closures."""
    shift = left.strands
    word = left.word + tuple(g + shift if g > 0 else g - shift for g in right.word)
    return ColoredBraidWord(shift + right.strands, left.colors + right.colors, word)
