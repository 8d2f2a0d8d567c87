"""Pipeline B: braid evaluation in the coupled (fusion-path) basis.

Instead of multiplying tensor operators, the braid is evaluated through
scalar recoupling coefficients.  A coupling path for external colors
(c_1 ... c_n) is an admissible chain

    gamma_0 --c_1--> gamma_1 --c_2--> ... --c_n--> gamma_n,

i.e. gamma_k in fusion_range(gamma_(k-1), c_k).  Expanding identity (x) A in
the path bases and using that the mu-weighted trace of phi_g psi_h is
delta_(g,h) [d_(gamma_n)] gives the closed formula

    w  =  sum over paths g from gamma_0 = 0 of [d_(gamma_n(g))] * M[g, g],

where M is the matrix of the braid in the coupled basis.  Each elementary
crossing acts locally on one chain entry; its matrix elements are the shadow
coefficients below, computed once by explicit contraction of Clebsch-Gordan
maps with the braiding and cached.

Shadow coefficients are exact fractions (the cg2 normalisation psi o phi = id
forces quantum-integer denominators); every closed-trace total is a Laurent
polynomial and is returned as one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .braid import ColoredBraidWord, closure_components
from .laurent import ZERO, LaurentScalar
from .uqsl2 import (
    SPIN_ZERO,
    FractionScalar,
    Spin,
    TensorOperator,
    braiding,
    cg_pair,
    fusion_range,
    qdim,
)

_ZERO_FRACTION = FractionScalar(ZERO)


@dataclass(frozen=True)
class CouplingPath:
    """An admissible fusion chain over the given external colors; chain[0] is
    the starting color gamma_0 and chain[k] follows chain[k-1] by fusing in
    colors[k-1]."""

    colors: tuple[Spin, ...]
    chain: tuple[Spin, ...]

    def __post_init__(self):
        if len(self.chain) != len(self.colors) + 1:
            raise ValueError("chain length must be number of colors + 1")
        for k, color in enumerate(self.colors):
            if self.chain[k + 1] not in fusion_range(self.chain[k], color):
                raise ValueError(
                    f"inadmissible step {self.chain[k]} --{color}--> {self.chain[k + 1]}")

    @property
    def top(self) -> Spin:
        return self.chain[-1]


def admissible_paths(
    colors: Iterable[Spin], gamma0: Spin = SPIN_ZERO
) -> Iterator[CouplingPath]:
    """All coupling paths over the colors starting at gamma0 (top end free)."""
    colors = tuple(colors)

    def extend(chain: tuple[Spin, ...], k: int) -> Iterator[tuple[Spin, ...]]:
        if k == len(colors):
            yield chain
            return
        for nxt in fusion_range(chain[-1], colors[k]):
            yield from extend(chain + (nxt,), k + 1)

    for chain in extend((gamma0,), 0):
        yield CouplingPath(colors, chain)


@lru_cache(maxsize=None)
def shadow_coefficient(
    p: Spin, q_color: Spin, c: Spin, b: Spin, a: Spin, b_prime: Spin, sign: int = 1
) -> FractionScalar:
    """Matrix element of the braiding in the coupled basis.

    With p, q_color the two strand colors read left to right before the
    crossing, c the chain color below, a the chain color above, b / b_prime
    the intermediate chain colors before / after, this is the Schur scalar of

        psi(b',p -> a) (psi(c,q -> b') (x) 1) (1 (x) Rhat_pq^sign)
            (phi(b -> c,p) (x) 1) phi(a -> b,q).

    Inadmissible inputs give 0.  A trivial strand (p = 0) is transparent:
    the coefficient is 1 exactly when b = c and a = b_prime.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if (b not in fusion_range(c, p) or a not in fusion_range(b, q_color)
            or b_prime not in fusion_range(c, q_color)
            or a not in fusion_range(b_prime, p)):
        return _ZERO_FRACTION
    identity = TensorOperator.identity
    op = cg_pair(b, q_color, a)[0]                                  # V_a -> V_b V_q
    op = cg_pair(c, p, b)[0].tensor(identity((q_color,))).compose(op)   # -> V_c V_p V_q
    op = identity((c,)).tensor(braiding(p, q_color, sign)).compose(op)  # -> V_c V_q V_p
    op = cg_pair(c, q_color, b_prime)[1].tensor(identity((p,))).compose(op)  # -> V_b' V_p
    op = cg_pair(b_prime, p, a)[1].compose(op)                      # -> V_a
    return FractionScalar.coerce(op.proportionality_scalar())


@dataclass(frozen=True)
class ShadowState:
    """Amplitudes of the partially evaluated braid in the coupled basis:
    a map (outgoing path, incoming path) -> scalar.  Incoming paths live on
    colors_in (fixed), outgoing paths on colors_out (tracking the strand
    permutation so far).  Only admissible pairs with equal endpoints carry
    amplitude; support is finite."""

    colors_in: tuple[Spin, ...]
    colors_out: tuple[Spin, ...]
    gamma0: Spin
    amplitudes: dict[tuple[CouplingPath, CouplingPath], FractionScalar]


def initial_state(colors: Iterable[Spin], gamma0: Spin = SPIN_ZERO) -> ShadowState:
    """The identity state: amplitude 1 on (p, p) for every admissible path
    with chain[0] = gamma0.

    A closed-trace evaluation can never involve chain colors above the total
    color budget sum(colors); a gamma0 beyond it yields the empty state."""
    colors = tuple(colors)
    if gamma0.twice_j > sum(c.twice_j for c in colors):
        return ShadowState(colors, colors, gamma0, {})
    amplitudes = {
        (path, path): FractionScalar.coerce(LaurentScalar.one())
        for path in admissible_paths(colors, gamma0)
    }
    return ShadowState(colors, colors, gamma0, amplitudes)


def apply_crossing(state: ShadowState, slot: int, sign: int) -> ShadowState:
    """Compose the state with one crossing of the strands at positions
    (slot, slot+1), 1-based, of the current outgoing colors."""
    n = len(state.colors_out)
    if not 1 <= slot <= n - 1:
        raise ValueError(f"slot {slot} out of range for {n} strands")
    colors = state.colors_out
    p, q_color = colors[slot - 1], colors[slot]
    new_colors = colors[:slot - 1] + (q_color, p) + colors[slot + 1:]
    amplitudes: dict[tuple[CouplingPath, CouplingPath], FractionScalar] = {}
    for (out_path, in_path), amp in state.amplitudes.items():
        chain = out_path.chain
        below, mid, above = chain[slot - 1], chain[slot], chain[slot + 1]
        for new_mid in fusion_range(below, q_color):
            coeff = shadow_coefficient(p, q_color, below, mid, above, new_mid, sign)
            if coeff.is_zero():
                continue
            new_chain = chain[:slot] + (new_mid,) + chain[slot + 1:]
            new_path = CouplingPath(new_colors, new_chain)
            key = (new_path, in_path)
            cur = amplitudes.get(key)
            term = coeff * amp
            total = term if cur is None else cur + term
            if total.is_zero():
                amplitudes.pop(key, None)
            else:
                amplitudes[key] = total
    return ShadowState(state.colors_in, new_colors, state.gamma0, amplitudes)


def evaluate_shadow(b: ColoredBraidWord) -> LaurentScalar:
    """The closed-braid invariant w via the path state sum: fold the word
    through apply_crossing and close with the [d_(gamma_n)]-weighted diagonal.

    Agrees exactly with the tensor-trace pipeline on every braid.
    """
    closure_components(b)  # raises ColorMismatch for inconsistent colorings
    state = initial_state(b.colors, SPIN_ZERO)
    for g in b.word:
        state = apply_crossing(state, abs(g), 1 if g > 0 else -1)
    total = _ZERO_FRACTION
    for (out_path, in_path), amp in state.amplitudes.items():
        if out_path == in_path:
            total = total + amp * qdim(out_path.top)
    return total.to_laurent()
