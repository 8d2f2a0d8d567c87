"""Representation data of U_q(sl2) at generic q, over exact Laurent scalars.

Fixed conventions (everything downstream depends on these):

    * V_j has basis e_m, m = j, j-1, ..., -j, stored by twice-weight
      M = 2m in descending order.
    * Generator actions:  K e_m = q^(2m) e_m,  E e_m = [j-m] e_(m+1),
      F e_m = [j+m] e_(m-1).  All matrix entries are q-integers, so every
      representation matrix is integral.
    * Coproduct:  D(E) = E (x) K + 1 (x) E,  D(F) = F (x) 1 + K^-1 (x) F,
      D(K) = K (x) K.
    * Universal R-matrix on V_a (x) V_b:
          R = q^(H(x)H/2) * sum_n  c_n E^n (x) F^n,
          c_n = (q - q^-1)^n q^(n(n-1)/2) / [n]!
      whose fundamental block is the standard matrix
          q^(-1/2) (q E11(x)E11 + q E22(x)E22 + E11(x)E22 + E22(x)E11
                     + (q - q^-1) E12(x)E21).
      The positive braiding is Rhat = P o R; on the spin-(1/2) square it has
      channel eigenvalues q^(1/2) (spin 1) and -q^(-3/2) (spin 0).
    * mu = diag(q^(2m)); quantum traces weight basis vectors by q^(2 sum m).
    * ribbon_scalar(j) = q^(-2j(j+1)); the fundamental value is q^(-3/2).

On this convention set the positive braiding satisfies the skein identity
q^(1/2) Rhat - q^(-1/2) Rhat^-1 = (q - q^-1) id, and closing a positive kink
multiplies a quantum trace by ribbon_scalar(j)^(-1).

Clebsch-Gordan maps phi: V_c -> V_a (x) V_b are built integrally from the
highest-weight vector of the c-isotypic component; the projections psi are
normalised so that psi o phi = id exactly, which forces denominators.  Those
live in FractionScalar, an exact fraction layer over the Laurent ring used
only inside intertwiner arithmetic; all externally visible invariants remain
Laurent polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

from .laurent import (
    ONE,
    ZERO,
    LaurentScalar,
    divide_exact,
    gcd,
    quantum_binomial,
    quantum_factorial,
    quantum_integer,
)

# ---------------------------------------------------------------------------
# Spins
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=True)
class Spin:
    """Label of an irreducible representation: a non-negative half-integer j,
    stored as twice_j to stay integral."""

    twice_j: int

    def __post_init__(self):
        if self.twice_j < 0:
            raise ValueError("spin must be a non-negative half-integer")

    @property
    def dimension(self) -> int:
        return self.twice_j + 1

    def weights(self) -> range:
        """Twice-weights 2m in the fixed descending basis order."""
        return range(self.twice_j, -self.twice_j - 2, -2)

    @staticmethod
    def from_string(text: str) -> Spin:
        text = text.strip()
        if "/" in text:
            num, _, den = text.partition("/")
            if den.strip() != "2":
                raise ValueError(f"spin {text!r} is not a half-integer")
            return Spin(int(num))
        return Spin(2 * int(text))

    def __str__(self) -> str:
        return str(self.twice_j // 2) if self.twice_j % 2 == 0 else f"{self.twice_j}/2"


SPIN_ZERO = Spin(0)
SPIN_HALF = Spin(1)
SPIN_ONE = Spin(2)


def fusion_range(a: Spin, b: Spin) -> tuple[Spin, ...]:
    """Admissible fusion products of a and b: |a-b|, |a-b|+1, ..., a+b."""
    lo = abs(a.twice_j - b.twice_j)
    hi = a.twice_j + b.twice_j
    return tuple(Spin(t) for t in range(lo, hi + 1, 2))


def qdim(j: Spin) -> LaurentScalar:
    """Quantum dimension [2j+1] = tr(mu on V_j)."""
    return quantum_integer(j.dimension)


def ribbon_scalar(j: Spin) -> LaurentScalar:
    """The ribbon monomial v_j = q^(-2j(j+1)); v_(1/2) = q^(-3/2)."""
    m = j.twice_j
    return LaurentScalar.monomial(1, -2 * m * (m + 2))


# ---------------------------------------------------------------------------
# Exact fractions over the Laurent ring (internal to intertwiner arithmetic)
# ---------------------------------------------------------------------------

ScalarLike = Union["FractionScalar", LaurentScalar]


class FractionScalar:
    """num / den with both parts in Z[t, t^-1], kept gcd-reduced with a
    canonical denominator (min exponent 0, positive leading coefficient)."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentScalar, den: LaurentScalar = ONE):
        if den.is_zero():
            raise ZeroDivisionError("fraction with zero denominator")
        if num.is_zero():
            num, den = ZERO, ONE
        elif not den.is_one():
            g = gcd(num, den)
            if not g.is_one():
                num, den = divide_exact(num, g), divide_exact(den, g)
            # Normalise the denominator to min exponent 0 and positive lead;
            # the compensating unit monomial moves into the numerator.
            if not den.is_one():
                shift = den.min_exponent()
                sign = 1 if den.terms()[den.max_exponent()] > 0 else -1
                unit = LaurentScalar.monomial(sign, -shift)
                num, den = num * unit, den * unit
        self.num = num
        self.den = den

    @staticmethod
    def coerce(x: ScalarLike) -> FractionScalar:
        return x if isinstance(x, FractionScalar) else FractionScalar(x)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den.is_one()

    def to_laurent(self) -> LaurentScalar:
        """The value as a Laurent polynomial; raises if the denominator is
        nontrivial (exactness is a theorem at every call site)."""
        if self.den.is_one():
            return self.num
        return divide_exact(self.num, self.den)

    def __add__(self, other: ScalarLike) -> FractionScalar:
        o = FractionScalar.coerce(other)
        if self.den == o.den:
            return FractionScalar(self.num + o.num, self.den)
        return FractionScalar(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> FractionScalar:
        return self + (-FractionScalar.coerce(other))

    def __rsub__(self, other: ScalarLike) -> FractionScalar:
        return FractionScalar.coerce(other) + (-self)

    def __neg__(self) -> FractionScalar:
        out = FractionScalar.__new__(FractionScalar)
        out.num, out.den = -self.num, self.den
        return out

    def __mul__(self, other: ScalarLike) -> FractionScalar:
        o = FractionScalar.coerce(other)
        return FractionScalar(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> FractionScalar:
        o = FractionScalar.coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError
        return FractionScalar(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other: ScalarLike) -> FractionScalar:
        return FractionScalar.coerce(other) / self

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FractionScalar):
            return self.num * other.den == other.num * self.den
        if isinstance(other, LaurentScalar):
            return self.num == other * self.den
        if isinstance(other, int):
            return self.num == LaurentScalar.from_int(other) * self.den
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return str(self.num) if self.den.is_one() else f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _scalar_is_zero(x: ScalarLike) -> bool:
    return x.is_zero()


# ---------------------------------------------------------------------------
# Tensor operators
# ---------------------------------------------------------------------------

WeightKey = tuple[int, ...]


class TensorOperator:
    """A sparse exact matrix between tensor products of irreducibles.

    Rows and columns are indexed by tuples of twice-weights, one per tensor
    factor.  Entries are Laurent scalars, or exact fractions where
    intertwiner normalisation forces them.  Instances are immutable by
    convention: no method mutates ``rows`` after construction.
    """

    __slots__ = ("row_spins", "col_spins", "rows")

    def __init__(
        self,
        row_spins: Iterable[Spin],
        col_spins: Iterable[Spin],
        entries: Mapping[tuple[WeightKey, WeightKey], ScalarLike] | None = None,
    ):
        self.row_spins = tuple(row_spins)
        self.col_spins = tuple(col_spins)
        rows: dict[WeightKey, dict[WeightKey, ScalarLike]] = {}
        if entries:
            for (r, c), v in entries.items():
                if not _scalar_is_zero(v):
                    rows.setdefault(r, {})[c] = v
        self.rows = rows

    # -- construction --------------------------------------------------------

    @staticmethod
    def identity(spins: Iterable[Spin]) -> TensorOperator:
        spins = tuple(spins)
        op = TensorOperator(spins, spins)
        for key in weight_keys(spins):
            op.rows[key] = {key: ONE}
        return op

    @staticmethod
    def zero(row_spins: Iterable[Spin], col_spins: Iterable[Spin]) -> TensorOperator:
        return TensorOperator(row_spins, col_spins)

    # -- accessors ------------------------------------------------------------

    def entry(self, row: WeightKey, col: WeightKey) -> ScalarLike:
        return self.rows.get(row, {}).get(col, ZERO)

    def is_square(self) -> bool:
        return self.row_spins == self.col_spins

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TensorOperator):
            return NotImplemented
        if self.row_spins != other.row_spins or self.col_spins != other.col_spins:
            return False
        keys = set(self.rows) | set(other.rows)
        for r in keys:
            a, b = self.rows.get(r, {}), other.rows.get(r, {})
            for c in set(a) | set(b):
                if a.get(c, ZERO) != b.get(c, ZERO):
                    return False
        return True

    def __repr__(self) -> str:
        return (f"TensorOperator({'x'.join(map(str, self.row_spins))} <- "
                f"{'x'.join(map(str, self.col_spins))}, {sum(map(len, self.rows.values()))} entries)")

    # -- arithmetic -----------------------------------------------------------

    def compose(self, other: TensorOperator) -> TensorOperator:
        """self o other (other is applied first)."""
        if other.row_spins != self.col_spins:
            raise ValueError("inner index tuples do not match factor-for-factor")
        out = TensorOperator(self.row_spins, other.col_spins)
        orows = other.rows
        for r, row in self.rows.items():
            acc: dict[WeightKey, ScalarLike] = {}
            for m, v in row.items():
                orow = orows.get(m)
                if not orow:
                    continue
                for c, w in orow.items():
                    prod = v * w
                    cur = acc.get(c)
                    acc[c] = prod if cur is None else cur + prod
            acc = {c: s for c, s in acc.items() if not _scalar_is_zero(s)}
            if acc:
                out.rows[r] = acc
        return out

    def __matmul__(self, other: TensorOperator) -> TensorOperator:
        return self.compose(other)

    def __add__(self, other: TensorOperator) -> TensorOperator:
        if self.row_spins != other.row_spins or self.col_spins != other.col_spins:
            raise ValueError("shape mismatch")
        out = TensorOperator(self.row_spins, self.col_spins)
        for r in set(self.rows) | set(other.rows):
            acc: dict[WeightKey, ScalarLike] = dict(self.rows.get(r, {}))
            for c, v in other.rows.get(r, {}).items():
                cur = acc.get(c)
                s = v if cur is None else cur + v
                if _scalar_is_zero(s):
                    acc.pop(c, None)
                else:
                    acc[c] = s
            if acc:
                out.rows[r] = acc
        return out

    def __sub__(self, other: TensorOperator) -> TensorOperator:
        return self + other.scale(LaurentScalar.from_int(-1))

    def scale(self, scalar: ScalarLike) -> TensorOperator:
        out = TensorOperator(self.row_spins, self.col_spins)
        if _scalar_is_zero(scalar):
            return out
        for r, row in self.rows.items():
            out.rows[r] = {c: scalar * v for c, v in row.items()}
        return out

    def tensor(self, other: TensorOperator) -> TensorOperator:
        """Kronecker product; index tuples concatenate."""
        out = TensorOperator(self.row_spins + other.row_spins,
                             self.col_spins + other.col_spins)
        for r1, row1 in self.rows.items():
            for r2, row2 in other.rows.items():
                target = out.rows.setdefault(r1 + r2, {})
                for c1, v1 in row1.items():
                    for c2, v2 in row2.items():
                        target[c1 + c2] = v1 * v2
        return out

    def proportionality_scalar(self) -> ScalarLike:
        """The scalar s with self = s * id; raises if self is not a multiple
        of the identity (used to read off Schur scalars)."""
        if not self.is_square():
            raise ValueError("not an endomorphism")
        keys = list(weight_keys(self.row_spins))
        s: ScalarLike | None = None
        for r in keys:
            diag = self.rows.get(r, {}).get(r, ZERO)
            if s is None:
                s = diag
            elif not s == diag:
                raise ValueError("operator is not a multiple of the identity")
        for r, row in self.rows.items():
            for c, v in row.items():
                if r != c and not _scalar_is_zero(v):
                    raise ValueError("operator is not a multiple of the identity")
        return s if s is not None else ZERO


def weight_keys(spins: Iterable[Spin]) -> Iterator[WeightKey]:
    """All basis labels of the tensor product, factor-wise descending."""
    return (tuple(k) for k in itertools.product(*(s.weights() for s in spins)))


def quantum_trace(op: TensorOperator) -> LaurentScalar:
    """tr((mu (x) ... (x) mu) o op); the closed Wilson-loop trace.

    The operator must be square.  For every operator this engine produces the
    trace is a Laurent polynomial; fraction entries are reduced exactly.
    """
    if not op.is_square():
        raise ValueError("quantum_trace requires identical row and column index tuples")
    total: ScalarLike = ZERO
    for r, row in op.rows.items():
        v = row.get(r)
        if v is None:
            continue
        weight = LaurentScalar.monomial(1, 4 * sum(r))  # q^(2m) per factor
        total = total + v * weight
    return total.to_laurent() if isinstance(total, FractionScalar) else total


def partial_quantum_trace_last(op: TensorOperator) -> TensorOperator:
    """Partial quantum trace over the last tensor factor: contract the final
    leg of a square operator with a mu insertion.  Closing one strand of a
    braiding this way produces the ribbon scalar (the kink identity)."""
    if not op.is_square() or not op.row_spins:
        raise ValueError("partial trace needs a square operator with at least one factor")
    rest = op.row_spins[:-1]
    out = TensorOperator(rest, rest)
    for r, row in op.rows.items():
        for c, v in row.items():
            if r[-1] != c[-1]:
                continue
            weight = LaurentScalar.monomial(1, 4 * r[-1])
            target = out.rows.setdefault(r[:-1], {})
            key = c[:-1]
            cur = target.get(key)
            s = v * weight if cur is None else cur + v * weight
            if _scalar_is_zero(s):
                target.pop(key, None)
            else:
                target[key] = s
    out.rows = {r: row for r, row in out.rows.items() if row}
    return out


def mu_operator(j: Spin) -> TensorOperator:
    """Diagonal operator q^(2m) on V_j; its trace is the quantum dimension."""
    op = TensorOperator((j,), (j,))
    for m in j.weights():
        op.rows[(m,)] = {(m,): LaurentScalar.monomial(1, 4 * m)}
    return op


# ---------------------------------------------------------------------------
# Braiding
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def braiding(a: Spin, b: Spin, sign: int = 1) -> TensorOperator:
    """The braiding Rhat^(sign): V_a (x) V_b -> V_b (x) V_a.

    sign=+1 is P o (a (x) b)(R) with R the universal R-matrix in the fixed
    conventions above; sign=-1 is the exact inverse of the opposite positive
    braiding.  Entries are always Laurent polynomials.
    """
    if sign == 1:
        return _positive_braiding(a, b)
    if sign == -1:
        return _invert_braiding(braiding(b, a, 1), a, b)
    raise ValueError("sign must be +1 or -1")


def _positive_braiding(a: Spin, b: Spin) -> TensorOperator:
    qm1 = LaurentScalar.monomial(1, 4) + LaurentScalar.monomial(-1, -4)  # q - q^-1
    op = TensorOperator((b, a), (a, b))
    for m1 in a.weights():
        for m2 in b.weights():
            ka = (a.twice_j - m1) // 2   # available E-raises on factor 1
            kb = (b.twice_j + m2) // 2   # available F-lowers on factor 2
            for n in range(0, min(ka, kb) + 1):
                m1o, m2o = m1 + 2 * n, m2 - 2 * n
                coeff = quantum_binomial(ka, n)
                for i in range(n):
                    coeff = coeff * quantum_integer(kb - i)
                if n:
                    coeff = coeff * qm1 ** n
                # q^(n(n-1)/2) from the series, q^(2 m1' m2') from q^(H(x)H/2)
                coeff = coeff * LaurentScalar.monomial(1, 2 * n * (n - 1) + 2 * m1o * m2o)
                if coeff.is_zero():
                    continue
                row, col = (m2o, m1o), (m1, m2)
                target = op.rows.setdefault(row, {})
                target[col] = target.get(col, ZERO) + coeff
    for row in list(op.rows):
        op.rows[row] = {c: v for c, v in op.rows[row].items() if not v.is_zero()}
    return op


def _invert_braiding(pos: TensorOperator, a: Spin, b: Spin) -> TensorOperator:
    """Exact inverse of pos: V_b (x) V_a -> V_a (x) V_b, computed blockwise on
    total weight; the result is integral and is re-stored over Laurent scalars."""
    blocks: dict[int, list[WeightKey]] = {}
    for key in weight_keys((b, a)):
        blocks.setdefault(sum(key), []).append(key)
    out = TensorOperator((b, a), (a, b))
    for wt, domain_keys in blocks.items():
        image_keys = [k for k in weight_keys((a, b)) if sum(k) == wt]
        n = len(domain_keys)
        idx_d = {k: i for i, k in enumerate(domain_keys)}
        idx_i = {k: i for i, k in enumerate(image_keys)}
        # augmented [M | I] over exact fractions
        mat = [[FractionScalar.coerce(pos.entry(image_keys[r], domain_keys[c]))
                for c in range(n)] + [FractionScalar(ONE if r == c else ZERO)
                                      for c in range(n)]
               for r in range(n)]
        for col in range(n):
            pivot = next(r for r in range(col, n) if not mat[r][col].is_zero())
            mat[col], mat[pivot] = mat[pivot], mat[col]
            inv = FractionScalar(ONE) / mat[col][col]
            mat[col] = [x * inv for x in mat[col]]
            for r in range(n):
                if r != col and not mat[r][col].is_zero():
                    factor = mat[r][col]
                    mat[r] = [x - factor * y for x, y in zip(mat[r], mat[col])]
        # after reduction the right block is M^-1: rows index the domain
        # basis of the positive braiding, columns its image basis
        for r in range(n):
            for c in range(n):
                val = mat[r][n + c]
                if val.is_zero():
                    continue
                # mat rows were indexed like image rows of M; after reduction
                # row r holds e_r of the domain expressed in image columns.
                out.rows.setdefault(domain_keys[r], {})[image_keys[c]] = val.to_laurent()
    return out


# ---------------------------------------------------------------------------
# Clebsch-Gordan intertwiners
# ---------------------------------------------------------------------------


def _delta_E_apply(a: Spin, b: Spin, vec: dict[WeightKey, LaurentScalar]) -> dict:
    """Apply D(E) = E (x) K + 1 (x) E to a vector in V_a (x) V_b."""
    out: dict[WeightKey, LaurentScalar] = {}
    for (m1, m2), c in vec.items():
        if m1 < a.twice_j:
            coeff = quantum_integer((a.twice_j - m1) // 2) * LaurentScalar.monomial(1, 4 * m2) * c
            key = (m1 + 2, m2)
            out[key] = out.get(key, ZERO) + coeff
        if m2 < b.twice_j:
            coeff = quantum_integer((b.twice_j - m2) // 2) * c
            key = (m1, m2 + 2)
            out[key] = out.get(key, ZERO) + coeff
    return {k: v for k, v in out.items() if not v.is_zero()}


def _delta_F_apply(a: Spin, b: Spin, vec: dict[WeightKey, LaurentScalar]) -> dict:
    """Apply D(F) = F (x) 1 + K^-1 (x) F to a vector in V_a (x) V_b."""
    out: dict[WeightKey, LaurentScalar] = {}
    for (m1, m2), c in vec.items():
        if m1 > -a.twice_j:
            coeff = quantum_integer((a.twice_j + m1) // 2) * c
            key = (m1 - 2, m2)
            out[key] = out.get(key, ZERO) + coeff
        if m2 > -b.twice_j:
            coeff = quantum_integer((b.twice_j + m2) // 2) * LaurentScalar.monomial(1, -4 * m1) * c
            key = (m1, m2 - 2)
            out[key] = out.get(key, ZERO) + coeff
    return {k: v for k, v in out.items() if not v.is_zero()}


def _highest_weight_vector(a: Spin, b: Spin, c: Spin) -> dict[WeightKey, LaurentScalar]:
    """The canonical highest-weight vector of the V_c component of
    V_a (x) V_b:  sum_k (-1)^k q^(-k(2(c-a)+k+1)) qbinom(a+b-c, k)
    e_(a-k) (x) e_(c-a+k), an integral vector with leading term
    e_a (x) e_(c-a)."""
    n_abc = (a.twice_j + b.twice_j - c.twice_j) // 2
    vec: dict[WeightKey, LaurentScalar] = {}
    for k in range(n_abc + 1):
        m1 = a.twice_j - 2 * k
        m2 = c.twice_j - a.twice_j + 2 * k
        qexp = -k * ((c.twice_j - a.twice_j) + k + 1)
        coeff = quantum_binomial(n_abc, k) * LaurentScalar.monomial(
            -1 if k % 2 else 1, 4 * qexp)
        if not coeff.is_zero():
            vec[(m1, m2)] = coeff
    return vec


def _primitive(op: TensorOperator) -> TensorOperator:
    """Divide all entries by their common polynomial factor and normalise the
    residual unit so the lexicographically largest entry has minimum exponent
    zero and positive leading coefficient (canonical rescaling; any scalar
    multiple of an intertwiner is an intertwiner)."""
    content = ZERO
    anchor_entry = None
    for r in sorted(op.rows):
        row = op.rows[r]
        for c in sorted(row):
            content = gcd(content, row[c])
            anchor_entry = (r, c)
    if content.is_zero():
        return op
    divided = {
        r: {c: divide_exact(v, content) for c, v in row.items()}
        for r, row in op.rows.items()
    }
    lead = divided[anchor_entry[0]][anchor_entry[1]]
    sign = 1 if lead.terms()[lead.max_exponent()] > 0 else -1
    unit = LaurentScalar.monomial(sign, -lead.min_exponent())
    out = TensorOperator(op.row_spins, op.col_spins)
    for r, row in divided.items():
        out.rows[r] = {c: v * unit for c, v in row.items()}
    return out


@lru_cache(maxsize=None)
def _phi_integral(a: Spin, b: Spin, c: Spin) -> TensorOperator:
    """Integral injection V_c -> V_a (x) V_b: the column for e_(c, c-k) is
    [2c-k]! * D(F)^k (highest-weight vector), rescaled to primitive form.
    For (a, 0, a) and (0, a, a) this is exactly the identity reindexing."""
    if c not in fusion_range(a, b):
        raise ValueError(f"spin {c} is not in the fusion range of {a} and {b}")
    op = TensorOperator((a, b), (c,))
    vec = _highest_weight_vector(a, b, c)
    for k in range(c.dimension):
        m_c = c.twice_j - 2 * k
        fact = quantum_factorial(c.twice_j - k)
        for key, coeff in vec.items():
            val = coeff * fact
            if not val.is_zero():
                op.rows.setdefault(key, {})[(m_c,)] = val
        if k < c.twice_j:
            vec = _delta_F_apply(a, b, vec)
    return _primitive(op)


@lru_cache(maxsize=None)
def _cap(b: Spin) -> TensorOperator:
    """Primitive integral invariant functional V_b (x) V_b -> V_0."""
    vals: dict[int, FractionScalar] = {-b.twice_j: FractionScalar(ONE)}
    for m in range(-b.twice_j + 2, b.twice_j + 1, 2):
        prev = vals[m - 2]
        num = -prev.num * quantum_integer((b.twice_j + m) // 2) * LaurentScalar.monomial(1, 4 * m)
        den = prev.den * quantum_integer((b.twice_j - m) // 2 + 1)
        vals[m] = FractionScalar(num, den)
    # clear denominators to a primitive integral functional
    clear = ONE
    for v in vals.values():
        clear = divide_exact(clear * v.den, gcd(clear, v.den))
    op = TensorOperator((SPIN_ZERO,), (b, b))
    for m, v in vals.items():
        op.rows.setdefault((0,), {})[(m, -m)] = (v * clear).to_laurent()
    return _primitive(op)


@lru_cache(maxsize=None)
def cg_pair(a: Spin, b: Spin, c: Spin) -> tuple[TensorOperator, TensorOperator]:
    """The Clebsch-Gordan pair (phi: V_c -> V_a (x) V_b, psi: V_a (x) V_b -> V_c)
    normalised so that psi o phi = id_(V_c) exactly.

    phi is integral; psi carries the normalising denominator.  Over all c in
    the fusion range, sum_c phi_c psi_c = id (completeness).
    """
    if c not in fusion_range(a, b):
        raise ValueError(f"spin {c} is not in the fusion range of {a} and {b}")
    phi = _phi_integral(a, b, c)
    # psi_raw = (id_c (x) cap_b) o (phi(c,b;a) (x) id_b): an integral
    # intertwiner V_a (x) V_b -> V_c via the self-duality of V_b.
    inner = _phi_integral(c, b, a)  # V_a -> V_c (x) V_b
    cap = _cap(b)
    psi_raw = TensorOperator((c,), (a, b))
    for (mc, mb1), row in inner.rows.items():
        for (ma,), v in row.items():
            # contract with cap over the two V_b legs
            cap_val = cap.entry((0,), (mb1, -mb1))
            if _scalar_is_zero(cap_val):
                continue
            target = psi_raw.rows.setdefault((mc,), {})
            key = (ma, -mb1)
            cur = target.get(key, ZERO)
            s = cur + v * cap_val
            if _scalar_is_zero(s):
                target.pop(key, None)
            else:
                target[key] = s
    norm = psi_raw.compose(phi).proportionality_scalar()
    if _scalar_is_zero(norm):
        raise ValueError("degenerate intertwiner pairing")
    psi = psi_raw.scale(FractionScalar(ONE) / FractionScalar.coerce(norm))
    return phi, psi
