"""Weight enumerators, dual codes and effective distances.

The binary code here is always the row space of a generator matrix.
Weight distributions are exact integer counts; the transform between a
code and its dual is done with integer arithmetic only, so every
coefficient comes out exact and the divisibility by the code size acts
as a built-in consistency check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .errors import (
    BudgetError,
    ConsistencyError,
    DimensionError,
    IndexSetError,
    RankError,
    ZeroCodeError,
)
from .gf2 import BitMatrix, SystematicForm, check_index_set, mat_mul_transpose, rank

# Enumerating 2^dim codewords; above this the loop is no longer interactive.
DEFAULT_MAX_ENUM_DIM = 28


@dataclass(frozen=True)
class WeightEnumerator:
    """Exact weight distribution of a length-n code.

    ``coeffs[w]`` counts the codewords of Hamming weight w, for
    w = 0..n, so the tuple always has n + 1 entries and coeffs[0] >= 1.
    """

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DimensionError(f"bad length {self.n}")
        if len(self.coeffs) != self.n + 1:
            raise DimensionError(
                f"need {self.n + 1} coefficients, got {len(self.coeffs)}"
            )
        if any(c < 0 for c in self.coeffs):
            raise ConsistencyError("negative weight count")
        if self.coeffs[0] < 1:
            raise ConsistencyError("zero word missing from weight distribution")

    @property
    def size(self) -> int:
        """Number of codewords."""
        return sum(self.coeffs)

    def polynomial_str(self) -> str:
        """Render as a homogeneous polynomial in x and y, e.g. x^7 + 7x^4y^4."""
        terms = []
        for w, a in enumerate(self.coeffs):
            if a == 0:
                continue
            factors = str(a) if a > 1 else ""
            xp = self.n - w
            if xp:
                factors += "x" if xp == 1 else f"x^{xp}"
            if w:
                factors += "y" if w == 1 else f"y^{w}"
            terms.append(factors or "1")
        return " + ".join(terms)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "WeightEnumerator":
        return cls(int(data["n"]), tuple(int(c) for c in data["coeffs"]))


def weight_enumerator(
    gen: BitMatrix, max_enum_dim: int = DEFAULT_MAX_ENUM_DIM
) -> WeightEnumerator:
    """Weight distribution of the row space of gen, by direct enumeration.

    Walks all 2^k codewords in Gray-code order so each step is a single
    row XOR and a popcount.  The tally is order-independent, so the
    result is deterministic however the walk is arranged.

    Args:
        gen: generator matrix with full row rank.
        max_enum_dim: refuse dimensions above this (BudgetError).

    Raises:
        RankError: gen is rank deficient (the walk would double-count).
        BudgetError: 2^k codewords is over the enumeration guard.
    """
    k, n = gen.rows, gen.cols
    if rank(gen) != k:
        raise RankError(f"generator has rank {rank(gen)}, expected {k}")
    if k > max_enum_dim:
        raise BudgetError(
            f"enumerating 2^{k} codewords exceeds the dimension guard {max_enum_dim}"
        )
    counts = [0] * (n + 1)
    counts[0] = 1
    word = 0
    rows_local = gen.bits
    for step in range(1, 1 << k):
        word ^= rows_local[(step & -step).bit_length() - 1]
        counts[word.bit_count()] += 1
    return WeightEnumerator(n, tuple(counts))


def macwilliams(we: WeightEnumerator, dim: int) -> WeightEnumerator:
    """Weight distribution of the dual code, via the transform identity.

    Expands W(x + y, x - y) / 2^dim with exact integer arithmetic: the
    dual count for weight w is

        (1 / 2^dim) * sum_d A_d * sum_j (-1)^j C(d, j) C(n - d, w - j).

    Args:
        we: weight distribution of a code of dimension dim.
        dim: dimension of the primal code.

    Raises:
        ConsistencyError: coefficient sum is not 2^dim, or the transform
            yields a count that is negative or not divisible by 2^dim.
    """
    n = we.n
    if not 0 <= dim <= n:
        raise DimensionError(f"dimension {dim} out of range for length {n}")
    if we.size != 1 << dim:
        raise ConsistencyError(
            f"coefficients sum to {we.size}, a dimension-{dim} code has {1 << dim} words"
        )
    out = []
    for w in range(n + 1):
        total = 0
        for d, a_d in enumerate(we.coeffs):
            if a_d == 0:
                continue
            term = 0
            for j in range(max(0, w - (n - d)), min(d, w) + 1):
                part = comb(d, j) * comb(n - d, w - j)
                term += -part if j & 1 else part
            total += a_d * term
        q, rem = divmod(total, 1 << dim)
        if rem or q < 0:
            raise ConsistencyError(
                f"transform gave {total} at weight {w}, not a multiple of 2^{dim}"
            )
        out.append(q)
    return WeightEnumerator(n, tuple(out))


def min_weight(we: WeightEnumerator) -> int:
    """Smallest nonzero weight with a positive count.

    Raises:
        ZeroCodeError: the code has no nonzero word.
    """
    for d in range(1, we.n + 1):
        if we.coeffs[d]:
            return d
    raise ZeroCodeError("only the zero codeword exists, distance undefined")


def dual_of(g: SystematicForm) -> BitMatrix:
    """Parity check matrix [P^T | I] for a systematic generator [I | P].

    For k = n the parity block is empty and the result is a 0 x n
    matrix, the generator of the trivial dual.
    """
    k, n = g.k, g.n
    if k == n:
        return BitMatrix(0, n, ())
    pcols = g.parity_block().column_ints()
    rows = tuple(pcols[j] | (1 << (k + j)) for j in range(n - k))
    return BitMatrix(n - k, n, rows)


@dataclass(frozen=True)
class CodePair:
    """A systematic generator bundled with a generator of its dual.

    Construction re-checks the pairing, so a CodePair in hand certifies
    that ``h`` spans exactly the orthogonal complement of ``g``.
    """

    g: SystematicForm
    h: BitMatrix

    def __post_init__(self) -> None:
        k, n = self.g.k, self.g.n
        if self.h.cols != n:
            raise DimensionError(
                f"dual generator has {self.h.cols} columns, expected {n}"
            )
        if self.h.rows != n - k:
            raise DimensionError(
                f"dual generator has {self.h.rows} rows, expected {n - k}"
            )
        if not mat_mul_transpose(self.g.matrix, self.h).is_zero:
            raise ConsistencyError("rows of h are not orthogonal to the code")
        if rank(self.h) != n - k:
            raise RankError("dual generator is rank deficient")

    @classmethod
    def from_systematic(cls, g: SystematicForm) -> "CodePair":
        return cls(g, dual_of(g))


def effective_distance(p: BitMatrix, t_set: Sequence[int]) -> int:
    """Weight of the dual codeword whose unit part is supported on t_set.

    For a systematic generator [I | P] the dual is [P^T | I], so the
    combination of its rows named by t_set has weight equal to the XOR
    of the matching columns of P plus |t_set| for the identity part.

    Args:
        p: the k x (n - k) parity block.
        t_set: strictly increasing 0-based indices into the rows of the
            identity block (equivalently the columns of P^T).

    Raises:
        IndexSetError: empty, unsorted or out-of-range t_set.
    """
    check_index_set(t_set, p.cols)
    pcols = p.column_ints()
    acc = 0
    for j in t_set:
        acc ^= pcols[j]
    return acc.bit_count() + len(t_set)
