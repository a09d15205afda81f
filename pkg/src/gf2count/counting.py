"""Counting full-rank k x k column submatrices of a binary k x n matrix.

Two independent routes to the same pair of numbers:

* a closed-form count driven by a weight distribution, exact whenever
  the minimum distance is large enough that no column subset can avoid
  two different codewords at once, and

* a brute-force scan over all C(n, k) column subsets, always exact but
  limited by an explicit work budget.

``analyze`` ties the two together: it picks the cheaper side (code or
dual) for the distribution, checks the distance condition, applies the
formula when it is valid and falls back to the scan when it is not.
A subset is "dependent" when the selected columns form a singular k x k
matrix and "independent" when that matrix is invertible; D and I denote
how many subsets fall in each class.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from multiprocessing import get_context
from typing import Optional

from .codes import (
    DEFAULT_MAX_ENUM_DIM,
    CodePair,
    WeightEnumerator,
    dual_of,
    min_weight,
    weight_enumerator,
)
from .errors import (
    BudgetError,
    ConditionError,
    ConsistencyError,
    DimensionError,
    RankError,
    ZeroCodeError,
)
from .gf2 import BitMatrix, SystematicForm, rank, systematic_form

DEFAULT_BUDGET = 10_000_000

# Below this many subsets the scan is not worth forking workers for.
PARALLEL_THRESHOLD = 200_000

SubsetIndex = tuple[int, ...]


def condition_check(d_star: int, k: int, n: int) -> bool:
    """True when 3 * d_star / 2 > max(k, n - k), compared exactly in integers."""
    if not 1 <= k <= n:
        raise DimensionError(f"bad dimensions k={k}, n={n}")
    if d_star < 1:
        raise DimensionError(f"bad minimum distance {d_star}")
    return 3 * d_star > 2 * max(k, n - k)


def singular_count_formula(we: WeightEnumerator, k: int) -> int:
    """Dependent k-column selections of a k x n matrix, from a distribution.

    ``we`` may describe either the row-space code itself (dimension k)
    or its dual (dimension n - k); the dimension is read off the
    coefficient sum.  Counting selections through the dual is the same
    problem on complements, so both sides reduce to the one sum

        sum over d >= 1 of A_d * C(n - d, dim),

    each weight-d word being zero on n - d coordinates, any dim of which
    form a dependent selection on that side.  A selection avoiding two
    words at once would be counted twice, which the distance condition
    rules out; checking it is the caller's responsibility.

    Raises:
        DimensionError: k out of range, or the distribution's dimension
            matches neither the code nor its dual.
        ConsistencyError: coefficient sum is not a power of two.
    """
    n = we.n
    if not 1 <= k <= n:
        raise DimensionError(f"bad dimensions k={k}, n={n}")
    size = we.size
    dim = size.bit_length() - 1
    if size != 1 << dim:
        raise ConsistencyError(f"{size} words cannot form a linear code")
    if dim not in (k, n - k):
        raise DimensionError(
            f"distribution of dimension {dim} fits neither the code ({k}) "
            f"nor its dual ({n - k})"
        )
    return sum(
        we.coeffs[d] * comb(n - d, dim) for d in range(1, n - dim + 1) if we.coeffs[d]
    )


def full_rank_count_formula(we: WeightEnumerator, k: int, n: int) -> int:
    """C(n, k) minus the singular count; raises if that would go negative."""
    if we.n != n:
        raise DimensionError(f"enumerator length {we.n} does not match n={n}")
    value = comb(n, k) - singular_count_formula(we, k)
    if value < 0:
        raise ConditionError(
            "singular count exceeds the number of subsets; "
            "the formula was applied outside its validity range"
        )
    return value


@dataclass(frozen=True)
class BruteForceResult:
    """Outcome of the subset scan.  Set lists are None when not collected."""

    singular_count: int
    full_rank_count: int
    dependent_sets: Optional[tuple[SubsetIndex, ...]]
    independent_sets: Optional[tuple[SubsetIndex, ...]]


def _scan_range(args: tuple) -> tuple[int, list, list]:
    """Classify combinations lo..hi (lexicographic rank) of k columns.

    Top-level so it can cross a process boundary.  Returns the singular
    count for the range plus the collected subset lists (empty when
    collect is off).
    """
    colv, k, n, lo, hi, collect = args
    singular = 0
    dep: list[SubsetIndex] = []
    ind: list[SubsetIndex] = []
    for subset in islice(combinations(range(n), k), lo, hi):
        slots = [0] * (k + 1)
        full = True
        for j in subset:
            v = colv[j]
            while v:
                h = v.bit_length()
                b = slots[h]
                if not b:
                    slots[h] = v
                    break
                v ^= b
            else:
                full = False
                break
        if full:
            if collect:
                ind.append(subset)
        else:
            singular += 1
            if collect:
                dep.append(subset)
    return singular, dep, ind


def brute_force_counts(
    m: BitMatrix,
    *,
    budget: int = DEFAULT_BUDGET,
    collect_sets: bool = False,
    set_list_limit: Optional[int] = None,
    workers: int = 1,
    parallel_threshold: int = PARALLEL_THRESHOLD,
) -> BruteForceResult:
    """Scan every k-column subset of m and classify it by rank.

    Subsets are visited in lexicographic order, so collected lists are
    deterministic; with several workers the range is split into
    contiguous blocks and merged back in block order, which yields the
    identical lists.

    Args:
        m: k x n matrix with full row rank.
        budget: refuse scans with more than this many subsets.
        collect_sets: also return the explicit subset lists.
        set_list_limit: drop a collected list longer than this (None in
            the result marks a dropped or uncollected list).
        workers: process count; only engaged above parallel_threshold.

    Raises:
        RankError: m is rank deficient (every subset would be singular).
        BudgetError: C(n, k) exceeds budget.
    """
    k, n = m.rows, m.cols
    if rank(m) != k:
        raise RankError(f"matrix has rank {rank(m)}, full row rank {k} required")
    total = comb(n, k)
    if total > budget:
        raise BudgetError(f"{total} subsets to scan exceeds budget {budget}")

    colv = m.column_ints()
    if workers > 1 and total >= parallel_threshold:
        blocks = workers * 4
        bounds = [total * b // blocks for b in range(blocks + 1)]
        tasks = [
            (colv, k, n, bounds[b], bounds[b + 1], collect_sets)
            for b in range(blocks)
        ]
        with get_context("fork").Pool(workers) as pool:
            parts = pool.map(_scan_range, tasks)
        singular = sum(p[0] for p in parts)
        dep = [s for p in parts for s in p[1]]
        ind = [s for p in parts for s in p[2]]
    else:
        singular, dep, ind = _scan_range((colv, k, n, 0, total, collect_sets))

    dep_out: Optional[tuple[SubsetIndex, ...]] = None
    ind_out: Optional[tuple[SubsetIndex, ...]] = None
    if collect_sets:
        dep_out = tuple(dep)
        ind_out = tuple(ind)
        if set_list_limit is not None:
            if len(dep_out) > set_list_limit:
                dep_out = None
            if len(ind_out) > set_list_limit:
                ind_out = None
    return BruteForceResult(singular, total - singular, dep_out, ind_out)


@dataclass(frozen=True)
class CountReport:
    """Full outcome of an analysis run.

    ``d_star`` is None only for the degenerate k = n case, where the
    relevant code is trivial and the condition holds vacuously.  Subset
    lists hold 0-based strictly increasing tuples and are None unless
    collection was requested (and survived any list-size limit).
    """

    n: int
    k: int
    d_star: Optional[int]
    condition_holds: bool
    side: str
    singular_count: int
    full_rank_count: int
    method: str
    enumerator: WeightEnumerator
    dependent_sets: Optional[tuple[SubsetIndex, ...]] = None
    independent_sets: Optional[tuple[SubsetIndex, ...]] = None

    def __post_init__(self) -> None:
        if self.side not in ("primal", "dual"):
            raise ConsistencyError(f"unknown side {self.side!r}")
        if self.method not in ("formula", "oracle", "both"):
            raise ConsistencyError(f"unknown method {self.method!r}")
        if self.singular_count + self.full_rank_count != comb(self.n, self.k):
            raise ConsistencyError("counts do not sum to C(n, k)")
        if self.dependent_sets is not None:
            if len(self.dependent_sets) != self.singular_count:
                raise ConsistencyError("dependent set list does not match its count")
        if self.independent_sets is not None:
            if len(self.independent_sets) != self.full_rank_count:
                raise ConsistencyError("independent set list does not match its count")

    def to_json_dict(self) -> dict:
        """JSON-ready dict; subset indices are shifted to 1-based."""
        out = {
            "n": self.n,
            "k": self.k,
            "d_star": self.d_star,
            "condition_holds": self.condition_holds,
            "side": self.side,
            "D": self.singular_count,
            "I": self.full_rank_count,
            "method": self.method,
            "enumerator": self.enumerator.to_json_dict(),
        }
        if self.dependent_sets is not None:
            out["dependent_sets"] = [[j + 1 for j in s] for s in self.dependent_sets]
        if self.independent_sets is not None:
            out["independent_sets"] = [
                [j + 1 for j in s] for s in self.independent_sets
            ]
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "CountReport":
        def back(key: str) -> Optional[tuple[SubsetIndex, ...]]:
            if key not in data:
                return None
            return tuple(tuple(j - 1 for j in s) for s in data[key])

        return cls(
            n=int(data["n"]),
            k=int(data["k"]),
            d_star=None if data["d_star"] is None else int(data["d_star"]),
            condition_holds=bool(data["condition_holds"]),
            side=str(data["side"]),
            singular_count=int(data["D"]),
            full_rank_count=int(data["I"]),
            method=str(data["method"]),
            enumerator=WeightEnumerator.from_json_dict(data["enumerator"]),
            dependent_sets=back("dependent_sets"),
            independent_sets=back("independent_sets"),
        )


def analyze(
    m: BitMatrix,
    mode: str = "auto",
    *,
    budget: int = DEFAULT_BUDGET,
    max_enum_dim: int = DEFAULT_MAX_ENUM_DIM,
    collect_sets: bool = False,
    set_list_limit: Optional[int] = None,
    workers: int = 1,
    parallel_threshold: int = PARALLEL_THRESHOLD,
) -> CountReport:
    """Count invertible and singular k x k column selections of m.

    The weight distribution is taken on whichever of the code and its
    dual has smaller dimension: the code itself when k < n - k, else the
    dual.  Counting k-subsets of the matrix is equivalent to counting
    (n - k)-subsets on the dual side because a selection is invertible
    exactly when its complement is invertible for the dual.

    Modes:
        auto: formula when the distance condition holds, scan otherwise.
        formula: closed form only; ConditionError if the condition fails.
        oracle: subset scan only.
        both: run both and require exact agreement (ConsistencyError).

    collect_sets makes the scan run even in auto mode (the lists cannot
    come from the formula); with a valid condition the two methods are
    then cross-checked and the report says method "both".

    Raises:
        RankError: m is rank deficient.
        ConditionError: mode needs the formula but the condition fails.
        BudgetError: scan size or enumeration dimension over budget.
        ConsistencyError: formula and scan disagree.
    """
    if mode not in ("auto", "formula", "oracle", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "formula" and collect_sets:
        raise ValueError("explicit subset lists require the scan; use another mode")

    sf = systematic_form(m)
    k, n = sf.k, sf.n
    side = "primal" if k < n - k else "dual"
    if side == "primal":
        we = weight_enumerator(sf.matrix, max_enum_dim)
    else:
        we = weight_enumerator(dual_of(sf), max_enum_dim)
    try:
        d_star: Optional[int] = min_weight(we)
    except ZeroCodeError:
        d_star = None
    holds = True if d_star is None else condition_check(d_star, k, n)

    if mode in ("formula", "both") and not holds:
        raise ConditionError(
            f"need 3 * d_star > 2 * max(k, n - k) but 3 * {d_star} <= "
            f"2 * {max(k, n - k)}; the formula may double count here"
        )

    formula_d: Optional[int] = None
    if holds and mode != "oracle":
        formula_d = comb(n, k) - full_rank_count_formula(we, k, n)

    scan: Optional[BruteForceResult] = None
    if mode in ("oracle", "both") or (mode == "auto" and (not holds or collect_sets)):
        scan = brute_force_counts(
            m,
            budget=budget,
            collect_sets=collect_sets,
            set_list_limit=set_list_limit,
            workers=workers,
            parallel_threshold=parallel_threshold,
        )

    if scan is not None and formula_d is not None:
        if scan.singular_count != formula_d:
            raise ConsistencyError(
                f"formula gives D={formula_d} but the scan found "
                f"D={scan.singular_count}"
            )
        method = "both"
        singular = scan.singular_count
    elif scan is not None:
        method = "oracle"
        singular = scan.singular_count
    else:
        method = "formula"
        singular = formula_d  # type: ignore[assignment]

    return CountReport(
        n=n,
        k=k,
        d_star=d_star,
        condition_holds=holds,
        side=side,
        singular_count=singular,
        full_rank_count=comb(n, k) - singular,
        method=method,
        enumerator=we,
        dependent_sets=None if scan is None else scan.dependent_sets,
        independent_sets=None if scan is None else scan.independent_sets,
    )


def complement_duality_check(
    g: SystematicForm,
    h: Optional[BitMatrix] = None,
    *,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> bool:
    """Scan both sides and verify the complement correspondence.

    A k-subset of the generator columns is dependent exactly when its
    complement is a dependent (n - k)-subset of the dual generator's
    columns.  Both scans run in full and the dependent families are
    compared as sets of complements.

    Args:
        g: systematic form of the matrix under test.
        h: generator of the dual; derived from g when omitted.  A
            supplied h is first validated as a genuine dual pair.

    Raises:
        ConsistencyError / RankError: h is not a valid dual generator.
        BudgetError: the two scans together exceed the budget.
    """
    if h is None:
        h = dual_of(g)
    else:
        CodePair(g, h)
    k, n = g.k, g.n
    if comb(n, k) + comb(n, n - k) > budget:
        raise BudgetError(
            f"scanning both sides needs {comb(n, k) + comb(n, n - k)} subsets, "
            f"over budget {budget}"
        )
    res_g = brute_force_counts(
        g.matrix, budget=budget, collect_sets=True, workers=workers
    )
    res_h = brute_force_counts(h, budget=budget, collect_sets=True, workers=workers)
    if res_g.full_rank_count != res_h.full_rank_count:
        return False
    everything = range(n)
    complements = {
        tuple(j for j in everything if j not in set(s)) for s in res_g.dependent_sets
    }
    return complements == set(res_h.dependent_sets)


def _random_row_equivalent(m: BitMatrix, rng: random.Random) -> BitMatrix:
    """Apply a random invertible sequence of row swaps and row additions."""
    k = m.rows
    if k < 2:
        return m
    work = list(m.bits)
    for _ in range(rng.randrange(k, 3 * k + 1)):
        i, j = rng.sample(range(k), 2)
        if rng.random() < 0.5:
            work[i], work[j] = work[j], work[i]
        else:
            work[i] ^= work[j]
    return BitMatrix(m.rows, m.cols, tuple(work))


def row_op_invariance_check(
    m: BitMatrix,
    trials: int = 20,
    *,
    seed: int = 0,
    budget: int = DEFAULT_BUDGET,
    workers: int = 1,
) -> bool:
    """Scan row-equivalent variants and require identical dependent sets.

    Row operations change the matrix but not which column subsets are
    dependent, so every variant must reproduce the base scan exactly.

    Args:
        m: k x n matrix with full row rank.
        trials: number of random variants to scan.
        seed: seeds the op-sequence generator; same seed, same variants.

    Raises:
        BudgetError: (trials + 1) scans would exceed the budget.
    """
    if trials < 0:
        raise DimensionError(f"negative trial count {trials}")
    k, n = m.rows, m.cols
    if comb(n, k) * (trials + 1) > budget:
        raise BudgetError(
            f"{trials + 1} scans of {comb(n, k)} subsets exceed budget {budget}"
        )
    rng = random.Random(seed)
    base = brute_force_counts(m, budget=budget, collect_sets=True, workers=workers)
    base_dep = set(base.dependent_sets)
    for _ in range(trials):
        variant = _random_row_equivalent(m, rng)
        res = brute_force_counts(
            variant, budget=budget, collect_sets=True, workers=workers
        )
        if set(res.dependent_sets) != base_dep:
            return False
    return True
