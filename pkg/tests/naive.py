"""Slow reference implementations used as independent oracles.

Everything here works on plain lists of 0/1 ints and never touches the
packed representation, so agreement with the library is meaningful.
"""

from itertools import combinations, product


def naive_rank(rows: list[list[int]]) -> int:
    """Textbook Gaussian elimination on nested lists."""
    work = [row[:] for row in rows]
    if not work:
        return 0
    n = len(work[0])
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        for i in range(len(work)):
            if i != r and work[i][col]:
                work[i] = [(a + b) % 2 for a, b in zip(work[i], work[r])]
        r += 1
    return r


def naive_weight_counts(rows: list[list[int]]) -> list[int]:
    """Weight distribution by expanding every row combination."""
    k = len(rows)
    n = len(rows[0])
    counts = [0] * (n + 1)
    for coeffs in product((0, 1), repeat=k):
        word = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                word = [(a + b) % 2 for a, b in zip(word, row)]
        counts[sum(word)] += 1
    return counts


def naive_subset_split(rows: list[list[int]]) -> tuple[list, list]:
    """All k-column subsets split into (dependent, independent), lexicographic."""
    k = len(rows)
    n = len(rows[0])
    dep, ind = [], []
    for subset in combinations(range(n), k):
        square = [[row[j] for j in subset] for row in rows]
        if naive_rank(square) == k:
            ind.append(subset)
        else:
            dep.append(subset)
    return dep, ind


def naive_dual_basis(rows: list[list[int]]) -> list[list[int]]:
    """A basis of the orthogonal complement, by filtering all of F_2^n."""
    n = len(rows[0])
    dual_words = []
    for cand in product((0, 1), repeat=n):
        if all(sum(a * b for a, b in zip(cand, row)) % 2 == 0 for row in rows):
            dual_words.append(list(cand))
    basis: list[list[int]] = []
    for w in dual_words:
        if naive_rank(basis + [w]) > len(basis):
            basis.append(w)
    return basis
