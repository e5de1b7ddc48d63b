"""Linear-algebra oracle for the dimension of each graded piece.

Independently of the rewrite engine, the span of the defining relations
in a fixed degree is computed as the exact rank of an integer matrix:
one row per (left context, reducible pair, right context), one column
per biword of that degree.  The codimension must match the count of
irreducible biwords obtained by brute enumeration.

Rows at a rational evaluation point q = p/s are scaled by p*s (and the
two-term rows by s) to clear denominators; row scaling leaves the rank
unchanged.  Elimination is fraction-free integer Gaussian elimination
on sparse rows with gcd normalization, pivoting on the column of
highest termination measure so that fill-in follows the same downhill
structure the rewrite rules do.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .rewrite import SYSTEM_S, reduce_biword
from .words import Biword

DEFAULT_BUDGET = 10**6


def enumerate_biwords(r: int, n: int) -> list[Biword]:
    """All r^(2n) biwords of length n, ordered by (top, bottom) lex."""
    alphabet = range(1, r + 1)
    return [
        Biword._make(top, bottom)
        for top in itertools.product(alphabet, repeat=n)
        for bottom in itertools.product(alphabet, repeat=n)
    ]


def count_irreducible(r: int, n: int) -> int:
    """Brute enumeration count of length-n biwords with no double descent."""
    alphabet = range(1, r + 1)
    total = 0
    for top in itertools.product(alphabet, repeat=n):
        descents = [top[i] > top[i + 1] for i in range(n - 1)]
        for bottom in itertools.product(alphabet, repeat=n):
            if any(
                descents[i] and bottom[i] >= bottom[i + 1] for i in range(n - 1)
            ):
                continue
            total += 1
    return total


def reducible_pairs(r: int) -> list[Biword]:
    """The length-2 biwords carrying a double descent, in canonical order."""
    return [
        Biword._make((x, y), (a, b))
        for x in range(1, r + 1)
        for y in range(1, x)
        for a in range(1, r + 1)
        for b in range(1, a + 1)
    ]


def _as_q(q_value) -> Fraction:
    if isinstance(q_value, str):
        if q_value == "one":
            return Fraction(1)
        q_value = Fraction(q_value)
    q = Fraction(q_value)
    if q == 0:
        raise ValueError("q = 0 is outside the coefficient ring")
    return q


def _relation_stencil(q: Fraction) -> dict[bool, list[tuple[int, int, int]]]:
    """Integer-cleared coefficients of (pair) - (its replacement).

    Keyed by whether the bottom letters are equal; entries are
    (top arrangement, bottom arrangement, coefficient) with arrangement
    0 meaning kept and 1 meaning swapped.
    """
    p, s = q.numerator, q.denominator
    return {
        True: [(0, 0, s), (1, 0, -p)],
        False: [(0, 0, p * s), (1, 1, -p * s), (1, 0, -p * p), (0, 1, s * s)],
    }


def relation_matrix(r: int, n: int, q_value="one") -> list[dict[int, int]]:
    """Sparse integer rows spanning the degree-n relation space.

    Columns follow enumerate_biwords(r, n).  One row per placement of a
    reducible pair between a left and a right context; n < 2 gives no
    rows.
    """
    q = _as_q(q_value)
    stencil = _relation_stencil(q)
    column = {bw: j for j, bw in enumerate(enumerate_biwords(r, n))}
    pairs = reducible_pairs(r)
    alphabet = range(1, r + 1)
    rows: list[dict[int, int]] = []
    for i in range(n - 1):
        left_words = list(itertools.product(alphabet, repeat=i))
        right_words = list(itertools.product(alphabet, repeat=n - 2 - i))
        for pair in pairs:
            (x, y), (a, b) = pair.top, pair.bottom
            arrangements = {
                (0, 0): ((x, y), (a, b)),
                (1, 0): ((y, x), (a, b)),
                (0, 1): ((x, y), (b, a)),
                (1, 1): ((y, x), (b, a)),
            }
            entries = stencil[a == b]
            for lt in left_words:
                for lb in left_words:
                    for rt in right_words:
                        for rb in right_words:
                            row: dict[int, int] = {}
                            for ti, bi, coeff in entries:
                                t2, b2 = arrangements[(ti, bi)]
                                bw = Biword._make(lt + t2 + rt, lb + b2 + rb)
                                row[column[bw]] = coeff
                            rows.append(row)
    return rows


def _normalize_row(row: dict[int, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for j in row:
            row[j] //= g


def rank(rows: list[dict[int, int]], priority=None) -> int:
    """Exact rank of sparse integer rows by fraction-free elimination.

    priority, if given, maps a column index to its pivoting key; smaller
    keys are eliminated first.  The rank does not depend on it, only the
    amount of fill-in does.
    """
    if priority is None:
        key = lambda j: j
    else:
        key = priority.__getitem__
    pivots: dict[int, dict[int, int]] = {}
    found = 0
    for row in rows:
        row = dict(row)
        while row:
            lead = min(row, key=key)
            pivot = pivots.get(lead)
            if pivot is None:
                _normalize_row(row)
                pivots[lead] = row
                found += 1
                break
            a = pivot[lead]
            b = row[lead]
            g = gcd(a, b)
            am, bm = a // g, b // g
            merged = {j: v * am for j, v in row.items()}
            for j, v in pivot.items():
                w = merged.get(j, 0) - v * bm
                if w:
                    merged[j] = w
                else:
                    merged.pop(j, None)
            _normalize_row(merged)
            row = merged
    return found


def _measure_priority(r: int, n: int) -> list[int]:
    # Pivot on high-measure columns first; mirrors the rewrite direction.
    biwords = enumerate_biwords(r, n)
    order = sorted(range(len(biwords)), key=lambda j: (-biwords[j].inv_plus(), j))
    priority = [0] * len(biwords)
    for position, j in enumerate(order):
        priority[j] = position
    return priority


@dataclass
class DimensionReport:
    r: int
    degree: int
    ambient_dim: int
    relation_rank: int
    quotient_dim: int
    irreducible_count: int
    match: bool
    q_value: str = "1"


def check_basis_dimension(
    r: int, n: int, q_value="one", budget: int = DEFAULT_BUDGET
) -> DimensionReport:
    """Compare the relation-space codimension with the irreducible count."""
    ambient = r ** (2 * n)
    if ambient > budget:
        raise ValueError(
            f"degree {n} over alphabet 1..{r} needs {ambient} columns, "
            f"over the budget of {budget}"
        )
    q = _as_q(q_value)
    rows = relation_matrix(r, n, q)
    relation_rank = rank(rows, _measure_priority(r, n)) if rows else 0
    quotient = ambient - relation_rank
    irreducible = count_irreducible(r, n)
    return DimensionReport(
        r=r,
        degree=n,
        ambient_dim=ambient,
        relation_rank=relation_rank,
        quotient_dim=quotient,
        irreducible_count=irreducible,
        match=quotient == irreducible,
        q_value=str(q),
    )


def spanning_rank(r: int, n: int) -> int:
    """Rank of the plain normal-form map on all length-n biwords.

    Cross-validates the rewrite engine against the oracle: the rank must
    equal the quotient dimension, and it can only exceed the irreducible
    count if some normal form escaped the irreducible span.
    """
    biwords = enumerate_biwords(r, n)
    column = {bw: j for j, bw in enumerate(biwords)}
    rows = []
    for bw in biwords:
        nf = reduce_biword(bw, SYSTEM_S)
        row = {}
        for term, coeff in nf._terms.items():
            value = coeff.eval_at_one()
            if len(coeff) != 1 or coeff.monomials()[0][0] != 0:
                raise AssertionError(
                    f"plain normal form of {bw} has a non-constant coefficient"
                )
            row[column[term]] = value
        rows.append(row)
    return rank(rows, _measure_priority(r, n))
