"""Exact Hirzebruch-Jung continued fraction arithmetic.

A continued fraction here is a nonempty tuple of positive integers
``(a_1, ..., a_r)`` read as ``a_1 - 1/(a_2 - 1/(...))`` (minus signs, in
contrast with the ordinary ``+`` convention).  Everything below is exact:
values are :class:`fractions.Fraction`, never floats.

The blow-up / blow-down moves and the zero continued fractions mirror the
combinatorics of chains of rational curves on surfaces; the triangulation
bijection gives an independent route to the same objects and is used as a
cross-check oracle in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

CFrac = tuple[int, ...]

__all__ = [
    "CFrac",
    "convergents",
    "evaluate",
    "expand",
    "dual",
    "dual_dot_diagram",
    "is_admissible",
    "blow_down",
    "blow_up",
    "is_zero_cf",
    "is_zero_cf_by_rank",
    "intersection_matrix_rank",
    "enumerate_zero_cfs",
    "catalan",
    "Triangulation",
    "cf_to_triangulation",
    "triangulation_to_cf",
    "enumerate_triangulations",
]


def _check_entries(cf: CFrac) -> None:
    if len(cf) == 0:
        raise ValueError("empty continued fraction")
    if any((not isinstance(a, int)) or a < 1 for a in cf):
        raise ValueError(f"entries must be positive integers, got {cf!r}")


def convergents(cf: CFrac) -> tuple[list[int], list[int]]:
    """Convergent sequences (p_0..p_r, q_0..q_r) with p_0=1, p_1=a_1, q_0=0, q_1=1.

    Satisfy p_i = a_i p_{i-1} - p_{i-2} and q_i = a_i q_{i-1} - q_{i-2}, so that
    the ordered product of the matrices (a_i -1; 1 0) is (p_i -p_{i-1}; q_i -q_{i-1}).
    """
    _check_entries(cf)
    p = [1, cf[0]]
    q = [0, 1]
    for a in cf[1:]:
        p.append(a * p[-1] - p[-2])
        q.append(a * q[-1] - q[-2])
    return p, q


def evaluate(cf: CFrac) -> Fraction | None:
    """Value p_r/q_r of the continued fraction, or None when undefined (q_r = 0).

    Matrix-convergent evaluation: total on admissible inputs, agrees with the
    recursive definition whenever the recursion never divides by zero, and
    returns exactly 0 on zero continued fractions.
    """
    p, q = convergents(cf)
    if q[-1] == 0:
        return None
    return Fraction(p[-1], q[-1])


def expand(n: int, q: int) -> CFrac:
    """The unique expansion of n/q with all entries >= 2, for coprime 0 < q < n."""
    if not (isinstance(n, int) and isinstance(q, int) and 0 < q < n):
        raise ValueError(f"need integers 0 < q < n, got n={n!r} q={q!r}")
    if math.gcd(n, q) != 1:
        raise ValueError(f"n={n} and q={q} are not coprime")
    entries = []
    while q > 0:
        a = -(-n // q)  # ceil(n/q)
        entries.append(a)
        n, q = q, a * q - n
    return tuple(entries)


def dual_dot_diagram(cf: CFrac) -> CFrac:
    """Dual expansion computed from the Riemenschneider dot diagram.

    Row i holds a_i - 1 dots; each row starts under the rightmost dot of the
    previous one.  Column j of the diagram then holds b_j - 1 dots, where
    [b_1, ..., b_s] is the dual fraction.
    """
    _check_entries(cf)
    if any(a < 2 for a in cf):
        raise ValueError("dot diagram needs all entries >= 2")
    ncols = sum(a - 1 for a in cf) - (len(cf) - 1)
    counts = [0] * ncols
    start = 0
    for a in cf:
        for j in range(start, start + a - 1):
            counts[j] += 1
        start += a - 2
    return tuple(c + 1 for c in counts)


def dual(n: int, q: int) -> CFrac:
    """Expansion of n/(n-q); checked against the dot-diagram computation."""
    out = expand(n, n - q)
    by_dots = dual_dot_diagram(expand(n, q))
    if out != by_dots:
        raise AssertionError(
            f"dual mismatch for {n}/{q}: expand gives {out}, dot diagram gives {by_dots}"
        )
    return out


def is_admissible(cf: CFrac) -> bool:
    """True iff the convergent numerators satisfy p_i > 0 for every i < r."""
    _check_entries(cf)
    p_prev, p_cur = 1, cf[0]
    for a in cf[1:]:
        if p_cur <= 0:
            return False
        p_prev, p_cur = p_cur, a * p_cur - p_prev
    return True


def blow_down(cf: CFrac, i: int) -> CFrac:
    """Remove the 1 at (1-based) position i, decrementing the surviving neighbours.

    The input must be admissible and the result must again be a sequence of
    positive integers of length >= 1; the value class n/q is preserved mod n.
    """
    _check_entries(cf)
    r = len(cf)
    if not 1 <= i <= r:
        raise ValueError(f"index {i} out of range 1..{r}")
    if cf[i - 1] != 1:
        raise ValueError(f"entry at position {i} is {cf[i - 1]}, not 1")
    if r < 2:
        raise ValueError("cannot blow down a length-1 fraction")
    if not is_admissible(cf):
        raise ValueError(f"{cf} is not admissible")
    if i == 1:
        out = (cf[1] - 1,) + cf[2:]
    elif i == r:
        out = cf[: r - 2] + (cf[r - 2] - 1,)
    else:
        out = cf[: i - 2] + (cf[i - 2] - 1, cf[i] - 1) + cf[i + 1 :]
    if len(out) == 0 or any(a < 1 for a in out):
        raise ValueError(f"blow-down of {cf} at {i} drops an entry below 1")
    return out


def blow_up(cf: CFrac, position: int) -> CFrac:
    """Insert a 1 at one of the r+1 slots (0 = front, r = back), bumping neighbours.

    position j with 0 < j < r inserts between a_j and a_{j+1}.  Blowing the new
    1 back down recovers the input.
    """
    _check_entries(cf)
    r = len(cf)
    if not 0 <= position <= r:
        raise ValueError(f"position {position} out of range 0..{r}")
    if position == 0:
        return (1, cf[0] + 1) + cf[1:]
    if position == r:
        return cf[: r - 1] + (cf[r - 1] + 1, 1)
    j = position
    return cf[: j - 1] + (cf[j - 1] + 1, 1, cf[j] + 1) + cf[j + 1 :]


def is_zero_cf(cf: CFrac) -> bool:
    """True iff cf is admissible and evaluates to exactly 0."""
    _check_entries(cf)
    return is_admissible(cf) and evaluate(cf) == 0


def intersection_matrix_rank(cf: CFrac) -> int:
    """Rank of the tridiagonal intersection matrix (-a_i on the diagonal, 1 off it).

    Exact fraction-free row elimination; used as the independent oracle for
    the zero-continued-fraction characterisation.
    """
    _check_entries(cf)
    r = len(cf)
    rows = []
    for i, a in enumerate(cf):
        row = [Fraction(0)] * r
        row[i] = Fraction(-a)
        if i > 0:
            row[i - 1] = Fraction(1)
        if i < r - 1:
            row[i + 1] = Fraction(1)
        rows.append(row)
    rank = 0
    for col in range(r):
        pivot = next((k for k in range(rank, r) if rows[k][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        pv = rows[rank][col]
        for k in range(rank + 1, r):
            if rows[k][col] != 0:
                f = rows[k][col] / pv
                rows[k] = [x - f * y for x, y in zip(rows[k], rows[rank])]
        rank += 1
    return rank


def is_zero_cf_by_rank(cf: CFrac) -> bool:
    """Oracle: admissible and the intersection matrix has rank exactly r - 1."""
    return is_admissible(cf) and intersection_matrix_rank(cf) == len(cf) - 1


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def enumerate_zero_cfs(r: int) -> set[CFrac]:
    """All zero continued fractions of length r, by blow-up closure from (1, 1).

    Their number is the Catalan number binom(2(r-1), r-1)/r.
    """
    if r < 2:
        raise ValueError("zero continued fractions have length >= 2")
    level: set[CFrac] = {(1, 1)}
    for _ in range(r - 2):
        level = {blow_up(cf, pos) for cf in level for pos in range(len(cf) + 1)}
    return level


@dataclass(frozen=True)
class Triangulation:
    """Triangulation of a convex polygon P_0 ... P_{n_vertices-1} by its diagonal set."""

    n_vertices: int
    diagonals: frozenset[tuple[int, int]]

    def __post_init__(self):
        n = self.n_vertices
        if n < 3:
            raise ValueError("polygon needs >= 3 vertices")
        if len(self.diagonals) != n - 3:
            raise ValueError(f"a triangulation of an {n}-gon has {n - 3} diagonals")
        for i, j in self.diagonals:
            if not (0 <= i < j < n) or j - i == 1 or (i == 0 and j == n - 1):
                raise ValueError(f"({i},{j}) is not a diagonal of the {n}-gon")
        for d, e in ((d, e) for d in self.diagonals for e in self.diagonals if d < e):
            if _crossing(d, e):
                raise ValueError(f"diagonals {d} and {e} cross")

    def triangles(self) -> list[tuple[int, int, int]]:
        """Faces, as sorted vertex triples."""
        n = self.n_vertices
        edges = set(self.diagonals)
        edges.update((i, i + 1) for i in range(n - 1))
        edges.add((0, n - 1))
        out = []
        for i, j in sorted(edges):
            for k in range(j + 1, n):
                if (i, k) in edges and (j, k) in edges:
                    out.append((i, j, k))
        return out

    def vertex_counts(self) -> tuple[int, ...]:
        """v_i = number of triangles having P_i as a vertex."""
        v = [0] * self.n_vertices
        for tri in self.triangles():
            for x in tri:
                v[x] += 1
        return tuple(v)


def _crossing(d: tuple[int, int], e: tuple[int, int]) -> bool:
    (a, b), (c, f) = d, e
    return (a < c < b < f) or (c < a < f < b)


def cf_to_triangulation(cf: CFrac) -> Triangulation:
    """The triangulation of P_0 ... P_r with v_i = a_i for 1 <= i <= r.

    Only defined for zero continued fractions; built by iterated ear removal,
    the geometric mirror of blow-downs.
    """
    if not is_zero_cf(cf):
        raise ValueError(f"{cf} is not a zero continued fraction")
    r = len(cf)
    v0 = 3 * (r - 1) - sum(cf)
    counts = [v0, *cf]
    labels = list(range(r + 1))
    diagonals = set()
    while len(labels) > 3:
        t = next((k for k, c in enumerate(counts) if c == 1), None)
        if t is None:
            raise AssertionError(f"no ear found for {cf}; counts {counts}")
        prev = (t - 1) % len(labels)
        nxt = (t + 1) % len(labels)
        a, b = sorted((labels[prev], labels[nxt]))
        diagonals.add((a, b))
        counts[prev] -= 1
        counts[nxt] -= 1
        del counts[t], labels[t]
    return Triangulation(r + 1, frozenset(diagonals))


def triangulation_to_cf(t: Triangulation) -> CFrac:
    """Drop v_0 from the vertex counts; the rest is a zero continued fraction."""
    return t.vertex_counts()[1:]


@lru_cache(maxsize=None)
def enumerate_triangulations(n_vertices: int) -> frozenset[frozenset[tuple[int, int]]]:
    """Diagonal sets of all triangulations of the convex n-gon (oracle for the census
    of zero continued fractions; independent of the blow-up closure)."""
    if n_vertices < 3:
        raise ValueError("polygon needs >= 3 vertices")

    def fans(lo: int, hi: int) -> list[frozenset[tuple[int, int]]]:
        # triangulations of the sub-polygon on vertices lo..hi
        if hi - lo < 2:
            return [frozenset()]
        out = []
        for k in range(lo + 1, hi):
            for left in fans(lo, k):
                for right in fans(k, hi):
                    diags = set(left) | set(right)
                    if k - lo > 1:
                        diags.add((lo, k))
                    if hi - k > 1:
                        diags.add((k, hi))
                    out.append(frozenset(diags))
        return out

    return frozenset(fans(0, n_vertices - 1))
