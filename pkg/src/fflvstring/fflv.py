"""Lattice points of the chain polytopes, fundamental chains first.

Fundamental sets are produced by direct enumeration of the defining chains
(rows strictly decreasing below i, columns strictly increasing above i in the
column order), general weights by pointwise Minkowski sums of the fundamental
sets.  Both constructions are gated on the Weyl dimension: a cardinality
mismatch is a hard failure, never silently accepted.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .errors import VerificationError
from .rootsys import (
    ExponentVector,
    LieType,
    RootLabel,
    all_columns,
    build_labels,
    check_dominant,
    column_key,
    label_index,
    weyl_dim,
)

LatticePointSet = tuple[ExponentVector, ...]


@lru_cache(maxsize=None)
def fundamental_points(lt: LieType, i: int) -> LatticePointSet:
    """All 0/1 chain vectors for the i-th fundamental weight, canonically sorted.

    A chain picks pairs (row_1, col_1), (row_2, col_2), ... with
    row_1 <= i <= col_1, rows strictly decreasing and columns strictly
    increasing in the column order, every pair a valid label.
    """
    n = lt.rank
    if not 1 <= i <= n:
        raise ValueError(f"fundamental index {i} out of range for rank {n}")
    idx = label_index(lt)
    cols = [entry for entry in all_columns(lt) if entry[0] >= i]
    out: set[ExponentVector] = set()
    vec = [0] * len(idx)

    def extend(row_bound: int, col_start: int) -> None:
        out.add(tuple(vec))
        for pos in range(col_start, len(cols)):
            _, col, barred = cols[pos]
            for row in range(1, min(row_bound, col) + 1):
                k = idx[RootLabel(row, col, barred)]
                vec[k] = 1
                extend(row - 1, pos + 1)
                vec[k] = 0

    extend(i, 0)
    pts = tuple(sorted(out))
    expected = weyl_dim(lt, tuple(1 if k == i - 1 else 0 for k in range(n)))
    if len(pts) != expected:
        raise VerificationError(
            "fflv.fundamental_cardinality",
            f"{lt} omega_{i}: {len(pts)} chain vectors, Weyl dimension {expected}",
        )
    return pts


@lru_cache(maxsize=None)
def points(lt: LieType, weight: tuple[int, ...]) -> LatticePointSet:
    """Lattice points for a dominant weight: Minkowski sums of fundamental sets.

    The coefficient a_i contributes a_i pointwise copies of the i-th
    fundamental set.  The result must have exactly the Weyl dimension many
    points; a mismatch would falsify the lattice-level Minkowski identity
    and raises immediately.
    """
    w = check_dominant(lt, weight)
    n_coords = len(build_labels(lt))
    current: set[ExponentVector] = {tuple([0] * n_coords)}
    for i, a in enumerate(w, start=1):
        for _ in range(a):
            fund = fundamental_points(lt, i)
            current = {
                tuple(x + y for x, y in zip(p, q)) for p in current for q in fund
            }
    pts = tuple(sorted(current))
    expected = weyl_dim(lt, w)
    if len(pts) != expected:
        raise VerificationError(
            "fflv.minkowski_cardinality",
            f"{lt} {w}: Minkowski sum has {len(pts)} points, Weyl dimension {expected}",
        )
    return pts


@lru_cache(maxsize=None)
def dyck_paths(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """All monotone label paths from a diagonal label (l,l) to a diagonal (j,j).

    Steps move (a,b) -> (a,b+1) or (a,b) -> (a+1,b) and stay inside the
    triangle a <= b <= n.
    """
    paths: list[tuple[tuple[int, int], ...]] = []

    def walk(a: int, b: int, j: int, acc: list[tuple[int, int]]) -> None:
        if a == j and b == j:
            paths.append(tuple(acc))
            return
        if b < j:
            acc.append((a, b + 1))
            walk(a, b + 1, j, acc)
            acc.pop()
        if a < b:
            acc.append((a + 1, b))
            walk(a + 1, b, j, acc)
            acc.pop()

    for l in range(1, n + 1):
        for j in range(l, n + 1):
            walk(l, l, j, [(l, l)])
    return tuple(paths)


def dyck_check_A(rank: int, weight: tuple[int, ...], pts: LatticePointSet) -> bool:
    """Cross-check a type-A point set against the path inequality system.

    True iff every point satisfies, for every path from (l,l) to (j,j), the
    bound sum over the path <= a_l + ... + a_j, and conversely every integer
    vector of the bounding box satisfying all the bounds belongs to the set.
    """
    lt = LieType("A", rank)
    w = check_dominant(lt, weight)
    idx = label_index(lt)
    systems = []
    for path in dyck_paths(rank):
        l, j = path[0][0], path[-1][1]
        rhs = sum(w[l - 1 : j])
        systems.append((tuple(idx[RootLabel(a, b)] for a, b in path), rhs))

    point_set = set(pts)
    for p in point_set:
        for support, rhs in systems:
            if sum(p[k] for k in support) > rhs:
                return False

    # box bound per label: the straight path through (a,b) alone
    bounds = [sum(w[lab.row - 1 : lab.col]) for lab in build_labels(lt)]
    for candidate in product(*(range(b + 1) for b in bounds)):
        ok = True
        for support, rhs in systems:
            if sum(candidate[k] for k in support) > rhs:
                ok = False
                break
        if ok and candidate not in point_set:
            return False
    return True


def embed_point_in_a(lt: LieType, p: ExponentVector) -> ExponentVector:
    """Re-index a type-C exponent vector into H(A_{2n-1}) coordinates.

    Every column goes to its column key, so barred columns land above n.
    """
    if lt.family != "C":
        raise ValueError("only type-C points embed")
    n = lt.rank
    target = LieType("A", 2 * n - 1)
    out = [0] * len(build_labels(target))
    tgt_idx = label_index(target)
    for x, lab in zip(p, build_labels(lt)):
        if x:
            out[tgt_idx[RootLabel(lab.row, column_key(lab, n))]] = x
    return tuple(out)
