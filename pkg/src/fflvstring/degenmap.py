"""The affine lattice map between the two point families.

The linear part is an N x N integer matrix in the descending label basis
with entries in {0,-1} (family A) resp. {0,-1,-2} (family C) and
determinant of absolute value 1; the translation part depends linearly on
the dominant weight.  This module also houses the fold/unfold coordinate
correspondences between a symplectic rank m and a special-linear rank 2m-1,
and the exact affine solver for the weight twist.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import VerificationError
from .exact import det_int, solve_linear
from .rootsys import (
    ExponentVector,
    LieType,
    RootLabel,
    all_columns,
    build_labels,
    check_dominant,
    column_key,
    label_index,
)


@lru_cache(maxsize=None)
def build_matrix(lt: LieType) -> tuple[tuple[int, ...], ...]:
    """Matrix of the linear part in the descending label basis.

    Family A sends e_{a,b} to -(sum of e_{a,c} for c from b to n, plus
    e_{c,b} for c < a).  Family C sends e_{a,b} to -(sum of e_{a,c} for
    columns c from b up to a-bar in the column order, plus e_{c,b} + e_{c,a-bar}
    for c < a); when b equals a-bar the two lower sums coincide and produce
    the -2 entries.  Unimodularity and the entry range are enforced here.
    """
    n = lt.rank
    labels = build_labels(lt)
    idx = label_index(lt)
    size = len(labels)
    mat = [[0] * size for _ in range(size)]

    for col_pos, lab in enumerate(labels):
        a, b_col, b_barred = lab.row, lab.col, lab.barred
        if lt.family == "A":
            for c in range(b_col, n + 1):
                mat[idx[RootLabel(a, c)]][col_pos] -= 1
            for c in range(1, a):
                mat[idx[RootLabel(c, b_col)]][col_pos] -= 1
        else:
            abar_col, abar_barred = (a, True) if a < n else (n, False)
            key_b = column_key(lab, n)
            key_abar = 2 * n - a
            for key, col, barred in all_columns(lt):
                if key_b <= key <= key_abar:
                    mat[idx[RootLabel(a, col, barred)]][col_pos] -= 1
            for c in range(1, a):
                mat[idx[RootLabel(c, b_col, b_barred)]][col_pos] -= 1
                mat[idx[RootLabel(c, abar_col, abar_barred)]][col_pos] -= 1

    allowed = {0, -1} if lt.family == "A" else {0, -1, -2}
    bad = {x for row in mat for x in row} - allowed
    if bad:
        raise VerificationError(
            "degenmap.entry_range", f"{lt}: entries {sorted(bad)} outside {sorted(allowed)}"
        )
    det = det_int(mat)
    if det not in (1, -1):
        raise VerificationError("degenmap.unimodular", f"{lt}: determinant {det}")
    return tuple(tuple(row) for row in mat)


def _translation_coefficient_A(n: int, i: int, lab: RootLabel) -> int:
    return 1 if lab.col >= i and lab.row <= i else 0


def _translation_coefficient_C(n: int, i: int, lab: RootLabel) -> int:
    kj = column_key(lab, n)
    ki = i
    ki_bar = 2 * n - i
    kl_bar = 2 * n - lab.row
    if ki <= kj < ki_bar and lab.row <= i:
        return 1
    if kl_bar == kj and lab.row <= i:
        return 1
    if kl_bar > kj and ki_bar <= kj:
        return 2
    return 0


@lru_cache(maxsize=None)
def fundamental_translation(lt: LieType, i: int) -> ExponentVector:
    """Translation vector for the i-th fundamental weight."""
    if not 1 <= i <= lt.rank:
        raise ValueError(f"fundamental index {i} out of range")
    coeff = (
        _translation_coefficient_A if lt.family == "A" else _translation_coefficient_C
    )
    return tuple(coeff(lt.rank, i, lab) for lab in build_labels(lt))


def build_translation(lt: LieType, weight: Sequence[int]) -> ExponentVector:
    """Translation vector for a dominant weight, linear in the weight."""
    w = check_dominant(lt, weight)
    out = [0] * len(build_labels(lt))
    for i, a in enumerate(w, start=1):
        if a:
            t = fundamental_translation(lt, i)
            out = [x + a * y for x, y in zip(out, t)]
    return tuple(out)


def apply_affine(
    matrix: Sequence[Sequence[int]], translation: Sequence[int], p: Sequence[int]
) -> ExponentVector:
    """translation + matrix * p over the integers."""
    return tuple(
        t + sum(row[k] * p[k] for k in range(len(p)))
        for t, row in zip(translation, matrix)
    )


def apply_T(
    lt: LieType, weight, p: Sequence[int], expect_nonnegative: bool = False
) -> ExponentVector:
    """Image of an exponent vector under the affine map for this weight.

    With ``expect_nonnegative`` the caller asserts p is a verified chain
    point, whose image must land in the nonnegative orthant; a negative
    entry is then a hard failure.
    """
    w = check_dominant(lt, weight)
    labels = build_labels(lt)
    if len(p) != len(labels):
        raise ValueError(f"exponent vector must have length {len(labels)}")
    image = apply_affine(build_matrix(lt), build_translation(lt, w), p)
    if expect_nonnegative and any(x < 0 for x in image):
        raise VerificationError(
            "degenmap.nonnegative_image",
            f"{lt} {w}: image {image} of {tuple(p)} has a negative entry",
        )
    return image


def fold_label(row: int, col: int, m: int) -> RootLabel:
    """Fold a label of H(A_{2m-1}) onto H(C_m).

    Labels with row + col <= 2m keep their coordinates (columns above m
    read as barred columns 2m - col); the rest reflect to
    (2m - col, 2m - row).
    """
    if not 1 <= row <= col <= 2 * m - 1:
        raise ValueError(f"({row},{col}) is not a label of H(A_{2 * m - 1})")
    if row + col > 2 * m:
        row, col = 2 * m - col, 2 * m - row
    if col <= m:
        return RootLabel(row, col)
    return RootLabel(row, 2 * m - col, True)


def fold_vector(vec: Sequence[int], m: int) -> ExponentVector:
    """Fold a dense H(A_{2m-1}) exponent vector onto H(C_m), summing fibers."""
    src = LieType("A", 2 * m - 1)
    dst = LieType("C", m)
    src_labels = build_labels(src)
    if len(vec) != len(src_labels):
        raise ValueError(f"vector must have length {len(src_labels)}")
    out = [0] * len(build_labels(dst))
    dst_idx = label_index(dst)
    for x, lab in zip(vec, src_labels):
        if x:
            out[dst_idx[fold_label(lab.row, lab.col, m)]] += x
    return tuple(out)


def unfold_letter(j: int, m: int) -> tuple[int, ...]:
    """Special-linear operator indices a symplectic rank-m generator unfolds to.

    Generator j < m becomes the pair {j, 2m-j} of A_{2m-1} letters, the long
    generator m stays single.
    """
    if not 1 <= j <= m:
        raise ValueError(f"letter {j} out of range for rank {m}")
    if j == m:
        return (m,)
    return (j, 2 * m - j)


@dataclass(frozen=True)
class WeightTwist:
    """Affine restriction from companion weights to source weights.

    The companion torus has rank 2n-1 and refines the rank-n source torus,
    so the weight of a mapped point determines the source weight of its
    preimage: source = matrix * companion + shift, exactly.  The reverse
    direction is not a function of the source weight whenever a weight
    multiplicity exceeds one.
    """

    matrix: tuple[tuple[Fraction, ...], ...]
    shift: tuple[Fraction, ...]
    unique: bool

    def apply(self, companion: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(
            sum(a * x for a, x in zip(row, companion)) + s
            for row, s in zip(self.matrix, self.shift)
        )


def weight_twist_solve(lt: LieType, weight, pairs):
    """One affine map fitting every (source weight, companion weight) pair.

    Solves for the restriction twist * companion_weight + shift =
    source_weight across all pairs at once.  Returns ``(twist, None)`` on
    success or ``(None, witness_pair)`` when no single affine map fits; the
    witness is the first pair that breaks consistency.
    """
    check_dominant(lt, weight)
    uniq = list(dict.fromkeys((tuple(s), tuple(t)) for s, t in pairs))
    if not uniq:
        raise ValueError("at least one weight pair is required")
    n = lt.rank
    m = lt.target_rank
    rows = [list(tgt) + [Fraction(1)] for _, tgt in uniq]
    matrix: list[tuple[Fraction, ...]] = []
    shift: list[Fraction] = []
    unique = True
    for r in range(n):
        rhs = [src[r] for src, _ in uniq]
        res = solve_linear(rows, rhs)
        if res is None:
            return None, _first_breaking_pair(uniq, r)
        sol, rank = res
        matrix.append(tuple(sol[:m]))
        shift.append(sol[m])
        if rank < m + 1:
            unique = False
    twist = WeightTwist(tuple(matrix), tuple(shift), unique)
    for src, tgt in uniq:
        if twist.apply(tgt) != src:
            return None, (src, tgt)
    return twist, None


def _first_breaking_pair(uniq, coord):
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    for src, tgt in uniq:
        rows.append(list(tgt) + [Fraction(1)])
        rhs.append(src[coord])
        if solve_linear(rows, rhs) is None:
            return (src, tgt)
    raise AssertionError("inconsistent system had no breaking pair")
