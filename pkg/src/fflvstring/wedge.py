"""Independent oracle: exact lowering-operator actions on exterior powers.

Wedge vectors are sparse maps from strictly increasing index tuples to exact
rationals.  For family A the generator with index j is the elementary
lowering e_j -> e_{j+1} on the natural module of the companion algebra; for
family C it is the unfolded pair e_j -> e_{j+1}, e_{2m-j} -> e_{2m-j+1} on
the reordered natural module, so both families act through the same
elementary step.  On top of the action sit the proportionality test, the
non-annihilation and minimality checks, and the fully independent
reconstruction of the type-A string points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable, Mapping, Sequence

from .degenmap import apply_T
from .fflv import fundamental_points
from .rootsys import (
    ExponentVector,
    LieType,
    RootLabel,
    build_labels,
    label_index,
    reduced_word,
    word_letter,
)

WedgeVector = dict[tuple[int, ...], Fraction]


def wedge_basis(indices: Iterable[int]) -> WedgeVector:
    """Basis wedge for a strictly increasing index tuple."""
    t = tuple(indices)
    if list(t) != sorted(set(t)):
        raise ValueError(f"indices {t} are not strictly increasing")
    return {t: Fraction(1)}


def highest_wedge(k: int) -> WedgeVector:
    """The wedge of the first k basis vectors."""
    return wedge_basis(range(1, k + 1))


def is_zero(v: WedgeVector) -> bool:
    return not v


def _add_term(acc: WedgeVector, key: tuple[int, ...], coeff: Fraction) -> None:
    new = acc.get(key, Fraction(0)) + coeff
    if new:
        acc[key] = new
    else:
        acc.pop(key, None)


def act_elementary(t: int, v: WedgeVector, dim: int) -> WedgeVector:
    """Leibniz action of the lowering step e_t -> e_{t+1} on a wedge vector."""
    if not 1 <= t < dim:
        raise ValueError(f"step index {t} out of range for dimension {dim}")
    out: WedgeVector = {}
    for key, coeff in v.items():
        for pos, idx in enumerate(key):
            if idx != t:
                continue
            if t + 1 in key:
                continue  # repeated factor vanishes
            new_key = key[:pos] + (t + 1,) + key[pos + 1 :]
            # t+1 slots into the same position, so no sign is picked up
            _add_term(out, new_key, coeff)
    return out


def act_simple(j: int, v: WedgeVector, family: str, rank: int) -> WedgeVector:
    """Action of the rank-``rank`` generator with index j on a wedge vector.

    Family A acts on the (rank+1)-dimensional natural module, family C on
    the 2*rank-dimensional one through the unfolded operator.
    """
    if family == "A":
        if not 1 <= j <= rank:
            raise ValueError(f"operator index {j} out of range")
        return act_elementary(j, v, rank + 1)
    if not 1 <= j <= rank:
        raise ValueError(f"operator index {j} out of range")
    dim = 2 * rank
    out = act_elementary(j, v, dim)
    other = 2 * rank - j
    if other != j:
        second = act_elementary(other, v, dim)
        for key, coeff in second.items():
            _add_term(out, key, coeff)
    return out


def act_sequence(
    ops: Sequence[int], v: WedgeVector, family: str, rank: int
) -> WedgeVector:
    """Apply a written product of generators, rightmost factor first."""
    for j in reversed(ops):
        if is_zero(v):
            return {}
        v = act_simple(j, v, family, rank)
    return v


def monomial_ops(lt: LieType, x: Sequence[int]) -> tuple[int, ...]:
    """Expand a word-aligned exponent vector into its written generator sequence."""
    word = reduced_word(lt)
    if len(x) != len(word):
        raise ValueError(f"exponent vector must have length {len(word)}")
    ops: list[int] = []
    for letter, e in zip(word, x):
        ops.extend([letter] * e)
    return tuple(ops)


def act_monomial(lt: LieType, x: Sequence[int], v: WedgeVector) -> WedgeVector:
    """Action of the word monomial with exponents x on a wedge vector."""
    return act_sequence(monomial_ops(lt, x), v, lt.family, lt.target_rank)


def proportionality_ratio(f: WedgeVector, g: WedgeVector) -> Fraction | None:
    """The scalar r with r*f = g, or None if the two are not proportional.

    Both zero yields 1 by convention; exactly one zero yields None.
    """
    if is_zero(f) and is_zero(g):
        return Fraction(1)
    if is_zero(f) or is_zero(g):
        return None
    if set(f) != set(g):
        return None
    keys = iter(f)
    first = next(keys)
    r = g[first] / f[first]
    for key in keys:
        if f[key] * r != g[key]:
            return None
    return r


def sim_scalar_ops(
    ops_x: Sequence[int], ops_y: Sequence[int], i: int, family: str, rank: int
) -> Fraction | None:
    """One scalar r with r * x(v) = y(v) on every basis wedge, or None."""
    dim = rank + 1 if family == "A" else 2 * rank
    r: Fraction | None = None
    for base in combinations(range(1, dim + 1), i):
        fx = act_sequence(ops_x, wedge_basis(base), family, rank)
        fy = act_sequence(ops_y, wedge_basis(base), family, rank)
        if is_zero(fx) and is_zero(fy):
            continue
        ratio = proportionality_ratio(fx, fy)
        if ratio is None:
            return None
        if r is None:
            r = ratio
        elif r != ratio:
            return None
    return Fraction(1) if r is None else r


def sim_check_ops(
    ops_x: Sequence[int], ops_y: Sequence[int], i: int, family: str, rank: int
) -> bool:
    """Equivalence of two generator products on the i-th exterior power.

    Requires one shared positive rational scalar on every basis wedge;
    sign-mismatched proportionality does not count.
    """
    r = sim_scalar_ops(ops_x, ops_y, i, family, rank)
    return r is not None and r > 0


def sim_check(lt: LieType, x: Sequence[int], y: Sequence[int], i: int) -> bool:
    """Equivalence of two word-aligned monomials on the i-th exterior power."""
    return sim_check_ops(
        monomial_ops(lt, x), monomial_ops(lt, y), i, lt.family, lt.target_rank
    )


def nonannihilation_check(lt: LieType, i: int, p: Sequence[int]) -> bool:
    """True iff the mapped chain point acts nonzero on the highest wedge."""
    weight = tuple(1 if k == i - 1 else 0 for k in range(lt.rank))
    image = apply_T(lt, weight, p, expect_nonnegative=True)
    result = act_monomial(lt, image, highest_wedge(2 * i - 1))
    return not is_zero(result)


@lru_cache(maxsize=None)
def restriction_block(lt: LieType, i: int) -> tuple[int, ...]:
    """Word positions of the labels with row <= i <= col (type A only)."""
    if lt.family != "A":
        raise ValueError("the restriction block is a type-A notion")
    return tuple(
        k
        for k, lab in enumerate(build_labels(lt))
        if lab.row <= i <= lab.col
    )


def _letter_histogram(lt: LieType, x: Sequence[int]) -> tuple[int, ...]:
    word = reduced_word(lt)
    counts = [0] * (lt.target_rank + 1)
    for letter, e in zip(word, x):
        counts[letter] += e
    return tuple(counts[1:])


def _neglex_min(vectors: Iterable[ExponentVector]) -> ExponentVector:
    """Smallest vector in the order where a larger first differing entry wins."""
    return max(vectors)


def minimality_check_A(lt: LieType, i: int, p: Sequence[int]) -> bool:
    """True iff the mapped point is the smallest nonzero actor of its weight.

    Sweeps all 0/1 exponent vectors on the restriction block with the same
    letter histogram as the image of p and requires the image to act nonzero
    and to be the minimum in the negative lexicographic order.
    """
    if lt.family != "A":
        raise ValueError("minimality sweep is implemented for type A only")
    weight = tuple(1 if k == i - 1 else 0 for k in range(lt.rank))
    image = apply_T(lt, weight, p, expect_nonnegative=True)
    v = highest_wedge(2 * i - 1)
    if is_zero(act_monomial(lt, image, v)):
        return False
    target_hist = _letter_histogram(lt, image)
    block = restriction_block(lt, i)
    size = len(build_labels(lt))
    candidates = []
    for bits in product((0, 1), repeat=len(block)):
        x = [0] * size
        for k, bit in zip(block, bits):
            x[k] = bit
        x = tuple(x)
        if _letter_histogram(lt, x) != target_hist:
            continue
        if is_zero(act_monomial(lt, x, v)):
            continue
        candidates.append(x)
    return tuple(image) == _neglex_min(candidates)


def oracle_string_points_A(lt: LieType, i: int) -> tuple[ExponentVector, ...]:
    """Type-A string points rebuilt from the wedge action alone.

    Enumerates all 0/1 monomials on the restriction block, groups them by
    letter histogram (the weight class), and keeps the neglex-minimal
    nonzero actor of each class.  Completely independent of the crystal
    construction.
    """
    if lt.family != "A":
        raise ValueError("the oracle is a type-A construction")
    if not 1 <= i <= lt.rank:
        raise ValueError(f"fundamental index {i} out of range")
    v = highest_wedge(2 * i - 1)
    block = restriction_block(lt, i)
    size = len(build_labels(lt))
    classes: dict[tuple[int, ...], list[ExponentVector]] = {}
    for bits in product((0, 1), repeat=len(block)):
        x = [0] * size
        for k, bit in zip(block, bits):
            x[k] = bit
        x = tuple(x)
        if is_zero(act_monomial(lt, x, v)):
            continue
        classes.setdefault(_letter_histogram(lt, x), []).append(x)
    return tuple(sorted(_neglex_min(group) for group in classes.values()))


def unfold_dominates(a_vec: Sequence[int], m: int, wedge_power: int) -> bool:
    """Summand containment of an A-monomial action inside the folded C-action.

    ``a_vec`` is a dense exponent vector on H(A_{2m-1}).  Acting on every
    basis wedge of the given exterior power of the shared 4m-2 dimensional
    module, the coefficients of the A-action must be dominated entrywise by
    those of the folded C-monomial's (unfolded) action.
    """
    from .degenmap import fold_vector

    src = LieType("A", 2 * m - 1)
    dst = LieType("C", m)
    folded = fold_vector(a_vec, m)
    dim = src.target_dim
    assert dim == dst.target_dim
    for base in combinations(range(1, dim + 1), wedge_power):
        va = act_monomial(src, a_vec, wedge_basis(base))
        vc = act_monomial(dst, folded, wedge_basis(base))
        for key, coeff in va.items():
            if vc.get(key, Fraction(0)) < coeff:
                return False
    return True


def fundamental_nonannihilation_sweep(lt: LieType, i: int) -> bool:
    """Every fundamental chain point must act nonzero after mapping."""
    return all(nonannihilation_check(lt, i, p) for p in fundamental_points(lt, i))
