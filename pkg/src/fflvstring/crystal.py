"""Demazure crystals inside tensor powers of the vector crystal.

The companion algebra of rank m = 2n-1 acts through its vector crystal:
letters 1..m+1 for family A, letters 1..2m for family C (reading
1 < ... < m < m-bar < ... < 1-bar).  Tensor words are plain tuples of
letters; the bracketing rule computes the partial lowering and raising
operators, a saturation pass along the reduced word produces the Demazure
crystal, and greedy raising extracts string vectors.

Two binary conventions are not forced by the construction itself: the scan
direction of the bracketing rule and the composition order of the
saturation.  Both are module constants; the configured pair is the one that
passes the dimension gates (see tests), the alternative pair fails them.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import VerificationError
from .rootsys import (
    ExponentVector,
    LieType,
    check_dominant,
    lifted_coeffs,
    lifted_weight_roots,
    reduced_word,
    weyl_dim,
)

# Bracketing scan direction and saturation order along the word.  The
# dimension gate fixes both; flipping either breaks it.
SIGNATURE_REVERSED = False
CLOSURE_REVERSED = False

TensorWord = tuple[int, ...]


class VectorCrystal:
    """Letters of the natural-module crystal with partial raising/lowering.

    For family A the lowering operator with index j moves letter j to j+1.
    For family C it moves letters j and 2m-j to their successors, which in
    bar notation is j -> j+1 and (j+1)-bar -> j-bar (and m -> m-bar for
    j = m, where the two indices coincide).
    """

    def __init__(self, family: str, rank: int):
        if family not in ("A", "C"):
            raise ValueError(f"unknown family {family!r}")
        if rank < 1:
            raise ValueError("rank must be positive")
        self.family = family
        self.rank = rank
        self.size = rank + 1 if family == "A" else 2 * rank

    def letters(self) -> range:
        return range(1, self.size + 1)

    def _movers(self, j: int) -> tuple[int, ...]:
        if not 1 <= j <= self.rank:
            raise ValueError(f"operator index {j} out of range")
        if self.family == "A":
            return (j,)
        other = 2 * self.rank - j
        return (j,) if other == j else (j, other)

    def f(self, j: int, letter: int) -> int | None:
        """Lower a single letter, or None."""
        return letter + 1 if letter in self._movers(j) else None

    def e(self, j: int, letter: int) -> int | None:
        """Raise a single letter, or None."""
        return letter - 1 if letter - 1 in self._movers(j) else None

    def letter_name(self, letter: int) -> str:
        if self.family == "A" or letter <= self.rank:
            return str(letter)
        return f"{2 * self.rank + 1 - letter}~"


def _surviving(crystal: VectorCrystal, j: int, word: TensorWord):
    """Unmatched lowering/raising positions after bracket cancellation.

    Returns (plus, minus): positions whose letters can be raised resp.
    lowered, in scan order, after cancelling every raise that immediately
    follows a lower.
    """
    positions = list(enumerate(word))
    if SIGNATURE_REVERSED:
        positions.reverse()
    stack: list[tuple[int, bool]] = []  # (position, is_lowerable)
    for pos, letter in positions:
        if crystal.f(j, letter) is not None:
            stack.append((pos, True))
        elif crystal.e(j, letter) is not None:
            if stack and stack[-1][1]:
                stack.pop()
            else:
                stack.append((pos, False))
    plus = [pos for pos, low in stack if not low]
    minus = [pos for pos, low in stack if low]
    return plus, minus


def tensor_f(crystal: VectorCrystal, j: int, word: TensorWord) -> TensorWord | None:
    """Lowering operator on a tensor word (leftmost unmatched lower), or None."""
    _, minus = _surviving(crystal, j, word)
    if not minus:
        return None
    pos = minus[0]
    new = crystal.f(j, word[pos])
    assert new is not None
    return word[:pos] + (new,) + word[pos + 1 :]


def tensor_e(crystal: VectorCrystal, j: int, word: TensorWord) -> TensorWord | None:
    """Raising operator on a tensor word (rightmost unmatched raise), or None."""
    plus, _ = _surviving(crystal, j, word)
    if not plus:
        return None
    pos = plus[-1]
    new = crystal.e(j, word[pos])
    assert new is not None
    return word[:pos] + (new,) + word[pos + 1 :]


def is_highest(crystal: VectorCrystal, word: TensorWord) -> bool:
    """True iff every raising operator kills the word."""
    return all(
        tensor_e(crystal, j, word) is None for j in range(1, crystal.rank + 1)
    )


def build_highest(lt: LieType, weight) -> TensorWord:
    """Highest-weight tensor word for the lifted weight.

    Concatenates, for each i with a_i > 0, a_i copies of the column word
    1, 2, ..., 2i-1.
    """
    w = check_dominant(lt, weight)
    word: list[int] = []
    for i, a in enumerate(w, start=1):
        word.extend(list(range(1, 2 * i)) * a)
    return tuple(word)


@lru_cache(maxsize=None)
def demazure_set(lt: LieType, weight: tuple[int, ...]) -> tuple[TensorWord, ...]:
    """Saturation of the highest-weight word along the reduced word.

    Walking the word right to left, each letter j replaces the current set S
    by { f_j^k(b) : b in S, k >= 0 }.  The result must have exactly as many
    elements as the source module has dimensions; a mismatch is a hard
    failure.
    """
    w = check_dominant(lt, weight)
    crystal = VectorCrystal(lt.family, lt.target_rank)
    current: set[TensorWord] = {build_highest(lt, w)}
    letters = reduced_word(lt)
    order = letters if CLOSURE_REVERSED else tuple(reversed(letters))
    for j in order:
        grown = set(current)
        for b in current:
            x = b
            while (x := tensor_f(crystal, j, x)) is not None:
                grown.add(x)
        current = grown
    expected = weyl_dim(lt, w)
    if len(current) != expected:
        raise VerificationError(
            "crystal.demazure_dimension",
            f"{lt} {w}: closure has {len(current)} elements, expected {expected}",
        )
    return tuple(sorted(current))


def extract_string(
    crystal: VectorCrystal, b: TensorWord, word: tuple[int, ...]
) -> ExponentVector:
    """Greedy raising along the word; the element must end highest-weight."""
    q: list[int] = []
    for j in word:
        k = 0
        while (nb := tensor_e(crystal, j, b)) is not None:
            b = nb
            k += 1
        q.append(k)
    if not is_highest(crystal, b):
        raise ValueError(
            f"element {b} is not a Demazure element for word {tuple(word)}"
        )
    return tuple(q)


@lru_cache(maxsize=None)
def string_points(lt: LieType, weight: tuple[int, ...]) -> tuple[ExponentVector, ...]:
    """String vectors of the Demazure crystal, as a canonical point set.

    Extraction must be injective; two elements colliding on one string
    vector is a hard failure.
    """
    w = check_dominant(lt, weight)
    crystal = VectorCrystal(lt.family, lt.target_rank)
    word = reduced_word(lt)
    seen: dict[ExponentVector, TensorWord] = {}
    for b in demazure_set(lt, w):
        q = extract_string(crystal, b, word)
        if q in seen:
            raise VerificationError(
                "crystal.string_injectivity",
                f"{lt} {w}: elements {seen[q]} and {b} share string vector {q}",
            )
        seen[q] = b
    return tuple(sorted(seen))


def extremal_element(lt: LieType, weight) -> TensorWord:
    """Full lowering saturation of the highest word along the reduced word."""
    w = check_dominant(lt, weight)
    crystal = VectorCrystal(lt.family, lt.target_rank)
    b = build_highest(lt, w)
    for j in reversed(reduced_word(lt)):
        while (nb := tensor_f(crystal, j, b)) is not None:
            b = nb
    return b


def element_weight_roots(lt: LieType, weight, b: TensorWord):
    """Weight of a tensor word in simple-root coordinates of the companion lattice.

    Computed from letter counts: the defect of b against the highest word
    lies in the root lattice and converts exactly.
    """
    w = check_dominant(lt, weight)
    m = lt.target_rank
    coeffs = lifted_coeffs(lt, w)
    if lt.family == "A":
        top = [0] * (m + 1)
        wt = [0] * (m + 1)
        for k, a in enumerate(coeffs, start=1):
            for t in range(k):
                top[t] += a
        for letter in b:
            wt[letter - 1] += 1
        delta = [x - y for x, y in zip(top, wt)]
        assert sum(delta) == 0
        delta_roots = [Fraction(sum(delta[:k])) for k in range(1, m + 1)]
    else:
        top = [0] * m
        wt = [0] * m
        for k, a in enumerate(coeffs, start=1):
            for t in range(k):
                top[t] += a
        for letter in b:
            if letter <= m:
                wt[letter - 1] += 1
            else:
                wt[2 * m - letter] -= 1
        delta = [x - y for x, y in zip(top, wt)]
        delta_roots = [Fraction(sum(delta[:k])) for k in range(1, m)]
        delta_roots.append(Fraction(sum(delta), 2))
    lifted = lifted_weight_roots(lt, w)
    return tuple(x - d for x, d in zip(lifted, delta_roots))
