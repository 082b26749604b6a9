"""Root-system bookkeeping shared by every other module.

All lattice points in this package are indexed by the set H(X_n) of
positive-root labels of a rank-n algebra of family A or C.  This module owns
those labels and their total order, the distinguished reduced word in the
rank-(2n-1) companion algebra whose letters the labels are aligned with,
exact weight arithmetic in both weight lattices, and the Weyl dimension
formula used as the cardinality oracle throughout.

Conventions:

* A label is a pair (row, col); ``barred`` marks the symplectic columns that
  only family C has.  Columns are ordered 1 < 2 < ... < n = n-bar <
  (n-1)-bar < ... < 1-bar, realized by the integer key ``col`` resp.
  ``2n - col`` (so the key of n-bar coincides with the key of n).
* Labels are ordered column-first, with rows compared in reverse inside a
  column.  ``build_labels`` returns the descending chain; that sequence is
  the basis all dense vectors and matrices in this package are written in.
* Weights live in simple-root coordinates as exact rationals.  Dominant
  weights enter as tuples of nonnegative fundamental-weight coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .exact import solve_linear

WeightVector = tuple[Fraction, ...]
ExponentVector = tuple[int, ...]


@dataclass(frozen=True)
class LieType:
    """Family (A or C) and rank of the algebra the lattice points belong to."""

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in ("A", "C"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.rank < 1:
            raise ValueError("rank must be a positive integer")

    @property
    def target_rank(self) -> int:
        """Rank 2n-1 of the companion algebra carrying the Demazure module."""
        return 2 * self.rank - 1

    @property
    def target_dim(self) -> int:
        """Dimension of the natural module the companion algebra acts on."""
        m = self.target_rank
        return m + 1 if self.family == "A" else 2 * m

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class RootLabel:
    """Index (row, col) of a positive root; ``barred`` marks column col-bar."""

    row: int
    col: int
    barred: bool = False

    def __str__(self) -> str:
        return f"({self.row},{self.col}{'~' if self.barred else ''})"


def column_key(label: RootLabel, n: int) -> int:
    """Position of the label's column in the order 1 < ... < n = n-bar < ... < 1-bar."""
    return 2 * n - label.col if label.barred else label.col


@lru_cache(maxsize=None)
def build_labels(lt: LieType) -> tuple[RootLabel, ...]:
    """All labels of H(X_n) in descending order (high columns first, rows ascending)."""
    n = lt.rank
    labels = [RootLabel(r, j) for j in range(1, n + 1) for r in range(1, j + 1)]
    if lt.family == "C":
        labels += [
            RootLabel(r, j, True) for j in range(1, n) for r in range(1, j + 1)
        ]
    labels.sort(key=lambda lab: (-column_key(lab, n), lab.row))
    expected = n * (n + 1) // 2 if lt.family == "A" else n * n
    assert len(labels) == expected
    return tuple(labels)


@lru_cache(maxsize=None)
def label_index(lt: LieType) -> Mapping[RootLabel, int]:
    """Label -> position in the descending chain of ``build_labels``."""
    return {lab: k for k, lab in enumerate(build_labels(lt))}


@lru_cache(maxsize=None)
def all_columns(lt: LieType) -> tuple[tuple[int, int, bool], ...]:
    """All (key, col, barred) column descriptors, ascending by key."""
    n = lt.rank
    cols = [(j, j, False) for j in range(1, n + 1)]
    if lt.family == "C":
        cols += [(2 * n - j, j, True) for j in range(1, n)]
    cols.sort()
    return tuple(cols)


def vector_from_labels(lt: LieType, assignment: Mapping[RootLabel, int]) -> ExponentVector:
    """Dense exponent vector from a {label: coefficient} mapping."""
    idx = label_index(lt)
    out = [0] * len(idx)
    for lab, c in assignment.items():
        if lab not in idx:
            raise ValueError(f"label {lab} is not in H({lt})")
        out[idx[lab]] = c
    return tuple(out)


def word_letter(label: RootLabel, n: int) -> int:
    """Simple-reflection index the label is aligned with in the reduced word."""
    return label.row + column_key(label, n) - 1


@lru_cache(maxsize=None)
def reduced_word(lt: LieType) -> tuple[int, ...]:
    """The distinguished reduced word in the rank-(2n-1) companion Weyl group.

    Family A uses the concatenation of the blocks s_j s_{j+1} ... s_{2j-1}
    for j = n down to 1; family C prepends the blocks s_j ... s_{2n-1}
    for j = 2n-1 down to n+1.  Position k of the word carries the k-th label
    of the descending chain, whose letter is row + column_key - 1.
    """
    n = lt.rank
    word: list[int] = []
    if lt.family == "C":
        for j in range(2 * n - 1, n, -1):
            word.extend(range(j, 2 * n))
    for j in range(n, 0, -1):
        word.extend(range(j, 2 * j))
    return tuple(word)


def word_is_reduced(lt: LieType) -> bool:
    """Check reducedness in the companion Weyl group via a permutation model.

    Family A multiplies out the word in the symmetric group and counts
    inversions; family C uses signed permutations and counts positive roots
    sent to negative ones.  The word is reduced iff that length equals the
    word length.
    """
    word = reduced_word(lt)
    m = lt.target_rank
    if lt.family == "A":
        perm = list(range(m + 1))
        for i in word:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
        inv = sum(
            1
            for a in range(m + 1)
            for b in range(a + 1, m + 1)
            if perm[a] > perm[b]
        )
        return inv == len(word)

    signed = list(range(1, m + 1))
    for i in word:
        if i == m:
            signed[m - 1] = -signed[m - 1]
        else:
            signed[i - 1], signed[i] = signed[i], signed[i - 1]

    def image(i: int) -> tuple[int, int]:
        v = signed[i - 1]
        return (abs(v), 1 if v > 0 else -1)

    sent_negative = 0
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            # roots e_i - e_j, e_i + e_j (i < j) and 2 e_i (i == j)
            pairs = ((1, -1), (1, 1)) if i < j else ((1, 1),)
            for ci, cj in pairs:
                (pi, si), (pj, sj) = image(i), image(j)
                coeff: dict[int, int] = {}
                coeff[pi] = coeff.get(pi, 0) + ci * si
                coeff[pj] = coeff.get(pj, 0) + cj * sj
                entries = sorted((p, c) for p, c in coeff.items() if c != 0)
                if entries and entries[0][1] < 0:
                    sent_negative += 1
    return sent_negative == len(word)


def root_expansion(lt: LieType, label: RootLabel) -> tuple[int, ...]:
    """Coefficients of the positive root alpha_{row,col} over the simple roots."""
    n = lt.rank
    r, j = label.row, label.col
    coeff = [0] * n
    if not label.barred:
        for c in range(r, j + 1):
            coeff[c - 1] = 1
    else:
        # alpha_r + ... + alpha_{j-1} + 2(alpha_j + ... + alpha_{n-1}) + alpha_n
        for c in range(r, j):
            coeff[c - 1] = 1
        for c in range(j, n):
            coeff[c - 1] = 2
        coeff[n - 1] = 1
    return tuple(coeff)


@lru_cache(maxsize=None)
def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix M[i][j] = <alpha_{j+1}, alpha_{i+1}^vee> (0-based)."""
    m = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        m[i][i] = 2
        if i > 0:
            m[i][i - 1] = -1
        if i < rank - 1:
            m[i][i + 1] = -1
    if family == "C" and rank >= 2:
        m[rank - 2][rank - 1] = -2
    return tuple(tuple(row) for row in m)


@lru_cache(maxsize=None)
def fundamental_weight_roots(family: str, rank: int, k: int) -> WeightVector:
    """The k-th fundamental weight in simple-root coordinates (exact rationals)."""
    if not 1 <= k <= rank:
        raise ValueError(f"fundamental index {k} out of range for rank {rank}")
    m = cartan_matrix(family, rank)
    rhs = [1 if i == k - 1 else 0 for i in range(rank)]
    res = solve_linear(m, rhs)
    assert res is not None
    return tuple(res[0])


def weight_roots(family: str, rank: int, coeffs: Sequence[int]) -> WeightVector:
    """Simple-root coordinates of sum_i coeffs[i] * omega_{i+1}."""
    if len(coeffs) != rank:
        raise ValueError("coefficient vector length must equal the rank")
    out = [Fraction(0)] * rank
    for i, a in enumerate(coeffs, start=1):
        if a:
            w = fundamental_weight_roots(family, rank, i)
            out = [x + a * y for x, y in zip(out, w)]
    return tuple(out)


def check_dominant(lt: LieType, weight: Sequence[int]) -> tuple[int, ...]:
    """Validate and normalize a dominant weight given by fundamental coefficients."""
    w = tuple(int(a) for a in weight)
    if len(w) != lt.rank:
        raise ValueError(f"weight must have {lt.rank} coefficients, got {len(w)}")
    if any(a < 0 for a in w):
        raise ValueError("dominant weight coefficients must be nonnegative")
    return w


def lifted_coeffs(lt: LieType, weight: Sequence[int]) -> tuple[int, ...]:
    """Fundamental coefficients of the lifted weight in the rank-(2n-1) lattice.

    Coefficient a_i of omega_i moves to position 2i-1.
    """
    w = check_dominant(lt, weight)
    out = [0] * lt.target_rank
    for i, a in enumerate(w, start=1):
        out[2 * i - 2] = a
    return tuple(out)


def lifted_weight_roots(lt: LieType, weight: Sequence[int]) -> WeightVector:
    """Simple-root coordinates of the lifted weight in the companion lattice."""
    return weight_roots(lt.family, lt.target_rank, lifted_coeffs(lt, weight))


def weyl_dim(lt: LieType, weight: Sequence[int]) -> int:
    """Dimension of the rank-n simple module, by the Weyl product formula."""
    w = check_dominant(lt, weight)
    n = lt.rank
    mu = [sum(w[k:]) for k in range(n)]
    num = den = 1
    if lt.family == "A":
        v = [mu[k] + (n - k) for k in range(n)] + [0]
        rho = [n - k for k in range(n)] + [0]
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                num *= v[i] - v[j]
                den *= rho[i] - rho[j]
    else:
        v = [mu[k] + (n - k) for k in range(n)]
        rho = [n - k for k in range(n)]
        for i in range(n):
            num *= v[i]
            den *= rho[i]
            for j in range(i + 1, n):
                num *= (v[i] - v[j]) * (v[i] + v[j])
                den *= (rho[i] - rho[j]) * (rho[i] + rho[j])
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def fflv_weight(lt: LieType, weight: Sequence[int], p: Sequence[int]) -> WeightVector:
    """Weight of the exponent vector p in the source lattice: lambda - sum p * alpha."""
    labels = build_labels(lt)
    if len(p) != len(labels):
        raise ValueError(f"exponent vector must have length {len(labels)}")
    out = list(weight_roots(lt.family, lt.rank, check_dominant(lt, weight)))
    for x, lab in zip(p, labels):
        if x:
            for c, e in enumerate(root_expansion(lt, lab)):
                out[c] -= x * e
    return tuple(out)


def string_weight(lt: LieType, weight: Sequence[int], q: Sequence[int]) -> WeightVector:
    """Weight of the word monomial with exponents q, in the companion lattice."""
    word = reduced_word(lt)
    if len(q) != len(word):
        raise ValueError(f"string vector must have length {len(word)}")
    out = list(lifted_weight_roots(lt, weight))
    for x, letter in zip(q, word):
        out[letter - 1] -= x
    return tuple(out)


def reflect_simple(family: str, rank: int, i: int, mu: WeightVector) -> WeightVector:
    """Simple reflection s_i on a weight in simple-root coordinates."""
    m = cartan_matrix(family, rank)
    pairing = sum(m[i - 1][j] * mu[j] for j in range(rank))
    out = list(mu)
    out[i - 1] -= pairing
    return tuple(out)


def apply_word(
    family: str, rank: int, word: Sequence[int], mu: WeightVector
) -> WeightVector:
    """Apply s_{i_1} ... s_{i_k} to mu (rightmost reflection acts first)."""
    for i in reversed(word):
        mu = reflect_simple(family, rank, i, mu)
    return mu


def dominant_weights(rank: int, max_level: int) -> Iterator[tuple[int, ...]]:
    """All dominant weights with coefficient sum <= max_level, deterministically.

    Ordered by level, then lexicographically.
    """
    def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
        if parts == 1:
            yield (total,)
            return
        for head in range(total + 1):
            for tail in compositions(total - head, parts - 1):
                yield (head,) + tail

    for level in range(max_level + 1):
        yield from sorted(compositions(level, rank))
