"""Independent test oracles: dimension counts that share no code with the package.

Two routes: triangular-pattern enumeration for family A and Freudenthal's
multiplicity recursion for both families.  Everything is exact integer
arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def gt_dim(coeffs: tuple[int, ...]) -> int:
    """Family-A dimension by counting interlacing triangular patterns."""
    n = len(coeffs)
    top = tuple(sum(coeffs[k:]) for k in range(n)) + (0,)

    @lru_cache(maxsize=None)
    def count(row: tuple[int, ...]) -> int:
        if len(row) == 1:
            return 1
        total = 0
        ranges = [range(row[i + 1], row[i] + 1) for i in range(len(row) - 1)]
        for nxt in product(*ranges):
            total += count(nxt)
        return total

    return count(top)


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _root_data(family: str, rank: int):
    n = rank
    if family == "A":
        dim = n + 1
        def unit(i):
            return tuple(1 if t == i else 0 for t in range(dim))
        simple = [
            tuple(a - b for a, b in zip(unit(i), unit(i + 1))) for i in range(n)
        ]
        positive = []
        for i in range(dim):
            for j in range(i + 1, dim):
                positive.append(tuple(a - b for a, b in zip(unit(i), unit(j))))
        rho = tuple(n - k for k in range(dim))
    else:
        dim = n
        def unit(i):
            return tuple(1 if t == i else 0 for t in range(dim))
        simple = [
            tuple(a - b for a, b in zip(unit(i), unit(i + 1)))
            for i in range(n - 1)
        ]
        simple.append(tuple(2 * x for x in unit(n - 1)))
        positive = []
        for i in range(dim):
            positive.append(tuple(2 * x for x in unit(i)))
            for j in range(i + 1, dim):
                positive.append(tuple(a - b for a, b in zip(unit(i), unit(j))))
                positive.append(tuple(a + b for a, b in zip(unit(i), unit(j))))
        rho = tuple(n - k for k in range(dim))
    return simple, positive, rho


def _height(family: str, rank: int, alpha) -> int:
    # expansion over the simple roots via partial sums of the coordinates
    if family == "A":
        return sum(sum(alpha[: k + 1]) for k in range(rank))
    partial = [sum(alpha[: k + 1]) for k in range(rank - 1)]
    last, rem = divmod(sum(alpha), 2)
    assert rem == 0
    return sum(partial) + last


def freudenthal_dim(family: str, rank: int, coeffs: tuple[int, ...]) -> int:
    """Module dimension by Freudenthal's recursion over the weight system.

    Weights are walked breadth-first from the top by subtracting simple
    roots; the recursion only ever looks upward along root strings, whose
    length is bounded by depth // height(alpha).
    """
    simple, positive, rho = _root_data(family, rank)
    n = rank
    lam = tuple(sum(coeffs[k:]) for k in range(n)) + (
        (0,) if family == "A" else ()
    )
    pos_ht = [(alpha, _height(family, rank, alpha)) for alpha in positive]
    top = tuple(a + b for a, b in zip(lam, rho))
    target = _dot(top, top)
    mults = {lam: 1}
    level = [lam]
    depth = 1
    total = 1
    while level:
        cands = set()
        for mu in level:
            for a in simple:
                cands.add(tuple(x - y for x, y in zip(mu, a)))
        level = []
        for cand in sorted(cands):
            shifted = tuple(a + b for a, b in zip(cand, rho))
            c = target - _dot(shifted, shifted)
            if c <= 0:
                continue
            s = 0
            for alpha, ht in pos_ht:
                for k in range(1, depth // ht + 1):
                    up = tuple(x + k * y for x, y in zip(cand, alpha))
                    m_up = mults.get(up, 0)
                    if m_up:
                        s += m_up * _dot(up, alpha)
            num, rem = divmod(2 * s, c)
            assert rem == 0, (family, rank, coeffs, cand)
            if num > 0:
                mults[cand] = num
                level.append(cand)
                total += num
        depth += 1
    return total
