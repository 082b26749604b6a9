"""End-to-end theorem pipelines with machine-readable reports.

Each report compares the mapped chain points with the string points of the
same weight, gates both cardinalities on the Weyl dimension, records up to
ten witnesses per direction together with exact totals, and carries the
affine weight twist fitted to all weight pairs of the case.  Grid runs are
deterministic: results are ordered by case, independent of thread count,
and the JSON rendering contains no timing data.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

from .crystal import string_points
from .degenmap import (
    WeightTwist,
    apply_affine,
    build_matrix,
    build_translation,
    weight_twist_solve,
)
from .errors import VerificationError
from .fflv import points
from .rootsys import (
    ExponentVector,
    LieType,
    check_dominant,
    dominant_weights,
    fflv_weight,
    string_weight,
    weyl_dim,
)

WITNESS_CAP = 10


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one main-theorem case."""

    family: str
    rank: int
    weight: tuple[int, ...]
    status: str  # "ok", "failed" or "skipped"
    fflv_count: int
    string_count: int
    weyl_dim: int
    equal: bool
    missing: tuple[ExponentVector, ...]
    missing_total: int
    extra: tuple[ExponentVector, ...]
    extra_total: int
    weight_twist: WeightTwist | None
    twist_witness: tuple | None
    elapsed: float

    def to_dict(self) -> dict:
        """JSON-stable rendering; excludes the elapsed time on purpose."""
        twist = None
        if self.weight_twist is not None:
            twist = {
                "matrix": [[str(x) for x in row] for row in self.weight_twist.matrix],
                "shift": [str(x) for x in self.weight_twist.shift],
                "unique": self.weight_twist.unique,
            }
        return {
            "family": self.family,
            "rank": self.rank,
            "weight": list(self.weight),
            "status": self.status,
            "fflv_count": self.fflv_count,
            "string_count": self.string_count,
            "weyl_dim": self.weyl_dim,
            "equal": self.equal,
            "missing_total": self.missing_total,
            "missing": [list(p) for p in self.missing],
            "extra_total": self.extra_total,
            "extra": [list(p) for p in self.extra],
            "weight_twist": twist,
        }


def _skipped(lt: LieType, weight, dim: int, elapsed: float) -> VerificationReport:
    return VerificationReport(
        family=lt.family,
        rank=lt.rank,
        weight=tuple(weight),
        status="skipped",
        fflv_count=0,
        string_count=0,
        weyl_dim=dim,
        equal=False,
        missing=(),
        missing_total=0,
        extra=(),
        extra_total=0,
        weight_twist=None,
        twist_witness=None,
        elapsed=elapsed,
    )


def check_main(
    lt: LieType,
    weight: Sequence[int],
    matrix=None,
    max_dim: int | None = None,
) -> VerificationReport:
    """Compare mapped chain points against string points for one weight.

    ``matrix`` overrides the linear part (used by mutation fixtures); the
    override path reports mismatches as witnesses instead of raising the
    nonnegativity gate.  ``max_dim`` skips cases whose module dimension
    exceeds the budget, explicitly, never silently.
    """
    start = time.perf_counter()
    w = check_dominant(lt, weight)
    dim = weyl_dim(lt, w)
    if max_dim is not None and dim > max_dim:
        return _skipped(lt, w, dim, time.perf_counter() - start)

    chain_pts = points(lt, w)
    trusted = matrix is None
    mat = build_matrix(lt) if trusted else matrix
    trans = build_translation(lt, w)

    images = []
    for p in chain_pts:
        v = apply_affine(mat, trans, p)
        if trusted and any(x < 0 for x in v):
            raise VerificationError(
                "degenmap.nonnegative_image",
                f"{lt} {w}: image {v} of chain point {p} has a negative entry",
            )
        images.append(v)
    image_set = set(images)
    strings = string_points(lt, w)
    string_set = set(strings)

    missing = tuple(s for s in strings if s not in image_set)
    extra = tuple(sorted(v for v in image_set if v not in string_set))
    equal = not missing and not extra

    pairs = [
        (fflv_weight(lt, w, p), string_weight(lt, w, v))
        for p, v in zip(chain_pts, images)
    ]
    twist, witness = weight_twist_solve(lt, w, pairs)

    ok = equal and len(chain_pts) == dim and len(strings) == dim and twist is not None
    return VerificationReport(
        family=lt.family,
        rank=lt.rank,
        weight=w,
        status="ok" if ok else "failed",
        fflv_count=len(chain_pts),
        string_count=len(strings),
        weyl_dim=dim,
        equal=equal,
        missing=missing[:WITNESS_CAP],
        missing_total=len(missing),
        extra=extra[:WITNESS_CAP],
        extra_total=len(extra),
        weight_twist=twist,
        twist_witness=witness,
        elapsed=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class ContainmentReport:
    """Minkowski containment of two point sets inside the sum's set."""

    family: str
    rank: int
    weight1: tuple[int, ...]
    weight2: tuple[int, ...]
    fflv_ok: bool
    fflv_witnesses: tuple[ExponentVector, ...]
    string_ok: bool
    string_witnesses: tuple[ExponentVector, ...]

    @property
    def ok(self) -> bool:
        return self.fflv_ok and self.string_ok


def check_minkowski(lt: LieType, weight1, weight2) -> ContainmentReport:
    """Pointwise sums of both point families must land in the sum's sets."""
    w1 = check_dominant(lt, weight1)
    w2 = check_dominant(lt, weight2)
    total = tuple(a + b for a, b in zip(w1, w2))

    def witnesses(small1, small2, big) -> tuple[ExponentVector, ...]:
        big_set = set(big)
        out = []
        for p in small1:
            for q in small2:
                s = tuple(x + y for x, y in zip(p, q))
                if s not in big_set:
                    out.append(s)
                    if len(out) >= WITNESS_CAP:
                        return tuple(out)
        return tuple(out)

    fflv_bad = witnesses(points(lt, w1), points(lt, w2), points(lt, total))
    string_bad = witnesses(
        string_points(lt, w1), string_points(lt, w2), string_points(lt, total)
    )
    return ContainmentReport(
        family=lt.family,
        rank=lt.rank,
        weight1=w1,
        weight2=w2,
        fflv_ok=not fflv_bad,
        fflv_witnesses=fflv_bad,
        string_ok=not string_bad,
        string_witnesses=string_bad,
    )


@dataclass(frozen=True)
class DilationReport:
    """Lattice-level shadow of the dilation argument."""

    family: str
    rank: int
    weight: tuple[int, ...]
    rows: tuple[tuple[int, int, int, int, bool], ...]  # (k, fflv, string, dim, equal)

    @property
    def ok(self) -> bool:
        return all(row[4] and row[1] == row[2] == row[3] for row in self.rows)


def check_lattice_corollary(lt: LieType, weight, k_max: int) -> DilationReport:
    """For k = 1..k_max, counts of both dilated sets must equal the Weyl dimension."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    w = check_dominant(lt, weight)
    rows = []
    for k in range(1, k_max + 1):
        kw = tuple(k * a for a in w)
        rep = check_main(lt, kw)
        rows.append((k, rep.fflv_count, rep.string_count, rep.weyl_dim, rep.equal))
    return DilationReport(
        family=lt.family, rank=lt.rank, weight=w, rows=tuple(rows)
    )


def run_grid(
    cases: Sequence[tuple[LieType, int]],
    threads: int = 1,
    matrix=None,
    max_dim: int | None = None,
) -> list[VerificationReport]:
    """Run check_main over every dominant weight of every case, in order.

    ``cases`` lists (type, max coefficient sum) pairs.  The report list order
    is deterministic and independent of the thread count.
    """
    tasks = [
        (lt, w)
        for lt, level in cases
        for w in dominant_weights(lt.rank, level)
    ]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(
                pool.map(lambda t: check_main(t[0], t[1], matrix, max_dim), tasks)
            )
    return [check_main(lt, w, matrix, max_dim) for lt, w in tasks]


def all_passed(reports: Sequence[VerificationReport]) -> bool:
    return all(r.status != "failed" for r in reports)


def reports_to_json(reports: Sequence[VerificationReport]) -> str:
    """Byte-stable JSON rendering of a report list."""
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
