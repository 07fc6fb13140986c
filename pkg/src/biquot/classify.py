"""Classification drivers: enumerate candidate homomorphism pairs, apply
restriction pruning as an audit, decide every pair outright, and match
the effectively free actions against the expected weight data.

Deduplication quotient: a pair (f1, f2) is equivalent to (f2, f1)
(inverting the action) and to the pair obtained by interchanging the two
SU(2) factors on both sides.  Pairs where both maps kill the same factor
are tagged rank1-equivalent: they are one-parameter actions in disguise
and are excluded from the two-parameter count.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .freeness import (
    ActionSpec,
    DescentReport,
    FreenessVerdict,
    PruneResult,
    descent_analysis,
    is_effectively_free,
    restriction_prune,
)
from .groups import GroupModel, build_group_model, weyl_equivalent_weights
from .linalg import IntMatrix
from .reps import (
    CandidateMap,
    TorusMap,
    descend_spin7,
    enumerate_su2_complex,
    enumerate_su2_orthogonal,
    enumerate_su2xsu2_complex,
    enumerate_su2xsu2_orthogonal,
    named_su2_label,
    torus_weights,
)


@dataclass(frozen=True)
class PairOutcome:
    left_label: str
    right_label: str
    left_map: TorusMap
    right_map: TorusMap
    verdict: FreenessVerdict
    bucket: str  # free_inhomogeneous | not_free | homogeneous | rank1_equivalent
    prune: Optional[PruneResult] = None
    descent: Optional[DescentReport] = None

    @property
    def labels(self) -> tuple:
        return (self.left_label, self.right_label)


@dataclass(frozen=True)
class ClassificationReport:
    group: str
    source: str
    pairs: tuple

    @property
    def free_inhomogeneous(self) -> tuple:
        return tuple(p for p in self.pairs if p.bucket == "free_inhomogeneous")

    @property
    def counts(self) -> dict:
        out = {
            "free_inhomogeneous": 0,
            "not_free": 0,
            "homogeneous": 0,
            "rank1_equivalent": 0,
        }
        for p in self.pairs:
            out[p.bucket] += 1
        return out


def su2_candidates(group: str) -> list:
    """Nontrivial SU(2) homomorphism candidates with display labels."""
    group = group.upper()
    if group == "SU4":
        reps = [r for r in enumerate_su2_complex(4) if not r.is_trivial()]
        reps.sort(key=lambda r: r.parts)
        return [(r.label(), r) for r in reps]
    reps = [r for r in enumerate_su2_orthogonal(7) if not r.is_trivial()]
    labeled = [(named_su2_label(r) or r.label(), r) for r in reps]
    labeled.sort(key=lambda lr: lr[0])
    return labeled


def _trivial_su2_map(group: str) -> TorusMap:
    rows = {"SU4": 4, "SO7": 3, "SPIN7": 4}[group]
    return TorusMap(group, IntMatrix.zero(rows, 1), source="trivial")


@lru_cache(maxsize=None)
def classify_su2(group: str) -> ClassificationReport:
    """Decide every unordered pair of nontrivial SU(2) candidates, plus
    the homogeneous pairings with the trivial map."""
    group = group.upper()
    model = build_group_model(group)
    cands = su2_candidates(group)
    outcomes = []
    for (llab, lrep), (rlab, rrep) in itertools.combinations(cands, 2):
        spec = ActionSpec(model, torus_weights(lrep, group), torus_weights(rrep, group))
        verdict = is_effectively_free(spec)
        outcomes.append(
            PairOutcome(
                left_label=llab,
                right_label=rlab,
                left_map=spec.left,
                right_map=spec.right,
                verdict=verdict,
                bucket="free_inhomogeneous" if verdict.free else "not_free",
            )
        )
    for lab, rep in cands:
        spec = ActionSpec(model, torus_weights(rep, group), _trivial_su2_map(group))
        verdict = is_effectively_free(spec)
        outcomes.append(
            PairOutcome(
                left_label=lab,
                right_label="trivial",
                left_map=spec.left,
                right_map=spec.right,
                verdict=verdict,
                bucket="homogeneous",
            )
        )
    return ClassificationReport(group=group, source="su2", pairs=tuple(outcomes))


def su2xsu2_candidates(group: str) -> list:
    """All SU(2)^2 homomorphism candidates: finite-kernel representations
    in both factor orientations, projections composed with the nontrivial
    SU(2) candidates, and the trivial map."""
    group = group.upper()
    if group == "SU4":
        finite = enumerate_su2xsu2_complex(4, finite_kernel_only=True, dedup_swap=False)
    else:
        finite = enumerate_su2xsu2_orthogonal(7, finite_kernel_only=True, dedup_swap=False)
    cands = [CandidateMap.finite(rep) for rep in finite]
    for factor in (1, 2):
        for _, rep in su2_candidates(group):
            cands.append(CandidateMap.projected(factor, rep))
    cands.append(CandidateMap.trivial())
    cands.sort(key=lambda c: c.sort_key())
    return cands


def _canonical_pair(left: CandidateMap, right: CandidateMap) -> tuple:
    images = [
        (left, right),
        (right, left),
        (left.swapped(), right.swapped()),
        (right.swapped(), left.swapped()),
    ]
    return min(images, key=lambda lr: (lr[0].sort_key(), lr[1].sort_key()))


@lru_cache(maxsize=None)
def classify_su2xsu2(group: str) -> ClassificationReport:
    """Decide every pair of SU(2)^2 candidates up to the dedup quotient.

    Restriction pruning is recorded for every two-sided pair but every
    pair is decided outright as well; a pruned pair must come out NotFree
    (the restriction test is sound), which is asserted here.
    """
    group = group.upper()
    model = build_group_model(group)
    cands = su2xsu2_candidates(group)
    seen = set()
    outcomes = []
    for left, right in itertools.product(cands, repeat=2):
        if left.is_trivial() and right.is_trivial():
            continue
        pair = _canonical_pair(left, right)
        key = (pair[0].sort_key(), pair[1].sort_key())
        if key in seen:
            continue
        seen.add(key)
        lcand, rcand = pair
        spec = ActionSpec(model, lcand.torus_map(group), rcand.torus_map(group))
        verdict = is_effectively_free(spec)

        homogeneous = lcand.is_trivial() or rcand.is_trivial()
        rank1 = (
            lcand.kind == "proj"
            and rcand.kind == "proj"
            and lcand.factor == rcand.factor
        )
        prune = None
        if not homogeneous:
            prune = restriction_prune(lcand, rcand, group)
            if prune.pruned and verdict.free:
                raise AssertionError(
                    f"pruned pair ({lcand.label()}, {rcand.label()}) decided Free; "
                    "restriction soundness violated"
                )
        if homogeneous:
            bucket = "homogeneous"
        elif rank1:
            bucket = "rank1_equivalent"
        elif verdict.free:
            bucket = "free_inhomogeneous"
        else:
            bucket = "not_free"
        descent = None
        if group == "SPIN7" and bucket == "free_inhomogeneous":
            descent = descent_analysis(spec)
        outcomes.append(
            PairOutcome(
                left_label=lcand.label(),
                right_label=rcand.label(),
                left_map=spec.left,
                right_map=spec.right,
                verdict=verdict,
                bucket=bucket,
                prune=prune,
                descent=descent,
            )
        )
    return ClassificationReport(group=group, source="su2xsu2", pairs=tuple(outcomes))


# ---------------------------------------------------------------------------
# Expected weight data for the effectively free two-parameter actions
#
# Each row encodes a pair of block embeddings as weight matrices, columns
# ordered (t, p) for the two SU(2) parameters.  Building blocks, written
# as rotation slots: a double cover into SO(3) contributes (2z) and a
# fixed axis; the inclusion SU(2) -> SO(4) contributes (z, z); the double
# cover SU(2)^2 -> SO(4) contributes (z+w, z-w); the principal SO(3) in
# SO(7) has slots (6z, 4z, 2z); the maximal SO(3) in SO(5) has (4z, 2z).


def _rows(*pairs) -> IntMatrix:
    return IntMatrix(list(pairs))


EXPECTED_FREE_SO7 = (
    (_rows((2, 0), (0, 0), (0, 0)), _rows((0, 2), (1, 0), (1, 0))),
    (_rows((2, 0), (0, 0), (0, 0)), _rows((0, 1), (0, 1), (0, 0))),
    (_rows((2, 0), (0, 0), (0, 0)), _rows((0, 2), (0, 2), (0, 0))),
    (_rows((2, 0), (0, 0), (0, 0)), _rows((0, 2), (0, 1), (0, 1))),
    (_rows((2, 0), (0, 0), (0, 0)), _rows((1, 1), (1, -1), (2, 0))),
    (_rows((2, 0), (0, 0), (0, 0)), _rows((1, 1), (1, -1), (0, 2))),
    (_rows((2, 0), (0, 0), (0, 0)), _rows((0, 6), (0, 4), (0, 2))),
    (_rows((2, 0), (0, 1), (0, 1)), _rows((2, 0), (2, 0), (0, 0))),
    (_rows((2, 0), (0, 2), (0, 0)), _rows((2, 0), (1, 0), (1, 0))),
    (_rows((4, 0), (2, 0), (0, 0)), _rows((0, 2), (0, 1), (0, 1))),
)

EXPECTED_FREE_SU4 = (
    (_rows((1, 0), (1, 0), (-1, 0), (-1, 0)), _rows((0, 1), (0, 0), (0, 0), (0, -1))),
    (_rows((1, 0), (1, 0), (-1, 0), (-1, 0)), _rows((0, 2), (0, 0), (0, 0), (0, -2))),
)


class TableMatchError(Exception):
    pass


def _swap_columns(m: IntMatrix) -> IntMatrix:
    return IntMatrix([(r[1], r[0]) for r in m.data])


def _pair_matches_row(
    model: GroupModel, lw: IntMatrix, rw: IntMatrix, row: tuple
) -> bool:
    for pair_swapped in (False, True):
        a, b = (rw, lw) if pair_swapped else (lw, rw)
        for factor_swapped in (False, True):
            aa = _swap_columns(a) if factor_swapped else a
            bb = _swap_columns(b) if factor_swapped else b
            if weyl_equivalent_weights(model, aa, row[0]) and weyl_equivalent_weights(
                model, bb, row[1]
            ):
                return True
    return False


def verify_table1(report: ClassificationReport) -> list:
    """Match every effectively free two-parameter action in the report to
    exactly one expected weight-data row; returns [(pair_index, row_index)].

    Raises TableMatchError when the matching is not a bijection.
    """
    if report.source != "su2xsu2":
        raise ValueError("expected an SU(2)^2 classification report")
    if report.group == "SU4":
        rows = EXPECTED_FREE_SU4
        model = build_group_model("SU4")

        def coords(tm: TorusMap) -> IntMatrix:
            return tm.weights

    elif report.group in ("SO7", "SPIN7"):
        rows = EXPECTED_FREE_SO7
        model = build_group_model("SO7")

        def coords(tm: TorusMap) -> IntMatrix:
            return tm.weights if tm.group == "SO7" else descend_spin7(tm).weights

    else:
        raise ValueError(f"no expected table for group {report.group}")

    free = report.free_inhomogeneous
    problems = []
    matching = []
    used_rows = set()
    for pi, pair in enumerate(free):
        hits = [
            ri
            for ri, row in enumerate(rows)
            if _pair_matches_row(model, coords(pair.left_map), coords(pair.right_map), row)
        ]
        if len(hits) != 1:
            problems.append(
                f"pair ({pair.left_label}, {pair.right_label}) matches rows {hits}"
            )
            continue
        if hits[0] in used_rows:
            problems.append(
                f"row {hits[0]} matched twice, second time by "
                f"({pair.left_label}, {pair.right_label})"
            )
            continue
        used_rows.add(hits[0])
        matching.append((pi, hits[0]))
    unmatched = [ri for ri in range(len(rows)) if ri not in used_rows]
    if unmatched:
        problems.append(f"expected rows never matched: {unmatched}")
    if len(free) != len(rows):
        problems.append(f"{len(free)} free pairs vs {len(rows)} expected rows")
    if problems:
        raise TableMatchError("; ".join(problems))
    return matching
