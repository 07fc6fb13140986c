"""The decision procedure for effective freeness of a two-sided action.

An action given by a pair of torus weight maps (f1, f2) with parameters
in (R/Z)^r fails to be effectively free exactly when some parameter t
makes f1(t) conjugate to f2(t) without both being the same central
element.  Conjugacy on the maximal torus is the Weyl action, so for each
Weyl element w the conjugacy locus is the solution set of the integer
congruence system (w A - B) t = 0 (mod 1), where A and B are the weight
matrices and w acts by signed permutation of A's rows.

The solution subgroup S_w decomposes into torsion generators and
subtorus directions.  Let K = { t : A t = B t = a central point }; K is
a subgroup, so S_w lies in K iff

* every torsion generator g has A g = B g equal and central, and
* every subtorus direction v satisfies A v = B v = 0 integrally (a
  connected family inside a finite center is constant, which forces the
  weight images of the direction to vanish identically).

The verdict is Free iff this holds for every w; otherwise the smallest
failing point is packaged as a witness together with every Weyl element
realizing the conjugacy, so the witness can be rechecked by direct
evaluation with no reference to the solver.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Optional

from .groups import GroupModel, SignedPermutation, build_group_model
from .linalg import (
    IntMatrix,
    TorusPoint,
    smith_normal_form,
    solve_affine_torus_congruence,
    solve_torus_congruence,
    subgroup_contained_in,
)
from .reps import CandidateMap, TorusMap, descend_spin7, named_su2_label

_WITNESS_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23)


@dataclass(frozen=True)
class ActionSpec:
    """A biquotient action datum: an ambient group model and the weight
    maps of the two homomorphisms, over the same parameter torus."""

    model: GroupModel
    left: TorusMap
    right: TorusMap

    def __post_init__(self):
        if self.left.group != self.model.name or self.right.group != self.model.name:
            raise ValueError("weight maps do not belong to the model's group")
        if self.left.params != self.right.params:
            raise ValueError(
                f"parameter mismatch: left has {self.left.params}, "
                f"right has {self.right.params}"
            )
        self.model.validate_weights(self.left.weights)
        self.model.validate_weights(self.right.weights)

    @property
    def params(self) -> int:
        return self.left.params


@dataclass(frozen=True)
class Witness:
    """A non-central conjugacy: w maps the left image of point to the
    right image, and the two images are not a common central element."""

    point: TorusPoint
    weyl: SignedPermutation
    conjugators: tuple
    left_image: TorusPoint
    right_image: TorusPoint

    @property
    def order(self) -> int:
        return self.point.order()


@dataclass(frozen=True)
class FreenessVerdict:
    free: bool
    witness: Optional[Witness] = None

    @property
    def status(self) -> str:
        return "Free" if self.free else "NotFree"


def _pair_is_central(model: GroupModel, a: TorusPoint, b: TorusPoint) -> bool:
    return a == b and model.is_central(a)


def _canonical_torsion_point(g: TorusPoint) -> TorusPoint:
    """Lexicographically smallest unit multiple; generates the same
    cyclic subgroup, so membership in any subgroup K is unchanged."""
    n = g.order()
    units = [k for k in range(1, n + 1) if gcd(k, n) == 1]
    return min((g.scaled(k) for k in units), key=lambda p: p.coords)


def _direction_witness_point(
    spec: ActionSpec, w: SignedPermutation, v: tuple
) -> TorusPoint:
    """A rational point on a non-annihilated subtorus direction where the
    conjugacy is visibly non-central."""
    for q in _WITNESS_PRIMES:
        t = TorusPoint(Fraction(x, q) for x in v)
        a = spec.left.apply(t)
        b = spec.right.apply(t)
        if w.apply(a) == b and not _pair_is_central(spec.model, a, b):
            return t
    raise RuntimeError("no witness found along direction; direction data corrupt")


def is_effectively_free(spec: ActionSpec) -> FreenessVerdict:
    """Decide effective freeness; NotFree verdicts carry a minimal
    witness (smallest order, then lexicographic), independently
    recheckable via verify_witness."""
    model = spec.model
    A, B = spec.left.weights, spec.right.weights

    def member(g: TorusPoint) -> bool:
        return _pair_is_central(model, spec.left.apply(g), spec.right.apply(g))

    def annihilated(v: tuple) -> bool:
        return all(x == 0 for x in A.apply_vector(v)) and all(
            x == 0 for x in B.apply_vector(v)
        )

    candidates = []
    for w in model.weyl:
        sub = solve_torus_congruence(w.apply_rows(A) - B)
        if subgroup_contained_in(sub, member, annihilated):
            continue
        for g in sub.torsion_generators:
            if not member(g):
                candidates.append(_canonical_torsion_point(g))
        for v in sub.subtorus_directions:
            if not annihilated(v):
                candidates.append(_direction_witness_point(spec, w, v))
    if not candidates:
        return FreenessVerdict(free=True)

    point = min(candidates, key=lambda p: (p.order(), p.coords))
    a, b = spec.left.apply(point), spec.right.apply(point)
    conj = tuple(w for w in model.weyl if w.apply(a) == b)
    assert conj, "witness lost its conjugator; solver invariant broken"
    return FreenessVerdict(
        free=False,
        witness=Witness(
            point=point,
            weyl=conj[0],
            conjugators=conj,
            left_image=a,
            right_image=b,
        ),
    )


def verify_witness(spec: ActionSpec, witness: Witness) -> bool:
    """Recheck a witness by direct evaluation, no solver involved."""
    a = spec.left.apply(witness.point)
    b = spec.right.apply(witness.point)
    if a != witness.left_image or b != witness.right_image:
        return False
    if witness.weyl not in spec.model.weyl:
        return False
    if witness.weyl.apply(a) != b:
        return False
    return not _pair_is_central(spec.model, a, b)


# ---------------------------------------------------------------------------
# Restriction pruning for SU(2)^2 candidates


@dataclass(frozen=True)
class RestrictionEntry:
    which: str
    left_label: str
    right_label: str
    spec: Optional[ActionSpec]
    verdict: Optional[FreenessVerdict]

    @property
    def effectively_free(self) -> bool:
        return self.verdict.free if self.verdict is not None else True


@dataclass(frozen=True)
class PruneResult:
    entries: tuple

    @property
    def pruned(self) -> bool:
        return any(not e.effectively_free for e in self.entries)

    @property
    def reason(self) -> Optional[str]:
        for e in self.entries:
            if not e.effectively_free:
                return f"{e.which} restriction ({e.left_label}, {e.right_label}) is not effectively free"
        return None


def restriction_prune(
    left: CandidateMap, right: CandidateMap, group: str = "SPIN7"
) -> PruneResult:
    """Test the three one-parameter restrictions (second factor trivial,
    first factor trivial, diagonal).  A pair whose restriction already
    fails cannot define an effectively free action; each restriction's
    verdict is computed outright rather than looked up."""
    model = build_group_model(group)
    entries = []
    for which in ("left", "right", "diagonal"):
        lres = left.restriction(which)
        rres = right.restriction(which)
        llabel = named_su2_label(lres) or lres.label() if lres else "trivial"
        rlabel = named_su2_label(rres) or rres.label() if rres else "trivial"
        if lres is None and rres is None:
            entries.append(RestrictionEntry(which, llabel, rlabel, None, None))
            continue
        lmap = left.torus_map(group).restricted(
            {"left": "left", "right": "right", "diagonal": "diagonal"}[which]
        )
        rmap = right.torus_map(group).restricted(
            {"left": "left", "right": "right", "diagonal": "diagonal"}[which]
        )
        spec = ActionSpec(model, lmap, rmap)
        entries.append(
            RestrictionEntry(which, llabel, rlabel, spec, is_effectively_free(spec))
        )
    return PruneResult(entries=tuple(entries))


# ---------------------------------------------------------------------------
# Descent from the rank-4 model to SO(7)


@dataclass(frozen=True)
class DescentReport:
    deck_in_image: bool
    deck_side: Optional[str]  # "(-I,I)" or "(I,-I)"
    deck_point: Optional[TorusPoint]
    so7_verdict: FreenessVerdict


def descent_analysis(spec: ActionSpec) -> DescentReport:
    """For a rank-4 (SPIN7) action: does the pair map hit (-I, I) or
    (I, -I), and is the pushed-down SO(7) action effectively free?

    The deck search solves the affine congruence [A t = h, B t = 0] and
    its mirror, where h is the all-halves vector; solvability comes from
    the Smith form of the stacked system.
    """
    if spec.model.name != "SPIN7":
        raise ValueError("descent analysis applies to SPIN7 actions")
    A, B = spec.left.weights, spec.right.weights
    stacked = IntMatrix.vstack(A, B)
    half = Fraction(1, 2)
    targets = (
        ("(-I,I)", [half] * 4 + [Fraction(0)] * 4),
        ("(I,-I)", [Fraction(0)] * 4 + [half] * 4),
    )
    deck_side = None
    deck_point = None
    for side, target in targets:
        point = solve_affine_torus_congruence(stacked, target)
        if point is not None:
            deck_side = side
            deck_point = point
            break
    so7_model = build_group_model("SO7")
    so7_spec = ActionSpec(so7_model, descend_spin7(spec.left), descend_spin7(spec.right))
    return DescentReport(
        deck_in_image=deck_side is not None,
        deck_side=deck_side,
        deck_point=deck_point,
        so7_verdict=is_effectively_free(so7_spec),
    )


# ---------------------------------------------------------------------------
# Independent brute-force oracle


@dataclass(frozen=True)
class OracleReport:
    agrees: bool
    oracle_free: bool
    verdict_free: bool
    max_denominator: int
    witness_point: Optional[TorusPoint]


def brute_force_oracle(
    spec: ActionSpec, verdict: FreenessVerdict, denominator_cap: int = 2520
) -> OracleReport:
    """Confirm a verdict by exhausting finite torsion subgroups.

    For each Weyl element w, every failing point of finite order lies on
    the grid of denominator N_w = lcm of the elementary divisors of
    (w A - B); the oracle scans those grids with pure integer arithmetic
    and separately demands that the solution subtorus directions
    annihilate both weight matrices.  Agreement means: the verdict is
    Free exactly when no grid witness exists and all directions vanish.
    """
    model = spec.model
    A, B = spec.left.weights, spec.right.weights
    r = spec.params
    m = model.angle_count

    center_scaled = {}

    def central_pair(fa: tuple, fb: tuple, n: int) -> bool:
        if fa != fb:
            return False
        if n not in center_scaled:
            scaled = []
            for c in model.center:
                coords = [x * n for x in c.coords]
                if all(x.denominator == 1 for x in coords):
                    scaled.append(tuple(int(x) for x in coords))
            center_scaled[n] = scaled
        return list(fa) in [list(c) for c in center_scaled[n]]

    witness_point = None
    directions_clean = True
    max_denom = 1
    for w in model.weyl:
        M = w.apply_rows(A) - B
        snf = smith_normal_form(M)
        divisors = [d for d in snf.diagonal() if d != 0]
        n_w = lcm(*divisors) if divisors else 1
        for v in solve_torus_congruence(M).subtorus_directions:
            if any(A.apply_vector(v)) or any(B.apply_vector(v)):
                directions_clean = False
        if n_w == 1:
            continue
        if n_w > denominator_cap:
            raise RuntimeError(
                f"oracle denominator {n_w} exceeds cap {denominator_cap}"
            )
        max_denom = max(max_denom, n_w)
        mw = M.data
        aw = A.data
        bw = B.data
        for k in itertools.product(range(n_w), repeat=r):
            if any(sum(row[j] * k[j] for j in range(r)) % n_w for row in mw):
                continue
            fa = tuple(sum(row[j] * k[j] for j in range(r)) % n_w for row in aw)
            fb = tuple(sum(row[j] * k[j] for j in range(r)) % n_w for row in bw)
            # conjugacy for this w is exactly (w fa) == fb, restated by M k = 0
            if not central_pair(fa, fb, n_w):
                candidate = TorusPoint(Fraction(x, n_w) for x in k)
                if witness_point is None or (
                    candidate.order(),
                    candidate.coords,
                ) < (witness_point.order(), witness_point.coords):
                    witness_point = candidate
    oracle_free = witness_point is None and directions_clean
    return OracleReport(
        agrees=oracle_free == verdict.free,
        oracle_free=oracle_free,
        verdict_free=verdict.free,
        max_denominator=max_denom,
        witness_point=witness_point,
    )
