"""Ambient group models: maximal torus coordinates, centers, and Weyl
groups realized as finite groups of signed permutations.

Three models are built:

* SU4   - 4 exponent coordinates summing to 0 mod 1, Weyl = S4 acting by
          permutations (conjugacy of diagonal matrices is multiset
          equality), center = the fourth roots of unity times I.
* SO7   - 3 rotation coordinates, Weyl = all 48 signed permutations,
          trivial center.
* SPIN7 - 4 SO(8) rotation coordinates constrained by
          t1 - t2 + t3 - t4 = 0 (mod 1); Weyl = the 48 elements of the
          SO(8) Weyl group (permutations with an even number of sign
          changes) that preserve that sublattice; center = {I, -I}, the
          all-zeros and all-halves points.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .linalg import IntMatrix, TorusPoint
from .spin7 import SPIN7_TORUS_RELATION


@dataclass(frozen=True)
class SignedPermutation:
    """Coordinate change u_i = signs[i] * t[perm[i]] on an r-torus."""

    perm: tuple
    signs: tuple

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("invalid signed permutation")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +-1")

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(n)), (1,) * n)

    @property
    def size(self) -> int:
        return len(self.perm)

    def apply(self, t: TorusPoint) -> TorusPoint:
        return TorusPoint(s * t.coords[p] for p, s in zip(self.perm, self.signs))

    def apply_rows(self, m: IntMatrix) -> IntMatrix:
        """Act on the rows of a weight matrix the way it acts on points."""
        return IntMatrix(
            [tuple(s * x for x in m.data[p]) for p, s in zip(self.perm, self.signs)]
        )

    def transform_form(self, form: Sequence[int]) -> tuple:
        """The linear form v composed with this map: (v o w)."""
        out = [0] * self.size
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            out[p] += form[i] * s
        return tuple(out)

    def compose(self, other: "SignedPermutation") -> "SignedPermutation":
        """self after other: (self * other)(t) = self(other(t))."""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        inv = [0] * self.size
        signs = [1] * self.size
        for i, p in enumerate(self.perm):
            inv[p] = i
            signs[p] = self.signs[i]
        return SignedPermutation(tuple(inv), tuple(signs))

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.size)) and all(s == 1 for s in self.signs)

    def __repr__(self) -> str:
        body = ", ".join(
            f"{'-' if s < 0 else ''}t{p + 1}" for p, s in zip(self.perm, self.signs)
        )
        return f"w({body})"


def signed_permutations(n: int, even_signs_only: bool = False):
    """All signed permutations on n letters, deterministic order."""
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            if even_signs_only and signs.count(-1) % 2 != 0:
                continue
            yield SignedPermutation(perm, signs)


@lru_cache(maxsize=None)
def so8_weyl() -> tuple:
    """The 192 signed permutations of 4 letters with an even number of
    sign changes."""
    return tuple(signed_permutations(4, even_signs_only=True))


def preserves_form_lattice(w: SignedPermutation, form: Sequence[int]) -> bool:
    """Whether w maps the subtorus {v . t = 0 (mod 1)} onto itself.

    For a primitive integer form this holds iff v o w = +-v.
    """
    moved = w.transform_form(form)
    return moved == tuple(form) or moved == tuple(-x for x in form)


@dataclass(frozen=True)
class GroupModel:
    """Torus coordinates, Weyl group and center of an ambient group."""

    name: str
    angle_count: int
    weyl: tuple
    center: tuple
    torus_relation: Optional[tuple]

    def on_torus(self, t: TorusPoint) -> bool:
        if t.rank != self.angle_count:
            return False
        if self.torus_relation is None:
            return True
        s = sum(c * x for c, x in zip(self.torus_relation, t.coords))
        return s.denominator == 1

    def is_central(self, t: TorusPoint) -> bool:
        return t in self.center

    def validate_weights(self, weights: IntMatrix) -> None:
        if weights.rows != self.angle_count:
            raise ValueError(
                f"{self.name} expects {self.angle_count} weight rows, got {weights.rows}"
            )
        if self.torus_relation is not None:
            for j in range(weights.cols):
                if sum(c * x for c, x in zip(self.torus_relation, weights.column(j))) != 0:
                    raise ValueError(
                        f"weight column {j} violates the {self.name} torus relation"
                    )

    def __repr__(self) -> str:
        return f"GroupModel({self.name}, |W|={len(self.weyl)})"


GROUP_NAMES = ("SU4", "SO7", "SPIN7")


@lru_cache(maxsize=None)
def build_group_model(name: str) -> GroupModel:
    name = name.upper()
    if name == "SU4":
        weyl = tuple(
            SignedPermutation(p, (1, 1, 1, 1)) for p in itertools.permutations(range(4))
        )
        center = tuple(
            TorusPoint((Fraction(k, 4),) * 4) for k in range(4)
        )
        return GroupModel(
            name="SU4",
            angle_count=4,
            weyl=weyl,
            center=center,
            torus_relation=(1, 1, 1, 1),
        )
    if name == "SO7":
        return GroupModel(
            name="SO7",
            angle_count=3,
            weyl=tuple(signed_permutations(3)),
            center=(TorusPoint.zero(3),),
            torus_relation=None,
        )
    if name == "SPIN7":
        weyl = tuple(
            w for w in so8_weyl() if preserves_form_lattice(w, SPIN7_TORUS_RELATION)
        )
        half = Fraction(1, 2)
        return GroupModel(
            name="SPIN7",
            angle_count=4,
            weyl=weyl,
            center=(TorusPoint.zero(4), TorusPoint((half,) * 4)),
            torus_relation=SPIN7_TORUS_RELATION,
        )
    raise ValueError(f"unknown group {name!r}; expected one of {GROUP_NAMES}")


def conjugators(model: GroupModel, a: TorusPoint, b: TorusPoint) -> list:
    """All Weyl elements w with w(a) = b, in enumeration order."""
    if not (model.on_torus(a) and model.on_torus(b)):
        raise ValueError(f"points must satisfy the {model.name} torus relation")
    return [w for w in model.weyl if w.apply(a) == b]


def torus_conjugate(
    model: GroupModel, a: TorusPoint, b: TorusPoint
) -> Optional[SignedPermutation]:
    """A Weyl element carrying a to b exactly, or None."""
    found = conjugators(model, a, b)
    return found[0] if found else None


def orbit_of_relation(form: Sequence[int]) -> int:
    """Size of the orbit of the sublattice {v . t = 0 (mod 1)} under the
    SO(8) Weyl group, counting sublattices via normalized forms."""

    def normalize(v: tuple) -> tuple:
        for x in v:
            if x != 0:
                return v if x > 0 else tuple(-y for y in v)
        return v

    return len({normalize(w.transform_form(form)) for w in so8_weyl()})


def weyl_equivalent_weights(model: GroupModel, a: IntMatrix, b: IntMatrix) -> bool:
    """Whether two weight matrices differ by the model's Weyl action."""
    if a.rows != b.rows or a.cols != b.cols:
        return False
    return any(w.apply_rows(a) == b for w in model.weyl)
