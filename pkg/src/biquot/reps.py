"""Homomorphisms from SU(2) and SU(2)^2 into the ambient groups, up to
equivalence, as multisets of irreducibles, together with their torus
weight matrices.

An SU(2) irreducible of index i has dimension i+1 and torus weights
i, i-2, ..., -i; it is symplectic for odd i and orthogonal for even i.
An outer product phi_{ij} is symplectic exactly when i+j is odd.  A sum
is orthogonal iff every symplectic constituent appears an even number of
times, which for plain SU(2) turns enumeration into partitions where
every even part appears an even number of times.

Weight conventions: rotation slots are the lexicographically positive
representatives of the +- weight pairs, sorted descending; an odd total
dimension leaves one unpaired zero weight outside the slots.  SU(4) maps
keep all four exponents sorted descending.  The rank-4 lift of an SO(7)
weight matrix halves the rotation rows into (alpha, beta, gamma) and
emits the four integer combinations (a+b-c, a-b-c, a-b+c, a+b+c).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .linalg import IntMatrix, TorusPoint
from .spin7 import SPIN_LIFT_COEFFS, so7_weights_from_so8


@dataclass(frozen=True, order=True)
class Su2Irrep:
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("irrep index must be >= 0")

    @property
    def dim(self) -> int:
        return self.index + 1

    @property
    def is_symplectic(self) -> bool:
        return self.index % 2 == 1

    def weights(self) -> tuple:
        return tuple(range(self.index, -self.index - 2, -2))

    def label(self) -> str:
        return f"phi{self.index}"


@dataclass(frozen=True, order=True)
class Su2xSu2Irrep:
    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError("irrep indices must be >= 0")

    @property
    def dim(self) -> int:
        return (self.i + 1) * (self.j + 1)

    @property
    def is_symplectic(self) -> bool:
        return (self.i + self.j) % 2 == 1

    def weights(self) -> tuple:
        return tuple(
            (a, b)
            for a in range(self.i, -self.i - 2, -2)
            for b in range(self.j, -self.j - 2, -2)
        )

    def swapped(self) -> "Su2xSu2Irrep":
        return Su2xSu2Irrep(self.j, self.i)

    def label(self) -> str:
        return f"phi{self.i}{self.j}"


Irrep = Union[Su2Irrep, Su2xSu2Irrep]


def clebsch_gordan(i: int, j: int) -> tuple:
    """Indices of the irreducible summands of phi_i tensor phi_j."""
    return tuple(range(i + j, abs(i - j) - 2, -2))


@dataclass(frozen=True)
class RepMultiset:
    """A formal sum of irreducibles with multiplicities, canonically
    sorted by index."""

    parts: tuple

    @classmethod
    def of(cls, parts: Iterable) -> "RepMultiset":
        merged: dict = {}
        for irrep, mult in parts:
            if mult < 0:
                raise ValueError("negative multiplicity")
            if mult:
                merged[irrep] = merged.get(irrep, 0) + mult
        if not merged:
            raise ValueError("empty representation")
        return cls(tuple(sorted(merged.items())))

    @classmethod
    def su2(cls, *pairs) -> "RepMultiset":
        return cls.of((Su2Irrep(i), m) for i, m in pairs)

    @classmethod
    def su2xsu2(cls, *triples) -> "RepMultiset":
        return cls.of((Su2xSu2Irrep(i, j), m) for i, j, m in triples)

    @property
    def kind(self) -> str:
        return "su2" if isinstance(self.parts[0][0], Su2Irrep) else "su2xsu2"

    @property
    def dim(self) -> int:
        return sum(irrep.dim * m for irrep, m in self.parts)

    def is_trivial(self) -> bool:
        return all(irrep.dim == 1 for irrep, _ in self.parts)

    def is_orthogonal(self) -> bool:
        return all(m % 2 == 0 for irrep, m in self.parts if irrep.is_symplectic)

    def weights(self) -> list:
        out = []
        for irrep, m in self.parts:
            out.extend(irrep.weights() * m)
        return out

    def label(self) -> str:
        pieces = []
        for irrep, m in self.parts:
            prefix = "" if m == 1 else str(m)
            pieces.append(prefix + irrep.label())
        return "+".join(pieces)

    # --- SU(2)^2 specific -------------------------------------------------

    def swapped(self) -> "RepMultiset":
        if self.kind != "su2xsu2":
            raise ValueError("factor swap only applies to SU(2)^2 multisets")
        return RepMultiset.of((irrep.swapped(), m) for irrep, m in self.parts)

    def depends_on(self) -> tuple:
        """Which torus parameters (1-based factors) act nontrivially."""
        first = any(irrep.i > 0 for irrep, _ in self.parts)
        second = any(irrep.j > 0 for irrep, _ in self.parts)
        return tuple(k for k, used in ((1, first), (2, second)) if used)

    def has_finite_kernel(self) -> bool:
        return self.kind == "su2xsu2" and len(self.depends_on()) == 2

    def restricted(self, which: str) -> "RepMultiset":
        """Restriction to an SU(2) subgroup: 'left' (second factor = 1),
        'right' (first factor = 1), or 'diagonal'."""
        if self.kind != "su2xsu2":
            raise ValueError("restriction applies to SU(2)^2 multisets")
        parts: list = []
        for irrep, m in self.parts:
            if which == "left":
                parts.append((Su2Irrep(irrep.i), m * (irrep.j + 1)))
            elif which == "right":
                parts.append((Su2Irrep(irrep.j), m * (irrep.i + 1)))
            elif which == "diagonal":
                parts.extend(
                    (Su2Irrep(k), m) for k in clebsch_gordan(irrep.i, irrep.j)
                )
            else:
                raise ValueError(f"unknown restriction {which!r}")
        return RepMultiset.of(parts)

    def __repr__(self) -> str:
        return f"Rep[{self.label()}]"


# ---------------------------------------------------------------------------
# Enumeration


def partitions(n: int, max_part: Optional[int] = None):
    """Partitions of n as descending tuples, largest part first."""
    if n == 0:
        yield ()
        return
    top = n if max_part is None else min(n, max_part)
    for first in range(top, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _multiset_from_partition(p: Sequence[int]) -> RepMultiset:
    return RepMultiset.of((Su2Irrep(part - 1), p.count(part)) for part in set(p))


def enumerate_su2_complex(n: int) -> list:
    """All n-dimensional representations of SU(2): one per partition."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return [_multiset_from_partition(p) for p in partitions(n)]


def enumerate_su2_orthogonal(n: int) -> list:
    """All real (orthogonal) n-dimensional representations of SU(2):
    partitions in which every even part appears an even number of times."""
    return [rep for rep in enumerate_su2_complex(n) if rep.is_orthogonal()]


def _su2xsu2_irreps_up_to(n: int) -> list:
    irreps = [
        Su2xSu2Irrep(i, j)
        for i in range(n)
        for j in range(n)
        if (i + 1) * (j + 1) <= n
    ]
    irreps.sort(key=lambda r: (-r.dim, r.i, r.j))
    return irreps


def _enumerate_su2xsu2(
    n: int, orthogonal: bool, finite_kernel_only: bool, dedup_swap: bool
) -> list:
    irreps = _su2xsu2_irreps_up_to(n)
    found: list = []

    def rec(idx: int, remaining: int, chosen: list):
        if remaining == 0:
            rep = RepMultiset.of(list(chosen))
            found.append(rep)
            return
        if idx == len(irreps):
            return
        irrep = irreps[idx]
        step = 2 if (orthogonal and irrep.is_symplectic) else 1
        max_mult = remaining // irrep.dim
        for mult in range(0, max_mult + 1, step):
            if mult:
                chosen.append((irrep, mult))
            rec(idx + 1, remaining - mult * irrep.dim, chosen)
            if mult:
                chosen.pop()

    rec(0, n, [])
    if finite_kernel_only:
        found = [rep for rep in found if rep.has_finite_kernel()]
    if dedup_swap:
        kept = []
        seen = set()
        for rep in found:
            key = min(rep.parts, rep.swapped().parts)
            if key not in seen:
                seen.add(key)
                kept.append(RepMultiset(key))
        found = kept
    found.sort(key=lambda r: r.parts)
    return found


def enumerate_su2xsu2_orthogonal(
    n: int, finite_kernel_only: bool = False, dedup_swap: bool = True
) -> list:
    """All n-dimensional real representations of SU(2)^2: multisets of
    phi_{ij} where every constituent with i+j odd has even multiplicity,
    optionally keeping only those faithful up to a finite kernel, and
    deduplicated up to interchanging the two factors."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return _enumerate_su2xsu2(n, True, finite_kernel_only, dedup_swap)


def enumerate_su2xsu2_complex(
    n: int, finite_kernel_only: bool = False, dedup_swap: bool = True
) -> list:
    """All n-dimensional representations of SU(2)^2, no reality
    constraint (the right notion for maps into SU(n))."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return _enumerate_su2xsu2(n, False, finite_kernel_only, dedup_swap)


# ---------------------------------------------------------------------------
# Torus weight matrices


@dataclass(frozen=True)
class TorusMap:
    """Integer weight matrix sending torus parameters to the angle
    coordinates of a maximal torus."""

    group: str
    weights: IntMatrix
    source: str = ""

    @property
    def params(self) -> int:
        return self.weights.cols

    def apply(self, t) -> TorusPoint:
        return self.weights.apply_point(t)

    def restricted(self, which: str) -> "TorusMap":
        """Substitute parameters: 'left' sets p = 0, 'right' sets t = 0,
        'diagonal' sets t = p."""
        if self.params != 2:
            raise ValueError("restriction needs a 2-parameter map")
        if which == "left":
            rows = [[r[0]] for r in self.weights.data]
        elif which == "right":
            rows = [[r[1]] for r in self.weights.data]
        elif which == "diagonal":
            rows = [[r[0] + r[1]] for r in self.weights.data]
        else:
            raise ValueError(f"unknown restriction {which!r}")
        return TorusMap(self.group, IntMatrix(rows), source=f"{self.source}|{which}")

    def is_trivial(self) -> bool:
        return self.weights.is_zero()

    def __repr__(self) -> str:
        return f"TorusMap({self.group}, {self.source or self.weights!r})"


GROUP_DIMS = {"SU4": 4, "SO7": 7, "SPIN7": 7}


def _lex_positive(vec: tuple) -> Optional[tuple]:
    for x in vec:
        if x > 0:
            return vec
        if x < 0:
            return tuple(-y for y in vec)
    return None  # zero vector


def _rotation_slots(weights: list, slot_count: int) -> list:
    """Pair the +- weight multiset into rotation slots, descending."""
    zeros = sum(1 for w in weights if not any(w))
    nonzero = [w for w in weights if any(w)]
    canon: dict = {}
    for w in nonzero:
        canon[_lex_positive(w)] = canon.get(_lex_positive(w), 0) + 1
    slots = []
    for vec, count in canon.items():
        if count % 2 != 0:
            raise ValueError("weight multiset is not symmetric under negation")
        slots.extend([vec] * (count // 2))
    slots.extend([(0,) * len(weights[0])] * (zeros // 2))
    if len(slots) != slot_count:
        raise ValueError("weight multiset does not fill the rotation slots")
    slots.sort(reverse=True)
    return slots


def _as_vectors(rep: RepMultiset) -> list:
    if rep.kind == "su2":
        return [(w,) for w in rep.weights()]
    return [tuple(w) for w in rep.weights()]


def torus_weights(rep: RepMultiset, group: str) -> TorusMap:
    """The weight matrix of a representation seen inside a group's
    maximal torus coordinates."""
    group = group.upper()
    if group not in GROUP_DIMS:
        raise ValueError(f"unknown group {group!r}")
    if rep.dim != GROUP_DIMS[group]:
        raise ValueError(
            f"{rep.label()} has dimension {rep.dim}, {group} needs {GROUP_DIMS[group]}"
        )
    vectors = _as_vectors(rep)
    if group == "SU4":
        vectors.sort(reverse=True)
        return TorusMap("SU4", IntMatrix(vectors), source=rep.label())
    if not rep.is_orthogonal():
        raise ValueError(f"{rep.label()} is not orthogonal")
    slots = _rotation_slots(vectors, 3)
    so7 = TorusMap("SO7", IntMatrix(slots), source=rep.label())
    if group == "SO7":
        return so7
    return spin7_lift(so7)


def spin7_lift(so7_map: TorusMap) -> TorusMap:
    """Lift an SO(7) weight matrix through the double cover: halve the
    rotation rows into (alpha, beta, gamma) and emit the four SO(8)
    coordinate rows.  Honest representations always lift integrally."""
    if so7_map.group != "SO7":
        raise ValueError("lift starts from an SO7 map")
    w = so7_map.weights
    rows = []
    for coeffs in SPIN_LIFT_COEFFS:
        row = []
        for col in range(w.cols):
            twice = sum(c * w.data[r][col] for r, c in enumerate(coeffs))
            if twice % 2 != 0:
                raise ValueError("non-integral lift: not the weight matrix of a representation")
            row.append(twice // 2)
        rows.append(row)
    return TorusMap("SPIN7", IntMatrix(rows), source=so7_map.source)


def descend_spin7(tm: TorusMap) -> TorusMap:
    """Push a rank-4 weight matrix back down to SO(7) rotation rows."""
    if tm.group != "SPIN7":
        raise ValueError("descent starts from a SPIN7 map")
    return TorusMap("SO7", so7_weights_from_so8(tm.weights), source=tm.source)


# ---------------------------------------------------------------------------
# The named 7-dimensional representations of SU(2)


NAMED_SU2_SO7 = {
    "A": RepMultiset.su2((0, 4), (2, 1)),
    "B": RepMultiset.su2((0, 3), (1, 2)),
    "C": RepMultiset.su2((0, 2), (4, 1)),
    "D": RepMultiset.su2((0, 1), (2, 2)),
    "E": RepMultiset.su2((1, 2), (2, 1)),
    "F": RepMultiset.su2((6, 1)),
}


def named_su2_label(rep: RepMultiset) -> Optional[str]:
    for label, named in NAMED_SU2_SO7.items():
        if named == rep:
            return label
    return None


def su2_rep_by_label(label: str) -> RepMultiset:
    try:
        return NAMED_SU2_SO7[label.upper()]
    except KeyError:
        raise ValueError(f"unknown representation label {label!r}") from None


def su2_label_of_map(tm: TorusMap) -> Optional[str]:
    """Classify a one-parameter weight map against the named reps A..F by
    Weyl-orbit equality of the weight matrix; 'trivial' for the zero map."""
    from .groups import build_group_model, weyl_equivalent_weights

    if tm.is_trivial():
        return "trivial"
    model = build_group_model(tm.group)
    for label, rep in NAMED_SU2_SO7.items():
        if tm.group == "SU4":
            continue
        named = torus_weights(rep, tm.group)
        if weyl_equivalent_weights(model, tm.weights, named.weights):
            return label
    return None


def restrict_su2xsu2(obj, which: str) -> tuple:
    """Restrict a two-parameter representation or weight map to an SU(2)
    subgroup ('left': second parameter 0, 'right': first parameter 0, or
    'diagonal') and classify the result against the named reps.

    Returns (one-parameter TorusMap, label), the label being 'A'..'F',
    'trivial', or None when no named rep matches (SU(4) data).
    """
    if isinstance(obj, RepMultiset):
        tm = torus_weights(obj, "SPIN7")
    elif isinstance(obj, TorusMap):
        tm = obj
    else:
        raise TypeError("expected a RepMultiset or TorusMap")
    restricted = tm.restricted(which)
    return restricted, su2_label_of_map(restricted)


# ---------------------------------------------------------------------------
# SU(2)^2 homomorphism descriptors


@dataclass(frozen=True)
class CandidateMap:
    """A homomorphism from SU(2)^2 into the ambient group: either a
    finite-kernel representation, a projection to one factor followed by
    an SU(2) representation, or the trivial map."""

    kind: str  # "finite" | "proj" | "trivial"
    rep: Optional[RepMultiset] = None
    factor: Optional[int] = None
    su2: Optional[RepMultiset] = None

    @classmethod
    def finite(cls, rep: RepMultiset) -> "CandidateMap":
        if not rep.has_finite_kernel():
            raise ValueError(f"{rep.label()} does not have finite kernel")
        return cls(kind="finite", rep=rep)

    @classmethod
    def projected(cls, factor: int, su2_rep: RepMultiset) -> "CandidateMap":
        if factor not in (1, 2):
            raise ValueError("factor must be 1 or 2")
        if su2_rep.kind != "su2" or su2_rep.is_trivial():
            raise ValueError("projection needs a nontrivial SU(2) representation")
        return cls(kind="proj", factor=factor, su2=su2_rep)

    @classmethod
    def trivial(cls) -> "CandidateMap":
        return cls(kind="trivial")

    def is_trivial(self) -> bool:
        return self.kind == "trivial"

    def label(self) -> str:
        if self.kind == "trivial":
            return "trivial"
        if self.kind == "finite":
            return self.rep.label()
        named = named_su2_label(self.su2)
        return f"proj{self.factor}:{named or self.su2.label()}"

    def swapped(self) -> "CandidateMap":
        if self.kind == "trivial":
            return self
        if self.kind == "finite":
            return CandidateMap.finite(self.rep.swapped())
        return CandidateMap(kind="proj", factor=3 - self.factor, su2=self.su2)

    def sort_key(self) -> tuple:
        if self.kind == "trivial":
            return (0,)
        if self.kind == "proj":
            return (1, self.factor, self.su2.parts)
        return (2, self.rep.parts)

    def restriction(self, which: str) -> Optional[RepMultiset]:
        """The induced SU(2) representation on a subgroup, or None when
        the restriction is trivial."""
        if self.kind == "trivial":
            return None
        if self.kind == "finite":
            res = self.rep.restricted(which)
            return None if res.is_trivial() else res
        alive = {"left": self.factor == 1, "right": self.factor == 2, "diagonal": True}
        if which not in alive:
            raise ValueError(f"unknown restriction {which!r}")
        return self.su2 if alive[which] else None

    def torus_map(self, group: str) -> TorusMap:
        group = group.upper()
        rows = GROUP_DIMS[group] if group == "SU4" else (3 if group == "SO7" else 4)
        if self.kind == "trivial":
            return TorusMap(group, IntMatrix.zero(rows, 2), source="trivial")
        if self.kind == "finite":
            tm = torus_weights(self.rep, group)
            return TorusMap(group, tm.weights, source=self.label())
        one_param = torus_weights(self.su2, group)
        data = []
        for r in one_param.weights.data:
            data.append((r[0], 0) if self.factor == 1 else (0, r[0]))
        return TorusMap(group, IntMatrix(data), source=self.label())

    def __repr__(self) -> str:
        return f"Candidate[{self.label()}]"


def restriction_label(res: Optional[RepMultiset]) -> str:
    if res is None:
        return "trivial"
    return named_su2_label(res) or res.label()


# ---------------------------------------------------------------------------
# Parsing of representation specifications


_TERM_RE = re.compile(r"(\d*)phi(\d+)$")


def _parse_multiset(text: str, offset: int = 0) -> RepMultiset:
    terms = text.split("+")
    parts = []
    pos = offset
    arities = set()
    for term in terms:
        m = _TERM_RE.match(term.strip())
        if not m:
            raise ValueError(f"bad representation term {term!r} at position {pos}")
        mult = int(m.group(1)) if m.group(1) else 1
        digits = m.group(2)
        if len(digits) == 1:
            parts.append((Su2Irrep(int(digits)), mult))
            arities.add(1)
        elif len(digits) == 2:
            parts.append((Su2xSu2Irrep(int(digits[0]), int(digits[1])), mult))
            arities.add(2)
        else:
            raise ValueError(
                f"bad irrep index {digits!r} at position {pos}: use one digit for "
                "SU(2), two for SU(2)^2"
            )
        pos += len(term) + 1
    if len(arities) != 1:
        raise ValueError(f"mixed SU(2) and SU(2)^2 terms in {text!r}")
    return RepMultiset.of(parts)


def parse_rep_spec(text: str):
    """Parse a representation specification.

    Returns ("su2", RepMultiset) for plain SU(2) data (phi terms or a
    named label A..F) and ("su2xsu2", CandidateMap) for SU(2)^2 data
    (two-digit phi terms, projections, or "trivial").
    """
    text = text.strip()
    if not text:
        raise ValueError("empty representation spec at position 0")
    if text.lower() == "trivial":
        return ("su2xsu2", CandidateMap.trivial())
    if len(text) == 1 and text.upper() in NAMED_SU2_SO7:
        return ("su2", NAMED_SU2_SO7[text.upper()])
    if text.lower().startswith("proj"):
        m = re.match(r"proj([12]):(.+)$", text, re.IGNORECASE)
        if not m:
            raise ValueError(f"bad projection spec {text!r} at position 4")
        inner = m.group(2).strip()
        if len(inner) == 1 and inner.upper() in NAMED_SU2_SO7:
            su2_rep = NAMED_SU2_SO7[inner.upper()]
        else:
            su2_rep = _parse_multiset(inner, offset=len(text) - len(inner))
            if su2_rep.kind != "su2":
                raise ValueError(f"projection body must be an SU(2) spec in {text!r}")
        return ("su2xsu2", CandidateMap.projected(int(m.group(1)), su2_rep))
    rep = _parse_multiset(text)
    if rep.kind == "su2":
        return ("su2", rep)
    if rep.has_finite_kernel():
        return ("su2xsu2", CandidateMap.finite(rep))
    if rep.is_trivial():
        return ("su2xsu2", CandidateMap.trivial())
    # an SU(2)^2 multiset living on one factor is a projection in disguise
    factor = rep.depends_on()[0]
    which = "left" if factor == 1 else "right"
    return ("su2xsu2", CandidateMap.projected(factor, rep.restricted(which)))
