"""The rotation subgroup of SO(8) generated by paired unit imaginary
octonions, its maximal torus, and the double cover onto SO(7).

Three commuting one-parameter rotation families A1(alpha), A2(beta),
A3(gamma) arise as products of two left multiplications.  Conjugating by
an explicit integer matrix B turns A1*A2*A3 into the standard torus
R(t1, t2, t3, t4) with

    t1 = alpha + beta - gamma      t2 = alpha - beta - gamma
    t3 = alpha - beta + gamma      t4 = alpha + beta + gamma

so torus points satisfy t1 + t3 = t2 + t4.  The covering onto SO(7)
sends R(t1, t2, t3, t4) to R(2*alpha, 2*beta, 2*gamma).

Exactness policy: the classifier only ever consumes the integer weight
maps above.  The explicit matrices exist for verification and are kept
exact two ways: symbolically, as matrices of multilinear cos/sin
monomials with rational coefficient matrices, and numerically at turn
fractions whose cosine and sine lie in Q(sqrt2, sqrt3).  The gamma
family rotates 1 toward k by cos(gamma)/sin(gamma), matching the
displayed matrix convention throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import IntMatrix, RatMatrix, TorusPoint
from .octonion import Octonion, left_mult_matrix

ANGLE_COUNT = 3

# rows: coefficients of (alpha, beta, gamma) in (t1, t2, t3, t4)
SPIN_LIFT_COEFFS = ((1, 1, -1), (1, -1, -1), (1, -1, 1), (1, 1, 1))

# integer linear form cutting out the maximal torus inside the SO(8) torus
SPIN7_TORUS_RELATION = (1, -1, 1, -1)

SUPPORTED_DENOMINATORS = frozenset({1, 2, 3, 4, 6, 8, 12})


class UnsupportedAngleError(ValueError):
    """Raised when an exact evaluation is requested at a turn fraction
    whose denominator has no representation in Q(sqrt2, sqrt3) here."""

    def __init__(self, denominator: int) -> None:
        super().__init__(
            f"turn-fraction denominator {denominator} not supported for exact "
            f"evaluation; supported denominators: {sorted(SUPPORTED_DENOMINATORS)}"
        )
        self.denominator = denominator


# ---------------------------------------------------------------------------
# Q(sqrt2, sqrt3) scalars


class Surd:
    """a + b*sqrt2 + c*sqrt3 + d*sqrt6 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0) -> None:
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))
        object.__setattr__(self, "c", Fraction(c))
        object.__setattr__(self, "d", Fraction(d))

    def __add__(self, o: "Surd") -> "Surd":
        return Surd(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    def __sub__(self, o: "Surd") -> "Surd":
        return Surd(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __neg__(self) -> "Surd":
        return Surd(-self.a, -self.b, -self.c, -self.d)

    def __mul__(self, o: "Surd") -> "Surd":
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Surd(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0 and self.c == 0 and self.d == 0

    def __eq__(self, o) -> bool:
        return (
            isinstance(o, Surd)
            and (self.a, self.b, self.c, self.d) == (o.a, o.b, o.c, o.d)
        )

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.c, self.d))

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * 2 ** 0.5 + float(self.c) * 3 ** 0.5 + float(self.d) * 6 ** 0.5

    def __repr__(self) -> str:
        terms = []
        for coef, tag in ((self.a, ""), (self.b, "*r2"), (self.c, "*r3"), (self.d, "*r6")):
            if coef != 0:
                terms.append(f"{coef}{tag}")
        return " + ".join(terms) if terms else "0"

    def __setattr__(self, name, value):
        raise AttributeError("Surd is immutable")


_S0 = Surd(0)
_S1 = Surd(1)
_HALF = Surd(Fraction(1, 2))
_HALF_R2 = Surd(0, Fraction(1, 2))
_HALF_R3 = Surd(0, 0, Fraction(1, 2))

# cos of k/24 of a turn for the k reachable from supported denominators
_COS_BASE = {0: _S1, 2: _HALF_R3, 3: _HALF_R2, 4: _HALF, 6: _S0}


def _cos_24(k: int) -> Surd:
    k %= 24
    if k > 12:
        k = 24 - k
    if k in _COS_BASE:
        return _COS_BASE[k]
    if (12 - k) in _COS_BASE:
        return -_COS_BASE[12 - k]
    raise UnsupportedAngleError(24)


def exact_cos_turn(q: Fraction) -> Surd:
    q = Fraction(q) % 1
    if q.denominator not in SUPPORTED_DENOMINATORS:
        raise UnsupportedAngleError(q.denominator)
    return _cos_24(int(q * 24))


def exact_sin_turn(q: Fraction) -> Surd:
    q = Fraction(q) % 1
    if q.denominator not in SUPPORTED_DENOMINATORS:
        raise UnsupportedAngleError(q.denominator)
    return _cos_24(6 - int(q * 24))


class SurdMatrix:
    """Dense matrix over Q(sqrt2, sqrt3); just enough for verification."""

    __slots__ = ("data",)

    def __init__(self, rows: Iterable[Iterable[Surd]]) -> None:
        object.__setattr__(self, "data", tuple(tuple(r) for r in rows))

    @classmethod
    def from_rat(cls, m: RatMatrix) -> "SurdMatrix":
        return cls([[Surd(x) for x in row] for row in m.data])

    @classmethod
    def identity(cls, n: int) -> "SurdMatrix":
        return cls([[Surd(int(i == j)) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    def transpose(self) -> "SurdMatrix":
        return SurdMatrix(zip(*self.data))

    def __matmul__(self, other: "SurdMatrix") -> "SurdMatrix":
        cols = other.transpose().data
        return SurdMatrix(
            [
                [
                    sum((a * b for a, b in zip(r, c)), _S0)
                    for c in cols
                ]
                for r in self.data
            ]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, SurdMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def __setattr__(self, name, value):
        raise AttributeError("SurdMatrix is immutable")


# ---------------------------------------------------------------------------
# Matrices of multilinear cos/sin monomials
#
# A monomial is a triple over {"1", "c", "s"}: slot n records whether the
# n-th angle enters as 1, cos or sin.  Because each generator involves a
# single angle, every product that occurs is multilinear and no identity
# like cos^2 + sin^2 = 1 is ever needed; equality of trig matrices is
# equality of rational coefficient matrices, monomial by monomial.

Mono = tuple

_MONO_ONE = ("1",) * ANGLE_COUNT


def _mono_mul(m1: Mono, m2: Mono) -> Mono:
    out = []
    for a, b in zip(m1, m2):
        if a == "1":
            out.append(b)
        elif b == "1":
            out.append(a)
        else:
            raise ValueError("repeated angle in trig monomial product")
    return tuple(out)


def _single_mono(angle: int, tag: str) -> Mono:
    parts = ["1"] * ANGLE_COUNT
    parts[angle] = tag
    return tuple(parts)


class TrigMatrix:
    """A matrix whose entries are rational combinations of multilinear
    cos/sin monomials in three angles, stored monomial-major."""

    __slots__ = ("size", "terms")

    def __init__(self, size: int, terms: dict) -> None:
        clean = {}
        for mono, mat in terms.items():
            if not all(x == 0 for row in mat.data for x in row):
                clean[mono] = mat
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def constant(cls, mat: RatMatrix) -> "TrigMatrix":
        return cls(mat.rows, {_MONO_ONE: mat})

    @classmethod
    def single_angle(cls, size: int, angle: int, cos_mat: RatMatrix, sin_mat: RatMatrix) -> "TrigMatrix":
        return cls(
            size,
            {
                _single_mono(angle, "c"): cos_mat,
                _single_mono(angle, "s"): sin_mat,
            },
        )

    def __matmul__(self, other: "TrigMatrix") -> "TrigMatrix":
        out: dict = {}
        for m1, a in self.terms.items():
            for m2, b in other.terms.items():
                mono = _mono_mul(m1, m2)
                prod = a @ b
                out[mono] = out[mono] + prod if mono in out else prod
        return TrigMatrix(self.size, out)

    def __add__(self, other: "TrigMatrix") -> "TrigMatrix":
        out = dict(self.terms)
        for mono, mat in other.terms.items():
            out[mono] = out[mono] + mat if mono in out else mat
        return TrigMatrix(self.size, out)

    def __sub__(self, other: "TrigMatrix") -> "TrigMatrix":
        return self + TrigMatrix(other.size, {m: -a for m, a in other.terms.items()})

    def conjugate_by(self, g: RatMatrix) -> "TrigMatrix":
        ginv = g.inverse()
        return TrigMatrix(
            self.size, {mono: g @ mat @ ginv for mono, mat in self.terms.items()}
        )

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TrigMatrix)
            and self.size == other.size
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.size, tuple(sorted(self.terms.items(), key=lambda kv: kv[0]))))

    def evaluate(self, angles: Sequence[Fraction]) -> SurdMatrix:
        """Exact value at turn fractions with supported denominators."""
        values = {}
        for mono in self.terms:
            v = _S1
            for slot, tag in enumerate(mono):
                if tag == "c":
                    v = v * exact_cos_turn(angles[slot])
                elif tag == "s":
                    v = v * exact_sin_turn(angles[slot])
            values[mono] = v
        n = self.size
        acc = [[_S0] * n for _ in range(n)]
        for mono, mat in self.terms.items():
            v = values[mono]
            for i in range(n):
                for j in range(n):
                    if mat.data[i][j] != 0:
                        acc[i][j] = acc[i][j] + Surd(mat.data[i][j]) * v
        return SurdMatrix(acc)

    def __setattr__(self, name, value):
        raise AttributeError("TrigMatrix is immutable")


def _expand_trig_form(coeffs: Sequence[int]) -> tuple:
    """cos and sin of an integer combination of the three angles, expanded
    into multilinear monomials.  Coefficients must lie in {-1, 0, 1}."""
    cos_poly = {_MONO_ONE: Fraction(1)}
    sin_poly: dict = {}

    def times_tag(poly, angle, tag):
        out = {}
        for mono, coef in poly.items():
            out[_mono_mul(mono, _single_mono(angle, tag))] = coef
        return out

    def add(p1, p2):
        out = dict(p1)
        for mono, coef in p2.items():
            out[mono] = out.get(mono, Fraction(0)) + coef
        return {m: c for m, c in out.items() if c != 0}

    def scale(poly, k):
        return {m: k * c for m, c in poly.items()}

    for angle, eps in enumerate(coeffs):
        if eps == 0:
            continue
        if eps not in (-1, 1):
            raise ValueError("angle coefficients must be -1, 0 or 1")
        new_cos = add(
            times_tag(cos_poly, angle, "c"), scale(times_tag(sin_poly, angle, "s"), -eps)
        )
        new_sin = add(
            times_tag(sin_poly, angle, "c"), scale(times_tag(cos_poly, angle, "s"), eps)
        )
        cos_poly, sin_poly = new_cos, new_sin
    return cos_poly, sin_poly


def standard_torus_trig(forms: Sequence[Sequence[int]]) -> TrigMatrix:
    """R(t1, ..., tk) as a trig matrix, where each t is an integer
    combination of the three angles; block b rotates coordinates
    (2b, 2b+1)."""
    k = len(forms)
    n = 2 * k
    terms: dict = {}

    def bump(mono, i, j, coef):
        if coef == 0:
            return
        if mono not in terms:
            terms[mono] = [[Fraction(0)] * n for _ in range(n)]
        terms[mono][i][j] += coef

    for b, form in enumerate(forms):
        cos_poly, sin_poly = _expand_trig_form(form)
        i = 2 * b
        for mono, coef in cos_poly.items():
            bump(mono, i, i, coef)
            bump(mono, i + 1, i + 1, coef)
        for mono, coef in sin_poly.items():
            bump(mono, i, i + 1, -coef)
            bump(mono, i + 1, i, coef)
    return TrigMatrix(n, {m: RatMatrix(rows) for m, rows in terms.items()})


# ---------------------------------------------------------------------------
# The three rotation generators and the base-change matrix

_GENERATOR_AXES = ((1, 2), (3, 4), (5, 6))  # octonion basis indices (v, w0)


def generator_pattern(n: int) -> RatMatrix:
    """Integer sine-pattern of the n-th generator (n = 1, 2, 3), namely
    -L(e_v) L(e_w) for the axis pair (v, w)."""
    v, w = _GENERATOR_AXES[n - 1]
    return -(left_mult_matrix(Octonion.basis(v)) @ left_mult_matrix(Octonion.basis(w)))


def rotation_generator(n: int) -> TrigMatrix:
    """A_n as a trig matrix in its own angle: cos * I + sin * pattern.

    This is L(v) L(w) for v = e_(2n-1) and w = -(cos * e_(2n-1) +
    sin * e_(2n)), using L(v)^2 = -I for unit imaginary v.
    """
    return TrigMatrix.single_angle(
        8, n - 1, RatMatrix.identity(8), generator_pattern(n)
    )


def _displayed(entries) -> RatMatrix:
    rows = [[0] * 8 for _ in range(8)]
    for i, j, v in entries:
        rows[i - 1][j - 1] = v
    return RatMatrix(rows)


# sine patterns of the displayed generator matrices, transcribed verbatim
DISPLAYED_SIN_PATTERNS = (
    _displayed(
        [(1, 4, 1), (2, 3, 1), (3, 2, -1), (4, 1, -1),
         (5, 8, -1), (6, 7, 1), (7, 6, -1), (8, 5, 1)]
    ),
    _displayed(
        [(1, 8, 1), (2, 7, 1), (3, 6, -1), (4, 5, 1),
         (5, 4, -1), (6, 3, 1), (7, 2, -1), (8, 1, -1)]
    ),
    _displayed(
        [(1, 4, -1), (2, 3, 1), (3, 2, -1), (4, 1, 1),
         (5, 8, 1), (6, 7, 1), (7, 6, -1), (8, 5, -1)]
    ),
)


def displayed_generator(n: int) -> TrigMatrix:
    return TrigMatrix.single_angle(
        8, n - 1, RatMatrix.identity(8), DISPLAYED_SIN_PATTERNS[n - 1]
    )


B_MATRIX = RatMatrix(
    [
        [0, 0, 0, 1, 0, 0, 0, 1],
        [1, 0, 0, 0, -1, 0, 0, 0],
        [0, 0, 0, 1, 0, 0, 0, -1],
        [1, 0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, -1, 0, 0],
        [0, 0, -1, 0, 0, 0, 1, 0],
        [0, 1, 0, 0, 0, 1, 0, 0],
        [0, 0, -1, 0, 0, 0, -1, 0],
    ]
)


def spin_product_symbolic() -> TrigMatrix:
    """A1(alpha) A2(beta) A3(gamma) as an exact trig matrix."""
    return rotation_generator(1) @ rotation_generator(2) @ rotation_generator(3)


def standard_torus_target() -> TrigMatrix:
    """R(t1, t2, t3, t4) for the four torus angle forms."""
    return standard_torus_trig(SPIN_LIFT_COEFFS)


# ---------------------------------------------------------------------------
# Torus-level types and maps


@dataclass(frozen=True)
class SpinTorusParams:
    """Rotation amounts (alpha, beta, gamma) as turn fractions mod 1."""

    alpha: Fraction
    beta: Fraction
    gamma: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha) % 1)
        object.__setattr__(self, "beta", Fraction(self.beta) % 1)
        object.__setattr__(self, "gamma", Fraction(self.gamma) % 1)

    def as_tuple(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class So8TorusPoint:
    """A point R(t1, t2, t3, t4) of the SO(8) torus, turn fractions."""

    point: TorusPoint

    def __post_init__(self):
        if self.point.rank != 4:
            raise ValueError("SO(8) torus point needs 4 coordinates")

    @classmethod
    def of(cls, coords: Iterable) -> "So8TorusPoint":
        return cls(TorusPoint(coords))

    def satisfies_torus_relation(self) -> bool:
        s = sum(
            c * x for c, x in zip(SPIN7_TORUS_RELATION, self.point.coords)
        )
        return s.denominator == 1


def spin_to_so8_torus(params: SpinTorusParams) -> So8TorusPoint:
    a, b, c = params.as_tuple()
    return So8TorusPoint.of(
        (a + b - c, a - b - c, a - b + c, a + b + c)
    )


def so8_to_so7_torus(t: So8TorusPoint) -> tuple:
    """Recover (2*alpha, 2*beta, 2*gamma) from a torus point.

    Well defined mod 1 via the integer formulas (t2+t4, t1-t2, t4-t1);
    rejects points outside the rank-3 subtorus.
    """
    if not t.satisfies_torus_relation():
        raise ValueError("not in the rank-3 torus: t1 + t3 != t2 + t4 (mod 1)")
    t1, t2, t3, t4 = t.point.coords
    return ((t2 + t4) % 1, (t1 - t2) % 1, (t4 - t1) % 1)


def so7_weights_from_so8(weights: IntMatrix) -> IntMatrix:
    """Push a 4-row SO(8) weight matrix down to 3 SO(7) rotation rows."""
    if weights.rows != 4:
        raise ValueError("expected 4 coordinate rows")
    r1, r2, r3, r4 = weights.data
    return IntMatrix(
        [
            [a + b for a, b in zip(r2, r4)],
            [a - b for a, b in zip(r1, r2)],
            [a - b for a, b in zip(r4, r1)],
        ]
    )


def spin_element(params: SpinTorusParams) -> SurdMatrix:
    """A1(alpha) A2(beta) A3(gamma) evaluated exactly.

    Raises UnsupportedAngleError when some turn fraction has a
    denominator outside the supported set.
    """
    return spin_product_symbolic().evaluate(params.as_tuple())


def so7_rotation_of(h: SurdMatrix) -> SurdMatrix:
    """The SO(7) image of h under conjugation on hatted imaginaries.

    h must commute with the hat structure as the generators do (h is a
    product of paired left multiplications); the image of e_b is read off
    as the first column of h L(e_b) h^T, and the output is the 8x8 matrix
    fixing e_0 whose lower-right 7x7 block is the rotation.
    """
    cols = []
    ht = h.transpose()
    for b in range(8):
        lb = SurdMatrix.from_rat(left_mult_matrix(Octonion.basis(b)))
        cols.append((h @ lb @ ht).column(0))
    return SurdMatrix(zip(*cols))
