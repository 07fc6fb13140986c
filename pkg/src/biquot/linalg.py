"""Exact linear algebra over the integers and rationals.

Everything in this module is exact.  Matrices carry arbitrary-precision
integer or Fraction entries, Smith normal form is computed by unimodular
row and column operations, and congruence systems ``M s = 0 (mod 1)`` on
a torus are solved into an explicit generating set: finite-order points
plus integer subtorus directions.  No floating point anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Optional, Sequence


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class TorusPoint:
    """A point of (R/Z)^r with rational coordinates, stored in [0, 1).

    Coordinates are turn fractions: coordinate c corresponds to the angle
    2*pi*c.  Reduction mod 1 happens eagerly so equality is structural.
    """

    __slots__ = ("coords",)

    def __init__(self, coords: Iterable) -> None:
        object.__setattr__(self, "coords", tuple(_frac(c) % 1 for c in coords))

    @classmethod
    def zero(cls, rank: int) -> "TorusPoint":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def __add__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(a + b for a, b in zip(self.coords, other.coords, strict=True))

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(a - b for a, b in zip(self.coords, other.coords, strict=True))

    def __neg__(self) -> "TorusPoint":
        return TorusPoint(-c for c in self.coords)

    def scaled(self, k) -> "TorusPoint":
        k = _frac(k)
        return TorusPoint(k * c for c in self.coords)

    def order(self) -> int:
        """Order as a group element; finite because coords are rational."""
        return lcm(*(c.denominator for c in self.coords)) if self.coords else 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, TorusPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(self.coords)

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __setattr__(self, name, value):
        raise AttributeError("TorusPoint is immutable")


class IntMatrix:
    """Immutable matrix with arbitrary-precision integer entries."""

    __slots__ = ("data",)

    def __init__(self, rows: Iterable[Iterable[int]]) -> None:
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        if len({len(r) for r in data}) != 1:
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, m: int, n: int) -> "IntMatrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def vstack(cls, top: "IntMatrix", bottom: "IntMatrix") -> "IntMatrix":
        if top.cols != bottom.cols:
            raise ValueError("column mismatch")
        return cls(top.data + bottom.data)

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    def row(self, i: int) -> tuple:
        return self.data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.data))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().data
        return IntMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.data]
        )

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data, strict=True)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return IntMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data, strict=True)
            ]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self.data])

    def is_zero(self) -> bool:
        return all(a == 0 for r in self.data for a in r)

    def apply_point(self, point) -> TorusPoint:
        """Image of a torus point under the linear map, reduced mod 1."""
        coords = point.coords if isinstance(point, TorusPoint) else tuple(point)
        return TorusPoint(
            sum(a * _frac(c) for a, c in zip(r, coords, strict=True)) for r in self.data
        )

    def maps_to_lattice(self, point) -> bool:
        """True iff M * point lands in Z^m before reduction."""
        coords = point.coords if isinstance(point, TorusPoint) else tuple(point)
        return all(
            sum(a * _frac(c) for a, c in zip(r, coords, strict=True)).denominator == 1
            for r in self.data
        )

    def apply_vector(self, v: Sequence[int]) -> tuple:
        return tuple(sum(a * b for a, b in zip(r, v, strict=True)) for r in self.data)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of non-square matrix")
        n = self.rows
        a = [list(r) for r in self.data]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
                a[i][k] = 0
            prev = a[k][k]
        return sign * a[n - 1][n - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return "IntMatrix(" + "; ".join(" ".join(map(str, r)) for r in self.data) + ")"

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")


class RatMatrix:
    """Immutable matrix over Fraction; used for the explicit 8x8 and 16x16
    matrices of the octonion model."""

    __slots__ = ("data",)

    def __init__(self, rows: Iterable[Iterable]) -> None:
        data = tuple(tuple(_frac(x) for x in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must be nonempty")
        if len({len(r) for r in data}) != 1:
            raise ValueError("ragged rows")
        object.__setattr__(self, "data", data)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, m: int, n: int) -> "RatMatrix":
        return cls([[0] * n for _ in range(m)])

    @classmethod
    def from_int(cls, m: IntMatrix) -> "RatMatrix":
        return cls(m.data)

    @classmethod
    def block2x2(cls, a: "RatMatrix", b: "RatMatrix", c: "RatMatrix", d: "RatMatrix") -> "RatMatrix":
        top = [ra + rb for ra, rb in zip(a.data, b.data)]
        bot = [rc + rd for rc, rd in zip(c.data, d.data)]
        return cls(top + bot)

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return len(self.data[0])

    def transpose(self) -> "RatMatrix":
        return RatMatrix(zip(*self.data))

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().data
        return RatMatrix(
            [[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.data]
        )

    def __add__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data, strict=True)
            ]
        )

    def __sub__(self, other: "RatMatrix") -> "RatMatrix":
        return RatMatrix(
            [
                [a - b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.data, other.data, strict=True)
            ]
        )

    def __neg__(self) -> "RatMatrix":
        return RatMatrix([[-a for a in r] for r in self.data])

    def scaled(self, k) -> "RatMatrix":
        k = _frac(k)
        return RatMatrix([[k * a for a in r] for r in self.data])

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.data)

    def inverse(self) -> "RatMatrix":
        """Exact inverse by Gauss-Jordan elimination."""
        if self.rows != self.cols:
            raise ValueError("inverse of non-square matrix")
        n = self.rows
        a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.data)]
        for k in range(n):
            piv = next((i for i in range(k, n) if a[i][k] != 0), None)
            if piv is None:
                raise ValueError("matrix is singular")
            a[k], a[piv] = a[piv], a[k]
            inv = 1 / a[k][k]
            a[k] = [x * inv for x in a[k]]
            for i in range(n):
                if i != k and a[i][k] != 0:
                    f = a[i][k]
                    a[i] = [x - f * y for x, y in zip(a[i], a[k])]
        return RatMatrix([row[n:] for row in a])

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for r in self.data for x in r)

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self.data == other.data

    def __hash__(self) -> int:
        return hash(self.data)

    def __repr__(self) -> str:
        return "RatMatrix(" + "; ".join(" ".join(map(str, r)) for r in self.data) + ")"

    def __setattr__(self, name, value):
        raise AttributeError("RatMatrix is immutable")


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form U * M * V = D with U, V unimodular and the
    diagonal entries of D nonnegative with d1 | d2 | ..."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def diagonal(self) -> tuple:
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D.data[i][i] for i in range(n))

    def verify(self, M: IntMatrix) -> None:
        """Raise AssertionError unless all postconditions hold for M."""
        assert self.U @ M @ self.V == self.D, "U*M*V != D"
        assert abs(self.U.det()) == 1, "U not unimodular"
        assert abs(self.V.det()) == 1, "V not unimodular"
        diag = self.diagonal()
        for i in range(self.D.rows):
            for j in range(self.D.cols):
                if i != j:
                    assert self.D.data[i][j] == 0, "D not diagonal"
        for a, b in zip(diag, diag[1:]):
            assert a >= 0 and b >= 0, "diagonal not normalized"
            if a == 0:
                assert b == 0, "zero before nonzero on diagonal"
            else:
                assert b % a == 0, "divisibility chain broken"


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Diagonalize an integer matrix by unimodular row/column operations.

    Pivot choice is the minimal nonzero absolute value in the remaining
    block, ties broken by lowest (row, col), which makes the output
    deterministic.
    """
    m, n = M.rows, M.cols
    a = [list(r) for r in M.data]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    k = 0
    while k < min(m, n):
        pivot = None
        for i in range(k, m):
            for j in range(k, n):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        if pivot[0] != k:
            swap_rows(k, pivot[0])
        if pivot[1] != k:
            swap_cols(k, pivot[1])
        if a[k][k] < 0:
            negate_row(k)

        dirty = False
        for i in range(k + 1, m):
            if a[i][k] != 0:
                add_row(k, i, -(a[i][k] // a[k][k]))
                if a[i][k] != 0:
                    dirty = True
        for j in range(k + 1, n):
            if a[k][j] != 0:
                add_col(k, j, -(a[k][j] // a[k][k]))
                if a[k][j] != 0:
                    dirty = True
        if dirty:
            continue
        # pivot must divide the whole remaining block for the chain to hold
        offender = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if a[i][j] % a[k][k] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, k, 1)
            continue
        k += 1

    return SnfResult(U=IntMatrix(u), D=IntMatrix(a), V=IntMatrix(v))


def _primitive(vec: Sequence[int]) -> tuple:
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g > 1:
        return tuple(x // g for x in vec)
    return tuple(vec)


@dataclass(frozen=True)
class TorusSubgroup:
    """Closed subgroup of (R/Z)^r given by finite-order generators and
    primitive integer subtorus directions.

    Produced by ``solve_torus_congruence``; the generated subgroup is the
    full solution set of the congruence system.
    """

    rank: int
    torsion_generators: tuple
    subtorus_directions: tuple

    def is_trivial(self) -> bool:
        return not self.torsion_generators and not self.subtorus_directions

    def torsion_closure(self) -> frozenset:
        """All elements of the finite subgroup generated by the torsion
        generators.  Small cases only."""
        seen = {TorusPoint.zero(self.rank)}
        frontier = list(seen)
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.torsion_generators:
                    q = p + g
                    if q not in seen:
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        return frozenset(seen)


def solve_torus_congruence(M: IntMatrix) -> TorusSubgroup:
    """Generators of { s in (R/Z)^r : M s in Z^m }.

    Via Smith normal form U M V = D: a coordinate with diagonal entry
    d != 0 contributes a torsion generator of order d, a zero column of D
    contributes a subtorus direction; both transformed back through V.
    """
    snf = smith_normal_form(M)
    r = M.cols
    diag = snf.diagonal()
    torsion = []
    directions = []
    for j in range(r):
        d = diag[j] if j < len(diag) else 0
        col = snf.V.column(j)
        if d == 0:
            directions.append(_primitive(col))
        elif d > 1:
            torsion.append(TorusPoint(Fraction(c, d) for c in col))
    return TorusSubgroup(
        rank=r,
        torsion_generators=tuple(torsion),
        subtorus_directions=tuple(directions),
    )


def solve_affine_torus_congruence(M: IntMatrix, target: Sequence) -> Optional[TorusPoint]:
    """A particular solution of M s = target (mod 1), or None.

    Solvability is read off the Smith form: after transforming the right
    hand side by U, rows with a nonzero diagonal entry are always
    solvable, rows with a zero diagonal entry demand an integral value.
    """
    snf = smith_normal_form(M)
    c = [_frac(t) for t in target]
    if len(c) != M.rows:
        raise ValueError("target length mismatch")
    uc = [sum(a * x for a, x in zip(row, c)) for row in snf.U.data]
    diag = snf.diagonal()
    r = M.cols
    y = [Fraction(0)] * r
    for i in range(M.rows):
        d = diag[i] if i < min(len(diag), r) else 0
        if d != 0:
            y[i] = uc[i] / d
        elif uc[i].denominator != 1:
            return None
    return snf.V.apply_point(y)


def subgroup_contained_in(
    sub: TorusSubgroup,
    member: Callable[[TorusPoint], bool],
    direction_ok: Callable[[tuple], bool],
) -> bool:
    """Containment of a generated subgroup in a membership-defined K.

    Sound only when K is a subgroup (caller's contract): then containment
    holds iff every torsion generator is a member and every subtorus
    direction passes the direction test.
    """
    return all(member(g) for g in sub.torsion_generators) and all(
        direction_ok(v) for v in sub.subtorus_directions
    )


def enumerate_grid_points(rank: int, denominator: int):
    """All points of (R/Z)^rank with coordinates in (1/denominator) Z."""
    fracs = [Fraction(k, denominator) for k in range(denominator)]
    for combo in itertools.product(fracs, repeat=rank):
        yield TorusPoint(combo)
