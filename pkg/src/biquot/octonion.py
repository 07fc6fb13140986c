"""Octonion arithmetic over exact rationals.

The octonions are modeled as pairs of quaternions, O = H + H*l, with
multiplication (a + b*l)(c + d*l) = (ac - conj(d) b) + (d a + b conj(c)) l.
Basis order: e0=1, e1=i, e2=j, e3=k, e4=l, e5=il, e6=jl, e7=kl, declared
orthonormal.  Left multiplication gives 8x8 rational matrices, and the
hat embedding puts an octonion inside 16x16 matrices where pairs of unit
imaginary elements generate the rotation group used by the spin model.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .linalg import RatMatrix

BASIS_NAMES = ("1", "i", "j", "k", "l", "il", "jl", "kl")


def _quat_mul(a: tuple, b: tuple) -> tuple:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


def _quat_conj(a: tuple) -> tuple:
    return (a[0], -a[1], -a[2], -a[3])


class Octonion:
    """An octonion with eight exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable) -> None:
        cs = tuple(Fraction(c) for c in coeffs)
        if len(cs) != 8:
            raise ValueError("octonion needs 8 coefficients")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def basis(cls, k: int) -> "Octonion":
        return cls(tuple(int(i == k) for i in range(8)))

    @classmethod
    def zero(cls) -> "Octonion":
        return cls((0,) * 8)

    @classmethod
    def one(cls) -> "Octonion":
        return cls.basis(0)

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> "Octonion":
        return Octonion(-a for a in self.coeffs)

    def scaled(self, k) -> "Octonion":
        k = Fraction(k)
        return Octonion(k * a for a in self.coeffs)

    def __mul__(self, other: "Octonion") -> "Octonion":
        a, b = self.coeffs[:4], self.coeffs[4:]
        c, d = other.coeffs[:4], other.coeffs[4:]
        first = tuple(
            x - y for x, y in zip(_quat_mul(a, c), _quat_mul(_quat_conj(d), b))
        )
        second = tuple(
            x + y for x, y in zip(_quat_mul(d, a), _quat_mul(b, _quat_conj(c)))
        )
        return Octonion(first + second)

    def conjugate(self) -> "Octonion":
        c = self.coeffs
        return Octonion((c[0],) + tuple(-x for x in c[1:]))

    def inner(self, other: "Octonion") -> Fraction:
        return sum(a * b for a, b in zip(self.coeffs, other.coeffs))

    def norm_sq(self) -> Fraction:
        return self.inner(self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Octonion) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        parts = []
        for c, name in zip(self.coeffs, BASIS_NAMES):
            if c != 0:
                parts.append(f"{c}*{name}" if name != "1" else f"{c}")
        return " + ".join(parts) if parts else "0"

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")


def oct_mul(x: Octonion, y: Octonion) -> Octonion:
    return x * y


# Products e_row * e_col of the imaginary units, recorded independently
# of the quaternion-pair product as (sign, basis index); -1 means (-1, 0).
IMAGINARY_PRODUCT_TABLE = {
    (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2), (1, 4): (1, 5),
    (1, 5): (-1, 4), (1, 6): (-1, 7), (1, 7): (1, 6),
    (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1), (2, 4): (1, 6),
    (2, 5): (1, 7), (2, 6): (-1, 4), (2, 7): (-1, 5),
    (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0), (3, 4): (1, 7),
    (3, 5): (-1, 6), (3, 6): (1, 5), (3, 7): (-1, 4),
    (4, 1): (-1, 5), (4, 2): (-1, 6), (4, 3): (-1, 7), (4, 4): (-1, 0),
    (4, 5): (1, 1), (4, 6): (1, 2), (4, 7): (1, 3),
    (5, 1): (1, 4), (5, 2): (-1, 7), (5, 3): (1, 6), (5, 4): (-1, 1),
    (5, 5): (-1, 0), (5, 6): (-1, 3), (5, 7): (1, 2),
    (6, 1): (1, 7), (6, 2): (1, 4), (6, 3): (-1, 5), (6, 4): (-1, 2),
    (6, 5): (1, 3), (6, 6): (-1, 0), (6, 7): (-1, 1),
    (7, 1): (-1, 6), (7, 2): (1, 5), (7, 3): (1, 4), (7, 4): (-1, 3),
    (7, 5): (-1, 2), (7, 6): (1, 1), (7, 7): (-1, 0),
}


def left_mult_matrix(x: Octonion) -> RatMatrix:
    """8x8 matrix of y -> x*y; column b holds the coefficients of x*e_b."""
    cols = [(x * Octonion.basis(b)).coeffs for b in range(8)]
    return RatMatrix(zip(*cols))


def clifford_hat(x: Octonion) -> RatMatrix:
    """The 16x16 embedding [[0, -L_xbar], [L_x, 0]]."""
    lx = left_mult_matrix(x)
    lxbar = left_mult_matrix(x.conjugate())
    zero = RatMatrix.zero(8, 8)
    return RatMatrix.block2x2(zero, -lxbar, lx, zero)
