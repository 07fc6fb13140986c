"""Self-contained verification suites for the octonion model and the
Weyl-group machinery.  Each check returns (name, ok, detail); the CLI
turns failures into a nonzero exit status and the test suite asserts
them individually.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .groups import (
    SignedPermutation,
    build_group_model,
    conjugators,
    orbit_of_relation,
    so8_weyl,
    torus_conjugate,
)
from .linalg import RatMatrix, TorusPoint
from .octonion import (
    IMAGINARY_PRODUCT_TABLE,
    Octonion,
    clifford_hat,
    left_mult_matrix,
)
from .spin7 import (
    SpinTorusParams,
    Surd,
    SurdMatrix,
    B_MATRIX,
    displayed_generator,
    exact_cos_turn,
    exact_sin_turn,
    rotation_generator,
    spin_element,
    spin_product_symbolic,
    spin_to_so8_torus,
    so7_rotation_of,
    so8_to_so7_torus,
    standard_torus_target,
)

F = Fraction


def _sample_octonions():
    return [
        Octonion((F(3, 5), F(4, 5), 0, 0, 0, 0, 0, 0)),
        Octonion((0, F(1, 3), F(2, 3), F(2, 3), 0, 0, 0, 0)),
        Octonion((F(1, 2), 0, F(1, 2), 0, F(1, 2), 0, F(1, 2), 0)),
        Octonion((1, 1, 1, 1, 1, 1, 1, 1)),
        Octonion((0, 0, 0, 0, 0, F(5, 13), 0, F(12, 13))),
    ]


def octonion_checks() -> list:
    checks = []
    e = Octonion.basis

    ok = all(e(0) * e(b) == e(b) and e(b) * e(0) == e(b) for b in range(8))
    checks.append(("unit element", ok, "e0 * x == x == x * e0 on the basis"))

    bad = []
    for (i, j), (sign, k) in IMAGINARY_PRODUCT_TABLE.items():
        expect = e(k).scaled(sign)
        if e(i) * e(j) != expect:
            bad.append((i, j))
    checks.append(
        ("imaginary product table", not bad, f"49 products; mismatches: {bad}")
    )

    ok = True
    for x in _sample_octonions():
        for y in _sample_octonions():
            if (x * y).norm_sq() != x.norm_sq() * y.norm_sq():
                ok = False
    for i in range(8):
        for j in range(8):
            for si, sj in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
                x, y = e(i).scaled(si), e(j).scaled(sj)
                if (x * y).norm_sq() != x.norm_sq() * y.norm_sq():
                    ok = False
    checks.append(("norm multiplicativity", ok, "signed basis pairs and rational samples"))

    I8 = RatMatrix.identity(8)
    ok = all(
        left_mult_matrix(x.conjugate()) @ left_mult_matrix(x) == I8.scaled(x.norm_sq())
        for x in _sample_octonions()
    )
    checks.append(("isometry of left multiplication", ok, "L_xbar L_x == <x,x> I"))

    ok = True
    for i in range(8):
        for j in range(8):
            x, y = e(i), e(j)
            lhs = left_mult_matrix(x.conjugate()) @ left_mult_matrix(y) + left_mult_matrix(
                y.conjugate()
            ) @ left_mult_matrix(x)
            if lhs != I8.scaled(2 * x.inner(y)):
                ok = False
    checks.append(("polarized isometry identity", ok, "all 64 basis pairs"))

    I16 = RatMatrix.identity(16)
    ok = True
    for i in range(8):
        for j in range(8):
            xh, yh = clifford_hat(e(i)), clifford_hat(e(j))
            if xh @ yh + yh @ xh != I16.scaled(-2 * e(i).inner(e(j))):
                ok = False
    checks.append(("hat anticommutation", ok, "x^ y^ + y^ x^ == -2 <x,y> I_16, 64 pairs"))

    vh = clifford_hat(e(1))
    vinv = -vh
    ok = (
        vh @ vinv == I16
        and vh @ clifford_hat(e(1)) @ vinv == clifford_hat(e(1))
        and vh @ clifford_hat(e(2)) @ vinv == -clifford_hat(e(2))
    )
    checks.append(("reflection by a unit imaginary", ok, "fixes itself, negates the complement"))
    return checks


def spin_torus_checks() -> list:
    checks = []
    gens = [rotation_generator(n) for n in (1, 2, 3)]

    ok = all(gens[n - 1] == displayed_generator(n) for n in (1, 2, 3))
    checks.append(
        ("generators from left multiplications", ok, "match the displayed matrices symbolically")
    )

    ok = all(
        gens[i] @ gens[j] == gens[j] @ gens[i]
        for i, j in itertools.combinations(range(3), 2)
    )
    checks.append(("generator commutation", ok, "A1, A2, A3 pairwise commute"))

    ok = spin_product_symbolic().conjugate_by(B_MATRIX) == standard_torus_target()
    checks.append(
        (
            "torus normal form",
            ok,
            "B A1 A2 A3 B^-1 == R(a+b-c, a-b-c, a-b+c, a+b+c) exactly",
        )
    )

    samples = [
        (F(1, 4), F(0), F(0)),
        (F(1, 6), F(1, 3), F(1, 8)),
        (F(1, 2), F(1, 3), F(1, 12)),
        (F(5, 6), F(3, 4), F(7, 12)),
    ]
    ok = True
    for a, b, c in samples:
        h = spin_element(SpinTorusParams(a, b, c))
        if h @ h.transpose() != SurdMatrix.identity(8):
            ok = False
    checks.append(("orthogonality at exact angles", ok, f"{len(samples)} samples"))

    ok = True
    for a, b, c in samples:
        h = spin_element(SpinTorusParams(a, b, c))
        pi_h = so7_rotation_of(h)
        expect = _so7_block_rotation((2 * a) % 1, (2 * b) % 1, (2 * c) % 1)
        if pi_h != expect:
            ok = False
    checks.append(
        (
            "covering projection",
            ok,
            "conjugation on hatted imaginaries rotates the three planes by "
            "twice the parameters (clockwise in the chosen orientation)",
        )
    )

    ok = True
    for a, b, c in [(F(1, 5), F(2, 7), F(3, 11)), (F(1, 2), F(1, 3), F(5, 9))]:
        p = SpinTorusParams(a, b, c)
        t = spin_to_so8_torus(p)
        if not t.satisfies_torus_relation():
            ok = False
        back = so8_to_so7_torus(t)
        if back != ((2 * a) % 1, (2 * b) % 1, (2 * c) % 1):
            ok = False
    checks.append(("angle doubling roundtrip", ok, "so8 coords recover (2a, 2b, 2c)"))

    ok = True
    for coeffs, t_expected in (
        ((F(1, 5), 0, 0), (F(1, 5),) * 4),
        ((F(1, 10), F(1, 10), 0), (F(1, 5), 0, 0, F(1, 5))),
    ):
        t = spin_to_so8_torus(SpinTorusParams(*coeffs))
        if t.point.coords != t_expected:
            ok = False
    checks.append(("named lift columns", ok, "sample parameter lines land as expected"))
    return checks


def _so7_block_rotation(a2, b2, c2) -> SurdMatrix:
    rows = [[Surd(0)] * 8 for _ in range(8)]
    rows[0][0] = Surd(1)
    rows[7][7] = Surd(1)
    for blk, ang in enumerate((a2, b2, c2)):
        i = 1 + 2 * blk
        c, s = exact_cos_turn(ang), exact_sin_turn(ang)
        rows[i][i] = c
        rows[i][i + 1] = s
        rows[i + 1][i] = -s
        rows[i + 1][i + 1] = c
    return SurdMatrix(rows)


def weyl_checks() -> list:
    checks = []
    checks.append(
        ("SO(8) Weyl order", len(so8_weyl()) == 192, f"got {len(so8_weyl())}, want 192")
    )
    spin = build_group_model("SPIN7")
    so7 = build_group_model("SO7")
    su4 = build_group_model("SU4")
    checks.append(
        ("torus stabilizer order", len(spin.weyl) == 48, f"got {len(spin.weyl)}, want 48")
    )
    checks.append(("SO(7) Weyl order", len(so7.weyl) == 48, f"got {len(so7.weyl)}"))
    checks.append(("SU(4) Weyl order", len(su4.weyl) == 24, f"got {len(su4.weyl)}"))
    checks.append(
        (
            "sublattice orbit",
            orbit_of_relation((1, -1, 1, -1)) == 4,
            "orbit of the defining relation under the 192",
        )
    )

    g1 = SignedPermutation((0, 2, 1, 3), (1, -1, -1, 1))
    g2 = SignedPermutation((2, 1, 0, 3), (1, 1, 1, 1))
    g3 = SignedPermutation((1, 0, 3, 2), (1, 1, 1, 1))
    generated = {SignedPermutation.identity(4)}
    frontier = list(generated)
    while frontier:
        new = []
        for x in frontier:
            for g in (g1, g2, g3):
                y = x.compose(g)
                if y not in generated:
                    generated.add(y)
                    new.append(y)
        frontier = new
    checks.append(
        (
            "stabilizer generators",
            generated == set(spin.weyl),
            f"three named generators produce {len(generated)} elements",
        )
    )

    ok = True
    for model in (spin, so7, su4):
        elems = set(model.weyl)
        for w1 in model.weyl:
            if w1.inverse() not in elems:
                ok = False
            for w2 in model.weyl:
                if w1.compose(w2) not in elems:
                    ok = False
    checks.append(("Weyl closure", ok, "composition and inversion stay inside"))

    ok = True
    for model in (spin, su4):
        for w in model.weyl:
            for c in model.center:
                if not model.is_central(w.apply(c)):
                    ok = False
    checks.append(("center preserved", ok, "Weyl action fixes the center setwise"))

    a = TorusPoint((0, F(1, 3), F(1, 3), 0))
    b = TorusPoint((F(-1, 3), 0, 0, F(-1, 3)))
    w = torus_conjugate(spin, a, b)
    expected_w = SignedPermutation((1, 0, 3, 2), (-1, -1, -1, -1))
    checks.append(
        (
            "order-3 conjugacy example",
            w is not None and expected_w in conjugators(spin, a, b),
            f"found {w}",
        )
    )
    return checks


def run_suite(suite: str) -> list:
    if suite == "spin7":
        return octonion_checks() + spin_torus_checks()
    if suite == "weyl":
        return weyl_checks()
    raise ValueError(f"unknown suite {suite!r}")
