import itertools
import random
from fractions import Fraction
from math import gcd, lcm

import pytest

from biquot.linalg import (
    IntMatrix,
    RatMatrix,
    TorusPoint,
    enumerate_grid_points,
    smith_normal_form,
    solve_affine_torus_congruence,
    solve_torus_congruence,
    subgroup_contained_in,
)

F = Fraction


# --- independent oracle: determinantal divisors -------------------------


def _minor_gcd(m: IntMatrix, k: int) -> int:
    """gcd of all k x k minors, computed by brute-force expansion."""
    if k == 0:
        return 1
    g = 0
    for rows in itertools.combinations(range(m.rows), k):
        for cols in itertools.combinations(range(m.cols), k):
            sub = IntMatrix([[m.data[i][j] for j in cols] for i in rows])
            g = gcd(g, sub.det())
    return g


def _divisors_oracle(m: IntMatrix) -> tuple:
    out = []
    prev = 1
    for k in range(1, min(m.rows, m.cols) + 1):
        g = _minor_gcd(m, k)
        if g == 0:
            out.append(0)
        else:
            out.append(g // prev)
            prev = g
    return tuple(out)


def test_torus_point_canonical_form():
    p = TorusPoint((F(-1, 3), F(7, 2), 2))
    assert p.coords == (F(2, 3), F(1, 2), 0)
    assert p.order() == 6
    assert (p + (-p)).is_zero()
    assert p.scaled(3).coords == (0, F(1, 2), 0)


def test_int_matrix_det_and_ops():
    m = IntMatrix([[4, 3, 0], [-3, 4, 0], [0, 0, 5]])
    assert m.det() == 125
    assert (m - m).is_zero()
    assert (m @ IntMatrix.identity(3)) == m
    assert m.transpose().det() == 125


def test_rat_matrix_inverse():
    m = RatMatrix([[1, 2], [3, 5]])
    assert m @ m.inverse() == RatMatrix.identity(2)
    with pytest.raises(ValueError):
        RatMatrix([[1, 2], [2, 4]]).inverse()


def test_snf_one_by_one():
    res = smith_normal_form(IntMatrix([[2]]))
    assert res.D == IntMatrix([[2]])
    assert res.U == IntMatrix([[1]]) and res.V == IntMatrix([[1]])


def test_snf_zero_matrix():
    m = IntMatrix([[0, 0], [0, 0]])
    res = smith_normal_form(m)
    assert res.D == m
    res.verify(m)


def test_snf_fixed_example():
    # divisor oracle: gcd of entries is 2, |det| = 8, so diag is (2, 4)
    m = IntMatrix([[2, 4], [6, 8]])
    res = smith_normal_form(m)
    assert res.diagonal() == (2, 4)
    assert res.diagonal() == _divisors_oracle(m)
    res.verify(m)


def test_snf_random_matrices_match_divisor_oracle():
    rng = random.Random(20240301)
    for _ in range(300):
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        m = IntMatrix(
            [[rng.randint(-5, 5) for _ in range(cols)] for _ in range(rows)]
        )
        res = smith_normal_form(m)
        res.verify(m)
        assert res.diagonal() == _divisors_oracle(m)


def test_congruence_single_generator():
    sub = solve_torus_congruence(IntMatrix([[2]]))
    assert sub.subtorus_directions == ()
    assert sub.torsion_generators == (TorusPoint((F(1, 2),)),)


def test_congruence_no_constraint():
    sub = solve_torus_congruence(IntMatrix([[0, 0]]))
    assert sub.torsion_generators == ()
    assert sorted(sub.subtorus_directions) == [(0, 1), (1, 0)]


def test_congruence_diagonal_line():
    sub = solve_torus_congruence(IntMatrix([[1, -1]]))
    assert sub.torsion_generators == ()
    assert sub.subtorus_directions == ((1, 1),)
    # oracle: points of denominator up to 12 on the line satisfy M s in Z
    m = IntMatrix([[1, -1]])
    for q in range(1, 13):
        for k in range(q):
            assert m.maps_to_lattice(TorusPoint((F(k, q), F(k, q))))


def _generated_subgroup_on_grid(sub, n):
    """All elements of the solution subgroup with denominator dividing n."""
    seeds = [TorusPoint.zero(sub.rank)]
    for g in sub.torsion_generators:
        if n % g.order() != 0:
            return None  # grid too coarse for this generator
        seeds.append(g)
    for v in sub.subtorus_directions:
        seeds.append(TorusPoint(F(x, n) for x in v))
    seen = {TorusPoint.zero(sub.rank)}
    frontier = list(seen)
    while frontier:
        new = []
        for p in frontier:
            for s in seeds:
                q = p + s
                if q not in seen:
                    seen.add(q)
                    new.append(q)
        frontier = new
    return seen


def test_congruence_solver_matches_point_enumeration():
    rng = random.Random(977)
    done = 0
    while done < 200:
        r = rng.randint(1, 2)
        m = rng.randint(1, 4)
        mat = IntMatrix([[rng.randint(-4, 4) for _ in range(r)] for _ in range(m)])
        sub = solve_torus_congruence(mat)
        divisors = [d for d in smith_normal_form(mat).diagonal() if d != 0]
        n = lcm(*divisors) if divisors else 1
        n = lcm(n, 2)  # look slightly beyond the forced denominators
        if n > 60:
            continue
        generated = _generated_subgroup_on_grid(sub, n)
        assert generated is not None
        direct = {
            p for p in enumerate_grid_points(r, n) if mat.maps_to_lattice(p)
        }
        assert generated == direct
        for g in sub.torsion_generators:
            assert mat.maps_to_lattice(g)
        for v in sub.subtorus_directions:
            assert all(x == 0 for x in mat.apply_vector(v))
        done += 1


def test_subgroup_containment_logic():
    trivial = solve_torus_congruence(IntMatrix([[1]]))
    assert trivial.is_trivial()
    assert subgroup_contained_in(trivial, lambda p: False, lambda v: False)

    half = solve_torus_congruence(IntMatrix([[2]]))
    assert not subgroup_contained_in(half, lambda p: p.is_zero(), lambda v: True)
    assert subgroup_contained_in(half, lambda p: True, lambda v: False)


def test_affine_congruence_solver():
    # 2 t = 1/2 (mod 1) is solved by t = 1/4
    sol = solve_affine_torus_congruence(IntMatrix([[2]]), [F(1, 2)])
    assert sol is not None
    assert (2 * sol.coords[0]) % 1 == F(1, 2)
    # 0 t = 1/2 has no solution, 0 t = 0 does
    assert solve_affine_torus_congruence(IntMatrix([[0]]), [F(1, 2)]) is None
    assert solve_affine_torus_congruence(IntMatrix([[0]]), [F(0)]) is not None


def test_affine_solver_random_consistency():
    rng = random.Random(31337)
    for _ in range(200):
        r = rng.randint(1, 2)
        m = rng.randint(1, 3)
        mat = IntMatrix([[rng.randint(-3, 3) for _ in range(r)] for _ in range(m)])
        denom = rng.choice([2, 3, 4])
        target = [F(rng.randint(0, denom - 1), denom) for _ in range(m)]
        sol = solve_affine_torus_congruence(mat, target)
        if sol is not None:
            image = mat.apply_point(sol)
            assert image == TorusPoint(target)
        else:
            # no solution on a fine grid either
            n = denom * 12
            assert not any(
                mat.apply_point(p) == TorusPoint(target)
                for p in enumerate_grid_points(r, n)
            )
