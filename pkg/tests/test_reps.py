from fractions import Fraction

import pytest

from biquot.groups import build_group_model, weyl_equivalent_weights
from biquot.linalg import IntMatrix
from biquot.reps import (
    NAMED_SU2_SO7,
    CandidateMap,
    RepMultiset,
    Su2Irrep,
    Su2xSu2Irrep,
    clebsch_gordan,
    descend_spin7,
    enumerate_su2_complex,
    enumerate_su2_orthogonal,
    enumerate_su2xsu2_complex,
    enumerate_su2xsu2_orthogonal,
    named_su2_label,
    parse_rep_spec,
    restriction_label,
    spin7_lift,
    torus_weights,
)

F = Fraction


def test_irrep_basics():
    assert Su2Irrep(3).dim == 4
    assert Su2Irrep(3).is_symplectic
    assert not Su2Irrep(2).is_symplectic
    assert Su2Irrep(2).weights() == (2, 0, -2)
    r = Su2xSu2Irrep(1, 2)
    assert r.dim == 6
    assert r.is_symplectic
    assert set(r.weights()) == {(a, b) for a in (1, -1) for b in (2, 0, -2)}


def test_clebsch_gordan():
    assert clebsch_gordan(1, 1) == (2, 0)
    assert clebsch_gordan(2, 1) == (3, 1)
    assert clebsch_gordan(0, 5) == (5,)


def test_seven_dim_orthogonal_enumeration():
    reps = enumerate_su2_orthogonal(7)
    labels = {r.label() for r in reps}
    assert labels == {
        "7phi0",
        "4phi0+phi2",
        "3phi0+2phi1",
        "2phi0+phi4",
        "phi0+2phi2",
        "2phi1+phi2",
        "phi6",
    }
    assert len([r for r in reps if not r.is_trivial()]) == 6


def test_one_dim_enumerations():
    assert [r.label() for r in enumerate_su2_orthogonal(1)] == ["phi0"]
    assert [r.label() for r in enumerate_su2xsu2_orthogonal(1)] == ["phi00"]


def test_five_dim_orthogonal_against_partition_filter():
    # independent oracle: filter raw partitions by the parity rule
    def parity_ok(partition):
        return all(partition.count(p) % 2 == 0 for p in set(partition) if p % 2 == 0)

    def all_partitions(n, mx=None):
        if n == 0:
            yield ()
            return
        mx = n if mx is None else min(n, mx)
        for first in range(mx, 0, -1):
            for rest in all_partitions(n - first, first):
                yield (first,) + rest

    expected = {p for p in all_partitions(5) if parity_ok(p)}
    got = {
        tuple(
            sorted(
                (irrep.dim for irrep, m in rep.parts for _ in range(m)), reverse=True
            )
        )
        for rep in enumerate_su2_orthogonal(5)
    }
    assert got == expected == {(5,), (3, 1, 1), (2, 2, 1), (1, 1, 1, 1, 1)}


def test_four_dim_complex_enumeration():
    labels = {r.label() for r in enumerate_su2_complex(4)}
    assert labels == {"4phi0", "2phi0+phi1", "phi0+phi2", "2phi1", "phi3"}
    assert len(enumerate_su2_complex(6)) == 11  # partition count p(6)


def test_su2xsu2_orthogonal_seven_finite_kernel():
    reps = enumerate_su2xsu2_orthogonal(7, finite_kernel_only=True)
    keys = {min(r.parts, r.swapped().parts) for r in reps}
    expected = {
        RepMultiset.su2xsu2((0, 0, 3), (1, 1, 1)).parts,
        RepMultiset.su2xsu2((0, 0, 1), (2, 0, 1), (0, 2, 1)).parts,
        RepMultiset.su2xsu2((0, 1, 2), (2, 0, 1)).parts,
        RepMultiset.su2xsu2((1, 1, 1), (0, 2, 1)).parts,
    }
    assert keys == expected
    assert len(reps) == 4


def test_su2xsu2_complex_four_finite_kernel():
    reps = enumerate_su2xsu2_complex(4, finite_kernel_only=True)
    assert {r.label() for r in reps} == {"phi01+phi10", "phi11"}


def test_orthogonal_parity_soundness():
    for n in (3, 5, 7, 9):
        for rep in enumerate_su2_orthogonal(n):
            assert rep.is_orthogonal()
    for n in (3, 5, 7):
        for rep in enumerate_su2xsu2_orthogonal(n):
            assert rep.is_orthogonal()


def test_weight_multisets_negation_symmetric():
    for rep in enumerate_su2_orthogonal(7) + enumerate_su2_complex(4):
        ws = rep.weights()
        assert sorted(ws) == sorted(-w for w in ws)
    for rep in enumerate_su2xsu2_orthogonal(7):
        ws = rep.weights()
        assert sorted(ws) == sorted(tuple(-x for x in w) for w in ws)


SO7_WEIGHTS = {
    "A": ((2,), (0,), (0,)),
    "B": ((1,), (1,), (0,)),
    "C": ((4,), (2,), (0,)),
    "D": ((2,), (2,), (0,)),
    "E": ((2,), (1,), (1,)),
    "F": ((6,), (4,), (2,)),
}


def test_so7_rotation_weights_of_named_reps():
    for label, rep in NAMED_SU2_SO7.items():
        tm = torus_weights(rep, "SO7")
        assert tm.weights.data == SO7_WEIGHTS[label]


def test_su4_exponents():
    rows = {
        "2phi0+phi1": ((1,), (0,), (0,), (-1,)),
        "phi0+phi2": ((2,), (0,), (0,), (-2,)),
        "phi3": ((3,), (1,), (-1,), (-3,)),
        "2phi1": ((1,), (1,), (-1,), (-1,)),
    }
    for rep in enumerate_su2_complex(4):
        if rep.is_trivial():
            continue
        assert torus_weights(rep, "SU4").weights.data == rows[rep.label()]


def test_su4_weights_sum_to_zero():
    for rep in enumerate_su2_complex(4) + enumerate_su2xsu2_complex(4):
        if rep.is_trivial():
            continue
        w = torus_weights(rep, "SU4").weights
        for j in range(w.cols):
            assert sum(w.column(j)) == 0


def test_lifted_weight_columns_match_published_table_up_to_weyl():
    model = build_group_model("SPIN7")
    published = {
        "A": (1, 1, 1, 1),
        "B": (1, 0, 0, 1),
        "C": (3, 1, 1, 3),
        "D": (2, 0, 0, 2),
        "E": (0, -1, 1, 2),
        "F": (0, -4, 2, 6),
    }
    for label, rep in NAMED_SU2_SO7.items():
        mine = torus_weights(rep, "SPIN7").weights
        ref = IntMatrix([[c] for c in published[label]])
        assert weyl_equivalent_weights(model, mine, ref), label


def test_lifted_columns_satisfy_torus_relation():
    model = build_group_model("SPIN7")
    for rep in NAMED_SU2_SO7.values():
        model.validate_weights(torus_weights(rep, "SPIN7").weights)
    for rep in enumerate_su2xsu2_orthogonal(7, finite_kernel_only=True):
        model.validate_weights(torus_weights(rep, "SPIN7").weights)


def test_finite_kernel_lifts_match_published_columns_up_to_weyl():
    model = build_group_model("SPIN7")
    published = {
        # rows are (t coefficient, p coefficient) per SO(8) coordinate
        "3phi00+phi11": ((1, 0), (0, 1), (0, 1), (1, 0)),
        "phi00+phi02+phi20": ((1, 1), (1, -1), (1, -1), (1, 1)),
        "2phi10+phi02": ((0, 1), (-1, 1), (0, 1), (1, 1)),
        "phi11+phi02": ((1, 1), (0, 0), (-1, 1), (0, 2)),
    }
    reps = {
        "3phi00+phi11": RepMultiset.su2xsu2((0, 0, 3), (1, 1, 1)),
        "phi00+phi02+phi20": RepMultiset.su2xsu2((0, 0, 1), (0, 2, 1), (2, 0, 1)),
        "2phi10+phi02": RepMultiset.su2xsu2((1, 0, 2), (0, 2, 1)),
        "phi11+phi02": RepMultiset.su2xsu2((1, 1, 1), (0, 2, 1)),
    }
    for name, rep in reps.items():
        mine = torus_weights(rep, "SPIN7").weights
        ref = IntMatrix(published[name])
        assert weyl_equivalent_weights(model, mine, ref), name


def test_lift_then_descend_recovers_so7_weights():
    reps = list(NAMED_SU2_SO7.values()) + enumerate_su2xsu2_orthogonal(
        7, finite_kernel_only=True
    )
    for rep in reps:
        so7 = torus_weights(rep, "SO7")
        lifted = spin7_lift(so7)
        assert descend_spin7(lifted).weights == so7.weights


def test_non_integral_lift_rejected():
    from biquot.reps import TorusMap

    fake = TorusMap("SO7", IntMatrix([[1], [0], [0]]), source="fake")
    with pytest.raises(ValueError, match="non-integral"):
        spin7_lift(fake)


RESTRICTION_TABLE = {
    # rep -> (first factor alone, second factor alone, diagonal)
    "3phi00+phi11": ("B", "B", "A"),
    "phi00+phi20+phi02": ("A", "A", "D"),
    "2phi10+phi02": ("B", "A", "E"),
    "phi11+phi02": ("B", "E", "D"),
}


def test_restrictions_to_su2_subgroups():
    reps = {
        "3phi00+phi11": RepMultiset.su2xsu2((0, 0, 3), (1, 1, 1)),
        "phi00+phi20+phi02": RepMultiset.su2xsu2((0, 0, 1), (2, 0, 1), (0, 2, 1)),
        "2phi10+phi02": RepMultiset.su2xsu2((1, 0, 2), (0, 2, 1)),
        "phi11+phi02": RepMultiset.su2xsu2((1, 1, 1), (0, 2, 1)),
    }
    for name, rep in reps.items():
        left, right, diag = RESTRICTION_TABLE[name]
        assert named_su2_label(rep.restricted("left")) == left
        assert named_su2_label(rep.restricted("right")) == right
        assert named_su2_label(rep.restricted("diagonal")) == diag


def test_restrict_su2xsu2_classifies_against_named_reps():
    from biquot.reps import restrict_su2xsu2

    rep = RepMultiset.su2xsu2((1, 0, 2), (0, 2, 1))
    for which, expected in (("left", "B"), ("right", "A"), ("diagonal", "E")):
        tm, label = restrict_su2xsu2(rep, which)
        assert tm.params == 1
        assert label == expected
    tm, label = restrict_su2xsu2(torus_weights(rep, "SPIN7"), "diagonal")
    assert label == "E"
    triv = CandidateMap.projected(2, NAMED_SU2_SO7["D"]).torus_map("SPIN7")
    _, label = restrict_su2xsu2(triv, "left")
    assert label == "trivial"


def test_restriction_at_weight_level_matches_rep_level():
    model = build_group_model("SPIN7")
    for rep in enumerate_su2xsu2_orthogonal(7, finite_kernel_only=True):
        tm = torus_weights(rep, "SPIN7")
        for which in ("left", "right", "diagonal"):
            res_rep = rep.restricted(which)
            expected = torus_weights(res_rep, "SPIN7").weights
            got = tm.restricted(which).weights
            assert weyl_equivalent_weights(model, got, expected), (rep.label(), which)


def test_trivial_restriction_of_trivial_rep():
    triv = RepMultiset.su2xsu2((0, 0, 7))
    for which in ("left", "right", "diagonal"):
        assert triv.restricted(which).is_trivial()


def test_candidate_maps():
    c = CandidateMap.projected(2, NAMED_SU2_SO7["D"])
    assert c.label() == "proj2:D"
    assert c.restriction("left") is None
    assert c.restriction("right") == NAMED_SU2_SO7["D"]
    assert c.restriction("diagonal") == NAMED_SU2_SO7["D"]
    tm = c.torus_map("SPIN7")
    assert tm.weights == IntMatrix([[0, 2], [0, 0], [0, 0], [0, 2]])
    assert c.swapped().label() == "proj1:D"

    fin = CandidateMap.finite(RepMultiset.su2xsu2((1, 0, 2), (0, 2, 1)))
    assert fin.label() == "phi02+2phi10"  # canonical ascending index order
    assert restriction_label(fin.restriction("diagonal")) == "E"

    with pytest.raises(ValueError):
        CandidateMap.finite(RepMultiset.su2xsu2((2, 0, 1), (0, 0, 4)))


def test_parse_rep_spec_roundtrip():
    kind, rep = parse_rep_spec("2phi0+phi1")
    assert kind == "su2" and rep.label() == "2phi0+phi1"
    kind, rep = parse_rep_spec("E")
    assert kind == "su2" and rep == NAMED_SU2_SO7["E"]
    kind, cand = parse_rep_spec("phi11+phi02")
    assert kind == "su2xsu2" and cand.kind == "finite"
    kind, cand = parse_rep_spec("proj1:D")
    assert kind == "su2xsu2" and cand.factor == 1 and cand.su2 == NAMED_SU2_SO7["D"]
    kind, cand = parse_rep_spec("trivial")
    assert cand.is_trivial()
    kind, cand = parse_rep_spec("3phi00+2phi10")  # lives on the first factor
    assert cand.kind == "proj" and cand.factor == 1


@pytest.mark.parametrize(
    "bad",
    ["", "phi", "2phi0+junk", "proj3:D", "phi123", "phi1+phi11", "proj1:phi11"],
)
def test_parse_rep_spec_rejects_malformed_input(bad):
    with pytest.raises(ValueError):
        parse_rep_spec(bad)


def test_torus_weights_dimension_and_parity_guards():
    with pytest.raises(ValueError, match="dimension"):
        torus_weights(RepMultiset.su2((2, 1)), "SO7")
    sympl = RepMultiset.su2((1, 1), (0, 5))  # phi1 once: not orthogonal
    with pytest.raises(ValueError, match="orthogonal"):
        torus_weights(sympl, "SO7")
