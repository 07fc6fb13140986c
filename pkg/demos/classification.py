#!/usr/bin/env python3
"""Reproduce the full classification of effectively free actions of
SU(2) and SU(2)^2 on SU(4), SO(7) and the rank-4 double cover."""

from biquot.classify import classify_su2, classify_su2xsu2, verify_table1

print("== one-parameter actions ==")
for group in ("SPIN7", "SO7", "SU4"):
    report = classify_su2(group)
    pairs = ", ".join(f"({p.left_label}, {p.right_label})" for p in report.free_inhomogeneous)
    print(f"{group}: {report.counts['free_inhomogeneous']} free inhomogeneous: {pairs}")

print()
print("== two-parameter actions ==")
for group in ("SPIN7", "SO7", "SU4"):
    report = classify_su2xsu2(group)
    c = report.counts
    print(f"{group}: {c['free_inhomogeneous']} free inhomogeneous "
          f"({c['not_free']} not free, {c['homogeneous']} homogeneous, "
          f"{c['rank1_equivalent']} rank-1 equivalent)")
    for p in report.free_inhomogeneous:
        line = f"   ({p.left_label}, {p.right_label})"
        if p.descent:
            line += f"   deck point: {p.descent.deck_side} at {p.descent.deck_point}," \
                    f"  SO(7) verdict: {p.descent.so7_verdict.status}"
        print(line)
    matching = verify_table1(report)
    print(f"   matched {len(matching)} expected weight rows, one to one")

print()
print("== the counterexamples worth seeing ==")
spin = classify_su2xsu2("SPIN7")
for p in spin.pairs:
    if {p.left_label, p.right_label} == {"3phi00+phi11", "phi00+phi02+phi20"}:
        w = p.verdict.witness
        print(f"({p.left_label}, {p.right_label}): {p.verdict.status} at t = {w.point}")
su4 = classify_su2xsu2("SU4")
for p in su4.pairs:
    if {p.left_label, p.right_label} == {"phi01+phi10", "phi11"}:
        w = p.verdict.witness
        print(f"({p.left_label}, {p.right_label}): {p.verdict.status} at t = {w.point}"
              f" (fifth roots of unity)")
