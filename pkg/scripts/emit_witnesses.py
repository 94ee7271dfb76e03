#!/usr/bin/env python3
"""Emit a local-but-not-genuine 1/2-derivation witness for each family
that has one, and show the refusal for the rigid families.

Usage: emit_witnesses.py [--seed N] [--format md|csv|json]
"""

import argparse
import sys

from halfder import Family, FamilySpec, WitnessRefusalError, rat_to_str
from halfder.cli import find_witness, render_report, _mat_to_strs


CASES = [
    FamilySpec(Family.S1, n=4, beta=2),
    FamilySpec(Family.S1, n=4),
    FamilySpec(Family.S2, n=4),
    FamilySpec(Family.S3, n=4),
    FamilySpec(Family.S4, n=5),
    FamilySpec(Family.TAU1, n=3),
    FamilySpec(Family.TAU2, n=3),
    FamilySpec(Family.ABELIAN_SOLV, n=3),
    FamilySpec(Family.OSCILLATOR, n=2),
    # rigid: every local 1/2-derivation is genuine, so these refuse
    FamilySpec(Family.S_N2, n=4),
    FamilySpec(Family.TAU3, n=3),
    FamilySpec(Family.TAU_2N2, n=2),
    FamilySpec(Family.HEIS_SOLV, n=2),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--format", choices=["md", "csv", "json"], default="md")
    args = ap.parse_args(argv)
    for spec in CASES:
        try:
            A, S, Delta, cert = find_witness(spec, seed=args.seed)
        except WitnessRefusalError as exc:
            print(f"## {spec.label()}\nrefused: {exc}\n")
            continue
        report = {
            "algebra": A.name,
            "der_dim": S.dim,
            "witness": _mat_to_strs(Delta),
            "in_der_space": S.contains(Delta) is not None,
            "stratified_trials": cert.trials,
            "certificate_probabilistic": cert.probabilistic,
        }
        print(f"## {spec.label()}")
        print(render_report(report, args.format))
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
