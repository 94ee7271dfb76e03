"""Shared memoized builders so the expensive spaces are computed once."""

import random

from halfder import (Family, FamilySpec, build, derivation_space, rat,
                     sampled_locder_space)

_ALGEBRAS = {}
_DER = {}
_LOC = {}


def get_algebra(spec):
    if spec not in _ALGEBRAS:
        _ALGEBRAS[spec] = build(spec)
    return _ALGEBRAS[spec]


def get_der(spec, delta=None):
    key = (spec, "1/2" if delta is None else str(delta))
    if key not in _DER:
        _DER[key] = derivation_space(get_algebra(spec), rat(1, 2) if delta is None else delta)
    return _DER[key]


def get_locder(spec):
    if spec not in _LOC:
        _LOC[spec] = sampled_locder_space(get_algebra(spec), get_der(spec))
    return _LOC[spec]


def random_alphas(k, seed):
    rng = random.Random(seed)
    return tuple(rat(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(k))


def table_grid():
    """The verification grid: (row key, FamilySpec, published dims, verified dims)."""
    rows = []
    for n in range(4, 9):
        rows += [
            ("s1", FamilySpec(Family.S1, n=n, beta=2), (n + 1, 2 * n),
             (7, 15) if n == 4 else (n + 1, 2 * n)),
            ("s1g", FamilySpec(Family.S1, n=n), (n, 2 * n - 1), (n, 2 * n - 2)),
            ("s2", FamilySpec(Family.S2, n=n), (n, 2 * n - 1), (n, 2 * n - 2)),
            ("s3", FamilySpec(Family.S3, n=n), (n, 2 * n - 2), (n, 2 * n - 3)),
            ("s4", FamilySpec(Family.S4, n=n, alphas=random_alphas(max(0, n - 3), 100 + n)),
             (n, 2 * n - 1), (n, 2 * n - 2)),
            ("s_n2", FamilySpec(Family.S_N2, n=n), (2, 2), (2, 2)),
            ("tau1", FamilySpec(Family.TAU1, n=n), (3, 4), (3, 4)),
            ("tau2", FamilySpec(Family.TAU2, n=n), (3, 4), (3, 4)),
            ("tau3", FamilySpec(Family.TAU3, n=n, alphas=random_alphas(max(0, n - 2), 200 + n)),
             (3, 3), (3, 3)),
            ("tau_2n2", FamilySpec(Family.TAU_2N2, n=n), (2, 2), (2, 2)),
        ]
    return rows


def nonfiliform_grid():
    rows = []
    for n in (1, 2, 3):
        rows.append(("heis", FamilySpec(Family.HEIS_SOLV, n=n), (2, 2), (2, 2)))
    for n in (2, 3, 4):
        rows.append(("abelian", FamilySpec(Family.ABELIAN_SOLV, n=n),
                     (2 * n, 3 * n), (2 * n, 3 * n)))
    for n in (1, 2, 3):
        rows.append(("oscillator", FamilySpec(Family.OSCILLATOR, n=n),
                     (2 * n + 2, 4 * n + 4), (2 * n + 2, 4 * n + 4)))
    for m in (2, 3, 4, 5):
        dims = (2, 2) if m == 2 else (1, 1)
        rows.append(("sl2module", FamilySpec(Family.SL2_MODULE, m=m), dims, dims))
    for n in (1, 2, 3):
        dims = (2, 2) if n == 2 else (1, 1)
        rows.append(("schrodinger", FamilySpec(Family.SCHRODINGER, n=n), dims, dims))
    return rows


def representative_specs():
    """One small instance per catalog family."""
    return [
        FamilySpec(Family.N_FILIFORM, n=4),
        FamilySpec(Family.Q_FILIFORM, n=3),
        FamilySpec(Family.S1, n=4),
        FamilySpec(Family.S2, n=4),
        FamilySpec(Family.S3, n=4),
        FamilySpec(Family.S4, n=5),
        FamilySpec(Family.S_N2, n=4),
        FamilySpec(Family.TAU1, n=3),
        FamilySpec(Family.TAU2, n=3),
        FamilySpec(Family.TAU3, n=4),
        FamilySpec(Family.TAU_2N2, n=3),
        FamilySpec(Family.HEIS_SOLV, n=2),
        FamilySpec(Family.ABELIAN_SOLV, n=3),
        FamilySpec(Family.OSCILLATOR, n=2),
        FamilySpec(Family.SL2_MODULE, m=3),
        FamilySpec(Family.SCHRODINGER, n=2),
    ]
