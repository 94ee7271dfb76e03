"""Solve for the space of delta-derivations of a Lie algebra.

A linear map D is a delta-derivation when
D[u, v] = delta * ([D u, v] + [u, D v]) for all u, v; by bilinearity it is
enough to impose the identity on basis pairs i < j.  The unknowns are the
d^2 entries of D; the resulting sparse linear system is reduced
incrementally and the kernel is returned with an RREF-canonical basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .exactlin import (Mat, SparseReducer, Subspace, ZERO, rat, rat_from_str,
                       rat_to_str, rref)
from .liealg import LieAlgebra


@dataclass
class OperatorSpace:
    """A linear space of d x d matrices over an algebra, with its delta tag."""

    algebra: LieAlgebra
    delta: object
    basis: list  # list of Mat, linearly independent in d^2-space

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def dim_ambient(self) -> int:
        return self.algebra.dim

    def flat_subspace(self) -> Subspace:
        d = self.algebra.dim
        return Subspace(d * d, [b.flatten() for b in self.basis])

    def contains(self, m: Mat):
        """Coefficients of m on the basis, or None."""
        return self.flat_subspace().member(m.flatten())

    def to_dict(self):
        return {
            "delta": rat_to_str(rat(self.delta)),
            "dim": self.dim,
            "basis": [[[rat_to_str(v) for v in row] for row in b.entries] for b in self.basis],
        }

    def dumps(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, algebra, data):
        basis = [Mat([[rat_from_str(v) for v in row] for row in b]) for b in data["basis"]]
        return cls(algebra, rat_from_str(data["delta"]), basis)


def _canonical_mats(d, flat_vectors):
    """RREF-canonical matrix basis from flattened d^2-vectors."""
    if not flat_vectors:
        return []
    red, piv = rref(Mat(flat_vectors, cols=d * d))
    return [Mat.from_flat(d, d, red.entries[i]) for i in range(len(piv))]


def derivation_space(A: LieAlgebra, delta) -> OperatorSpace:
    """Full solution space of the delta-derivation identity on basis pairs."""
    d = A.dim
    delta = rat(delta)
    red = SparseReducer(d * d)
    for i in range(d):
        for j in range(i + 1, d):
            rows = {}
            supp = A.brackets.get((i, j), {})
            if supp:
                for s in range(d):
                    rw = rows.setdefault(s, {})
                    for k, c in supp.items():
                        key = s * d + k
                        rw[key] = rw.get(key, ZERO) + c
            for r in range(d):
                for s, g in A.bracket_basis(r, j).items():
                    rw = rows.setdefault(s, {})
                    key = r * d + i
                    rw[key] = rw.get(key, ZERO) - delta * g
                for s, g in A.bracket_basis(i, r).items():
                    rw = rows.setdefault(s, {})
                    key = r * d + j
                    rw[key] = rw.get(key, ZERO) - delta * g
            for rw in rows.values():
                red.add_row(rw)
    basis = _canonical_mats(d, red.kernel())
    return OperatorSpace(A, delta, basis)


def delta_identity_violation(A: LieAlgebra, M: Mat, delta):
    """First basis pair (i, j, residual) where M breaks the identity, or None."""
    d = A.dim
    delta = rat(delta)
    for i in range(d):
        for j in range(i + 1, d):
            w = [ZERO] * d
            for k, c in A.bracket_basis(i, j).items():
                w[k] = c
            lhs = M.matvec(w)
            rhs1 = A.bracket(M.col(i), A.basis_vector(j))
            rhs2 = A.bracket(A.basis_vector(i), M.col(j))
            residual = [a - delta * (b + c) for a, b, c in zip(lhs, rhs1, rhs2)]
            if any(residual):
                return (i, j, residual)
    return None


def is_trivial_space(S: OperatorSpace) -> bool:
    """True iff the space is exactly the scalar multiples of the identity."""
    d = S.algebra.dim
    return S.dim == 1 and S.contains(Mat.identity(d)) is not None


def commutator_degrades(S1: OperatorSpace, S2: OperatorSpace) -> dict:
    """Check that commutators of basis elements are delta1*delta2-derivations."""
    if S1.algebra is not S2.algebra and S1.algebra != S2.algebra:
        raise ValueError("operator spaces over different algebras")
    A = S1.algebra
    dd = rat(S1.delta) * rat(S2.delta)
    failures = []
    pairs = 0
    for B1 in S1.basis:
        for B2 in S2.basis:
            pairs += 1
            C = (B1 @ B2) - (B2 @ B1)
            bad = delta_identity_violation(A, C, dd)
            if bad is not None:
                i, j, res = bad
                failures.append({"pair_index": pairs - 1, "i": i, "j": j,
                                 "residual": [rat_to_str(v) for v in res]})
    return {"algebra": A.name, "delta": rat_to_str(dd), "pairs": pairs,
            "ok": not failures, "failures": failures}
