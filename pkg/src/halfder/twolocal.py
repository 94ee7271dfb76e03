"""Certify 2-local rigidity by the separating-tuple technique.

If joint evaluation D -> (D q_1, .., D q_t) is injective on the derivation
space, any 2-local map must globally agree with the one derivation that
matches it on the tuple, so every 2-local half-derivation is a genuine
half-derivation.  Absence of a certified tuple proves nothing, hence the
INCONCLUSIVE (never FAIL) status.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .dersolve import OperatorSpace
from .exactlin import Mat, Subspace, ZERO, ONE, rat, rat_to_str
from .liealg import LieAlgebra
from .locder import random_rational


@dataclass
class SeparatingCertificate:
    """A tuple on which joint evaluation of the derivation space is injective."""

    tuple_vectors: list      # list of coordinate vectors (length 1 or 2)
    labels: list             # human-readable description of each vector
    stacked_rank: int
    der_dim: int


@dataclass
class TwoLocalReport:
    algebra: str
    status: str              # "PASS" | "INCONCLUSIVE"
    certificate: SeparatingCertificate | None
    candidates_tried: int


def evaluation_injective(S: OperatorSpace, vectors):
    """(True, None) iff only the zero map in span(S) kills every tuple vector.

    On failure, returns (False, kernel) with coefficient vectors of basis
    combinations vanishing on the whole tuple.
    """
    if not vectors:
        raise ValueError("tuple must be nonempty")
    k = S.dim
    if k == 0:
        return (True, None)
    stacked = []
    for q in vectors:
        evals = [B.matvec(q) for B in S.basis]
        for r in range(S.algebra.dim):
            stacked.append([evals[t][r] for t in range(k)])
    from .exactlin import kernel_basis
    ker = kernel_basis(Mat(stacked, cols=k))
    if ker.dim() == 0:
        return (True, None)
    return (False, ker)


def _suggested_elements(A: LieAlgebra):
    """Elements whose evaluation typically separates, when in the basis."""
    names = A.basis_names
    out = []
    for nm in ("x", "e", "e-1"):
        if nm in names:
            out.append((nm, A.basis_vector(names.index(nm))))
    xs = [i for i, nm in enumerate(names) if nm.startswith("x") and nm != "x"]
    if xs:
        q = [ZERO] * A.dim
        for i in xs:
            q[i] = ONE
        out.append(("sum(x_i)", q))
    return out


def find_separating_tuple(S: OperatorSpace, max_tuple_len=2, budget=64,
                          seed=2024) -> SeparatingCertificate | None:
    """Search proof-suggested elements, basis vectors, then random vectors."""
    if max_tuple_len not in (1, 2):
        raise ValueError("max_tuple_len must be 1 or 2")
    A = S.algebra
    d = A.dim
    rng = random.Random(seed)
    singles = _suggested_elements(A)
    singles += [(nm, A.basis_vector(i)) for i, nm in enumerate(A.basis_names)]
    tried = 0

    def certify(labeled):
        nonlocal tried
        tried += 1
        labels = [lab for lab, _ in labeled]
        vecs = [v for _, v in labeled]
        ok, _ = evaluation_injective(S, vecs)
        if ok:
            return SeparatingCertificate(tuple_vectors=vecs, labels=labels,
                                         stacked_rank=S.dim, der_dim=S.dim)
        return None

    for item in singles:
        if tried >= budget:
            break
        cert = certify([item])
        if cert:
            return cert
    if max_tuple_len >= 2:
        # pairing a toral element x (or x1) with the generator e_1
        names = A.basis_names
        priority_pairs = []
        for a, b in (("x", "e1"), ("x1", "e1")):
            if a in names and b in names:
                priority_pairs.append([(a, A.basis_vector(names.index(a))),
                                       (b, A.basis_vector(names.index(b)))])
        for pair in priority_pairs:
            if tried >= budget:
                break
            cert = certify(pair)
            if cert:
                return cert
        for i in range(len(singles)):
            for j in range(i + 1, len(singles)):
                if tried >= budget:
                    break
                cert = certify([singles[i], singles[j]])
                if cert:
                    return cert
    while tried < budget:
        vecs = [("random", [random_rational(rng) for _ in range(d)])
                for _ in range(max_tuple_len)]
        cert = certify(vecs[:1])
        if cert:
            return cert
        if max_tuple_len >= 2 and tried < budget:
            cert = certify(vecs)
            if cert:
                return cert
    return None


def certify_two_local_rigidity(A: LieAlgebra, S: OperatorSpace, budget=64,
                               seed=2024) -> TwoLocalReport:
    """PASS with a separating certificate, or INCONCLUSIVE after the budget."""
    cert = find_separating_tuple(S, max_tuple_len=2, budget=budget, seed=seed)
    if cert is not None:
        return TwoLocalReport(algebra=A.name, status="PASS", certificate=cert,
                              candidates_tried=budget)
    return TwoLocalReport(algebra=A.name, status="INCONCLUSIVE", certificate=None,
                          candidates_tried=budget)


def report_to_dict(report: TwoLocalReport) -> dict:
    out = {"algebra": report.algebra, "status": report.status,
           "der_dim": report.certificate.der_dim if report.certificate else None}
    if report.certificate:
        out["tuple"] = [[rat_to_str(v) for v in vec] for vec in report.certificate.tuple_vectors]
        out["tuple_labels"] = report.certificate.labels
        out["stacked_rank"] = report.certificate.stacked_rank
    return out
