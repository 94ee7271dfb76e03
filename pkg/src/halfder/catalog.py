"""Constructors for the algebra families under study.

Basis orders follow the source listings: solvable extensions of the
filiform nilradicals use {x, e_1..e_N} (or {x_1, x_2, e_1..e_n} /
{x, y, e_1..e_2n}), the Heisenberg extension uses {e_1..e_{2n+1},
x_1..x_{n+1}}, the oscillator uses {e_-1, e_0, e_1..e_n, ě_1..ě_n}, the
sl2 semidirect product uses {e, f, h, x_0..x_m}, and the Schroedinger
algebra uses {e, f, h, z, x_1, y_1, .., x_n, y_n, s_jk (j<k)}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ParameterError
from .exactlin import rat
from .liealg import LieAlgebra


class Family(enum.Enum):
    N_FILIFORM = "n_filiform"
    Q_FILIFORM = "q_filiform"
    S1 = "s1"
    S2 = "s2"
    S3 = "s3"
    S4 = "s4"
    S_N2 = "s_n2"
    TAU1 = "tau1"
    TAU2 = "tau2"
    TAU3 = "tau3"
    TAU_2N2 = "tau_2n2"
    HEIS_SOLV = "heis"
    ABELIAN_SOLV = "abelian"
    OSCILLATOR = "oscillator"
    SL2_MODULE = "sl2module"
    SCHRODINGER = "schrodinger"


# display names and parameter schema for the CLI listing
_FAMILY_INFO = {
    Family.N_FILIFORM: ("n_{n,1}", {"n": "int >= 3"}),
    Family.Q_FILIFORM: ("Q_{2n}", {"n": "int >= 2 (dim 2n)"}),
    Family.S1: ("s^1_{n,1}(beta)", {"n": "int >= 3", "beta": "rational"}),
    Family.S2: ("s^2_{n,1}", {"n": "int >= 3"}),
    Family.S3: ("s^3_{n,1}", {"n": "int >= 3"}),
    Family.S4: ("s^4_{n,1}(alpha_3..alpha_{n-1})", {"n": "int >= 3", "alphas": "rational list, length max(0, n-3)"}),
    Family.S_N2: ("s_{n,2}", {"n": "int >= 3"}),
    Family.TAU1: ("tau^1_{2n,1}(alpha)", {"n": "int >= 2", "beta": "rational (the parameter alpha)"}),
    Family.TAU2: ("tau^2_{2n,1}", {"n": "int >= 2"}),
    Family.TAU3: ("tau^3_{2n,1}(alpha_4,alpha_6,..,alpha_{2n-2})", {"n": "int >= 2", "alphas": "rational list, length max(0, n-2)"}),
    Family.TAU_2N2: ("tau_{2n,2}", {"n": "int >= 2"}),
    Family.HEIS_SOLV: ("L_{n,n+1}", {"n": "int >= 1"}),
    Family.ABELIAN_SOLV: ("L_n", {"n": "int >= 1"}),
    Family.OSCILLATOR: ("L_lambda", {"n": "int >= 1", "lambdas": "positive nondecreasing rational list, length n"}),
    Family.SL2_MODULE: ("L^m", {"m": "int >= 2"}),
    Family.SCHRODINGER: ("S_n", {"n": "int >= 1"}),
}

# generic defaults keep continuous parameters off the exceptional loci
DEFAULT_BETA = rat(5, 3)


@dataclass(frozen=True)
class FamilySpec:
    """One concrete instance of a family: identifier plus parameters."""

    family: Family
    n: int | None = None
    beta: object = None
    alphas: tuple = ()
    lambdas: tuple = ()
    m: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "alphas", tuple(rat(a) for a in self.alphas))
        object.__setattr__(self, "lambdas", tuple(rat(a) for a in self.lambdas))
        if self.beta is not None:
            object.__setattr__(self, "beta", rat(self.beta))

    def label(self) -> str:
        f = self.family
        parts = []
        if self.n is not None:
            parts.append(f"n={self.n}")
        if f in (Family.S1, Family.TAU1) and self.beta is not None:
            from .exactlin import rat_to_str
            pname = "beta" if f is Family.S1 else "alpha"
            parts.append(f"{pname}={rat_to_str(self.beta)}")
        if self.m is not None:
            parts.append(f"m={self.m}")
        return f"{_FAMILY_INFO[f][0]}[{', '.join(parts)}]"


def _need(cond, msg):
    if not cond:
        raise ParameterError(msg)


def validate_spec(spec: FamilySpec):
    f = spec.family
    if f is Family.SL2_MODULE:
        _need(spec.m is not None and spec.m >= 2, f"{f.value}: requires m >= 2")
        _need(spec.n is None, f"{f.value}: takes no n")
    else:
        _need(spec.m is None, f"{f.value}: takes no m")
        _need(spec.n is not None, f"{f.value}: requires n")
    if f in (Family.N_FILIFORM, Family.S1, Family.S2, Family.S3, Family.S4, Family.S_N2):
        _need(spec.n >= 3, f"{f.value}: requires n >= 3")
    if f in (Family.Q_FILIFORM, Family.TAU1, Family.TAU2, Family.TAU3, Family.TAU_2N2):
        _need(spec.n >= 2, f"{f.value}: requires n >= 2 (total dimension bookkeeping on a 2n nilradical)")
    if f in (Family.HEIS_SOLV, Family.ABELIAN_SOLV, Family.OSCILLATOR, Family.SCHRODINGER):
        _need(spec.n >= 1, f"{f.value}: requires n >= 1")
    _need(bool(spec.beta is not None) == (f in (Family.S1, Family.TAU1)) or spec.beta is None,
          f"{f.value}: beta is only a parameter of s1 and tau1")
    if f is Family.S4:
        _need(len(spec.alphas) == max(0, spec.n - 3),
              f"s4: needs alphas of length {max(0, spec.n - 3)} (alpha_3..alpha_{{n-1}})")
    elif f is Family.TAU3:
        _need(len(spec.alphas) == max(0, spec.n - 2),
              f"tau3: needs alphas of length {max(0, spec.n - 2)} (alpha_4,alpha_6,..,alpha_{{2n-2}})")
    else:
        _need(not spec.alphas, f"{f.value}: takes no alphas")
    if f is Family.OSCILLATOR:
        _need(len(spec.lambdas) == spec.n, f"oscillator: needs exactly n = {spec.n} lambdas")
        _need(all(l > 0 for l in spec.lambdas), "oscillator: requires 0 < lambda_1")
        _need(all(a <= b for a, b in zip(spec.lambdas, spec.lambdas[1:])),
              "oscillator: lambdas must be nondecreasing")
    else:
        _need(not spec.lambdas, f"{f.value}: takes no lambdas")


def _with_defaults(spec: FamilySpec) -> FamilySpec:
    """Fill in generic default parameters where the caller left them out."""
    f = spec.family
    kw = {}
    if f in (Family.S1, Family.TAU1) and spec.beta is None:
        kw["beta"] = DEFAULT_BETA
    if f is Family.S4 and not spec.alphas and spec.n and spec.n > 3:
        kw["alphas"] = tuple(rat(1) for _ in range(spec.n - 3))
    if f is Family.TAU3 and not spec.alphas and spec.n and spec.n > 2:
        kw["alphas"] = tuple(rat(1) for _ in range(spec.n - 2))
    if f is Family.OSCILLATOR and not spec.lambdas and spec.n:
        kw["lambdas"] = tuple(rat(j) for j in range(1, spec.n + 1))
    if kw:
        spec = FamilySpec(family=f, n=spec.n, beta=kw.get("beta", spec.beta),
                          alphas=kw.get("alphas", spec.alphas),
                          lambdas=kw.get("lambdas", spec.lambdas), m=spec.m)
    return spec


def _add(br, index, a, b, terms):
    """Record [a, b] = sum(terms), flipping sign into (i<j) storage order."""
    ia, ib = index[a], index[b]
    if ia == ib:
        raise ParameterError(f"bracket [{a},{a}] is not storable")
    sign = 1
    if ia > ib:
        ia, ib = ib, ia
        sign = -1
    slot = br.setdefault((ia, ib), {})
    for name, c in terms.items():
        k = index[name]
        slot[k] = slot.get(k, rat(0)) + sign * rat(c)


def _filiform_n(br, index, nn):
    # [e_i, e_1] = e_{i+1}
    for i in range(2, nn):
        _add(br, index, f"e{i}", "e1", {f"e{i+1}": 1})


def _filiform_q(br, index, n):
    # Q_{2n} relations on e_1..e_{2n}
    for i in range(2, 2 * n - 1):
        _add(br, index, f"e{i}", "e1", {f"e{i+1}": 1})
    for i in range(2, n + 1):
        _add(br, index, f"e{i}", f"e{2*n+1-i}", {f"e{2*n}": (-1) ** i})


def build(spec: FamilySpec) -> LieAlgebra:
    """Construct the algebra for a family instance; output passes Jacobi."""
    spec = _with_defaults(spec)
    validate_spec(spec)
    f, n = spec.family, spec.n
    br = {}

    if f is Family.N_FILIFORM:
        names = [f"e{i}" for i in range(1, n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _filiform_n(br, index, n)
        return LieAlgebra(f"n_{{{n},1}}", names, br)

    if f is Family.Q_FILIFORM:
        names = [f"e{i}" for i in range(1, 2 * n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _filiform_q(br, index, n)
        return LieAlgebra(f"Q_{{{2*n}}}", names, br)

    if f in (Family.S1, Family.S2, Family.S3, Family.S4):
        names = ["x"] + [f"e{i}" for i in range(1, n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _filiform_n(br, index, n)
        if f is Family.S1:
            beta = spec.beta
            _add(br, index, "e1", "x", {"e1": 1})
            for i in range(2, n + 1):
                _add(br, index, f"e{i}", "x", {f"e{i}": rat(i - 2) + beta})
        elif f is Family.S2:
            for i in range(2, n + 1):
                _add(br, index, f"e{i}", "x", {f"e{i}": 1})
        elif f is Family.S3:
            _add(br, index, "e1", "x", {"e1": 1, "e2": 1})
            for i in range(2, n + 1):
                _add(br, index, f"e{i}", "x", {f"e{i}": i - 1})
        else:  # S4: [e_i,x] = e_i + sum_{l=i+2}^n alpha_{l+1-i} e_l
            alpha = {l: a for l, a in zip(range(3, n), spec.alphas)}
            for i in range(2, n + 1):
                terms = {f"e{i}": rat(1)}
                for l in range(i + 2, n + 1):
                    a = alpha.get(l + 1 - i)
                    if a:
                        terms[f"e{l}"] = a
                _add(br, index, f"e{i}", "x", terms)
        return LieAlgebra(spec.label(), names, br)

    if f is Family.S_N2:
        names = ["x1", "x2"] + [f"e{i}" for i in range(1, n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _filiform_n(br, index, n)
        _add(br, index, "e1", "x1", {"e1": 1})
        for i in range(3, n + 1):
            _add(br, index, f"e{i}", "x1", {f"e{i}": i - 2})
        for i in range(2, n + 1):
            _add(br, index, f"e{i}", "x2", {f"e{i}": 1})
        return LieAlgebra(f"s_{{{n},2}}", names, br)

    if f in (Family.TAU1, Family.TAU2, Family.TAU3):
        names = ["x"] + [f"e{i}" for i in range(1, 2 * n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _filiform_q(br, index, n)
        if f is Family.TAU1:
            a = spec.beta
            _add(br, index, "e1", "x", {"e1": 1})
            for i in range(2, 2 * n):
                _add(br, index, f"e{i}", "x", {f"e{i}": rat(i - 2) + a})
            _add(br, index, f"e{2*n}", "x", {f"e{2*n}": rat(2 * n - 3) + 2 * a})
        elif f is Family.TAU2:
            _add(br, index, "e1", "x", {"e1": 1, f"e{2*n}": 1})
            for i in range(2, 2 * n):
                _add(br, index, f"e{i}", "x", {f"e{i}": i - n})
            _add(br, index, f"e{2*n}", "x", {f"e{2*n}": 1})
        else:
            # TAU3: [e_{i+2},x] = e_{i+2} + sum alpha_{2k} e_{2k+1+i}; the
            # alpha term is kept exactly while its target index stays within
            # e_{2n-1}, which is what the Jacobi identity forces
            alpha = {2 * k: a for k, a in zip(range(2, n), spec.alphas)}
            for i in range(0, 2 * n - 2):
                terms = {f"e{i+2}": rat(1)}
                for k in range(2, n):
                    if 2 * k + 1 + i > 2 * n - 1:
                        break
                    a = alpha.get(2 * k)
                    if a:
                        terms[f"e{2*k+1+i}"] = a
                _add(br, index, f"e{i+2}", "x", terms)
            _add(br, index, f"e{2*n}", "x", {f"e{2*n}": 2})
        return LieAlgebra(spec.label(), names, br)

    if f is Family.TAU_2N2:
        names = ["x", "y"] + [f"e{i}" for i in range(1, 2 * n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _filiform_q(br, index, n)
        for i in range(1, 2 * n):
            _add(br, index, f"e{i}", "x", {f"e{i}": i})
            # the y action must assign weight 0 to e_1 for the Jacobi
            # identity to hold against [e_i, e_1] = e_{i+1}
            if i >= 2:
                _add(br, index, f"e{i}", "y", {f"e{i}": 1})
        _add(br, index, f"e{2*n}", "x", {f"e{2*n}": 2 * n + 1})
        _add(br, index, f"e{2*n}", "y", {f"e{2*n}": 2})
        return LieAlgebra(f"tau_{{{2*n},2}}", names, br)

    if f is Family.HEIS_SOLV:
        names = [f"e{i}" for i in range(1, 2 * n + 2)] + [f"x{i}" for i in range(1, n + 2)]
        index = {nm: i for i, nm in enumerate(names)}
        for i in range(1, n + 1):
            _add(br, index, f"e{n+i}", f"e{i}", {f"e{2*n+1}": 1})
            _add(br, index, f"e{i}", f"x{i}", {f"e{i}": 1})
            _add(br, index, f"e{n+i}", f"x{i}", {f"e{n+i}": -1})
            _add(br, index, f"e{i}", f"x{n+1}", {f"e{i}": 1})
        _add(br, index, f"e{2*n+1}", f"x{n+1}", {f"e{2*n+1}": 1})
        return LieAlgebra(f"L_{{{n},{n+1}}}", names, br)

    if f is Family.ABELIAN_SOLV:
        names = [f"e{i}" for i in range(1, n + 1)] + [f"x{i}" for i in range(1, n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        for i in range(1, n + 1):
            _add(br, index, f"e{i}", f"x{i}", {f"e{i}": 1})
        return LieAlgebra(f"L_{n}", names, br)

    if f is Family.OSCILLATOR:
        names = ["e-1", "e0"] + [f"e{j}" for j in range(1, n + 1)] + [f"ě{j}" for j in range(1, n + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        for j in range(1, n + 1):
            lam = spec.lambdas[j - 1]
            _add(br, index, "e-1", f"e{j}", {f"ě{j}": lam})
            _add(br, index, "e-1", f"ě{j}", {f"e{j}": -lam})
            _add(br, index, f"e{j}", f"ě{j}", {"e0": 1})
        return LieAlgebra(spec.label(), names, br)

    if f is Family.SL2_MODULE:
        m = spec.m
        names = ["e", "f", "h"] + [f"x{k}" for k in range(0, m + 1)]
        index = {nm: i for i, nm in enumerate(names)}
        _add(br, index, "e", "f", {"h": 1})
        _add(br, index, "h", "e", {"e": 2})
        _add(br, index, "f", "h", {"f": 2})
        for k in range(0, m + 1):
            if 2 * k != m:
                _add(br, index, f"x{k}", "h", {f"x{k}": 2 * k - m})
        for k in range(0, m):
            _add(br, index, f"x{k}", "f", {f"x{k+1}": 1})
        for k in range(1, m + 1):
            _add(br, index, f"x{k}", "e", {f"x{k-1}": k * (m + 1 - k)})
        return LieAlgebra(f"L^{m}", names, br)

    if f is Family.SCHRODINGER:
        names = ["e", "f", "h", "z"]
        for i in range(1, n + 1):
            names += [f"x{i}", f"y{i}"]
        spairs = [(j, k) for j in range(1, n + 1) for k in range(j + 1, n + 1)]
        names += [f"s{j}{k}" for j, k in spairs]
        index = {nm: i for i, nm in enumerate(names)}
        _add(br, index, "e", "f", {"h": 1})
        _add(br, index, "h", "e", {"e": 2})
        _add(br, index, "f", "h", {"f": 2})
        for i in range(1, n + 1):
            _add(br, index, f"x{i}", f"y{i}", {"z": 1})
            _add(br, index, "h", f"x{i}", {f"x{i}": 1})
            _add(br, index, "h", f"y{i}", {f"y{i}": -1})
            _add(br, index, "e", f"y{i}", {f"x{i}": 1})
            _add(br, index, "f", f"x{i}", {f"y{i}": 1})
        for j, k in spairs:
            for i in range(1, n + 1):
                terms = {}
                if k == i:
                    terms[f"x{j}"] = terms.get(f"x{j}", 0) + 1
                if j == i:
                    terms[f"x{k}"] = terms.get(f"x{k}", 0) - 1
                if terms:
                    _add(br, index, f"s{j}{k}", f"x{i}", terms)
                terms = {}
                if k == i:
                    terms[f"y{j}"] = terms.get(f"y{j}", 0) + 1
                if j == i:
                    terms[f"y{k}"] = terms.get(f"y{k}", 0) - 1
                if terms:
                    _add(br, index, f"s{j}{k}", f"y{i}", terms)
        # [s_jk, s_lm] = d_lk s_jm + d_jm s_kl + d_mk s_lj + d_lj s_mk
        def s_terms(a, b):
            if a == b:
                return {}
            if a < b:
                return {f"s{a}{b}": 1}
            return {f"s{b}{a}": -1}

        for p1 in range(len(spairs)):
            for p2 in range(p1 + 1, len(spairs)):
                j, k = spairs[p1]
                l, m_ = spairs[p2]
                terms = {}
                for delta, (a, b) in (((l == k), (j, m_)), ((j == m_), (k, l)),
                                      ((m_ == k), (l, j)), ((l == j), (m_, k))):
                    if delta:
                        for nm, c in s_terms(a, b).items():
                            terms[nm] = terms.get(nm, 0) + c
                terms = {nm: c for nm, c in terms.items() if c}
                if terms:
                    _add(br, index, f"s{j}{k}", f"s{l}{m_}", terms)
        return LieAlgebra(f"S_{n}", names, br)

    raise ParameterError(f"unknown family {f!r}")


def list_families():
    """Stable-ordered listing of all constructors: (family, schema, display name)."""
    return [(fam, _FAMILY_INFO[fam][1], _FAMILY_INFO[fam][0]) for fam in Family]
