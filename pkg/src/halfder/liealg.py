"""Structure-constant representation of a finite-dimensional Lie algebra.

Brackets are stored sparsely on ordered index pairs i < j; antisymmetry is
structural.  The JSON file format is::

    {"name": str, "dim": int, "basis": [str],
     "brackets": [{"i": int, "j": int, "terms": {"k": "p/q"}}]}

with 0-based indices.  The loader enforces the structural invariants and
the Jacobi identity.
"""

from __future__ import annotations

import json

from .errors import DimensionMismatchError, ParseError, ValidationError
from .exactlin import ZERO, rat, rat_from_str, rat_to_str


class LieAlgebra:
    """Immutable Lie algebra given by basis names and structure constants."""

    __slots__ = ("name", "basis_names", "brackets")

    def __init__(self, name, basis_names, brackets):
        self.name = name
        self.basis_names = tuple(basis_names)
        if len(set(self.basis_names)) != len(self.basis_names):
            raise ValidationError(f"{name}: duplicate basis names")
        d = len(self.basis_names)
        clean = {}
        for (i, j), terms in brackets.items():
            if not (0 <= i < j < d):
                raise ValidationError(f"{name}: bracket pair ({i},{j}) must satisfy 0 <= i < j < dim")
            tclean = {}
            for k, c in terms.items():
                if not 0 <= k < d:
                    raise ValidationError(f"{name}: bracket ({i},{j}) hits index {k} >= dim {d}")
                c = rat(c)
                if c:
                    tclean[k] = c
            if tclean:
                clean[(i, j)] = tclean
        self.brackets = clean

    @property
    def dim(self) -> int:
        return len(self.basis_names)

    def index(self, name) -> int:
        return self.basis_names.index(name)

    def basis_vector(self, i):
        v = [ZERO] * self.dim
        v[i] = rat(1)
        return v

    def bracket_basis(self, i, j):
        """[e_i, e_j] as a sparse dict, for any index order."""
        if i == j:
            return {}
        if i < j:
            return self.brackets.get((i, j), {})
        terms = self.brackets.get((j, i), {})
        return {k: -c for k, c in terms.items()}

    def bracket(self, u, v):
        """Bilinear, antisymmetric evaluation of [u, v] via structure constants."""
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatchError(f"{self.name}: elements must have length {self.dim}")
        out = [ZERO] * self.dim
        for (i, j), terms in self.brackets.items():
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                for k, c in terms.items():
                    out[k] += coef * c
        return out

    def check_jacobi(self):
        """None if Jacobi holds; else the first violating (i, j, k, residual)."""
        d = self.dim
        for i in range(d):
            for j in range(i + 1, d):
                for k in range(j + 1, d):
                    acc = {}
                    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
                        for s, v in self.bracket_basis(a, b).items():
                            for t, w in self.bracket_basis(s, c).items():
                                acc[t] = acc.get(t, ZERO) + v * w
                    if any(acc.values()):
                        res = [ZERO] * d
                        for t, v in acc.items():
                            res[t] = v
                        return (i, j, k, res)
        return None

    def jacobi_holds(self) -> bool:
        return self.check_jacobi() is None

    # -- serialization ----------------------------------------------------

    def to_dict(self):
        return {
            "name": self.name,
            "dim": self.dim,
            "basis": list(self.basis_names),
            "brackets": [
                {"i": i, "j": j, "terms": {str(k): rat_to_str(c) for k, c in sorted(terms.items())}}
                for (i, j), terms in sorted(self.brackets.items())
            ],
        }

    @classmethod
    def from_dict(cls, data, validate_jacobi=True):
        if not isinstance(data, dict):
            raise ParseError("algebra file: top level must be an object")
        for field in ("name", "dim", "basis", "brackets"):
            if field not in data:
                raise ParseError(f"algebra file: missing field '{field}'")
        name = data["name"]
        dim = data["dim"]
        basis = data["basis"]
        if not isinstance(dim, int) or dim < 1:
            raise ParseError(f"algebra '{name}': 'dim' must be a positive integer")
        if not isinstance(basis, list) or len(basis) != dim:
            raise ParseError(f"algebra '{name}': 'basis' must list exactly {dim} names")
        brackets = {}
        for pos, entry in enumerate(data["brackets"]):
            where = f"algebra '{name}', brackets[{pos}]"
            if not isinstance(entry, dict) or not {"i", "j", "terms"} <= set(entry):
                raise ParseError(f"{where}: need fields i, j, terms")
            i, j = entry["i"], entry["j"]
            if not (isinstance(i, int) and isinstance(j, int)):
                raise ParseError(f"{where}: i, j must be integers")
            if not 0 <= i < j < dim:
                raise ParseError(f"{where}: need 0 <= i < j < dim, got ({i},{j}) with dim {dim}")
            if (i, j) in brackets:
                raise ParseError(f"{where}: duplicate pair ({i},{j})")
            terms = {}
            for ks, cs in entry["terms"].items():
                try:
                    k = int(ks)
                except ValueError:
                    raise ParseError(f"{where}: term key {ks!r} is not an integer") from None
                if not 0 <= k < dim:
                    raise ParseError(f"{where}: term index {k} out of range for dim {dim}")
                terms[k] = rat_from_str(cs)
            brackets[(i, j)] = terms
        try:
            alg = cls(name, basis, brackets)
        except ValidationError as exc:
            raise ParseError(str(exc)) from exc
        if validate_jacobi:
            bad = alg.check_jacobi()
            if bad is not None:
                i, j, k, res = bad
                raise ValidationError(
                    f"algebra '{name}': Jacobi identity fails on triple ({i},{j},{k}), "
                    f"residual {[rat_to_str(v) for v in res]}")
        return alg

    def dumps(self, indent=2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def loads(cls, text, validate_jacobi=True):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"algebra file: invalid JSON ({exc})") from exc
        return cls.from_dict(data, validate_jacobi=validate_jacobi)

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.dumps() + "\n")

    @classmethod
    def load(cls, path, validate_jacobi=True):
        with open(path) as fh:
            return cls.loads(fh.read(), validate_jacobi=validate_jacobi)

    def __eq__(self, other):
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (self.name == other.name and self.basis_names == other.basis_names
                and self.brackets == other.brackets)

    def __hash__(self):
        return hash((self.name, self.basis_names))

    def __repr__(self):
        return f"LieAlgebra({self.name!r}, dim={self.dim})"


def roundtrip(alg: LieAlgebra) -> LieAlgebra:
    """Serialize then deserialize; structurally equal to the input."""
    return LieAlgebra.loads(alg.dumps())
