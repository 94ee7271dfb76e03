"""Structure-constant Lie algebras: brackets, Jacobi, serialization."""

import pytest
from hypothesis import given, settings, strategies as st

from halfder import (Family, FamilySpec, LieAlgebra, ParseError,
                     ValidationError, build, rat, roundtrip)
from halfder.exactlin import ZERO

from conftest import get_algebra, representative_specs

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=6)


def test_filiform_brackets():
    A = get_algebra(FamilySpec(Family.N_FILIFORM, n=4))
    # n_{4,1}: [e2, e1] = e3, [e3, e1] = e4
    i1, i2, i3 = A.index("e1"), A.index("e2"), A.index("e3")
    assert A.bracket_basis(i2, i1) == {i3: rat(1)}
    assert A.bracket_basis(i1, i2) == {i3: rat(-1)}
    assert A.bracket_basis(i1, i1) == {}


def test_q_filiform_brackets():
    A = get_algebra(FamilySpec(Family.Q_FILIFORM, n=3))
    # Q_6: [e2, e5] = e6
    assert A.bracket_basis(A.index("e2"), A.index("e5")) == {A.index("e6"): rat(1)}
    assert A.bracket_basis(A.index("e3"), A.index("e4")) == {A.index("e6"): rat(-1)}


def test_jacobi_detects_flipped_constant():
    A = get_algebra(FamilySpec(Family.Q_FILIFORM, n=3))
    assert A.jacobi_holds()
    # flip the sign of [e2, e5] = e6
    broken = {k: ({t: -c for t, c in v.items()} if k == (1, 4) else v)
              for k, v in A.brackets.items()}
    bad = LieAlgebra("broken", A.basis_names, broken).check_jacobi()
    assert bad is not None
    i, j, k, res = bad
    assert any(v != 0 for v in res)


def test_roundtrip_all_families():
    for spec in representative_specs():
        A = get_algebra(spec)
        assert roundtrip(A) == A


def test_parse_errors():
    with pytest.raises(ParseError):
        LieAlgebra.loads("not json")
    with pytest.raises(ParseError):
        LieAlgebra.loads('{"name": "a", "dim": 2, "basis": ["x"]}')
    with pytest.raises(ParseError):
        LieAlgebra.loads('{"name": "a", "dim": 2, "basis": ["x", "y"], '
                         '"brackets": [{"i": 0, "j": 1, "terms": {"5": "1"}}]}')
    with pytest.raises(ParseError):
        LieAlgebra.loads('{"name": "a", "dim": 2, "basis": ["x", "y"], '
                         '"brackets": [{"i": 1, "j": 0, "terms": {"0": "1"}}]}')
    with pytest.raises(ParseError):
        LieAlgebra.loads('{"name": "a", "dim": 2, "basis": ["x", "y"], '
                         '"brackets": [{"i": 0, "j": 1, "terms": {"0": "1/0"}}]}')


def test_loader_enforces_jacobi():
    # sl2 with one wrong sign: [e,f]=h, [h,e]=2e, [h,f]=+2f breaks Jacobi
    text = ('{"name": "bad", "dim": 3, "basis": ["e", "f", "h"], "brackets": ['
            '{"i": 0, "j": 1, "terms": {"2": "1"}},'
            '{"i": 0, "j": 2, "terms": {"0": "-2"}},'
            '{"i": 1, "j": 2, "terms": {"1": "-2"}}]}')
    with pytest.raises(ValidationError):
        LieAlgebra.loads(text)
    assert LieAlgebra.loads(text, validate_jacobi=False).check_jacobi() is not None


def _vec(A, coeffs):
    coeffs = list(coeffs)[:A.dim]
    return [rat(c) for c in coeffs] + [ZERO] * (A.dim - len(coeffs))


@settings(max_examples=60, derandomize=True)
@given(st.sampled_from(representative_specs()[:6]),
       st.lists(rationals, min_size=5, max_size=5),
       st.lists(rationals, min_size=5, max_size=5),
       st.fractions(min_value=-9, max_value=9, max_denominator=4))
def test_bracket_antisymmetric_bilinear(spec, u5, v5, c):
    A = get_algebra(spec)
    u, v = _vec(A, u5), _vec(A, v5)
    uv = A.bracket(u, v)
    vu = A.bracket(v, u)
    assert all(a + b == 0 for a, b in zip(uv, vu))
    cu = [rat(c) * x for x in u]
    assert A.bracket(cu, v) == [rat(c) * x for x in uv]
    w = _vec(A, [1, 0, 2])
    lhs = A.bracket([a + b for a, b in zip(u, w)], v)
    rhs = [a + b for a, b in zip(uv, A.bracket(w, v))]
    assert lhs == rhs


def test_save_load(tmp_path):
    A = get_algebra(FamilySpec(Family.S_N2, n=4))
    p = tmp_path / "alg.json"
    A.save(p)
    assert LieAlgebra.load(p) == A
