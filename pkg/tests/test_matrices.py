import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cliffcpt.blades import AlgebraSignature, SignedBlade, blade_product, division_ring, graded_masks, volume_square
from cliffcpt.fixtures import (
    FIXTURE_NAMES,
    find_intertwiner,
    fixture_basis,
    intertwiner_x,
    intertwiner_y,
    word_matrix,
)
from cliffcpt.matrices import (
    CliffordRelationError,
    GammaBasis,
    GaussianInt,
    GaussianMatrix,
    SingularIntertwinerError,
    brauer_weyl_basis,
    brauer_weyl_gammas,
    clifford_relation_failures,
    faithful_basis,
    kron,
    pauli,
    proportionality,
    rational_rank,
    rep_of_blade,
    schur_scalar,
    verify_intertwiner,
)

S0, S1, S2, S3 = (pauli(k) for k in range(4))
I2 = GaussianMatrix.identity(2)


def C(m: GaussianMatrix) -> np.ndarray:
    return m.to_complex()


# ---------------------------------------------------------------- gaussian arithmetic


def test_pauli_identities():
    for s in (S1, S2, S3):
        assert s @ s == I2
        assert s.H == s
    assert S1 @ S2 == S3.times_i(1)
    assert S2 @ S3 == S1.times_i(1)
    assert S3 @ S1 == S2.times_i(1)
    with pytest.raises(ValueError):
        pauli(4)


def test_exact_product_matches_numpy_complex():
    rng = np.random.default_rng(0)
    for _ in range(50):
        a = GaussianMatrix(rng.integers(-3, 4, (4, 4)), rng.integers(-3, 4, (4, 4)))
        b = GaussianMatrix(rng.integers(-3, 4, (4, 4)), rng.integers(-3, 4, (4, 4)))
        np.testing.assert_array_equal(C(a @ b), C(a) @ C(b))
        np.testing.assert_array_equal(C(kron(a, b)), np.kron(C(a), C(b)))
        np.testing.assert_array_equal(C(a.H), C(a).conj().T)


def test_kron_dimension_and_value():
    k = kron(S3, S1)
    assert k.dim == 4
    assert k == GaussianMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]])


def test_gaussian_int():
    i = GaussianInt.unit(1)
    assert i * i == GaussianInt(-1)
    assert str(GaussianInt(2, -3)) == "2-3i"
    assert GaussianInt(0, -1).unit_power() == 3
    assert GaussianInt(2).unit_power() is None


def test_schur_scalar_and_proportionality():
    assert schur_scalar(I2.times_i(1)) == GaussianInt(0, 1)
    assert schur_scalar(S3) is None
    assert proportionality(S3.times_i(3), S3) == 3
    assert proportionality(S1, S3) is None


def test_rational_rank():
    assert rational_rank(GaussianMatrix.identity(3)) == 3
    assert rational_rank(GaussianMatrix.from_rows([[1, 1], [1, 1]])) == 1
    # [[1, i], [i, -1]] has rank one over Q(i)
    m = GaussianMatrix([[1, 0], [0, -1]], [[0, 1], [1, 0]])
    assert rational_rank(m) == 1


# ---------------------------------------------------------------- Brauer-Weyl


def test_brauer_weyl_small_cases():
    assert brauer_weyl_gammas(2) == [S1, S2]
    assert brauer_weyl_gammas(3) == [S1, S2, S3]
    g = brauer_weyl_gammas(4)
    assert g[1] == kron(S3, S1)
    assert g[0] == kron(S1, I2)
    with pytest.raises(ValueError):
        brauer_weyl_gammas(1)


@pytest.mark.parametrize("n", range(2, 9))
def test_brauer_weyl_hermitian_and_squares(n):
    for g in brauer_weyl_gammas(n):
        assert g.H == g
        assert g @ g == GaussianMatrix.identity(g.dim)
        assert g.dim == 2 ** (n // 2)


@pytest.mark.parametrize("sig", [AlgebraSignature(p, n - p) for n in range(2, 9) for p in range(n + 1)], ids=str)
def test_brauer_weyl_clifford_relations(sig):
    basis = brauer_weyl_basis(sig)
    assert clifford_relation_failures(basis.gammas, sig) == []
    # independent float check of the anticommutator
    mats = [C(g) for g in basis.gammas]
    eye = np.eye(basis.dim)
    for i, j in itertools.product(range(sig.n), repeat=2):
        want = 2 * sig.square(i + 1) * eye if i == j else 0 * eye
        np.testing.assert_array_equal(mats[i] @ mats[j] + mats[j] @ mats[i], want)


def test_brauer_weyl_41_matches_brauer_weyl_gammas_times_i():
    basis = brauer_weyl_basis(AlgebraSignature(4, 1))
    raw = brauer_weyl_gammas(5)
    assert list(basis.gammas[:4]) == raw[:4]
    assert basis.gammas[4] == raw[4].times_i(1)


@pytest.mark.parametrize("sig", [AlgebraSignature(p, n - p) for n in range(2, 7) for p in range(n + 1)], ids=str)
def test_rep_is_homomorphism_exhaustive(sig):
    basis = brauer_weyl_basis(sig)
    blades = [SignedBlade(0, m) for m in graded_masks(sig.n)]
    reps = {b.mask: rep_of_blade(basis, b) for b in blades}
    for a in blades:
        for b in blades:
            ab = blade_product(a, b, sig)
            assert reps[a.mask] @ reps[b.mask] == reps[ab.mask].times_i(ab.phase)


@settings(max_examples=40, deadline=None)
@given(st.integers(7, 10).flatmap(lambda n: st.tuples(st.integers(0, n), st.just(n))), st.data())
def test_rep_is_homomorphism_random(pn, data):
    p, n = pn
    sig = AlgebraSignature(p, n - p)
    basis = brauer_weyl_basis(sig)
    a = SignedBlade(data.draw(st.integers(0, 3)), data.draw(st.integers(0, (1 << n) - 1)))
    b = SignedBlade(data.draw(st.integers(0, 3)), data.draw(st.integers(0, (1 << n) - 1)))
    assert rep_of_blade(basis, a) @ rep_of_blade(basis, b) == rep_of_blade(basis, blade_product(a, b, sig))


@pytest.mark.parametrize("sig", [AlgebraSignature(p, n - p) for n in (3, 5, 7) for p in range(n + 1)], ids=str)
def test_odd_volume_is_scalar(sig):
    basis = brauer_weyl_basis(sig)
    w = rep_of_blade(basis, SignedBlade(0, (1 << sig.n) - 1))
    c = schur_scalar(w)
    assert c is not None
    assert c * c == GaussianInt(volume_square(sig))


@pytest.mark.parametrize("sig", [AlgebraSignature(p, n - p) for n in (3, 5) for p in range(n + 1)], ids=str)
def test_faithful_basis_separates_blades(sig):
    basis = faithful_basis(brauer_weyl_basis(sig))
    assert basis.dim == 2 * brauer_weyl_basis(sig).dim
    seen = set()
    for k in range(4):
        for m in graded_masks(sig.n):
            seen.add(rep_of_blade(basis, SignedBlade(k, m)))
    assert len(seen) == 4 << sig.n


def test_faithful_basis_even_is_identity():
    b = fixture_basis("canonical")
    assert faithful_basis(b) is b


def test_bad_basis_rejected():
    with pytest.raises(CliffordRelationError):
        GammaBasis(AlgebraSignature(2, 0), (S1, S1), "bad")
    with pytest.raises(ValueError):
        GammaBasis(AlgebraSignature(3, 0), (S1, S2), "short")


# ---------------------------------------------------------------- fixtures


@pytest.mark.parametrize("name", FIXTURE_NAMES)
def test_fixture_relations(name):
    basis = fixture_basis(name)
    assert clifford_relation_failures(basis.gammas, basis.sig) == []
    assert basis.meta["ring"] == division_ring(basis.sig)


def test_fixture_shapes():
    assert fixture_basis("majorana31").gammas[0].is_real()
    assert all(g.is_real() for g in fixture_basis("majorana31").gammas)
    assert all(g.dim == 4 for n in FIXTURE_NAMES for g in fixture_basis(n).gammas)
    assert fixture_basis("sitter").sig == AlgebraSignature(4, 1)
    with pytest.raises(ValueError):
        fixture_basis("nope")


def test_canonical_gamma0_and_weyl_gamma0():
    cb, wb = fixture_basis("canonical"), fixture_basis("weyl")
    assert cb.gammas[0] == GaussianMatrix.from_rows([[-1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert wb.gammas[0] == GaussianMatrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]])


def test_word_matrix():
    cb = fixture_basis("canonical")
    assert word_matrix(cb, "10") == -word_matrix(cb, "01")
    assert word_matrix(cb, "00") == GaussianMatrix.identity(4)


def test_json_shape():
    d = fixture_basis("weyl").to_json()
    assert (d["p"], d["q"], d["dim"]) == (1, 3, 4)
    assert len(d["gammas"]) == 4 and d["gammas"][0][0][2] == [1, 0]


# ---------------------------------------------------------------- intertwiners


def test_x_relates_weyl_to_canonical():
    cb, wb = fixture_basis("canonical"), fixture_basis("weyl")
    x = intertwiner_x()
    assert verify_intertwiner(x, wb, cb)
    assert not verify_intertwiner(x, cb, wb)


@pytest.mark.parametrize("eps", [1, -1])
def test_y_relates_neither_way(eps):
    mb, wb = fixture_basis("majorana"), fixture_basis("weyl")
    y = intertwiner_y(eps)
    assert not verify_intertwiner(y, mb, wb)
    assert not verify_intertwiner(y, wb, mb)


def test_y_eps_checked():
    with pytest.raises(ValueError):
        intertwiner_y(0)


def test_singular_intertwiner():
    cb, wb = fixture_basis("canonical"), fixture_basis("weyl")
    with pytest.raises(SingularIntertwinerError):
        verify_intertwiner(GaussianMatrix.zeros(4), cb, wb)


@pytest.mark.parametrize("src,dst", [("canonical", "weyl"), ("majorana", "weyl"), ("weyl", "majorana"), ("canonical", "majorana")])
def test_find_intertwiner(src, dst):
    s, t = fixture_basis(src), fixture_basis(dst)
    a = find_intertwiner(s, t)
    assert a is not None and verify_intertwiner(a, s, t)
    # then every blade, not only the generators, is carried across
    for m in graded_masks(4):
        b = SignedBlade(0, m)
        assert a @ rep_of_blade(s, b) == rep_of_blade(t, b) @ a


def test_find_intertwiner_signature_mismatch():
    with pytest.raises(ValueError):
        find_intertwiner(fixture_basis("canonical"), fixture_basis("majorana31"))
