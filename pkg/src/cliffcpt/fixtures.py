"""Gamma-matrix bases and similarity matrices transcribed verbatim.

Cl(1,3) bases use the physics labels 0..3 with gamma_0 as generator 1; the
real Cl(3,1) basis maps gamma_0, gamma_1, gamma_2 (square +1) to generators
1..3 and gamma_3 (square -1) to generator 4.
"""

from __future__ import annotations

from .blades import AlgebraSignature, SignedBlade, graded_masks
from .matrices import (
    GammaBasis,
    GaussianMatrix,
    block,
    pauli,
    rep_of_blade,
    verify_intertwiner,
)

FIXTURE_NAMES = ("canonical", "weyl", "majorana", "majorana31", "sitter")

_S0, _S1, _S2, _S3 = (pauli(k) for k in range(4))
_Z = GaussianMatrix.zeros(2)
_I2 = GaussianMatrix.identity(2)

MINKOWSKI = AlgebraSignature(1, 3)
MAJORANA = AlgebraSignature(3, 1)
DE_SITTER = AlgebraSignature(4, 1)


def _canonical():
    g0 = block([[-1, _Z], [_Z, 1]])
    gk = [block([[_Z, s], [-s, _Z]]) for s in (_S1, _S2, _S3)]
    return [g0] + gk


def _weyl():
    # sigma_m = (1, sigma_k), bar sigma_m = (1, -sigma_k)
    g0 = block([[_Z, _S0], [_S0, _Z]])
    gk = [block([[_Z, s], [-s, _Z]]) for s in (_S1, _S2, _S3)]
    return [g0] + gk


def _majorana():
    return [
        block([[_Z, -_S2], [-_S2, _Z]]),
        block([[_Z, _S3.times_i(1)], [_S3.times_i(1), _Z]]),
        block([[_I2.times_i(1), _Z], [_Z, _I2.times_i(3)]]),
        block([[_Z, _S1.times_i(3)], [_S1.times_i(3), _Z]]),
    ]


def _majorana31():
    rows = [
        [[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 1]],
        [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]],
        [[0, 0, 1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, -1, 0, 0]],
        [[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]],
    ]
    return [GaussianMatrix.from_rows(r) for r in rows]


def _sitter():
    return [
        block([[_Z, _I2], [_I2, _Z]]),
        block([[_S1, _Z], [_Z, -_S1]]),
        block([[_Z, _I2.times_i(3)], [_I2.times_i(1), _Z]]),
        block([[_S2, _Z], [_Z, -_S2]]),
        block([[_S3.times_i(1), _Z], [_Z, _S3.times_i(3)]]),
    ]


_FIXTURES = {
    "canonical": (MINKOWSKI, _canonical, ("0", "1", "2", "3"), {"ring": "H"}),
    "weyl": (MINKOWSKI, _weyl, ("0", "1", "2", "3"), {"ring": "H"}),
    "majorana": (MINKOWSKI, _majorana, ("0", "1", "2", "3"), {"ring": "H"}),
    "majorana31": (MAJORANA, _majorana31, ("0", "1", "2", "3"), {"ring": "R"}),
    "sitter": (DE_SITTER, _sitter, ("1", "2", "3", "4", "5"), {"ring": "C"}),
}


def fixture_basis(name: str) -> GammaBasis:
    """One of the transcribed bases; Clifford relations are checked on construction."""
    try:
        sig, build, labels, meta = _FIXTURES[name]
    except KeyError:
        raise ValueError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}") from None
    return GammaBasis(sig, tuple(build()), name, labels, dict(meta))


def generator_index(basis: GammaBasis, label: str) -> int:
    """1-based generator for a physics label such as '0' or '3'."""
    return basis.labels.index(label) + 1


def word_blade(basis: GammaBasis, word: str) -> SignedBlade:
    """Blade for a word of generator labels in ascending generator order, e.g. '013'."""
    return SignedBlade.from_indices(sorted(generator_index(basis, ch) for ch in word))


def word_matrix(basis: GammaBasis, word: str) -> GaussianMatrix:
    """Ordered product of gammas for a label word, e.g. '2013' = g2 g0 g1 g3."""
    m = GaussianMatrix.identity(basis.dim)
    for ch in word:
        m = m @ basis.gammas[generator_index(basis, ch) - 1]
    return m


# Similarity matrices without their 1/sqrt(2) normalisation.

def intertwiner_x() -> GaussianMatrix:
    return block([[1, -1], [1, 1]], size=2)


def intertwiner_y(eps: int) -> GaussianMatrix:
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    return block([[_I2, _I2.times_i(1)], [_I2.scale(eps), _I2.times_i(1).scale(-eps)]])


def find_intertwiner(source: GammaBasis, target: GammaBasis) -> GaussianMatrix | None:
    """An exact A with A g_i(source) = g_i(target) A, by averaging over the blade group.

    Sums rep_target(b) N rep_source(b)^-1 over all blades for each matrix unit
    N; returns the first nonzero, invertible result.
    """
    if source.sig != target.sig or source.dim != target.dim:
        raise ValueError("bases must share signature and dimension")
    sig, dim = source.sig, source.dim
    pairs = []
    for mask in graded_masks(sig.n):
        b = SignedBlade(0, mask)
        s = rep_of_blade(source, b)
        # blade matrices square to +-I, so the inverse is +-the matrix itself
        sq = (s @ s).re[0, 0]
        pairs.append((rep_of_blade(target, b), s.scale(int(sq))))
    for r in range(dim):
        for c in range(dim):
            unit = GaussianMatrix.zeros(dim)
            re = unit.re.copy()
            re[r, c] = 1
            unit = GaussianMatrix(re)
            total = GaussianMatrix.zeros(dim)
            for t, s_inv in pairs:
                total = total + t @ unit @ s_inv
            if total.is_zero():
                continue
            try:
                if verify_intertwiner(total, source, target):
                    return total
            except ValueError:
                continue
    return None


def intertwiner_report() -> dict:
    """Which stated similarity relations hold, in which direction."""
    cb, wb, mb = (fixture_basis(n) for n in ("canonical", "weyl", "majorana"))
    x = intertwiner_x()
    out = {
        "X canonical->weyl": verify_intertwiner(x, cb, wb),
        "X weyl->canonical": verify_intertwiner(x, wb, cb),
    }
    for eps in (1, -1):
        y = intertwiner_y(eps)
        out[f"Y(eps={eps:+d}) majorana->weyl"] = verify_intertwiner(y, mb, wb)
        out[f"Y(eps={eps:+d}) weyl->majorana"] = verify_intertwiner(y, wb, mb)
    return out
