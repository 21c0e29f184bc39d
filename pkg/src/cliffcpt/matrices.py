"""Exact Gaussian-integer matrices and gamma-matrix spinor bases.

Entries are stored as a pair of int64 arrays (real and imaginary parts), so
every product and comparison is exact.  Nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .blades import AlgebraSignature, SignedBlade

# i**k as (re, im)
_UNIT = {0: (1, 0), 1: (0, 1), 2: (-1, 0), 3: (0, -1)}


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    @classmethod
    def unit(cls, k: int) -> "GaussianInt":
        return cls(*_UNIT[k % 4])

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def unit_power(self) -> int | None:
        """k with self == i**k, or None when self is not a unit."""
        for k, v in _UNIT.items():
            if v == (self.re, self.im):
                return k
        return None

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"


class GaussianMatrix:
    """Square matrix over Z[i]."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        re = np.asarray(re)
        if np.iscomplexobj(re):
            raise TypeError("pass real and imaginary parts as separate integer arrays")
        re = re.astype(np.int64)
        im = np.zeros_like(re) if im is None else np.asarray(im).astype(np.int64)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape != im.shape:
            raise ValueError(f"need matching square arrays, got {re.shape} and {im.shape}")
        re.flags.writeable = False
        im.flags.writeable = False
        self.re = re
        self.im = im

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GaussianMatrix":
        """Build from nested rows whose entries are ints or (re, im) pairs."""
        re = [[e[0] if isinstance(e, (tuple, list)) else e for e in row] for row in rows]
        im = [[e[1] if isinstance(e, (tuple, list)) else 0 for e in row] for row in rows]
        return cls(re, im)

    @classmethod
    def identity(cls, dim: int) -> "GaussianMatrix":
        return cls(np.eye(dim, dtype=np.int64))

    @classmethod
    def zeros(cls, dim: int) -> "GaussianMatrix":
        return cls(np.zeros((dim, dim), dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def __matmul__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianMatrix(a @ c - b @ d, a @ d + b @ c)

    def __add__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianMatrix") -> "GaussianMatrix":
        return GaussianMatrix(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianMatrix":
        return GaussianMatrix(-self.re, -self.im)

    def scale(self, c: GaussianInt | int) -> "GaussianMatrix":
        if isinstance(c, int):
            c = GaussianInt(c)
        return GaussianMatrix(c.re * self.re - c.im * self.im, c.re * self.im + c.im * self.re)

    def times_i(self, k: int = 1) -> "GaussianMatrix":
        return self.scale(GaussianInt.unit(k))

    @property
    def T(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re.T, self.im.T)

    def conj(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re, -self.im)

    @property
    def H(self) -> "GaussianMatrix":
        return GaussianMatrix(self.re.T, -self.im.T)

    def is_real(self) -> bool:
        return not self.im.any()

    def __eq__(self, other):
        if not isinstance(other, GaussianMatrix):
            return NotImplemented
        return (self.re.shape == other.re.shape and np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    def __hash__(self):
        return hash((self.re.tobytes(), self.im.tobytes(), self.dim))

    def is_zero(self) -> bool:
        return not (self.re.any() or self.im.any())

    def entries(self) -> list[list[list[int]]]:
        """JSON form: rows of [re, im] pairs."""
        return [[[int(r), int(i)] for r, i in zip(rr, ii)] for rr, ii in zip(self.re, self.im)]

    def to_complex(self) -> np.ndarray:
        """Complex view for display or interop only."""
        return self.re + 1j * self.im

    def __repr__(self):
        rows = ["[" + ", ".join(str(GaussianInt(int(r), int(i))) for r, i in zip(rr, ii)) + "]"
                for rr, ii in zip(self.re, self.im)]
        return "GaussianMatrix([" + ", ".join(rows) + "])"

    def __str__(self):
        cells = [[str(GaussianInt(int(r), int(i))) for r, i in zip(rr, ii)]
                 for rr, ii in zip(self.re, self.im)]
        width = max(len(c) for row in cells for c in row)
        return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def kron(a: GaussianMatrix, b: GaussianMatrix) -> GaussianMatrix:
    return GaussianMatrix(np.kron(a.re, b.re) - np.kron(a.im, b.im),
                          np.kron(a.re, b.im) + np.kron(a.im, b.re))


_PAULI = {
    0: ([[1, 0], [0, 1]], [[0, 0], [0, 0]]),
    1: ([[0, 1], [1, 0]], [[0, 0], [0, 0]]),
    2: ([[0, 0], [0, 0]], [[0, -1], [1, 0]]),
    3: ([[1, 0], [0, -1]], [[0, 0], [0, 0]]),
}


def pauli(k: int) -> GaussianMatrix:
    """Pauli matrix sigma_k; k = 0 is the 2x2 identity."""
    if k not in _PAULI:
        raise ValueError(f"Pauli index must be 0..3, got {k}")
    return GaussianMatrix(*_PAULI[k])


def kron_all(factors: Iterable[GaussianMatrix]) -> GaussianMatrix:
    return reduce(kron, factors)


def block(rows: Sequence[Sequence[GaussianMatrix | int]], size: int | None = None) -> GaussianMatrix:
    """Assemble a block matrix; an int entry ``c`` means ``c`` times the identity."""
    if size is None:
        size = next(m.dim for row in rows for m in row if isinstance(m, GaussianMatrix))

    def lift(m):
        return m if isinstance(m, GaussianMatrix) else GaussianMatrix.identity(size).scale(m)

    lifted = [[lift(m) for m in row] for row in rows]
    re = np.block([[m.re for m in row] for row in lifted])
    im = np.block([[m.im for m in row] for row in lifted])
    return GaussianMatrix(re, im)


def is_scalar(m: GaussianMatrix) -> bool:
    return schur_scalar(m) is not None


def schur_scalar(m: GaussianMatrix) -> GaussianInt | None:
    """c if ``m == c * I`` exactly, otherwise None."""
    c = GaussianInt(int(m.re[0, 0]), int(m.im[0, 0]))
    if m == GaussianMatrix.identity(m.dim).scale(c):
        return c
    return None


def proportionality(a: GaussianMatrix, b: GaussianMatrix) -> int | None:
    """k with ``a == i**k * b``, or None."""
    for k in range(4):
        if a == b.times_i(k):
            return k
    return None


class CliffordRelationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class GammaBasis:
    """Gamma matrices for the generators ``e_1..e_n`` of a Clifford algebra.

    ``labels`` gives the display symbol of each generator (the fixtures use
    the physics numbering 0..3 for Cl(1,3)); ``meta`` carries fixture notes.
    """

    sig: AlgebraSignature
    gammas: tuple[GaussianMatrix, ...]
    name: str
    labels: tuple[str, ...] = ()
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.gammas) != self.sig.n:
            raise ValueError(f"{self.name}: {len(self.gammas)} matrices for {self.sig}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(1, self.sig.n + 1)))
        failures = clifford_relation_failures(self.gammas, self.sig)
        if failures:
            raise CliffordRelationError(f"{self.name}: Clifford relations fail for pairs {failures}")

    @property
    def dim(self) -> int:
        return self.gammas[0].dim

    @property
    def label_map(self) -> dict[int, str]:
        return {i + 1: s for i, s in enumerate(self.labels)}

    def blade_name(self, b: SignedBlade) -> str:
        return b.label(self.label_map)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "p": self.sig.p,
            "q": self.sig.q,
            "dim": self.dim,
            "gammas": [g.entries() for g in self.gammas],
        }


def clifford_relation_failures(gammas: Sequence[GaussianMatrix], sig: AlgebraSignature) -> list[tuple[int, int]]:
    """Pairs (i, j), 1-based, violating g_i g_j + g_j g_i = 2 g_ij I."""
    dim = gammas[0].dim
    eye2 = GaussianMatrix.identity(dim).scale(2)
    zero = GaussianMatrix.zeros(dim)
    bad = []
    for i, gi in enumerate(gammas):
        for j in range(i, len(gammas)):
            gj = gammas[j]
            anti = gi @ gj + gj @ gi
            want = eye2.scale(sig.square(i + 1)) if i == j else zero
            if anti != want:
                bad.append((i + 1, j + 1))
    return bad


def rep_of_blade(basis: GammaBasis, b: SignedBlade) -> GaussianMatrix:
    """phase * product of the gammas of ``b`` in ascending index order."""
    b.check(basis.sig)
    m = GaussianMatrix.identity(basis.dim)
    for i in b.indices:
        m = m @ basis.gammas[i - 1]
    return m.times_i(b.phase)


def brauer_weyl_gammas(n: int) -> list[GaussianMatrix]:
    """Hermitian tensor-product generators, all squaring to +I.

    For n = 2m the first m use sigma_1 and the next m sigma_2 behind a run of
    sigma_3 factors; for odd n the product sigma_3 x ... x sigma_3 is appended.
    """
    m = n // 2
    if m < 1:
        raise ValueError(f"Brauer-Weyl construction needs n >= 2, got {n}")
    s0, s3 = pauli(0), pauli(3)

    def slot(j: int, k: int) -> GaussianMatrix:
        return kron_all([s3] * j + [pauli(k)] + [s0] * (m - j - 1))

    gammas = [slot(j, 1) for j in range(m)] + [slot(j, 2) for j in range(m)]
    if n % 2:
        gammas.append(kron_all([s3] * m))
    return gammas


def faithful_basis(basis: GammaBasis) -> GammaBasis:
    """A representation in which distinct signed blades stay distinct.

    For odd n an irreducible representation sends the volume element to a
    scalar; the sum diag(g, -g) of the two inequivalent ones is faithful.
    Even n bases are returned unchanged.
    """
    if basis.sig.n % 2 == 0:
        return basis
    z = GaussianMatrix.zeros(basis.dim)
    doubled = tuple(block([[g, z], [z, -g]]) for g in basis.gammas)
    return GammaBasis(basis.sig, doubled, basis.name + "+", basis.labels, dict(basis.meta))


def brauer_weyl_basis(sig: AlgebraSignature) -> GammaBasis:
    """Brauer-Weyl spinor basis adapted to the metric of ``sig``.

    The last q generators are multiplied by i so they square to -I.
    """
    raw = brauer_weyl_gammas(sig.n)
    gammas = tuple(g.times_i(1) if sig.square(i + 1) < 0 else g for i, g in enumerate(raw))
    return GammaBasis(sig, gammas, f"brauer-weyl({sig.p},{sig.q})")


class SingularIntertwinerError(ValueError):
    pass


def rational_rank(m: GaussianMatrix) -> int:
    """Rank over Q(i) via fraction-free elimination on the real 2n x 2n form."""
    from fractions import Fraction

    real = np.block([[m.re, -m.im], [m.im, m.re]])
    rows = [[Fraction(int(x)) for x in row] for row in real]
    rank, ncols = 0, len(rows[0])
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    # the real form doubles the complex rank
    return rank // 2


def verify_intertwiner(a: GaussianMatrix, source: GammaBasis, target: GammaBasis) -> bool:
    """True iff ``a @ g_i(source) == g_i(target) @ a`` for every generator."""
    if a.dim != source.dim or source.dim != target.dim or source.sig.n != target.sig.n:
        raise ValueError("intertwiner and bases must share dimension and generator count")
    if rational_rank(a) < a.dim:
        raise SingularIntertwinerError("intertwiner is singular")
    return all(a @ gs == gt @ a for gs, gt in zip(source.gammas, target.gammas))
