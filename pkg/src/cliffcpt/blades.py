"""Signed basis blades of Cl(p,q) and its complexification.

A blade ``e_S`` is stored as a bit set: bit ``i - 1`` is set when generator
``e_i`` occurs in ``S``.  The phase is an element of Z4, ``k`` meaning ``i**k``;
the real algebra only ever produces ``k in {0, 2}``.

Generators ``1..p`` square to ``+1`` and ``p+1..n`` square to ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_GENERATORS = 12

_PHASE_NAMES = {0: "+", 1: "+i", 2: "-", 3: "-i"}


@dataclass(frozen=True)
class AlgebraSignature:
    """The pair (p, q) of a real Clifford algebra Cl(p,q)."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be non-negative, got ({self.p}, {self.q})")
        if not 1 <= self.n <= MAX_GENERATORS:
            raise ValueError(f"need 1 <= p+q <= {MAX_GENERATORS}, got p+q={self.n}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def negative_mask(self) -> int:
        """Bit set of the generators squaring to -1."""
        return self.full_mask & ~((1 << self.p) - 1)

    def square(self, i: int) -> int:
        """Square sign (+1 or -1) of generator ``e_i`` (1-based)."""
        if not 1 <= i <= self.n:
            raise IndexError(f"generator index {i} outside 1..{self.n}")
        return 1 if i <= self.p else -1

    def metric(self) -> list[int]:
        return [self.square(i) for i in range(1, self.n + 1)]

    def __str__(self):
        return f"Cl({self.p},{self.q})"


def mask_from_indices(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        if i < 1:
            raise IndexError(f"generator indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def indices_from_mask(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True, order=True)
class SignedBlade:
    """``i**phase * e_S`` with ``S`` encoded as the bit set ``mask``."""

    phase: int
    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise ValueError("blade mask must be non-negative")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def from_indices(cls, indices: Iterable[int] = (), phase: int = 0) -> "SignedBlade":
        return cls(phase, mask_from_indices(indices))

    @classmethod
    def one(cls) -> "SignedBlade":
        return cls(0, 0)

    @property
    def indices(self) -> tuple[int, ...]:
        return indices_from_mask(self.mask)

    @property
    def grade(self) -> int:
        return self.mask.bit_count()

    @property
    def is_real(self) -> bool:
        return self.phase in (0, 2)

    def negate(self) -> "SignedBlade":
        return SignedBlade(self.phase + 2, self.mask)

    def unsigned(self) -> "SignedBlade":
        """The same blade with phase +1."""
        return SignedBlade(0, self.mask)

    def check(self, sig: AlgebraSignature) -> None:
        if self.mask & ~sig.full_mask:
            bad = [i for i in self.indices if i > sig.n]
            raise IndexError(f"generator index {bad[0]} outside 1..{sig.n} for {sig}")

    def label(self, names: dict[int, str] | None = None) -> str:
        """Render as e.g. ``-e13`` or ``+ie``; ``names`` maps index -> symbol."""
        if names is None:
            body = "e" + "".join(str(i) if i < 10 else f"({i})" for i in self.indices)
        else:
            body = "g" + "".join(names[i] for i in self.indices)
        if self.mask == 0:
            body = "1"
        return f"{_PHASE_NAMES[self.phase]}{body}"

    def __str__(self):
        return self.label()


def reorder_sign(a: int, b: int) -> int:
    """Parity of transpositions needed to sort ``e_A e_B`` (0 even, 1 odd).

    For each generator of ``b`` count the generators of ``a`` with a higher
    index that it must move past.
    """
    swaps = 0
    a >>= 1
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return swaps & 1


def blade_product(a: SignedBlade, b: SignedBlade, sig: AlgebraSignature) -> SignedBlade:
    """Geometric product of two signed blades in Cl(p,q) (or its complexification)."""
    a.check(sig)
    b.check(sig)
    return SignedBlade(a.phase + b.phase + _mask_phase(a.mask, b.mask, sig.p, sig.q), a.mask ^ b.mask)


@lru_cache(maxsize=1 << 16)
def _mask_phase(a: int, b: int, p: int, q: int) -> int:
    """Z4 phase (0 or 2) picked up by ``e_A e_B``."""
    neg = ((1 << (p + q)) - 1) & ~((1 << p) - 1)
    flips = reorder_sign(a, b) + (a & b & neg).bit_count()
    return 2 * (flips & 1)


def blade_power_sign(mask: int, sig: AlgebraSignature) -> int:
    """Sign of ``e_S * e_S`` (always a real scalar)."""
    return -1 if _mask_phase(mask, mask, sig.p, sig.q) else 1


def _grade_sign(a: SignedBlade, exponent: int) -> SignedBlade:
    return SignedBlade(a.phase + 2 * (exponent & 1), a.mask)


def grade_involution(a: SignedBlade) -> SignedBlade:
    """A -> A*: a grade-k blade picks up (-1)**k."""
    return _grade_sign(a, a.grade)


def reversion(a: SignedBlade) -> SignedBlade:
    """A -> ~A: (-1)**(k(k-1)/2)."""
    k = a.grade
    return _grade_sign(a, k * (k - 1) // 2)


def conjugation(a: SignedBlade) -> SignedBlade:
    """A -> ~A*: (-1)**(k(k+1)/2)."""
    k = a.grade
    return _grade_sign(a, k * (k + 1) // 2)


def pseudo_conjugation(a: SignedBlade) -> SignedBlade:
    """Complex conjugation of the phase; the index set is untouched."""
    return SignedBlade(-a.phase, a.mask)


def volume_blade(sig: AlgebraSignature) -> SignedBlade:
    return SignedBlade(0, sig.full_mask)


def volume_square_closed_form(sig: AlgebraSignature) -> int:
    return -1 if (sig.p - sig.q) % 8 in (2, 3, 6, 7) else 1


def volume_square(sig: AlgebraSignature) -> int:
    """Square of the volume element omega = e_1...e_n by the mod-8 rule.

    The closed form is cross-checked against the blade product; a disagreement
    raises ``AssertionError``.
    """
    closed = volume_square_closed_form(sig)
    w = volume_blade(sig)
    direct = blade_product(w, w, sig)
    assert direct.mask == 0 and direct.is_real
    assert (1 if direct.phase == 0 else -1) == closed, f"omega^2 law fails for {sig}"
    return closed


CENTER_TRIVIAL = "trivial"
CENTER_TWO = "two-element"


def center_type_closed_form(sig: AlgebraSignature) -> str:
    return CENTER_TWO if (sig.p - sig.q) % 2 else CENTER_TRIVIAL


def commutes(a: SignedBlade, b: SignedBlade, sig: AlgebraSignature) -> bool:
    return blade_product(a, b, sig) == blade_product(b, a, sig)


def center_type(sig: AlgebraSignature) -> str:
    """Center of Cl(p,q): ``"trivial"`` ({1}) or ``"two-element"`` ({1, omega}).

    The mod-8 answer is confirmed by testing omega against every generator.
    """
    closed = center_type_closed_form(sig)
    w = volume_blade(sig)
    central = all(commutes(w, generator(i), sig) for i in range(1, sig.n + 1))
    assert central == (closed == CENTER_TWO), f"center law fails for {sig}"
    return closed


def generator(i: int) -> SignedBlade:
    return SignedBlade(0, 1 << (i - 1))


def graded_masks(n: int) -> list[int]:
    """All index sets of {1..n}, ordered by grade then lexicographically."""
    return sorted(range(1 << n), key=lambda m: (m.bit_count(), indices_from_mask(m)))


def iter_blades(sig: AlgebraSignature, real: bool = True) -> Iterator[SignedBlade]:
    """Every signed blade of G(p,q) (``real``) or of the complexified group."""
    phases = (0, 2) if real else (0, 1, 2, 3)
    for m in graded_masks(sig.n):
        for k in phases:
            yield SignedBlade(k, m)


_RINGS = {0: "R", 1: "R+R", 2: "R", 3: "C", 4: "H", 5: "H+H", 6: "H", 7: "C"}


def division_ring(sig: AlgebraSignature) -> str:
    """Ring K of the matrix algebra Cl(p,q) ~ M(K) by p - q mod 8 (R+R, H+H: two simple blocks)."""
    return _RINGS[(sig.p - sig.q) % 8]
