"""Spinor matrices of the eight (pseudo/anti)automorphisms and CPT groups.

For a gamma basis the transpose map ``A -> E A^T E^-1`` realises reversion,
``A -> Pi A* Pi^-1`` realises the pseudoautomorphism, and ``W`` (the volume
element) realises the grade involution.  The remaining four matrices are
products: ``C = EW``, ``K = Pi W``, ``S = Pi E``, ``F = Pi C``.  Together
with ``I`` these form a group modulo phases whose squares give the
seven-sign CPT signature.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .blades import SignedBlade, blade_product, graded_masks, volume_blade
from .groups import GroupError, GroupTable
from .matrices import GammaBasis, GaussianMatrix, faithful_basis, proportionality, rep_of_blade, schur_scalar

EXT_KEYS = ("I", "W", "E", "C", "Pi", "K", "S", "F")
CPT_KEYS = ("1", "P", "T", "PT", "C", "CP", "CT", "CPT")


class SolverError(ValueError):
    pass


def _sign_char(square: int) -> str:
    return "+" if square > 0 else "-"


def signature_string(signs: Sequence[int]) -> str:
    return "".join(_sign_char(s) for s in signs)


# ------------------------------------------------------------------ solvers


def _blade_key(basis: GammaBasis) -> Callable[[int], tuple]:
    """Canonical-representative order on index sets.

    For odd n the volume element is a scalar, so e_S and e_S * omega give
    proportional matrices; the representative is the one avoiding the last
    generator.  Ties break graded-lexicographically.
    """
    n = basis.sig.n
    top = 1 << (n - 1)

    def key(mask: int) -> tuple:
        uses_top = bool(mask & top) if n % 2 else False
        return (uses_top, mask.bit_count(), tuple(i for i in range(n) if mask >> i & 1))

    return key


def _solve(basis: GammaBasis, transform: Callable[[GaussianMatrix], GaussianMatrix], what: str,
           relaxed: bool = False) -> SignedBlade:
    """The blade M (up to scalar) with M transform(g_i) = g_i M for all i.

    With ``relaxed`` and no exact solution, fall back to :func:`near_solutions`
    and take the class whose single violated relation sits on the earliest
    generator that ``transform`` actually moves.
    """
    hits = []
    for mask in graded_masks(basis.sig.n):
        m = rep_of_blade(basis, SignedBlade(0, mask))
        if all(m @ transform(g) == g @ m for g in basis.gammas):
            hits.append((mask, m))
    if not hits:
        if not relaxed:
            raise SolverError(f"{basis.name}: no blade realises the {what} map")
        near = near_solutions(basis, transform)
        moved = {i + 1 for i, g in enumerate(basis.gammas) if transform(g) != g}
        usable = {v: masks for v, masks in near.items() if len(v) == 1 and set(v) <= moved}
        if not usable:
            raise SolverError(f"{basis.name}: no blade realises the {what} map, even up to one generator")
        masks = usable[min(usable)]
        return SignedBlade(0, min(masks, key=_blade_key(basis)))
    classes: list[list[tuple[int, GaussianMatrix]]] = []
    for mask, m in hits:
        for cls in classes:
            if proportionality(m, cls[0][1]) is not None:
                cls.append((mask, m))
                break
        else:
            classes.append([(mask, m)])
    if len(classes) > 1:
        raise SolverError(f"{basis.name}: {len(classes)} independent solutions for the {what} map "
                          "(reducible basis?)")
    key = _blade_key(basis)
    mask = min((mask for mask, _ in classes[0]), key=key)
    return SignedBlade(0, mask)


def near_solutions(basis: GammaBasis, transform: Callable[[GaussianMatrix], GaussianMatrix]) -> dict:
    """Blades that satisfy the relation up to sign on every generator.

    Keyed by the tuple of violated generators (1-based), minimal violation
    count only.
    """
    found: dict[tuple[int, ...], list[int]] = {}
    for mask in graded_masks(basis.sig.n):
        m = rep_of_blade(basis, SignedBlade(0, mask))
        bad = []
        for i, g in enumerate(basis.gammas):
            lhs, rhs = m @ transform(g), g @ m
            if lhs == rhs:
                continue
            if lhs != -rhs:
                break
            bad.append(i + 1)
        else:
            found.setdefault(tuple(bad), []).append(mask)
    if not found:
        return {}
    fewest = min(len(v) for v in found)
    return {v: masks for v, masks in found.items() if len(v) == fewest}


def solution_count(basis: GammaBasis, which: str) -> int:
    """Number of proportionality classes of blade solutions ('E' or 'Pi')."""
    transform = {"E": lambda g: g.T, "Pi": lambda g: g.conj()}[which]
    mats = [rep_of_blade(basis, SignedBlade(0, m)) for m in graded_masks(basis.sig.n)]
    hits = [m for m in mats if all(m @ transform(g) == g @ m for g in basis.gammas)]
    reps: list[GaussianMatrix] = []
    for m in hits:
        if not any(proportionality(m, r) is not None for r in reps):
            reps.append(m)
    return len(reps)


def solve_transpose_symmetry(basis: GammaBasis, relaxed: bool = False) -> SignedBlade:
    """E with E g_i^T E^-1 = g_i (reversion)."""
    return _solve(basis, lambda g: g.T, "transpose", relaxed)


def solve_complex_conjugation(basis: GammaBasis, relaxed: bool = False) -> SignedBlade:
    """Pi with Pi g_i* Pi^-1 = g_i (pseudoautomorphism).

    For odd n with a scalar volume element i*I no such matrix exists, since
    conjugation sends i to -i; ``relaxed`` then returns the one-generator
    near solution described in :func:`_solve`.
    """
    return _solve(basis, lambda g: g.conj(), "complex-conjugation", relaxed)


@dataclass(frozen=True)
class StarMatrix:
    blade: SignedBlade
    matrix: GaussianMatrix
    inner_star: bool


def star_matrix(basis: GammaBasis) -> StarMatrix:
    """W = the volume element.

    ``inner_star`` is True when W g_i W^-1 = -g_i for every generator, which
    happens exactly for even n; for odd n W is a scalar matrix.
    """
    w = volume_blade(basis.sig)
    m = rep_of_blade(basis, w)
    inner = all(m @ g == -(g @ m) for g in basis.gammas)
    if inner != (basis.sig.n % 2 == 0):
        raise SolverError(f"{basis.name}: volume element anticommutation does not match parity of n")
    if basis.sig.n % 2 and schur_scalar(m) is None:
        raise SolverError(f"{basis.name}: odd-n volume element is not scalar")
    return StarMatrix(w, m, inner)


# ------------------------------------------------------------------ tables


@dataclass(frozen=True, eq=False)
class SignedTable:
    """Multiplication of k elements modulo phases: a*b = i**phase[a,b] * index[a,b]."""

    names: tuple[str, ...]
    index: np.ndarray
    phase: np.ndarray

    @property
    def size(self) -> int:
        return len(self.names)

    def entry(self, a: int, b: int) -> tuple[str, int]:
        return self.names[self.index[a, b]], int(self.phase[a, b])

    def squares(self) -> list[int]:
        """Sign of x*x for each element; the square must be a real multiple of 1."""
        out = []
        for a in range(self.size):
            if self.index[a, a] != 0 or self.phase[a, a] % 2:
                raise GroupError(f"square of {self.names[a]} is not +-1")
            out.append(1 if self.phase[a, a] == 0 else -1)
        return out

    def signature(self) -> tuple[int, ...]:
        return tuple(self.squares()[1:])

    def signed_order_structure(self) -> tuple[int, int]:
        """(#elements squaring to +1, #squaring to -1) among non-identity elements."""
        sig = self.signature()
        return (sum(s > 0 for s in sig), sum(s < 0 for s in sig))

    def is_real(self) -> bool:
        return bool((self.phase % 2 == 0).all())

    def quotient_group(self, name: str = "") -> GroupTable:
        """The group obtained by forgetting phases."""
        return GroupTable(self.names, self.index, 0, name)

    def sub(self, keys: Sequence[int]) -> "SignedTable":
        keys = list(keys)
        pos = {k: j for j, k in enumerate(keys)}
        idx = np.vectorize(pos.__getitem__, otypes=[np.int64])(self.index[np.ix_(keys, keys)])
        return SignedTable(tuple(self.names[k] for k in keys), idx, self.phase[np.ix_(keys, keys)].copy())

    def to_json(self) -> list[list[dict]]:
        return [[{"key": self.names[self.index[a, b]], "phase": int(self.phase[a, b])}
                 for b in range(self.size)] for a in range(self.size)]

    def render(self, labels: Sequence[str] | None = None) -> str:
        labels = list(labels or self.names)
        unit = {0: "", 1: "i", 2: "-", 3: "-i"}
        cells = [[unit[int(self.phase[a, b])] + labels[self.index[a, b]] for b in range(self.size)]
                 for a in range(self.size)]
        width = max(len(c) for c in labels + [c for row in cells for c in row])
        lines = [" " * width + " | " + " ".join(l.rjust(width) for l in labels)]
        lines.append("-" * len(lines[0]))
        for lab, row in zip(labels, cells):
            lines.append(lab.rjust(width) + " | " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def matrix_table(names: Sequence[str], mats: Sequence[GaussianMatrix], real_only: bool = False) -> SignedTable:
    """Tabulate products of matrices that close up to a unit phase.

    Each product must equal i**k times exactly one element (restricting to
    real k when ``real_only``); ambiguity or escape raises GroupError.
    """
    k = len(mats)
    # elements equal up to phase are represented by their first occurrence
    canonical = [c for c in range(k)
                 if not any(proportionality(mats[c], mats[j]) is not None for j in range(c))]
    index = np.zeros((k, k), dtype=np.int64)
    phase = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        for b in range(k):
            prod = mats[a] @ mats[b]
            hits = []
            for c in canonical:
                ph = proportionality(prod, mats[c])
                if ph is not None and (not real_only or ph % 2 == 0):
                    hits.append((c, ph))
            if len(hits) != 1:
                what = "outside the set" if not hits else "ambiguous"
                raise GroupError(f"product {names[a]}*{names[b]} is {what}")
            index[a, b], phase[a, b] = hits[0]
    return SignedTable(tuple(names), index, phase)


def blade_table(names: Sequence[str], reps: Sequence[SignedBlade], sig) -> SignedTable:
    """Tabulate products of signed blades via the blade engine."""
    by_mask: dict[int, int] = {}
    for j, r in enumerate(reps):
        by_mask.setdefault(r.mask, j)
    k = len(reps)
    index = np.zeros((k, k), dtype=np.int64)
    phase = np.zeros((k, k), dtype=np.int64)
    for a in range(k):
        for b in range(k):
            prod = blade_product(reps[a], reps[b], sig)
            c = by_mask.get(prod.mask)
            if c is None:
                raise GroupError(f"product {names[a]}*{names[b]} leaves the set")
            index[a, b] = c
            phase[a, b] = (prod.phase - reps[c].phase) % 4
    return SignedTable(tuple(names), index, phase)


# ------------------------------------------------------------------ Ext


# map each Ext element to (uses transpose, uses conjugation, expected sign on generators)
_ACTIONS = {
    "I": (False, False, 1),
    "W": (False, False, -1),
    "E": (True, False, 1),
    "C": (True, False, -1),
    "Pi": (False, True, 1),
    "K": (False, True, -1),
    "S": (True, True, 1),
    "F": (True, True, -1),
}


def implements_map(key: str, m: GaussianMatrix, basis: GammaBasis) -> bool:
    """Whether M g' M^-1 = +-g on every generator for the map named ``key``."""
    transpose, conj, sign = _ACTIONS[key]
    for g in basis.gammas:
        h = g.T if transpose else g
        h = h.conj() if conj else h
        if m @ h != (g @ m).scale(sign):
            return False
    return True


@dataclass(frozen=True, eq=False)
class ExtGroup:
    basis: GammaBasis
    mats: dict[str, GaussianMatrix]
    blade_labels: dict[str, SignedBlade]
    table: SignedTable
    signature: tuple[int, ...]
    inner_star: bool
    implements: dict[str, bool] = field(default_factory=dict)
    pi_exact: bool = True

    @property
    def degenerate(self) -> bool:
        """True when two of the eight matrices coincide up to phase."""
        return len({r.mask for r in self.reps}) < len(EXT_KEYS)

    @property
    def reps(self) -> list[SignedBlade]:
        return [self.blade_labels[k].unsigned() for k in EXT_KEYS]

    def element_names(self) -> list[str]:
        return [self.basis.blade_name(r) for r in self.reps]

    def signature_string(self) -> str:
        return signature_string(self.signature)

    def to_json(self) -> dict:
        return {
            "basis": self.basis.name,
            "blade_labels": {k: self.basis.blade_name(self.blade_labels[k]) for k in EXT_KEYS},
            "table": self.table.to_json(),
            "signature": self.signature_string(),
        }


def derive_ext_group(basis: GammaBasis, relaxed: bool | None = None) -> ExtGroup:
    """Solve for W, E, Pi and assemble the extended automorphism group.

    ``relaxed`` (default: n odd) allows the one-generator near solution for
    Pi when no exact one exists; ``pi_exact`` on the result records which.
    """
    sig = basis.sig
    if relaxed is None:
        relaxed = sig.n % 2 == 1
    star = star_matrix(basis)
    e = solve_transpose_symmetry(basis)
    pi = solve_complex_conjugation(basis, relaxed=relaxed)
    pi_exact = implements_map("Pi", rep_of_blade(basis, pi), basis)
    w = star.blade
    labels = {"I": SignedBlade.one(), "W": w, "E": e, "Pi": pi}
    labels["C"] = blade_product(e, w, sig)
    labels["K"] = blade_product(pi, w, sig)
    labels["S"] = blade_product(pi, e, sig)
    labels["F"] = blade_product(pi, labels["C"], sig)

    mats = {"I": GaussianMatrix.identity(basis.dim), "W": star.matrix,
            "E": rep_of_blade(basis, e), "Pi": rep_of_blade(basis, pi)}
    mats["C"] = mats["E"] @ mats["W"]
    mats["K"] = mats["Pi"] @ mats["W"]
    mats["S"] = mats["Pi"] @ mats["E"]
    mats["F"] = mats["Pi"] @ mats["C"]
    for key in EXT_KEYS:
        if rep_of_blade(basis, labels[key]) != mats[key]:
            raise SolverError(f"{basis.name}: blade label of {key} disagrees with its matrix")

    reps = [labels[k].unsigned() for k in EXT_KEYS]
    table = blade_table(EXT_KEYS, reps, sig)
    signature = table.signature()
    for key, s in zip(EXT_KEYS[1:], signature):
        m = rep_of_blade(basis, labels[key].unsigned())
        if m @ m != GaussianMatrix.identity(basis.dim).scale(s):
            raise SolverError(f"{basis.name}: square of {key} is not {s:+d} I")
    implements = {k: implements_map(k, mats[k], basis) for k in EXT_KEYS}
    return ExtGroup(basis, mats, labels, table, signature, star.inner_star, implements, pi_exact)


def ext_matrix_oracle(ext: ExtGroup) -> SignedTable:
    """The Ext table recomputed from matrices alone (real phases only).

    For odd n an irreducible representation sends the volume element to a
    scalar, so the faithful sum diag(g, -g) is used instead.
    """
    basis = faithful_basis(ext.basis)
    mats = [rep_of_blade(basis, r) for r in ext.reps]
    return matrix_table(EXT_KEYS, mats, real_only=True)


# ------------------------------------------------------------------ PTC


@dataclass(frozen=True, eq=False)
class GeneratingGroup:
    """The group {1, P, T, PT, C, CP, CT, CPT} modulo phases."""

    table: SignedTable
    matrices: tuple[GaussianMatrix, ...]
    degenerate: bool

    @property
    def signature(self) -> tuple[int, ...]:
        return self.table.signature()

    @property
    def order_structure(self) -> tuple[int, int]:
        return self.table.signed_order_structure()

    def signature_string(self) -> str:
        return signature_string(self.signature)


def generating_group_from_ptc(p: GaussianMatrix, t: GaussianMatrix, c: GaussianMatrix) -> GeneratingGroup:
    """Close {1,P,T,PT,C,CP,CT,CPT} under products, modulo unit phases.

    Elements that coincide up to phase are merged and the result is flagged
    ``degenerate``; the identity seed (I, I, I) yields the trivial group.
    """
    one = GaussianMatrix.identity(p.dim)
    words = [one, p, t, p @ t, c, c @ p, c @ t, c @ p @ t]
    names, mats = [], []
    for name, m in zip(CPT_KEYS, words):
        if any(proportionality(m, x) is not None for x in mats):
            continue
        names.append(name)
        mats.append(m)
    table = matrix_table(names, mats)
    return GeneratingGroup(table, tuple(mats), degenerate=len(mats) < len(words))


def distinct_keys(table: SignedTable) -> list[int]:
    """Indices of elements not proportional to an earlier one."""
    return sorted({int(i) for i in table.index[0]})


def full_cpt_group(table: SignedTable, reps: Sequence[SignedBlade] | None = None, name: str = "") -> GroupTable:
    """The central extension {+-x} of a signed table with real phases.

    With ``reps`` (signed blades for each element) the elements are labelled
    by the blades +-rep, ready for embedding into a G(p,q).
    """
    if not table.is_real():
        raise GroupError("full CPT group needs real (+-1) phases")
    k = table.size
    # element 2j + s  <->  (-1)**s * x_j
    idx = np.empty((2 * k, 2 * k), dtype=np.int64)
    for sa in (0, 1):
        for sb in (0, 1):
            flip = (table.phase // 2) ^ sa ^ sb
            idx[sa::2, sb::2] = 2 * table.index + flip
    if reps is None:
        elements = tuple((1 if s == 0 else -1, n) for n in table.names for s in (0, 1))
    else:
        elements = tuple(r if s == 0 else r.negate() for r in reps for s in (0, 1))
    g = GroupTable(elements, idx, 0, name, central_involution=1)
    g.validate()
    return g


def z2_cubed_table() -> SignedTable:
    """The abelian CPT table with every square +1 (all phases trivial)."""
    bits = {"1": 0, "P": 1, "T": 2, "PT": 3, "C": 4, "CP": 5, "CT": 6, "CPT": 7}
    order = list(CPT_KEYS)
    pos = {bits[k]: j for j, k in enumerate(order)}
    idx = np.array([[pos[bits[a] ^ bits[b]] for b in order] for a in order], dtype=np.int64)
    return SignedTable(tuple(order), idx, np.zeros_like(idx))
