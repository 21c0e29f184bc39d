"""Finite groups as Cayley tables: the blade groups G(p,q) and friends.

Every group here is a :class:`GroupTable` over element indices.  The
analysis helpers (orders, centers, central products, isomorphism search)
only look at the table; the element labels are carried along for display
and for the blade-aware helpers such as :func:`even_subgroup`.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Sequence

import numpy as np

from .blades import AlgebraSignature, SignedBlade, graded_masks

MAX_DENSE_GENERATORS = 10
MAX_ISOMORPHISM_ORDER = 128


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class OrderStructure:
    """Counts of elements of order 2 and of order 4."""

    involutions: int
    order4: int

    def as_tuple(self) -> tuple[int, int]:
        return (self.involutions, self.order4)

    def __str__(self):
        return f"({self.involutions},{self.order4})"


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group: element labels plus a dense Cayley table of indices.

    ``central_involution`` is the index of the central element glued in
    central products (``-1`` for the blade groups); None means "pick one".
    """

    elements: tuple
    table: np.ndarray
    identity_index: int = 0
    name: str = ""
    central_involution: int | None = None

    def __post_init__(self):
        table = np.asarray(self.table, dtype=np.int64)
        n = len(self.elements)
        if table.shape != (n, n):
            raise GroupError(f"table shape {table.shape} does not match {n} elements")
        table.flags.writeable = False
        object.__setattr__(self, "table", table)

    @classmethod
    def from_operation(cls, elements: Sequence[Hashable], mul: Callable, name: str = "",
                       central_involution=None) -> "GroupTable":
        """Tabulate ``mul`` on ``elements``; the identity is located, not assumed."""
        elements = tuple(elements)
        index = {e: k for k, e in enumerate(elements)}
        try:
            table = np.array([[index[mul(a, b)] for b in elements] for a in elements], dtype=np.int64)
        except KeyError as exc:
            raise GroupError(f"{name or 'group'}: product {exc} falls outside the element list") from None
        ident = _find_identity(table)
        ci = None if central_involution is None else index[central_involution]
        g = cls(elements, table, ident, name, ci)
        g.validate()
        return g

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return self.order

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def index(self, label) -> int:
        return self._index[label]

    @cached_property
    def _index(self) -> dict:
        return {e: k for k, e in enumerate(self.elements)}

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == self.identity_index, axis=1)
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        orders = np.ones(self.order, dtype=np.int64)
        power = np.arange(self.order)
        done = power == self.identity_index
        k = 1
        while not done.all():
            k += 1
            power = self.table[power, np.arange(self.order)]
            newly = (power == self.identity_index) & ~done
            orders[newly] = k
            done |= newly
            if k > self.order:
                raise GroupError("element without finite order: table is not a group")
        return orders

    @cached_property
    def commute_matrix(self) -> np.ndarray:
        return self.table == self.table.T

    @cached_property
    def centralizer_sizes(self) -> np.ndarray:
        return self.commute_matrix.sum(axis=1)

    def is_abelian(self) -> bool:
        return bool(self.commute_matrix.all())

    def center_indices(self) -> list[int]:
        return [int(k) for k in np.flatnonzero(self.commute_matrix.all(axis=1))]

    def generated(self, gens: Sequence[int]) -> list[int]:
        """Indices of the subgroup generated by ``gens`` (BFS order)."""
        seen = {self.identity_index}
        queue = deque([self.identity_index])
        out = [self.identity_index]
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    out.append(y)
                    queue.append(y)
        return out

    def commutator_subgroup_order(self) -> int:
        t, inv = self.table, self.inverses
        comms = {int(t[t[inv[a], inv[b]], t[a, b]]) for a in range(self.order) for b in range(self.order)}
        return len(self.generated(sorted(comms)))

    def subgroup(self, indices: Sequence[int], name: str = "") -> "GroupTable":
        """Restrict the table to ``indices``, which must be closed under products."""
        indices = list(indices)
        pos = {g: k for k, g in enumerate(indices)}
        sub = self.table[np.ix_(indices, indices)]
        try:
            table = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub)
        except KeyError:
            raise GroupError("indices are not closed under multiplication") from None
        if self.identity_index not in pos:
            raise GroupError("subgroup must contain the identity")
        ci = self.central_involution
        ci = pos.get(ci) if ci is not None else None
        return GroupTable(tuple(self.elements[g] for g in indices), table, pos[self.identity_index],
                          name, ci)

    def validate(self, full_associativity: bool | None = None) -> None:
        """Raise GroupError unless the table is a group.

        Associativity is checked exhaustively up to order 64 and on a
        deterministic sample above that, unless forced either way.
        """
        t, n = self.table, self.order
        if t.min() < 0 or t.max() >= n:
            raise GroupError("table entries out of range")
        e = self.identity_index
        if not (np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))):
            raise GroupError("identity_index is not a two-sided identity")
        for row in t:
            if len(np.unique(row)) != n:
                raise GroupError("a row is not a permutation (no unique inverse / cancellation)")
        for col in t.T:
            if len(np.unique(col)) != n:
                raise GroupError("a column is not a permutation")
        if full_associativity is None:
            full_associativity = n <= 64
        if full_associativity:
            # (ab)c versus a(bc) for all triples
            ab_c = t[t[:, :, None], np.arange(n)[None, None, :]]
            a_bc = t[np.arange(n)[:, None, None], t[None, :, :]]
            if not np.array_equal(ab_c, a_bc):
                raise GroupError("table is not associative")
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, 20000))
            if not np.array_equal(t[t[a, b], c], t[a, t[b, c]]):
                raise GroupError("table is not associative (sampled)")

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "elements": [label_str(e) for e in self.elements],
            "table": self.table.tolist(),
        }

    def __repr__(self):
        return f"GroupTable({self.name or 'group'}, order={self.order})"


def _find_identity(table: np.ndarray) -> int:
    n = table.shape[0]
    for e in range(n):
        if np.array_equal(table[e], np.arange(n)) and np.array_equal(table[:, e], np.arange(n)):
            return e
    raise GroupError("no identity element")


def label_str(label) -> str:
    if isinstance(label, SignedBlade):
        return str(label)
    if isinstance(label, tuple):
        return "(" + ",".join(label_str(x) for x in label) + ")"
    return str(label)


# ---------------------------------------------------------------- G(p, q)


def _popcount(x: np.ndarray) -> np.ndarray:
    return np.bitwise_count(x.astype(np.uint64)).astype(np.int64)


def blade_elements(sig: AlgebraSignature) -> tuple[SignedBlade, ...]:
    """Element order of G(p,q): graded-lex index sets, +e_S before -e_S."""
    return tuple(SignedBlade(k, m) for m in graded_masks(sig.n) for k in (0, 2))


def generate_group(sig: AlgebraSignature) -> GroupTable:
    """The group {+-e_S} of order 2**(n+1) with its full Cayley table."""
    n = sig.n
    if n > MAX_DENSE_GENERATORS:
        raise GroupError(f"dense tables support n <= {MAX_DENSE_GENERATORS}, got n={n}")
    masks = np.array(graded_masks(n), dtype=np.int64)
    rank = np.empty(1 << n, dtype=np.int64)
    rank[masks] = np.arange(1 << n)

    a = masks[:, None]
    b = masks[None, :]
    flips = _popcount(a & b & sig.negative_mask)
    for s in range(1, n):
        flips = flips + _popcount((a >> s) & b)
    flips &= 1
    prod = rank[a ^ b]

    size = 2 << n
    table = np.empty((size, size), dtype=np.int64)
    for sa in (0, 1):
        for sb in (0, 1):
            table[sa::2, sb::2] = 2 * prod + (flips ^ sa ^ sb)
    return GroupTable(blade_elements(sig), table, 0, f"G({sig.p},{sig.q})", central_involution=1)


def even_subgroup(g: GroupTable, name: str = "") -> GroupTable:
    """Elements +-e_S with |S| even (the finite shadow of Cl^+)."""
    keep = [k for k, e in enumerate(g.elements) if isinstance(e, SignedBlade) and e.grade % 2 == 0]
    if not all(isinstance(e, SignedBlade) for e in g.elements):
        raise GroupError("even_subgroup needs a group of signed blades")
    return g.subgroup(keep, name or f"{g.name}+")


# ------------------------------------------------------ invariants & labels


def order_structure(g: GroupTable) -> OrderStructure:
    counts = Counter(int(o) for o in g.element_orders)
    extra = set(counts) - {1, 2, 4}
    if extra:
        raise GroupError(f"{g.name or 'group'} has elements of order {sorted(extra)}")
    return OrderStructure(counts.get(2, 0), counts.get(4, 0))


def abelian_name(orders: Sequence[int]) -> str:
    """Name an abelian group from its element orders, e.g. ``Z4xZ2``."""
    n = len(orders)
    if n == 1:
        return "1"
    if n & (n - 1):
        return f"abelian({n})"
    # c_k = #{x : x^(2^k) = 1} = 2^(sum_i min(k, e_i))
    logs = [0]
    k = 1
    while logs[-1] < n.bit_length() - 1:
        c = sum(1 for o in orders if (1 << k) % o == 0)
        logs.append(c.bit_length() - 1)
        k += 1
    at_least = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
    exps = []
    for j, count in enumerate(at_least, start=1):
        nxt = at_least[j] if j < len(at_least) else 0
        exps += [j] * (count - nxt)
    return "x".join(f"Z{1 << e}" for e in sorted(exps, reverse=True))


def center(g: GroupTable) -> tuple[GroupTable, str]:
    """The center as a subgroup, labelled by its isomorphism type."""
    z = g.subgroup(g.center_indices(), f"Z({g.name})" if g.name else "")
    return z, abelian_name([int(o) for o in z.element_orders])


def fingerprint(g: GroupTable) -> tuple:
    """Cheap isomorphism invariants."""
    orders = g.element_orders
    return (
        g.order,
        tuple(sorted(Counter(int(o) for o in orders).items())),
        len(g.center_indices()),
        g.is_abelian(),
        g.commutator_subgroup_order(),
        tuple(sorted(Counter(zip(orders.tolist(), g.centralizer_sizes.tolist())).items())),
    )


# ------------------------------------------------------ Salingaros labels


@dataclass(frozen=True)
class SalingarosLabel:
    family: str  # "Z2", "Omega", "N", "S"
    k: int | None = None

    def __str__(self):
        return self.family if self.k is None else f"{self.family}{self.k}"


def classify_salingaros(g: GroupTable) -> SalingarosLabel:
    """Place a group in the Salingaros families N_k, Omega_k, S_k.

    The family follows the center (Z2 -> N, Z2xZ2 -> Omega, Z4 -> S); the
    index follows the order and, for N and Omega, the number of involutions
    that separates the D4-type from the Q4-type extraspecial core.
    """
    order = g.order
    m = order.bit_length() - 1
    if order != 1 << m or order < 2:
        raise GroupError(f"order {order} is not a power of two >= 2")
    os_ = order_structure(g)
    _, zlabel = center(g)
    if order == 2:
        return SalingarosLabel("Z2")
    if order == 4:
        if zlabel == "Z2xZ2":
            return SalingarosLabel("Omega", 0)
        if zlabel == "Z4":
            return SalingarosLabel("S", 0)
    inv = os_.involutions
    if zlabel == "Z2" and m % 2 == 1:
        k = (m - 1) // 2
        if inv == 4**k + 2**k - 1:
            return SalingarosLabel("N", 2 * k - 1)
        if inv == 4**k - 2**k - 1:
            return SalingarosLabel("N", 2 * k)
    elif zlabel == "Z2xZ2" and m % 2 == 0:
        k = (m - 2) // 2
        if inv == 2 * (4**k + 2**k - 1) + 1:
            return SalingarosLabel("Omega", 2 * k - 1)
        if inv == 2 * (4**k - 2**k - 1) + 1:
            return SalingarosLabel("Omega", 2 * k)
    elif zlabel == "Z4" and m % 2 == 0:
        k = (m - 2) // 2
        if inv == 2 ** (2 * k + 1) - 1:
            return SalingarosLabel("S", k)
    raise GroupError(f"order {order}, center {zlabel}, order structure {os_} is not a Salingaros group")


# ------------------------------------------------------ standard groups


def _quaternion_mul(a, b):
    # elements are (sign, unit) with unit in "1ijk"
    table = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    s, u = table[(a[1], b[1])]
    return (a[0] * b[0] * s, u)


def _dihedral_mul(a, b, n=4):
    # r^x s^y ; s r = r^-1 s
    (x1, y1), (x2, y2) = a, b
    return ((x1 + (-x2 if y1 else x2)) % n, (y1 + y2) % 2)


STANDARD_GROUPS = ("Q4", "D4", "D2", "Z4", "Z2")


def standard_group(name: str) -> GroupTable:
    """Textbook presentations: quaternion, dihedral, Klein and cyclic groups."""
    if name == "Q4":
        els = [(s, u) for u in "1ijk" for s in (1, -1)]
        return GroupTable.from_operation(els, _quaternion_mul, "Q4", central_involution=(-1, "1"))
    if name == "D4":
        els = [(x, y) for y in (0, 1) for x in range(4)]
        return GroupTable.from_operation(els, _dihedral_mul, "D4", central_involution=(2, 0))
    if name == "D2":
        els = [(x, y) for x in (0, 1) for y in (0, 1)]
        return GroupTable.from_operation(els, lambda a, b: ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2),
                                         "D2", central_involution=(1, 0))
    if name == "Z4":
        return GroupTable.from_operation(range(4), lambda a, b: (a + b) % 4, "Z4", central_involution=2)
    if name == "Z2":
        return GroupTable.from_operation(range(2), lambda a, b: (a + b) % 2, "Z2", central_involution=1)
    raise ValueError(f"unknown standard group {name!r}; choose from {STANDARD_GROUPS}")


def direct_product(g: GroupTable, h: GroupTable, name: str = "") -> GroupTable:
    ng, nh = g.order, h.order
    table = (g.table[:, None, :, None] * nh + h.table[None, :, None, :]).reshape(ng * nh, ng * nh)
    elements = tuple((a, b) for a in g.elements for b in h.elements)
    return GroupTable(elements, table, g.identity_index * nh + h.identity_index,
                      name or f"{g.name}x{h.name}")


def central_involution(g: GroupTable) -> int:
    """The designated central involution, or the first central involution."""
    if g.central_involution is not None:
        return g.central_involution
    for z in g.center_indices():
        if g.element_orders[z] == 2:
            return z
    raise GroupError(f"{g.name or 'group'} has no central involution")


def central_product(g: GroupTable, h: GroupTable, name: str = "") -> GroupTable:
    """(G x H) / <(z_G, z_H)> for the designated central involutions."""
    zg, zh = central_involution(g), central_involution(h)
    if zg not in g.center_indices() or g.element_orders[zg] != 2:
        raise GroupError(f"{g.name}: designated element is not a central involution")
    if zh not in h.center_indices() or h.element_orders[zh] != 2:
        raise GroupError(f"{h.name}: designated element is not a central involution")
    prod = direct_product(g, h)
    z = zg * h.order + zh
    partner = prod.table[:, z]
    reps = np.minimum(np.arange(prod.order), partner)
    keep = np.unique(reps)
    pos = np.full(prod.order, -1, dtype=np.int64)
    pos[keep] = np.arange(len(keep))
    table = pos[reps[prod.table[np.ix_(keep, keep)]]]
    elements = tuple(prod.elements[k] for k in keep)
    ident = int(pos[reps[prod.identity_index]])
    glued = int(pos[reps[zg * h.order + h.identity_index]])
    return GroupTable(elements, table, ident, name or f"{g.name}o{h.name}", glued)


# ------------------------------------------------------ isomorphism


def _generating_set(g: GroupTable) -> list[int]:
    """Small generating set, greedy by subgroup growth then rarity of class."""
    key = list(zip(g.element_orders.tolist(), g.centralizer_sizes.tolist()))
    rarity = Counter(key)
    gens: list[int] = []
    current = set(g.generated(gens))
    while len(current) < g.order:
        best = None
        for x in range(g.order):
            if x in current:
                continue
            size = len(g.generated(gens + [x]))
            score = (size, -rarity[key[x]], -x)
            if best is None or score > best[0]:
                best = (score, x)
        gens.append(best[1])
        current = set(g.generated(gens))
    return gens


def _extend(g: GroupTable, h: GroupTable, gens: list[int], images: list[int]) -> dict | None:
    """Extend gens -> images to <gens>; None on any inconsistency."""
    phi = {g.identity_index: h.identity_index}
    used = {h.identity_index}
    queue = deque([g.identity_index])
    tg, th = g.table, h.table
    while queue:
        x = queue.popleft()
        fx = phi[x]
        for a, b in zip(gens, images):
            y = int(tg[x, a])
            v = int(th[fx, b])
            got = phi.get(y)
            if got is None:
                if v in used:
                    return None
                phi[y] = v
                used.add(v)
                queue.append(y)
            elif got != v:
                return None
    return phi


def verify_isomorphism(g: GroupTable, h: GroupTable, witness: Sequence[int]) -> bool:
    """Full check that ``witness`` (G index -> H index) is a bijective homomorphism."""
    w = np.asarray(witness, dtype=np.int64)
    if g.order != h.order or len(w) != g.order or len(np.unique(w)) != g.order:
        return False
    return bool(np.array_equal(h.table[w[:, None], w[None, :]], w[g.table]))


def find_isomorphism(g: GroupTable, h: GroupTable) -> list[int] | None:
    """A verified isomorphism G -> H as an index list, or None."""
    if g.order != h.order:
        return None
    if g.order > MAX_ISOMORPHISM_ORDER:
        raise GroupError(f"isomorphism search supports order <= {MAX_ISOMORPHISM_ORDER}")
    if fingerprint(g) != fingerprint(h):
        return None
    gens = _generating_set(g)
    gkey = list(zip(g.element_orders.tolist(), g.centralizer_sizes.tolist()))
    hkey = list(zip(h.element_orders.tolist(), h.centralizer_sizes.tolist()))
    candidates = [[y for y in range(h.order) if hkey[y] == gkey[x]] for x in gens]

    def search(level: int, images: list[int]):
        if level == len(gens):
            phi = _extend(g, h, gens, images)
            return phi if phi is not None and len(phi) == g.order else None
        for y in candidates[level]:
            trial = images + [y]
            if _extend(g, h, gens[: level + 1], trial) is None:
                continue
            found = search(level + 1, trial)
            if found is not None:
                return found
        return None

    phi = search(0, [])
    if phi is None:
        return None
    witness = [phi[x] for x in range(g.order)]
    assert verify_isomorphism(g, h, witness)
    return witness


def is_isomorphic(g: GroupTable, h: GroupTable) -> bool:
    return find_isomorphism(g, h) is not None


def is_embedding(h: GroupTable, g: GroupTable, labels: Sequence) -> bool:
    """True iff H -> G, element k |-> labels[k], is an injective homomorphism."""
    try:
        image = np.array([g.index(lab) for lab in labels], dtype=np.int64)
    except KeyError:
        return False
    if len(image) != h.order or len(np.unique(image)) != h.order:
        return False
    return bool(np.array_equal(g.table[image[:, None], image[None, :]], image[h.table]))

