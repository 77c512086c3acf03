"""Permutation-group algorithms on root indices.

A deterministic Schreier-Sims implementation provides exact orders and
membership tests; on top of it sit generic orbit/stabilizer computation,
coset quotients and a structure fingerprint for the small quotient groups.
Nothing here is randomized: base points, orbit orders and transversals are
fixed functions of the input, which is what makes every downstream table
byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from .perms import (
    Perm,
    compose,
    conjugate,
    identity,
    inverse,
    is_identity,
    pack,
    pack_width,
    perm_order,
    unpack,
)


class MembershipError(ValueError):
    pass


class BSGS:
    """Base and strong generating set with explicit transversals per level.

    Transversal entries are never rewritten once created (orbits only ever
    extend), so the per-level record of already-sifted Schreier generators
    stays valid across incremental updates.
    """

    def __init__(self, n_points: int, gens=(), base=None):
        self.n = n_points
        self._id = identity(n_points)
        self.base: list[int] = []
        self.level_gens: list[list[Perm]] = []
        self.orbit_order: list[list[int]] = []
        self.trans: list[dict[int, Perm]] = []
        self.tinv: list[dict[int, Perm]] = []
        self._checked: list[set[tuple[int, int]]] = []
        if base is not None:
            for b in base:
                self._new_level(b)
        for g in gens:
            self.add_generator(g)

    def _new_level(self, bpoint: int):
        self.base.append(bpoint)
        self.level_gens.append([])
        self.orbit_order.append([bpoint])
        self.trans.append({bpoint: self._id})
        self.tinv.append({bpoint: self._id})
        self._checked.append(set())

    def _extend_level(self, lvl: int):
        """Grow the Schreier tree at lvl; existing entries are preserved."""
        gens = self.level_gens[lvl]
        trans = self.trans[lvl]
        tinv = self.tinv[lvl]
        order = self.orbit_order[lvl]
        i = 0
        while i < len(order):
            p = order[i]
            i += 1
            for g in gens:
                y = g[p]
                if y not in trans:
                    t = compose(trans[p], g)
                    trans[y] = t
                    tinv[y] = inverse(t)
                    order.append(y)

    def sift_from(self, lvl: int, g: Perm) -> tuple[Perm, int]:
        for i in range(lvl, len(self.base)):
            x = g[self.base[i]]
            t_inv = self.tinv[i].get(x)
            if t_inv is None:
                return g, i
            g = compose(g, t_inv)
        return g, len(self.base)

    def sift(self, g: Perm) -> tuple[Perm, int]:
        return self.sift_from(0, g)

    def contains(self, g: Perm) -> bool:
        if len(g) != self.n:
            raise MembershipError("degree mismatch")
        residue, _ = self.sift(g)
        return is_identity(residue)

    def order(self) -> int:
        result = 1
        for orbit in self.orbit_order:
            result *= len(orbit)
        return result

    def add_generator(self, g: Perm) -> bool:
        """Sift g into the chain; returns True if the group grew."""
        residue, lvl = self.sift(g)
        if is_identity(residue):
            return False
        self._insert(residue, lvl)
        self._verify_from(lvl if lvl < len(self.base) else len(self.base) - 1)
        return True

    def _insert(self, residue: Perm, lvl: int):
        if lvl == len(self.base):
            moved = next(i for i in range(self.n) if residue[i] != i)
            self._new_level(moved)
        # A strong generator fixing base[:lvl] belongs to every level <= lvl.
        for k in range(lvl + 1):
            self.level_gens[k].append(residue)
            self._extend_level(k)

    def _verify_from(self, start: int):
        lvl = start
        while lvl >= 0:
            deeper = self._check_level(lvl)
            lvl = deeper if deeper is not None else lvl - 1

    def _check_level(self, lvl: int):
        """Sift unprocessed Schreier generators of this level.

        Returns the level at which a residue was inserted (verification must
        resume there), or None when the level is clean.
        """
        checked = self._checked[lvl]
        order = self.orbit_order[lvl]
        gens = self.level_gens[lvl]
        trans = self.trans[lvl]
        tinv = self.tinv[lvl]
        for p in order:
            t = trans[p]
            for gi, g in enumerate(gens):
                key = (p, gi)
                if key in checked:
                    continue
                checked.add(key)
                schreier = compose(compose(t, g), tinv[g[p]])
                if is_identity(schreier):
                    continue
                residue, at = self.sift_from(lvl + 1, schreier)
                if not is_identity(residue):
                    self._insert(residue, at)
                    return min(at, len(self.base) - 1)
        return None

    def elements(self, limit: int | None = None) -> list[Perm]:
        """Every group element, in deterministic transversal order."""
        total = self.order()
        if limit is not None and total > limit:
            raise MembershipError(f"group of order {total} exceeds limit {limit}")
        result = [self._id]
        for lvl in range(len(self.base) - 1, -1, -1):
            trans = self.trans[lvl]
            order = self.orbit_order[lvl]
            result = [compose(h, trans[p]) for h in result for p in order]
        return result


@dataclass
class SubgroupHandle:
    """A subgroup given by generators, with a lazily built stabilizer chain."""

    n_points: int
    gens: list[Perm] = field(default_factory=list)
    _bsgs: BSGS | None = None

    @staticmethod
    def from_gens(n_points: int, gens) -> "SubgroupHandle":
        seen = set()
        unique = []
        for g in gens:
            if g not in seen and not is_identity(g):
                seen.add(g)
                unique.append(g)
        return SubgroupHandle(n_points, unique)

    def bsgs(self) -> BSGS:
        if self._bsgs is None:
            self._bsgs = BSGS(self.n_points, self.gens)
        return self._bsgs

    def order(self) -> int:
        return self.bsgs().order()

    def contains(self, p: Perm) -> bool:
        return self.bsgs().contains(p)

    def elements(self, limit: int | None = 100_000) -> list[Perm]:
        return self.bsgs().elements(limit)

    def is_normalized_by(self, others) -> bool:
        return all(
            self.contains(conjugate(x, s)) for x in self.gens for s in others
        )


# -- orbits and stabilizers ----------------------------------------------------


def point_orbit(gens, seed: int) -> list[int]:
    seen = {seed}
    order = [seed]
    i = 0
    while i < len(order):
        p = order[i]
        i += 1
        for g in gens:
            y = g[p]
            if y not in seen:
                seen.add(y)
                order.append(y)
    return order


def act_on_point(g: Perm, x: int) -> int:
    return g[x]


def act_on_index_set(g: Perm, xs: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted(g[x] for x in xs))


def make_conjugation_action(width: int):
    def act(g: Perm, x: bytes) -> bytes:
        return pack(conjugate(unpack(x, width), g), width)

    return act


def orbit_stabilizer(
    n_points: int,
    gens: list[Perm],
    seed,
    act,
    *,
    group_order: int | None = None,
    seed_stab_gens=(),
):
    """Generic orbit of `seed` under `act`, with stabilizer generators.

    `act(g, x)` must give a hashable point.  Schreier generators are sifted
    into the stabilizer chain in BFS order; when `group_order` is known the
    scan stops once the stabilizer reaches |G| / |orbit|, which the
    orbit-stabilizer identity makes exact.
    """
    width = pack_width(n_points)
    ident = identity(n_points)
    transversal = {seed: pack(ident, width)}
    order = [seed]
    i = 0
    while i < len(order):
        x = order[i]
        i += 1
        t = None
        for g in gens:
            y = act(g, x)
            if y not in transversal:
                if t is None:
                    t = unpack(transversal[x], width)
                transversal[y] = pack(compose(t, g), width)
                order.append(y)

    target = None
    if group_order is not None:
        if group_order % len(order):
            raise MembershipError("orbit size does not divide the group order")
        target = group_order // len(order)

    stab = BSGS(n_points)
    collected: list[Perm] = []
    for g in seed_stab_gens:
        if act(g, seed) != seed:
            raise MembershipError("seed generator does not stabilize the seed")
        if target is not None and stab.order() == target:
            break
        if stab.add_generator(g):
            collected.append(g)
    if target is None or stab.order() != target:
        done = False
        for x in order:
            if done:
                break
            t = unpack(transversal[x], width)
            for g in gens:
                y = act(g, x)
                schreier = compose(
                    compose(t, g), inverse(unpack(transversal[y], width))
                )
                if is_identity(schreier):
                    continue
                if stab.add_generator(schreier):
                    collected.append(schreier)
                    if target is not None and stab.order() == target:
                        done = True
                        break
        if target is not None and stab.order() != target:
            raise MembershipError("stabilizer chain failed to reach its order")
    handle = SubgroupHandle(n_points, collected)
    handle._bsgs = stab
    return order, handle


def conjugacy_class_set(n_points: int, gens, rep: Perm):
    """The full conjugacy class of rep, as a set of packed image arrays."""
    width = pack_width(n_points)
    seed = pack(rep, width)
    seen = {seed}
    queue = [rep]
    while queue:
        x = queue.pop()
        for g in gens:
            y = conjugate(x, g)
            key = pack(y, width)
            if key not in seen:
                seen.add(key)
                queue.append(y)
    return seen


def set_stabilizer_order(group: SubgroupHandle, point_set) -> int:
    """|stabilizer| of a set of points, by the orbit-stabilizer identity."""
    seed = tuple(sorted(point_set))
    seen = {seed}
    queue = [seed]
    while queue:
        x = queue.pop()
        for g in group.gens:
            y = act_on_index_set(g, x)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    n = group.order()
    if n % len(seen):
        raise MembershipError("set orbit does not divide the group order")
    return n // len(seen)


def normalizer_of_reflection_subgroup(
    group: SubgroupHandle, rootset, neg, seed_stab_gens=()
) -> SubgroupHandle:
    """Normalizer in `group` of the reflection subgroup with the given roots.

    The root set must be closed under negation and under its own
    reflections; the normalizer is then exactly the set stabilizer.
    """
    closed = frozenset(rootset)
    if any(neg[r] not in closed for r in closed):
        raise ValueError("root set is not closed under negation")
    seed = tuple(sorted(closed))
    _, stab = orbit_stabilizer(
        group.n_points,
        group.gens,
        seed,
        act_on_index_set,
        group_order=group.order(),
        seed_stab_gens=seed_stab_gens,
    )
    return stab


# -- quotients -----------------------------------------------------------------


class QuotientGroup:
    """The action of g on the right cosets of a normal subgroup n.

    For normal n this is a faithful concrete realization of g/n; `image`
    is the quotient map onto permutations of coset indices.
    """

    def __init__(self, group: SubgroupHandle, normal: SubgroupHandle, max_index=10_000):
        if not normal.is_normalized_by(group.gens):
            raise ValueError("subgroup is not normal")
        g_order = group.order()
        n_order = normal.order()
        if g_order % n_order:
            raise MembershipError("orders are inconsistent")
        index = g_order // n_order
        if index > max_index:
            raise MembershipError(f"index {index} too large for a coset action")
        # A chain whose base is every point in natural order makes the
        # lexicographically least coset representative computable greedily.
        self._chain = BSGS(normal.n_points, normal.gens, base=range(normal.n_points))
        ident = identity(normal.n_points)
        reps = [self._canonical(ident)]
        lookup = {reps[0]: 0}
        i = 0
        while i < len(reps):
            rep = reps[i]
            i += 1
            for s in group.gens:
                c = self._canonical(compose(rep, s))
                if c not in lookup:
                    lookup[c] = len(reps)
                    reps.append(c)
        if len(reps) != index:
            raise MembershipError("coset enumeration disagrees with the index")
        self.reps = reps
        self.lookup = lookup
        self.size = index
        self.gens = [self.image(s) for s in group.gens]
        self.handle = SubgroupHandle.from_gens(self.size, self.gens)

    def _canonical(self, x: Perm) -> Perm:
        """Lexicographically least element of the right coset N x."""
        chain = self._chain
        for lvl in range(len(chain.base)):
            orbit = chain.orbit_order[lvl]
            if len(orbit) == 1:
                continue
            best = min(orbit, key=x.__getitem__)
            x = compose(chain.trans[lvl][best], x)
        return x

    def image(self, p: Perm) -> Perm:
        """The permutation induced on cosets by right multiplication."""
        return tuple(
            self.lookup[self._canonical(compose(rep, p))] for rep in self.reps
        )

    def elements(self) -> list[Perm]:
        return self.handle.elements(limit=self.size + 1)


def quotient_action(group: SubgroupHandle, normal: SubgroupHandle, max_index=10_000):
    return QuotientGroup(group, normal, max_index)


# -- structure fingerprinting ----------------------------------------------------


def _group_invariants(n_points: int, gens: list[Perm], limit: int) -> tuple:
    handle = SubgroupHandle.from_gens(n_points, gens)
    elements = handle.elements(limit=limit)
    order_counts: dict[int, int] = {}
    for e in elements:
        o = perm_order(e)
        order_counts[o] = order_counts.get(o, 0) + 1
    center = sum(
        1
        for e in elements
        if all(compose(e, g) == compose(g, e) for g in handle.gens)
    )
    derived = _derived_subgroup_order(handle)
    abelian = center == len(elements)
    return (
        len(elements),
        tuple(sorted(order_counts.items())),
        center,
        derived,
        abelian,
    )


def _derived_subgroup_order(handle: SubgroupHandle) -> int:
    gens = handle.gens
    if not gens:
        return 1
    commutators = []
    for a in gens:
        for b in gens:
            c = compose(compose(inverse(a), inverse(b)), compose(a, b))
            if not is_identity(c):
                commutators.append(c)
    derived = BSGS(handle.n_points, commutators)
    frontier = list(commutators)
    while frontier:
        x = frontier.pop()
        for s in gens:
            y = conjugate(x, s)
            if not derived.contains(y):
                derived.add_generator(y)
                frontier.append(y)
    return derived.order()


@lru_cache(maxsize=None)
def _sym_reference(r: int) -> tuple:
    if r <= 1:
        return _group_invariants(1, [], limit=2)
    gens = []
    for i in range(r - 1):
        img = list(range(r))
        img[i], img[i + 1] = img[i + 1], img[i]
        gens.append(tuple(img))
    return _group_invariants(r, gens, limit=factorial(r) + 1)


@lru_cache(maxsize=None)
def _sym_x_c2_reference(r: int) -> tuple:
    pts = max(r, 1) + 2
    gens = []
    for i in range(r - 1):
        img = list(range(pts))
        img[i], img[i + 1] = img[i + 1], img[i]
        gens.append(tuple(img))
    swap = list(range(pts))
    swap[pts - 2], swap[pts - 1] = swap[pts - 1], swap[pts - 2]
    gens.append(tuple(swap))
    return _group_invariants(pts, gens, limit=2 * factorial(max(r, 1)) + 1)


@dataclass(frozen=True)
class StructureLabel:
    """Canonical structure of a small quotient group."""

    kind: str  # "sym" | "sym_x_c2" | "other"
    r: int
    order: int
    invariants: tuple = ()

    def __str__(self) -> str:
        if self.kind == "sym":
            return f"Sym{self.r}"
        if self.kind == "sym_x_c2":
            return "C2xC2" if self.r == 2 else f"Sym{self.r}xC2"
        return f"other({self.order}; {self.invariants})"


def fingerprint(handle: SubgroupHandle, max_order: int = 96) -> StructureLabel:
    """Identify a small group among {Sym_r, Sym_r x C2, other}.

    The invariants (order, element-order multiset, center and derived-group
    orders, abelianness) separate the symmetric groups and their order-2
    extensions from every other group of the orders that occur here.
    """
    order = handle.order()
    if order > max_order:
        raise MembershipError(f"order {order} exceeds the fingerprint bound")
    inv = _group_invariants(handle.n_points, handle.gens, limit=max_order + 1)
    for r in range(1, 8):
        if factorial(r) == order and _sym_reference(r) == inv:
            return StructureLabel("sym", r, order)
    for r in range(0, 8):
        if 2 * factorial(max(r, 1)) == order and _sym_x_c2_reference(r) == inv:
            return StructureLabel("sym_x_c2", r, order)
    return StructureLabel("other", 0, order, inv)
