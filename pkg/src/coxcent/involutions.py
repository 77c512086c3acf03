"""Conjugacy classes of involutions: enumeration, cubes, class labels.

Classes are found by a level BFS over the degree: the classes of degree
d+1 are exactly the conjugacy classes of u * s_alpha where u runs over
degree-d class representatives and alpha over roots fixed by u.  This is
complete because every involution of degree d+1 is a product of d+1
reflections in pairwise orthogonal roots, hence a degree-d involution
times a reflection whose root it fixes.  Deduplication stores the full
class orbits (packed), behind a cheap line-count prefilter.

When -1 lies in the group, classes of degree above n/2 mirror the classes
of the complementary degree through u -> -u.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .group import CoxeterGroup
from .permengine import conjugacy_class_set
from .perms import Perm, compose, is_identity, is_involution, pack, pack_width
from .rootsys import signed_permutation


@dataclass(eq=False)
class InvolutionClass:
    """One conjugacy class of involutions."""

    rep: Perm
    degree: int
    size: int
    label: str = ""
    mirror_of: "InvolutionClass | None" = field(default=None, repr=False)


def degree(group: CoxeterGroup, u: Perm) -> int:
    if not is_involution(u):
        raise ValueError("element is not an involution")
    return group.degree(u)


# -- cubes ----------------------------------------------------------------------


def _negated_line_adjacency(group: CoxeterGroup, u: Perm):
    lines = group.negated_lines(u)
    ortho = {
        la: frozenset(
            lb for lb in lines if lb != la and group.orthogonal(la, lb)
        )
        for la in lines
    }
    return lines, ortho


def cube_decompositions(
    group: CoxeterGroup,
    u: Perm,
    *,
    limit: int | None = None,
    through: int | None = None,
) -> list[tuple[int, ...]]:
    """All sets of pairwise orthogonal lines whose reflections multiply to u.

    Lines are positive-root indices; each cube is a sorted tuple of size
    deg(u).  `through` restricts to cubes containing that line, `limit`
    stops the search early.
    """
    d = group.degree(u)
    if d == 0:
        return [()] if through is None else []
    lines, ortho = _negated_line_adjacency(group, u)
    found: list[tuple[int, ...]] = []

    def leaf(chosen: list[int]):
        w = u
        for l in chosen:
            w = compose(w, group.reflection_perm(l))
        if is_identity(w):
            found.append(tuple(sorted(chosen)))

    def search(chosen: list[int], allowed, min_next: int):
        if limit is not None and len(found) >= limit:
            return
        if len(chosen) == d:
            leaf(chosen)
            return
        candidates = sorted(x for x in allowed if x >= min_next)
        if len(chosen) + len(candidates) < d:
            return
        for l in candidates:
            search(chosen + [l], allowed & ortho[l], l + 1)
            if limit is not None and len(found) >= limit:
                return

    if through is not None:
        if through not in ortho:
            return []
        search([through], ortho[through], 0)
    else:
        search([], frozenset(lines), 0)
    return found


def first_cube(group: CoxeterGroup, u: Perm) -> tuple[int, ...]:
    cubes = cube_decompositions(group, u, limit=1)
    if not cubes:
        raise ValueError("involution admits no orthogonal decomposition")
    return cubes[0]


# -- labels ---------------------------------------------------------------------


def signed_invariants(group: CoxeterGroup, u: Perm) -> tuple[int, int, int]:
    """(a, a', b): negated coordinates, fixed coordinates, swapped pairs."""
    sigma, signs = signed_permutation(group.root_system, u)
    a = sum(1 for i, s in enumerate(sigma) if s == i and signs[i] == -1)
    a_fixed = sum(1 for i, s in enumerate(sigma) if s == i and signs[i] == 1)
    b = sum(1 for i, s in enumerate(sigma) if s > i)
    return a, a_fixed, b


def _minus_swap_parity(group: CoxeterGroup, u: Perm) -> int:
    sigma, signs = signed_permutation(group.root_system, u)
    return sum(1 for i, s in enumerate(sigma) if s > i and signs[i] == -1) % 2


def label_class(group: CoxeterGroup, u: Perm, deg: int) -> str:
    family = group.ctype.components[0][0]
    if family == "A":
        n_letters = group.ctype.rank() + 1
        return f"a={n_letters - 2 * deg}"
    if family in ("B", "D"):
        a, a_fixed, b = signed_invariants(group, u)
        base = f"{a},{a_fixed},{b}"
        if family == "D" and a == 0 and a_fixed == 0:
            # The two split classes: "+" goes to the class of the product of
            # canonical plus-swaps, whose minus-swap parity is even.
            return base + ("+" if _minus_swap_parity(group, u) == 0 else "-")
        return base
    if family == "F":
        if deg == 1:
            line = group.negated_lines(u)[0]
            return "L" if group.root_system.is_long(line) else "C"
        if deg == 2:
            return "2" if len(cube_decompositions(group, u, limit=2)) == 2 else "2'"
        if deg == 3:
            return label_class(group, compose(group.neg, u), 1)
        return ""
    if family == "E" and group.ctype.rank() == 7 and deg in (3, 4):
        v = u if deg == 3 else compose(group.neg, u)
        cube = first_cube(group, v)
        rs = group.root_system
        total = [0] * rs.rank
        for line in cube:
            for k, x in enumerate(rs.mod2_vector(line, "R_mod_2P")):
                total[k] = (total[k] + x) % 2
        return "droite" if not any(total) else "triangle"
    if family == "E" and group.ctype.rank() == 8 and deg == 4:
        cube = first_cube(group, u)
        rs = group.root_system
        total = [0] * rs.rank
        for line in cube:
            for k, x in enumerate(rs.roots[line]):
                total[k] = (total[k] + x) % 2
        return "rectangle" if not any(total) else "tetraedre"
    return ""


# -- enumeration -------------------------------------------------------------------


def _line_counts(group: CoxeterGroup, u: Perm) -> tuple[int, int]:
    neg = group.neg
    fixed = 0
    negated = 0
    for l in group.lines:
        v = u[l]
        if v == l:
            fixed += 1
        elif v == neg[l]:
            negated += 1
    return fixed, negated


def enumerate_involution_classes(group: CoxeterGroup) -> list[InvolutionClass]:
    """All conjugacy classes of involutions, identity included, sorted by
    (degree, label)."""
    n = group.ctype.rank()
    gens = group.handle.gens
    width = pack_width(group.n_points)
    minus_one = group.minus_one
    top_level = n // 2 if minus_one is not None else n

    classes: list[InvolutionClass] = [
        InvolutionClass(rep=group.identity, degree=0, size=1)
    ]
    current = [classes[0]]
    for d in range(top_level):
        stored: list[tuple[tuple[int, int], set]] = []
        fresh: list[InvolutionClass] = []
        for cls in current:
            u = cls.rep
            for line in group.lines:
                if u[line] != line:
                    continue
                w = compose(u, group.reflection_perm(line))
                key = _line_counts(group, w)
                packed = pack(w, width)
                if any(packed in elems for k, elems in stored if k == key):
                    continue
                orbit = conjugacy_class_set(group.n_points, gens, w)
                new_cls = InvolutionClass(rep=w, degree=d + 1, size=len(orbit))
                stored.append((key, orbit))
                fresh.append(new_cls)
                classes.append(new_cls)
        current = fresh
        if not current:
            break

    for cls in classes:
        cls.label = label_class(group, cls.rep, cls.degree)

    if minus_one is not None:
        for src in list(classes):
            if n - src.degree <= top_level:
                continue
            rep = compose(group.neg, src.rep)
            classes.append(
                InvolutionClass(
                    rep=rep,
                    degree=n - src.degree,
                    size=src.size,
                    label=label_class(group, rep, n - src.degree),
                    mirror_of=src,
                )
            )

    classes.sort(key=lambda c: (c.degree, c.label))
    return classes
