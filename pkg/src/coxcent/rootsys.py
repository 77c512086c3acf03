"""Root systems and Coxeter data for every finite irreducible type.

Roots are stored as coordinate tuples in the simple-root basis: integer
tuples for the crystallographic types, Scalar tuples over Q(sqrt5) for H3
and H4.  The full root set is generated by closing the simple roots under
the simple reflections, then frozen in a deterministic order (height, then
lexicographic coordinates), so every downstream artifact is reproducible
byte for byte.

I2(m) is deliberately not realized by vectors: general m would need
Q(cos pi/m) arithmetic, while everything the dihedral tables require is
visible on the abstract 2m-point root circle (see :class:`DihedralModel`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .coxtype import CoxeterType
from .linalg import Matrix
from .perms import Perm
from .scalars import GOLDEN, Scalar


class CapabilityError(ValueError):
    """Requested type or rank outside what this build supports."""


DEFAULT_MAX_RANK = 12

# Dynkin data, 0-based Bourbaki numbering: (edges with exact inner product
# of the two simple roots, squared lengths of the simple roots).
_MINUS_GOLDEN = -GOLDEN


def _dynkin_data(family: str, n: int):
    two = Fraction(2)
    if family == "A":
        return [(i, i + 1, Fraction(-1)) for i in range(n - 1)], [two] * n
    if family == "B":
        norms = [two] * (n - 1) + [Fraction(1)]
        return [(i, i + 1, Fraction(-1)) for i in range(n - 1)], norms
    if family == "D":
        edges = [(i, i + 1, Fraction(-1)) for i in range(n - 2)]
        edges.append((n - 3, n - 1, Fraction(-1)))
        return edges, [two] * n
    if family == "E":
        chain = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)][: n - 2]
        edges = [(i, j, Fraction(-1)) for i, j in chain + [(1, 3)]]
        return edges, [two] * n
    if family == "F":
        edges = [
            (0, 1, Fraction(-1)),
            (1, 2, Fraction(-1)),
            (2, 3, Fraction(-1, 2)),
        ]
        return edges, [two, two, Fraction(1), Fraction(1)]
    if family == "H":
        edges = [(0, 1, _MINUS_GOLDEN)] + [
            (i, i + 1, Scalar(-1)) for i in range(1, n - 1)
        ]
        return edges, [Scalar(2)] * n
    raise CapabilityError(f"no root datum for {family}{n}")


@dataclass
class GroupElement:
    """A group element as a root permutation, with its exact matrix on V."""

    perm: Perm
    system: "RootSystem"

    def matrix(self) -> Matrix:
        return self.system.matrix_of_perm(self.perm)


class RootSystem:
    """An irreducible root system with its reflection representation."""

    def __init__(self, ctype: CoxeterType):
        (family, n) = ctype.components[0]
        self.ctype = ctype
        self.rank = n
        edges, norms = _dynkin_data(family, n)
        self.crystallographic = family != "H"

        gram = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                gram[i][j] = norms[i] if i == j else (Scalar(0) if family == "H" else Fraction(0))
        for i, j, prod in edges:
            gram[i][j] = prod
            gram[j][i] = prod
        self.gram = tuple(tuple(row) for row in gram)

        # refl[i][j] = <alpha_i, alpha_j^vee> = 2 g(i,j) / g(j,j): the Cartan
        # matrix in the crystallographic case, where it is integral.
        refl = [
            [2 * gram[i][j] / gram[j][j] for j in range(n)] for i in range(n)
        ]
        if self.crystallographic:
            assert all(x.denominator == 1 for row in refl for x in row)
            refl = [[int(x) for x in row] for row in refl]
            self.cartan = tuple(tuple(row) for row in refl)
        else:
            self.cartan = None
        self._refl = tuple(tuple(row) for row in refl)

        zero = 0 if self.crystallographic else Scalar(0)
        one = 1 if self.crystallographic else Scalar(1)
        simple_coords = [
            tuple(one if k == i else zero for k in range(n)) for i in range(n)
        ]
        roots = self._close(simple_coords)
        roots.sort(key=lambda v: (sum(v[1:], v[0]), v))
        self.roots = tuple(roots)
        self.index = {v: i for i, v in enumerate(self.roots)}
        self.n_roots = len(self.roots)
        self.neg = tuple(
            self.index[tuple(-c for c in v)] for v in self.roots
        )
        self.simple = tuple(self.index[v] for v in simple_coords)
        self.positive = tuple(
            i for i, v in enumerate(self.roots) if sum(v[1:], v[0]) > zero
        )
        self.highest = self.positive[-1]
        self._norms = [None] * self.n_roots
        self._refl_perms: dict[int, Perm] = {}
        self._gram_rows: dict[int, tuple] = {}

    def _apply_simple(self, i: int, v: tuple) -> tuple:
        c = sum(v[j] * self._refl[j][i] for j in range(self.rank))
        out = list(v)
        out[i] = v[i] - c
        return tuple(out)

    def _close(self, simple_coords) -> list:
        seen = set(simple_coords)
        queue = list(simple_coords)
        while queue:
            v = queue.pop()
            for i in range(self.rank):
                w = self._apply_simple(i, v)
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
            nv = tuple(-c for c in v)
            if nv not in seen:
                seen.add(nv)
                queue.append(nv)
        return list(seen)

    # -- inner products ---------------------------------------------------

    def gram_row(self, i: int) -> tuple:
        row = self._gram_rows.get(i)
        if row is None:
            v = self.roots[i]
            row = tuple(
                sum(v[j] * self.gram[j][k] for j in range(self.rank))
                for k in range(self.rank)
            )
            self._gram_rows[i] = row
        return row

    def product(self, i: int, j: int):
        """Invariant inner product of roots i and j."""
        gi = self.gram_row(i)
        w = self.roots[j]
        return sum(gi[k] * w[k] for k in range(self.rank))

    def orthogonal(self, i: int, j: int) -> bool:
        p = self.product(i, j)
        return p == 0 or (isinstance(p, Scalar) and p.is_zero())

    def norm(self, i: int):
        if self._norms[i] is None:
            self._norms[i] = self.product(i, i)
        return self._norms[i]

    def is_long(self, i: int) -> bool:
        longest = max(self.norm(s) for s in self.simple)
        return self.norm(i) == longest

    # -- reflections ------------------------------------------------------

    def reflection_perm(self, line: int) -> Perm:
        """Permutation of root indices induced by the reflection in root `line`."""
        perm = self._refl_perms.get(line)
        if perm is not None:
            return perm
        galpha = self.gram_row(line)
        nn = self.norm(line)
        alpha = self.roots[line]
        images = []
        for v in self.roots:
            c = 2 * sum(g * x for g, x in zip(galpha, v)) / nn
            images.append(
                self.index[tuple(x - c * a for x, a in zip(v, alpha))]
            )
        perm = tuple(images)
        self._refl_perms[line] = perm
        return perm

    def reflection(self, line: int) -> GroupElement:
        return GroupElement(self.reflection_perm(line), self)

    def generators(self) -> list[Perm]:
        return [self.reflection_perm(i) for i in self.simple]

    # -- matrices ----------------------------------------------------------

    def matrix_of_perm(self, perm: Perm) -> Matrix:
        cols = [self.roots[perm[s]] for s in self.simple]
        return tuple(
            tuple(Scalar.of(cols[c][r]) for c in range(self.rank))
            for r in range(self.rank)
        )

    def degree_of(self, perm: Perm) -> int:
        """dim of the (-1)-eigenspace of an involution, as rank(M - I)."""
        m = self.matrix_of_perm(perm)
        return linalg.rank(linalg.mat_sub(m, linalg.identity(self.rank)))

    # -- lattice / mod-2 machinery -----------------------------------------

    def weight_coords(self, v: tuple[int, ...]) -> tuple[int, ...]:
        """Coordinates in the fundamental-weight basis (pairings with coroots)."""
        if not self.crystallographic:
            raise CapabilityError("weight lattice needs a crystallographic type")
        c = self.cartan
        n = self.rank
        return tuple(sum(v[i] * c[i][j] for i in range(n)) for j in range(n))

    def in_2R(self, v: tuple[int, ...]) -> bool:
        return all(x % 2 == 0 for x in v)

    def in_2P(self, v: tuple[int, ...]) -> bool:
        return all(x % 2 == 0 for x in self.weight_coords(v))

    def mod2_vector(self, root_index: int, mode: str) -> tuple[int, ...]:
        v = self.roots[root_index]
        if mode == "R_mod_2R":
            if not self.crystallographic:
                raise CapabilityError("mod-2R image needs a crystallographic type")
            return tuple(x % 2 for x in v)
        if mode == "R_mod_2P":
            if self.ctype != CoxeterType.irreducible("E", 7):
                raise CapabilityError("the R/2P model is specific to E7")
            return tuple(x % 2 for x in self.weight_coords(v))
        raise ValueError(f"unknown mod-2 mode {mode!r}")

    def mod2_form(self, i: int, j: int) -> int:
        """Pairing (root_i . root_j^vee) mod 2."""
        pairing = 2 * self.product(i, j) / self.norm(j)
        return int(pairing) % 2

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.ctype),
            "rank": self.rank,
            "roots": [
                [str(c) for c in root] for root in self.roots
            ],
        }


class DihedralModel:
    """The dihedral group I2(m) acting on its 2m abstract roots.

    Root k sits at angle k*pi/m; reflection in the line of root j maps
    root k to 2j + m - k (mod 2m), and negation is the half-turn k + m.
    """

    crystallographic = False
    cartan = None
    rank = 2

    def __init__(self, m: int):
        if m < 3:
            raise CapabilityError("dihedral type needs m >= 3")
        self.m = m
        self.ctype = CoxeterType.irreducible("I", m)
        self.n_roots = 2 * m
        self.neg = tuple((k + m) % (2 * m) for k in range(2 * m))
        self.positive = tuple(range(m))
        self.simple = (0, m - 1)
        self._refl_perms: dict[int, Perm] = {}

    def reflection_perm(self, line: int) -> Perm:
        perm = self._refl_perms.get(line)
        if perm is None:
            mm = 2 * self.m
            perm = tuple((2 * line + self.m - k) % mm for k in range(mm))
            self._refl_perms[line] = perm
        return perm

    def generators(self) -> list[Perm]:
        return [self.reflection_perm(i) for i in self.simple]

    def orthogonal(self, i: int, j: int) -> bool:
        if self.m % 2:
            return False
        return (i - j) % self.m == self.m // 2

    def is_long(self, i: int) -> bool:
        # All dihedral roots play symmetric roles; length classes are not
        # meaningful for the abstract model.
        return True

    def degree_of(self, perm: Perm) -> int:
        if all(i == x for i, x in enumerate(perm)):
            return 0
        if perm == self.neg:
            return 2
        if perm in (self.reflection_perm(j) for j in range(self.m)):
            return 1
        raise ValueError("dihedral element is not an involution")

    def to_json_dict(self) -> dict:
        return {"type": str(self.ctype), "rank": 2, "roots": 2 * self.m}


def build_system(ctype: CoxeterType, max_rank: int = DEFAULT_MAX_RANK):
    """Construct the root system (or dihedral model) of an irreducible type."""
    if not ctype.is_irreducible():
        raise CapabilityError(f"type {ctype} is not irreducible")
    family, n = ctype.components[0]
    if family == "I":
        return DihedralModel(n)
    if family == "G":
        return DihedralModel(6)
    if family in ("A", "B", "D") and n > max_rank:
        raise CapabilityError(
            f"rank {n} of family {family} exceeds the supported bound {max_rank}"
        )
    return RootSystem(ctype)


def extended_diagram_Y(rs: RootSystem) -> frozenset[int]:
    """Simple-root positions not adjacent to the lowest root in the
    completed diagram (0-based Bourbaki positions)."""
    if not rs.crystallographic:
        raise CapabilityError("extended diagrams need a crystallographic type")
    return frozenset(
        c
        for c, s in enumerate(rs.simple)
        if rs.orthogonal(s, rs.highest)
    )


# -- signed-permutation view for the B/D families ----------------------------


def _standard_basis_matrix(family: str, n: int) -> Matrix:
    rows = [[Fraction(0)] * n for _ in range(n)]
    for c in range(n - 1):
        rows[c][c] = Fraction(1)
        rows[c + 1][c] = Fraction(-1)
    rows[n - 1][n - 1] = Fraction(1)
    if family == "D":
        rows[n - 2][n - 1] = Fraction(1)
    return linalg.matrix(rows)


@lru_cache(maxsize=None)
def _basis_change(family: str, n: int):
    s = _standard_basis_matrix(family, n)
    return s, linalg.mat_inv(s)


def signed_permutation(rs: RootSystem, perm: Perm):
    """Express a B/D group element as a signed permutation of coordinates.

    Returns (sigma, signs) with e_j mapped to signs[j] * e_sigma[j].
    """
    family = rs.ctype.components[0][0]
    if family not in ("B", "D"):
        raise CapabilityError("signed-permutation form is a B/D feature")
    s, s_inv = _basis_change(family, rs.rank)
    m = linalg.mat_mul(linalg.mat_mul(s, rs.matrix_of_perm(perm)), s_inv)
    sigma = []
    signs = []
    for j in range(rs.rank):
        entries = [(i, m[i][j]) for i in range(rs.rank) if not m[i][j].is_zero()]
        if len(entries) != 1 or entries[0][1].a not in (1, -1):
            raise ValueError("element is not a signed permutation")
        i, val = entries[0]
        sigma.append(i)
        signs.append(1 if val.a == 1 else -1)
    return tuple(sigma), tuple(signs)
