"""Geometric root lattices of real sextics on a quadric cone.

Each of the eleven topological types of nonsingular real sextic curves on
the quadric cone carries a negative definite root lattice spanned by
vanishing cycles of two kinds, oval classes and bridge classes.  This
module builds those lattices in their fixed geometric bases, enumerates
their root systems, and evaluates the homology pairings of the two
surfaces attached to the curve: the degree-one del Pezzo double cover and
the real rational elliptic surface obtained by blowing up the base point
of its anticanonical pencil.

All vectors are plain integer tuples in the fixed basis, so every value in
this module is hashable and safe to share between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

Vec = tuple[int, ...]


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def smul(c: int, a: Vec) -> Vec:
    return tuple(c * x for x in a)


def zero_vec(rank: int) -> Vec:
    return (0,) * rank


def unit_vec(rank: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(rank))


class UnsupportedTypeError(ValueError):
    """An operation was asked for a curve or surface type it is not defined on."""


# ---------------------------------------------------------------------------
# topological type tags


@dataclass(frozen=True, order=True)
class SexticType:
    """Topological type of a nonsingular real sextic on the quadric cone.

    The real locus of the cone minus the curve has two halves.
    ``pos_ovals`` counts the ovals bounding discs in the half covered by the
    real del Pezzo surface, ``neg_ovals`` the ovals bounding discs in the
    opposite half.  ``bands`` marks the one exceptional type whose real
    locus consists of three non-contractible components and carries no
    ovals at all.

    Written out, the eleven types are ``4|0``, ``3|0``, ``2|0``, ``1|0``,
    ``0|0``, ``1|1``, ``|||`` and ``0|1`` ... ``0|4``.
    """

    pos_ovals: int
    neg_ovals: int
    bands: bool = False

    def __post_init__(self) -> None:
        if self.bands:
            if self.pos_ovals or self.neg_ovals:
                raise ValueError("the band type carries no ovals")
            return
        p, q = self.pos_ovals, self.neg_ovals
        ok = (q == 0 and 0 <= p <= 4) or (p == 0 and 0 <= q <= 4) or (p == q == 1)
        if not ok:
            raise ValueError(f"no such sextic type: {p}|{q}")

    @property
    def key(self) -> str:
        if self.bands:
            return "|||"
        return f"{self.pos_ovals}|{self.neg_ovals}"

    def __str__(self) -> str:
        return self.key

    @classmethod
    def from_key(cls, key: str) -> "SexticType":
        """Parse a ``p|q`` string or the literal ``|||``."""
        key = key.strip()
        if key == "|||":
            return cls(0, 0, bands=True)
        m = re.fullmatch(r"(\d)\|(\d)", key)
        if m is None:
            raise ValueError(f"cannot parse sextic type {key!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def mirror(self) -> "SexticType":
        """The same curve seen from the other half of the cone.

        Swapping the halves exchanges the two kinds of ovals, so the
        positive tritangents of the mirror type are exactly the real
        tritangents of this type living in the opposite half.
        """
        if self.bands:
            return self
        return SexticType(self.neg_ovals, self.pos_ovals)

    def surface(self) -> "SurfaceType":
        """Real locus of the elliptic surface attached to this sextic type."""
        return surface_of_sextic(self)


ALL_SEXTIC_TYPES: tuple[SexticType, ...] = tuple(
    SexticType.from_key(k)
    for k in ("4|0", "3|0", "2|0", "1|0", "0|0", "1|1", "|||", "0|1", "0|2", "0|3", "0|4")
)


@dataclass(frozen=True, order=True)
class SurfaceType:
    """Topological type of the real locus of the rational elliptic surface.

    ``handles`` is the number of torus summands attached to the Klein
    bottle component, ``spheres`` the number of spherical components, and
    ``double_klein`` marks the disconnected locus made of two Klein
    bottles.  Keys look like ``K#4T2``, ``K#T2+S2``, ``K+2S2``, ``K+K``.
    """

    handles: int
    spheres: int
    double_klein: bool = False

    def __post_init__(self) -> None:
        if self.double_klein:
            if self.handles or self.spheres:
                raise ValueError("the two-Klein-bottle locus has no extra summands")
            return
        p, q = self.handles, self.spheres
        ok = (q == 0 and 0 <= p <= 4) or (p == 0 and 0 <= q <= 4) or (p == q == 1)
        if not ok:
            raise ValueError(f"no such surface type: handles={p}, spheres={q}")

    @property
    def key(self) -> str:
        if self.double_klein:
            return "K+K"
        parts = ["K"]
        if self.handles == 1:
            parts.append("#T2")
        elif self.handles > 1:
            parts.append(f"#{self.handles}T2")
        if self.spheres == 1:
            parts.append("+S2")
        elif self.spheres > 1:
            parts.append(f"+{self.spheres}S2")
        return "".join(parts)

    def __str__(self) -> str:
        return self.key

    @classmethod
    def from_key(cls, key: str) -> "SurfaceType":
        key = key.strip()
        if key == "K+K":
            return cls(0, 0, double_klein=True)
        m = re.fullmatch(r"K(?:#(\d?)T2)?(?:\+(\d?)S2)?", key)
        if m is None:
            raise ValueError(f"cannot parse surface type {key!r}")
        p = int(m.group(1)) if m.group(1) else (1 if m.group(1) is not None else 0)
        q = int(m.group(2)) if m.group(2) else (1 if m.group(2) is not None else 0)
        return cls(p, q)

    def sextic(self) -> SexticType:
        """The sextic type whose del Pezzo surface has this real elliptic locus."""
        if self.double_klein:
            return SexticType(0, 0, bands=True)
        return SexticType(self.handles, self.spheres)


def surface_of_sextic(sextic: SexticType) -> SurfaceType:
    if sextic.bands:
        return SurfaceType(0, 0, double_klein=True)
    return SurfaceType(sextic.pos_ovals, sextic.neg_ovals)


ALL_SURFACE_TYPES: tuple[SurfaceType, ...] = tuple(
    surface_of_sextic(s) for s in ALL_SEXTIC_TYPES
)


# ---------------------------------------------------------------------------
# lattices


@dataclass(frozen=True)
class GeometricLattice:
    """A vanishing-cycle root lattice in its fixed geometric basis.

    ``gram`` is the full Gram matrix (diagonal -2, off-diagonal +1 exactly
    for adjacent cycles).  ``oval_indices``/``bridge_indices`` record which
    basis positions hold oval classes and which hold bridge classes.
    """

    name: str
    sextic: SexticType
    basis_names: tuple[str, ...]
    gram: tuple[Vec, ...]
    oval_indices: tuple[int, ...]
    bridge_indices: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.basis_names)

    def basis_vector(self, i: int) -> Vec:
        return unit_vec(self.rank, i)

    def basis_by_name(self, name: str) -> Vec:
        return unit_vec(self.rank, self.basis_names.index(name))

    def oval_number(self, basis_index: int) -> int:
        """1-based oval number of an oval basis position."""
        return self.oval_indices.index(basis_index) + 1


# (basis names, adjacency edges, oval positions, lattice name) per type key.
_GRAPHS: dict[str, tuple[tuple[str, ...], tuple[tuple[int, int], ...], tuple[int, ...], str]] = {
    "4|0": (
        ("O1", "B12", "O2", "B23", "O3", "B34", "O4", "B3"),
        ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)),
        (0, 2, 4, 6),
        "E8",
    ),
    "3|0": (
        ("B1", "O1", "B12", "O2", "B23", "O3", "B2"),
        ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)),
        (1, 3, 5),
        "E7",
    ),
    "2|0": (
        ("B1", "O1", "B12", "O2", "B2", "B2'"),
        ((0, 1), (1, 2), (2, 3), (3, 4), (3, 5)),
        (1, 3),
        "D6",
    ),
    "1|0": (
        ("B1", "O1", "B1'", "B1''", "B11"),
        ((0, 1), (1, 2), (1, 3)),
        (1,),
        "D4+A1",
    ),
    "1|1": (
        ("O1", "B1", "B1'", "B1''"),
        ((0, 1), (0, 2), (0, 3)),
        (0,),
        "D4",
    ),
    "|||": (
        ("B0", "B1", "B2", "B3"),
        ((0, 1), (0, 2), (0, 3)),
        (),
        "D4",
    ),
}

# Deliberate-defect hook for the self-check pipeline: "gram" corrupts one
# adjacency of the rank-8 lattice, which must make the censuses fail.
_FAULT: str | None = None

KNOWN_FAULTS = ("gram",)


def set_fault(tag: str | None) -> None:
    """Install (or clear) a deliberate defect; test hook only."""
    global _FAULT
    if tag is not None and tag not in KNOWN_FAULTS:
        raise ValueError(f"unknown fault tag {tag!r}; known: {KNOWN_FAULTS}")
    _FAULT = tag


def current_fault() -> str | None:
    return _FAULT


def build_lattice(sextic: SexticType) -> GeometricLattice:
    """The geometric root lattice of a sextic type, in its normative basis."""
    return _build(sextic, _FAULT)


@lru_cache(maxsize=None)
def _build(sextic: SexticType, fault: str | None) -> GeometricLattice:
    if not sextic.bands and sextic.pos_ovals == 0:
        # 0|q: pairwise orthogonal bridge classes only.
        n = 4 - sextic.neg_ovals
        names = tuple(f"B{i + 1}" for i in range(n))
        gram = tuple(
            tuple(-2 if i == j else 0 for j in range(n)) for i in range(n)
        )
        return GeometricLattice(
            name=f"{n}A1" if n else "0",
            sextic=sextic,
            basis_names=names,
            gram=gram,
            oval_indices=(),
            bridge_indices=tuple(range(n)),
        )

    names, edges, ovals, name = _GRAPHS[sextic.key]
    if fault == "gram" and sextic.key == "4|0":
        edges = edges[1:]  # drop the O1-B12 adjacency
    n = len(names)
    g = [[-2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        g[i][j] = g[j][i] = 1
    return GeometricLattice(
        name=name,
        sextic=sextic,
        basis_names=names,
        gram=tuple(tuple(row) for row in g),
        oval_indices=ovals,
        bridge_indices=tuple(i for i in range(n) if i not in ovals),
    )


# ---------------------------------------------------------------------------
# pairing and roots


def pair(lattice: GeometricLattice, v: Vec, w: Vec) -> int:
    """Evaluate the lattice's bilinear form on two coordinate vectors."""
    if len(v) != lattice.rank or len(w) != lattice.rank:
        raise ValueError(
            f"coordinate length mismatch: rank {lattice.rank}, got {len(v)} and {len(w)}"
        )
    total = 0
    for i, vi in enumerate(v):
        if vi:
            row = lattice.gram[i]
            total += vi * sum(rij * wj for rij, wj in zip(row, w) if wj)
    return total


def norm(lattice: GeometricLattice, v: Vec) -> int:
    return pair(lattice, v, v)


def is_root(lattice: GeometricLattice, v: Vec) -> bool:
    return len(v) == lattice.rank and norm(lattice, v) == -2


def reflect(lattice: GeometricLattice, e: Vec, x: Vec) -> Vec:
    """Reflection of x in the hyperplane of a norm -2 vector e."""
    return vadd(x, smul(pair(lattice, x, e), e))


@lru_cache(maxsize=None)
def enumerate_roots(lattice: GeometricLattice) -> tuple[Vec, ...]:
    """All norm -2 vectors, computed as the reflection closure of the basis.

    Every lattice handled here is a root lattice, so its roots form a
    single orbit of the basis under the reflections in basis elements.
    The result is sorted lexicographically, hence deterministic.
    """
    rank = lattice.rank
    if rank == 0:
        return ()
    seed = [unit_vec(rank, i) for i in range(rank)]
    found: set[Vec] = set(seed) | {vneg(v) for v in seed}
    frontier = list(found)
    while frontier:
        x = frontier.pop()
        for i in range(rank):
            c = sum(g * xj for g, xj in zip(lattice.gram[i], x))
            if c == 0:
                continue
            y = tuple(xj + (c if j == i else 0) for j, xj in enumerate(x))
            if y not in found:
                found.add(y)
                frontier.append(y)
    return tuple(sorted(found))


@lru_cache(maxsize=None)
def _square_completion(lattice: GeometricLattice):
    """Sum-of-squares form of the (negated) gram matrix.

    Returns per-index pairs (d_i, row_i) with -Q(x) = sum d_i (x_i +
    row_i . x_{>i})^2, d_i > 0 exact fractions.  Valid because every
    lattice here is negative definite.
    """
    from fractions import Fraction

    n = lattice.rank
    q = [[Fraction(-lattice.gram[i][j]) for j in range(n)] for i in range(n)]
    levels = []
    for i in range(n):
        d = q[i][i]
        row = tuple(q[i][j] / d for j in range(i + 1, n))
        levels.append((d, row))
        for a in range(i + 1, n):
            for b in range(i + 1, n):
                q[a][b] -= q[i][a] * q[i][b] / d
    return tuple(levels)


def vectors_with_norm_at_least(lattice: GeometricLattice, floor: int) -> tuple[Vec, ...]:
    """All lattice vectors v with floor <= v.v (<= 0 by definiteness).

    Exact shell enumeration by completing squares level by level; the
    per-level integer ranges use isqrt over- and under-estimates, with an
    exact budget test before each descent.
    """
    from fractions import Fraction
    from math import isqrt

    n = lattice.rank
    if floor > 0:
        return ()
    if n == 0:
        return ((),)
    levels = _square_completion(lattice)
    out: list[Vec] = []
    coords = [0] * n

    def descend(i: int, remaining: Fraction) -> None:
        if i < 0:
            out.append(tuple(coords))
            return
        d, row = levels[i]
        center = sum(r * coords[i + 1 + j] for j, r in enumerate(row))
        w = remaining / d
        s_hi = Fraction(isqrt(w.numerator * w.denominator) + 1, w.denominator)
        lo = -s_hi - center
        hi = s_hi - center
        for x in range(-int(-lo // 1), int(hi // 1) + 1):
            used = d * (x + center) ** 2
            if used <= remaining:
                coords[i] = x
                descend(i - 1, remaining - used)
        coords[i] = 0

    descend(n - 1, Fraction(-floor))
    return tuple(sorted(out))


def canonical_root_pair(e: Vec) -> tuple[Vec, Vec]:
    """Order a +/- root pair deterministically (larger tuple first)."""
    f = vneg(e)
    return (e, f) if e > f else (f, e)


def root_pairs(lattice: GeometricLattice) -> tuple[tuple[Vec, Vec], ...]:
    """The roots grouped into +/- pairs, sorted by canonical representative."""
    pairs = {canonical_root_pair(e) for e in enumerate_roots(lattice)}
    return tuple(sorted(pairs))


# ---------------------------------------------------------------------------
# homology classes of the two ambient surfaces


@dataclass(frozen=True)
class H2ClassY:
    """Middle homology class of the del Pezzo double cover.

    Coordinates in the splitting by the canonical class (self-pairing +1)
    and its orthogonal complement, which is the geometric root lattice.
    """

    canon: int
    lattice_part: Vec


def pairing_y(lattice: GeometricLattice, a: H2ClassY, b: H2ClassY) -> int:
    return a.canon * b.canon + pair(lattice, a.lattice_part, b.lattice_part)


def canonical_class_y(lattice: GeometricLattice) -> H2ClassY:
    return H2ClassY(1, zero_vec(lattice.rank))


def line_class_on_Y(lattice: GeometricLattice, e: Vec) -> H2ClassY:
    """The class of the line attached to a root: minus canonical minus root.

    Each +/- root pair yields the two lines covering one tritangent of the
    branch sextic; both classes self-pair to -1 and meet the canonical
    class in -1.
    """
    if not is_root(lattice, e):
        raise ValueError("line classes on the double cover are indexed by roots")
    return H2ClassY(-1, vneg(e))


@dataclass(frozen=True)
class H2ClassX:
    """Middle homology class of the elliptic surface.

    Stored in the splitting spanned by the anticanonical fiber direction,
    the root lattice, and a fixed section:  ``canon`` multiplies the
    canonical class (negative of the fiber), ``line`` multiplies the fixed
    section class.
    """

    canon: int
    lattice_part: Vec
    line: int


def pairing_x(lattice: GeometricLattice, a: H2ClassX, b: H2ClassX) -> int:
    mixed = a.canon * b.line + a.line * b.canon + a.line * b.line
    return -mixed + pair(lattice, a.lattice_part, b.lattice_part)


def fiber_class_x(lattice: GeometricLattice) -> H2ClassX:
    """The fiber class (negative of the canonical class)."""
    return H2ClassX(-1, zero_vec(lattice.rank), 0)


def base_line_class_x(lattice: GeometricLattice) -> H2ClassX:
    """The fixed reference section."""
    return H2ClassX(0, zero_vec(lattice.rank), 1)


def line_class_on_X(lattice: GeometricLattice, v: Vec) -> H2ClassX:
    """Section class of the translation image of the reference section.

    Any lattice vector is allowed, not only roots; the result always
    self-pairs to -1 and meets the fiber once.
    """
    if len(v) != lattice.rank:
        raise ValueError("coordinate length mismatch")
    return H2ClassX(norm(lattice, v) // 2, v, 1)
