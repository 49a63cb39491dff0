"""Fiberwise mapping class groups over the real base and lattice translations.

For a real rational elliptic surface whose real locus is a connected sum
of a Klein bottle with p tori (possibly plus spheres, or a disjoint Klein
bottle), the group of fiberwise mapping classes fixing a section is
abelian, generated by fiber twists, split twists and half twists of the
handles.  Elements are stored in generator exponents with the half-twist
exponents reduced to bits; reducing an exponent of 2 feeds the
appropriate fiber twists back in (the square of the i-th normalized half
twist is the fiber twist at handle i composed with the inverse fiber
twist at the next handle, with the convention that "the twist past the
last handle" is the inverse of the first one).

Translating along a section moves every fiber by an element of the
vanishing-cycle lattice; ``translation_class`` is the resulting
homomorphism from the lattice into the mapping class group, and
``translation_analysis`` computes its kernel, image and cokernel exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .intlinalg import (
    GroupInvariants,
    Matrix,
    in_rowspan,
    left_kernel_basis,
    quotient_invariants,
    row_hermite_form,
)
from .lattices import (
    GeometricLattice,
    SurfaceType,
    UnsupportedTypeError,
    Vec,
    build_lattice,
)


@dataclass(frozen=True)
class ModSElement:
    """A fiberwise mapping class, in normalized generator exponents.

    For a surface with p >= 1 handles the data is one bit per handle
    (half twists), one integer per handle (fiber twists) and one integer
    per handle (split twists).  Handle-free surfaces other than the
    double Klein bottle carry a single fiber-twist parity; the double
    Klein bottle carries the two commuting involutions ``swap`` and
    ``shift`` of its components.
    """

    surface: SurfaceType
    half_twists: tuple[int, ...] = ()
    fiber_twists: tuple[int, ...] = ()
    split_twists: tuple[int, ...] = ()
    swap: int = 0
    shift: int = 0

    def __post_init__(self) -> None:
        p = self.surface.handles
        if self.surface.double_klein:
            shape_ok = (
                self.half_twists == ()
                and self.fiber_twists == ()
                and self.split_twists == ()
                and self.swap in (0, 1)
                and self.shift in (0, 1)
            )
        elif p == 0:
            shape_ok = (
                self.half_twists == ()
                and len(self.fiber_twists) == 1
                and self.fiber_twists[0] in (0, 1)
                and self.split_twists == ()
                and self.swap == self.shift == 0
            )
        else:
            shape_ok = (
                len(self.half_twists) == p
                and all(b in (0, 1) for b in self.half_twists)
                and len(self.fiber_twists) == p
                and len(self.split_twists) == p
                and self.swap == self.shift == 0
            )
        if not shape_ok:
            raise ValueError(f"malformed element data for surface {self.surface}")


def mods_element(
    surface: SurfaceType,
    half_twists: tuple[int, ...] = (),
    fiber_twists: tuple[int, ...] = (),
    split_twists: tuple[int, ...] = (),
    swap: int = 0,
    shift: int = 0,
) -> ModSElement:
    """Build an element from raw exponents, normalizing the half twists."""
    p = surface.handles
    if surface.double_klein:
        return ModSElement(surface, swap=swap % 2, shift=shift % 2)
    if p == 0:
        total = sum(fiber_twists) if fiber_twists else 0
        return ModSElement(surface, fiber_twists=(total % 2,))
    kappa = list(half_twists) if half_twists else [0] * p
    n = list(fiber_twists) if fiber_twists else [0] * p
    m = list(split_twists) if split_twists else [0] * p
    if not (len(kappa) == len(n) == len(m) == p):
        raise ValueError("exponent tuples must have one entry per handle")
    for i in range(p):
        q, r = divmod(kappa[i], 2)
        kappa[i] = r
        if q:
            if i < p - 1:
                n[i] += q
                n[i + 1] -= q
            else:
                n[p - 1] += q
                n[0] += q
    return ModSElement(surface, tuple(kappa), tuple(n), tuple(m))


def mods_identity(surface: SurfaceType) -> ModSElement:
    p = surface.handles
    if surface.double_klein:
        return ModSElement(surface)
    if p == 0:
        return ModSElement(surface, fiber_twists=(0,))
    zero = (0,) * p
    return ModSElement(surface, zero, zero, zero)


def mods_mul(a: ModSElement, b: ModSElement) -> ModSElement:
    if a.surface != b.surface:
        raise ValueError("elements live on different surfaces")
    s = a.surface
    if s.double_klein:
        return ModSElement(s, swap=(a.swap + b.swap) % 2, shift=(a.shift + b.shift) % 2)
    if s.handles == 0:
        return ModSElement(s, fiber_twists=((a.fiber_twists[0] + b.fiber_twists[0]) % 2,))
    return mods_element(
        s,
        tuple(x + y for x, y in zip(a.half_twists, b.half_twists)),
        tuple(x + y for x, y in zip(a.fiber_twists, b.fiber_twists)),
        tuple(x + y for x, y in zip(a.split_twists, b.split_twists)),
    )


def mods_inv(a: ModSElement) -> ModSElement:
    s = a.surface
    if s.double_klein or s.handles == 0:
        return a  # every element is an involution
    return mods_element(
        s,
        tuple(-x for x in a.half_twists),
        tuple(-x for x in a.fiber_twists),
        tuple(-x for x in a.split_twists),
    )


def mods_pow(a: ModSElement, k: int) -> ModSElement:
    if k < 0:
        return mods_pow(mods_inv(a), -k)
    out = mods_identity(a.surface)
    base = a
    while k:
        if k & 1:
            out = mods_mul(out, base)
        base = mods_mul(base, base)
        k >>= 1
    return out


def _check_handle_index(surface: SurfaceType, i: int) -> None:
    if not 1 <= i <= surface.handles:
        raise ValueError(f"handle index {i} out of range for {surface}")


def fiber_twist(surface: SurfaceType, i: int = 1) -> ModSElement:
    """Dehn twist along the fiber over the i-th handle's base point."""
    if surface.double_klein:
        raise UnsupportedTypeError("the double Klein bottle has no fiber-twist generator")
    p = surface.handles
    if p == 0:
        if i != 1:
            raise ValueError("handle-free surfaces carry a single twist generator")
        return ModSElement(surface, fiber_twists=(1,))
    _check_handle_index(surface, i)
    n = tuple(int(j == i - 1) for j in range(p))
    return ModSElement(surface, (0,) * p, n, (0,) * p)


def split_twist(surface: SurfaceType, i: int) -> ModSElement:
    """Twist along the splitting curve of the i-th handle."""
    if surface.double_klein or surface.handles == 0:
        raise UnsupportedTypeError(f"{surface} has no split-twist generators")
    _check_handle_index(surface, i)
    p = surface.handles
    m = tuple(int(j == i - 1) for j in range(p))
    return ModSElement(surface, (0,) * p, (0,) * p, m)


def reduced_half_twist(surface: SurfaceType, i: int) -> ModSElement:
    """The normalized half twist of handle i (the storage generator)."""
    if surface.double_klein or surface.handles == 0:
        raise UnsupportedTypeError(f"{surface} has no half-twist generators")
    _check_handle_index(surface, i)
    p = surface.handles
    kappa = tuple(int(j == i - 1) for j in range(p))
    return ModSElement(surface, kappa, (0,) * p, (0,) * p)


def handle_half_twist(surface: SurfaceType, i: int) -> ModSElement:
    """The geometric half twist of handle i.

    Differs from the normalized one by the fiber twist at the next
    handle (inverted fiber twist at handle 1 when i is the last handle);
    its square is the product of the fiber twists at handles i and i+1.
    """
    p = surface.handles
    g = reduced_half_twist(surface, i)
    if i < p:
        return mods_mul(g, fiber_twist(surface, i + 1))
    return mods_mul(g, mods_inv(fiber_twist(surface, 1)))


def swap_components(surface: SurfaceType) -> ModSElement:
    if not surface.double_klein:
        raise UnsupportedTypeError("component swap exists only on the double Klein bottle")
    return ModSElement(surface, swap=1)


def shift_components(surface: SurfaceType) -> ModSElement:
    if not surface.double_klein:
        raise UnsupportedTypeError("component shift exists only on the double Klein bottle")
    return ModSElement(surface, shift=1)


def mods_delta(surface: SurfaceType) -> ModSElement:
    """The unique element of order exactly 2 in the identity component story.

    Built as the alternating product of the geometric half twists,
    times an inverse fiber twist when the handle count is even.
    """
    if surface.double_klein:
        raise UnsupportedTypeError("the double Klein bottle has no distinguished involution")
    p = surface.handles
    if p == 0:
        return fiber_twist(surface)
    out = mods_identity(surface)
    for i in range(1, p + 1):
        g = handle_half_twist(surface, i)
        out = mods_mul(out, g if i % 2 == 1 else mods_inv(g))
    if p % 2 == 0:
        out = mods_mul(out, mods_inv(fiber_twist(surface, 1)))
    return out


def half_twist_coordinates(
    g: ModSElement,
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Exponents of g over the geometric (unnormalized) half twists."""
    s = g.surface
    if s.double_klein or s.handles == 0:
        raise UnsupportedTypeError(f"{s} has no half-twist generators")
    p = s.handles
    n = list(g.fiber_twists)
    for i in range(p):
        if g.half_twists[i]:
            if i < p - 1:
                n[i + 1] -= 1
            else:
                n[0] += 1
    return (g.half_twists, tuple(n), g.split_twists)


def linear_coordinates(g: ModSElement) -> tuple[int, ...]:
    """Coordinates identifying the group with Z^2p x Z/2 (or its small cousins).

    For p >= 1 handles: p drift integers (half twist plus signed partial
    sums of fiber twists), the p split-twist integers, and the total
    fiber-twist parity.  The map is an isomorphism of groups onto
    Z^2p x Z/2; handle-free surfaces give the single twist bit, and the
    double Klein bottle gives (swap, shift).
    """
    s = g.surface
    if s.double_klein:
        return (g.swap, g.shift)
    p = s.handles
    if p == 0:
        return (g.fiber_twists[0],)
    total = sum(g.fiber_twists)
    drift = []
    running = 0
    for i in range(p):
        running += g.fiber_twists[i]
        drift.append(g.half_twists[i] + 2 * running - total)
    return tuple(drift) + g.split_twists + (total % 2,)


def from_linear_coordinates(surface: SurfaceType, coords: tuple[int, ...]) -> ModSElement:
    """Inverse of linear_coordinates (the parity slot accepts any integer)."""
    if surface.double_klein:
        if len(coords) != 2:
            raise ValueError("expected (swap, shift)")
        return mods_element(surface, swap=coords[0], shift=coords[1])
    p = surface.handles
    if p == 0:
        if len(coords) != 1:
            raise ValueError("expected a single twist bit")
        return mods_element(surface, fiber_twists=(coords[0],))
    if len(coords) != 2 * p + 1:
        raise ValueError(f"expected {2 * p + 1} coordinates")
    drift = coords[:p]
    m = coords[p : 2 * p]
    eps = coords[2 * p] % 2
    kappa = [(d + eps) % 2 for d in drift]
    total = drift[p - 1] - kappa[p - 1]
    n = [0] * p
    n[0] = (drift[0] - kappa[0] + total) // 2
    for i in range(1, p):
        n[i] = (drift[i] - drift[i - 1] - kappa[i] + kappa[i - 1]) // 2
    g = ModSElement(surface, tuple(kappa), tuple(n), tuple(m))
    if linear_coordinates(g) != tuple(coords[: 2 * p]) + (eps,):
        raise ValueError(f"coordinates {coords} are not valid for {surface}")
    return g


def _coordinate_relators(surface: SurfaceType) -> tuple[int, Matrix]:
    """Ambient rank of the linear coordinates and the rows acting as zero."""
    if surface.double_klein:
        return 2, [[2, 0], [0, 2]]
    p = surface.handles
    if p == 0:
        return 1, [[2]]
    dim = 2 * p + 1
    row = [0] * dim
    row[-1] = 2
    return dim, [row]


def mods_group_structure(surface: SurfaceType) -> GroupInvariants:
    """Invariant factors of the mapping class group, from its presentation.

    Generators: one half twist, one fiber twist and one split twist per
    handle; the only relations say that the square of each normalized
    half twist is a signed pair of fiber twists.
    """
    if surface.double_klein:
        return quotient_invariants(2, [[2, 0], [0, 2]])
    p = surface.handles
    if p == 0:
        return quotient_invariants(1, [[2]])
    rows = []
    for i in range(p):
        row = [0] * (3 * p)
        row[i] = 2
        row[p + i] -= 1
        if i < p - 1:
            row[p + i + 1] += 1
        else:
            row[p] -= 1
        rows.append(row)
    return quotient_invariants(3 * p, rows)


_KLEIN_STAR = 0
KNOWN_KLEIN_STARS = (0, 1)


def set_klein_component_image(star: int) -> None:
    """Choose how the central bridge of the band type maps to the swap/shift pair.

    Both admissible choices give the same kernel, image and realizability
    answers; the flag exists so tests can assert that invariance.
    """
    global _KLEIN_STAR
    if star not in KNOWN_KLEIN_STARS:
        raise ValueError(f"unknown choice {star!r}")
    _KLEIN_STAR = star


def current_klein_star() -> int:
    return _KLEIN_STAR


def _pendant_oval(lattice: GeometricLattice, j: int) -> int | None:
    """If basis element j is a bridge attached to exactly one oval, its oval number."""
    if j in lattice.oval_indices:
        return None
    touching = [
        i
        for i in lattice.oval_indices
        if lattice.gram[j][i] != 0
    ]
    others = [
        i
        for i in lattice.bridge_indices
        if i != j and lattice.gram[j][i] != 0
    ]
    if len(touching) == 1 and not others:
        return lattice.oval_number(touching[0])
    return None


def _basis_image(lattice: GeometricLattice, j: int, star: int) -> ModSElement:
    surface = lattice.sextic.surface()
    p = surface.handles
    if surface.double_klein:
        # Bridges between the two bands shift; the central one swaps,
        # possibly composed with a shift (both choices are consistent).
        if lattice.basis_names[j] == "B0":
            g = swap_components(surface)
            if star:
                g = mods_mul(g, shift_components(surface))
            return g
        return shift_components(surface)
    if p == 0:
        return fiber_twist(surface)
    if j in lattice.oval_indices:
        i = lattice.oval_number(j)
        g = handle_half_twist(surface, i)
        return mods_mul(g, mods_pow(split_twist(surface, i), -2))
    pend = _pendant_oval(lattice, j)
    if pend is not None:
        return split_twist(surface, pend)
    touching = [lattice.oval_number(i) for i in lattice.oval_indices if lattice.gram[j][i] != 0]
    if len(touching) == 2:
        i1, i2 = sorted(touching)
        g = mods_mul(split_twist(surface, i1), split_twist(surface, i2))
        return mods_mul(g, mods_inv(fiber_twist(surface, i2)))
    if not touching:
        # An isolated bridge component acts as a plain fiber twist.
        return fiber_twist(surface, 1)
    raise RuntimeError(f"unexpected adjacency for basis element {lattice.basis_names[j]}")


@lru_cache(maxsize=None)
def _basis_images(lattice: GeometricLattice, star: int) -> tuple[ModSElement, ...]:
    return tuple(_basis_image(lattice, j, star) for j in range(lattice.rank))


def translation_class(lattice: GeometricLattice, v: Vec) -> ModSElement:
    """Mapping class of the fiberwise translation attached to a lattice vector.

    Computed as one raw linear combination of the basis images; the carry
    normalization commutes with exponent addition, so this agrees with the
    product of powers while staying cheap for bulk sweeps.
    """
    if len(v) != lattice.rank:
        raise ValueError("vector length differs from lattice rank")
    images = _basis_images(lattice, _KLEIN_STAR)
    surface = lattice.sextic.surface()
    if surface.double_klein:
        swap = sum(a * g.swap for a, g in zip(v, images))
        shift = sum(a * g.shift for a, g in zip(v, images))
        return mods_element(surface, swap=swap, shift=shift)
    p = surface.handles
    if p == 0:
        total = sum(a * g.fiber_twists[0] for a, g in zip(v, images))
        return mods_element(surface, fiber_twists=(total,))
    kappa = [0] * p
    n = [0] * p
    m = [0] * p
    for a, g in zip(v, images):
        if a:
            for i in range(p):
                kappa[i] += a * g.half_twists[i]
                n[i] += a * g.fiber_twists[i]
                m[i] += a * g.split_twists[i]
    return mods_element(surface, tuple(kappa), tuple(n), tuple(m))


@dataclass(frozen=True)
class TranslationAnalysis:
    """Kernel, image and cokernel of the lattice-to-mapping-class map."""

    surface: SurfaceType
    kernel_basis: tuple[Vec, ...]
    image: GroupInvariants
    cokernel: GroupInvariants
    group: GroupInvariants


@lru_cache(maxsize=None)
def _analysis(lattice: GeometricLattice, star: int) -> TranslationAnalysis:
    surface = lattice.sextic.surface()
    dim, relators = _coordinate_relators(surface)
    images = _basis_images(lattice, star)
    rows = [list(linear_coordinates(g)) for g in images]
    stacked = rows + relators
    full_kernel = left_kernel_basis(stacked)
    trimmed = [list(row[: lattice.rank]) for row in full_kernel]
    trimmed = [row for row in trimmed if any(row)]
    reduced = row_hermite_form(trimmed)
    kernel = tuple(tuple(row) for row in reduced.h if any(row))
    image = quotient_invariants(lattice.rank, [list(r) for r in kernel])
    cokernel = quotient_invariants(dim, stacked)
    group = quotient_invariants(dim, relators)
    return TranslationAnalysis(surface, kernel, image, cokernel, group)


def translation_analysis(lattice: GeometricLattice) -> TranslationAnalysis:
    return _analysis(lattice, _KLEIN_STAR)


def is_translation_class(g: ModSElement) -> bool:
    """Is the mapping class realized by translation along some lattice vector?"""
    lattice = build_lattice(g.surface.sextic())
    images = _basis_images(lattice, _KLEIN_STAR)
    dim, relators = _coordinate_relators(g.surface)
    rows = [list(linear_coordinates(h)) for h in images] + relators
    return in_rowspan(rows, linear_coordinates(g))


def in_translation_kernel(lattice: GeometricLattice, v: Vec) -> bool:
    """Does the vector act trivially on every fiber arrangement?"""
    return translation_class(lattice, v) == mods_identity(lattice.sextic.surface())
