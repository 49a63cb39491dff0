"""Action of fiberwise mapping classes on the first homology of the real locus.

The real locus of the elliptic surface (a Klein bottle with p handles,
possibly plus spheres) has first homology generated by the 2-torsion
real-fiber class, a pair of cycles per handle, and the class of the real
reference section.  A fiberwise mapping class moves the section to a new
section; the difference of their classes is a small datum (a fiber bit
plus one integer and one bit per handle) which determines the full action
matrix in block-triangular form, the group law on section differences,
and the parity obstruction singling out the classes realizable by real
lines on the two constrained surface types.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from .intlinalg import Matrix
from .lattices import SurfaceType, UnsupportedTypeError, build_lattice
from .mapping_class import (
    ModSElement,
    is_translation_class,
    split_twist,
    translation_analysis,
    translation_class,
)


@dataclass(frozen=True)
class H1Class:
    """An integral first homology class of the real locus.

    ``fiber_bit`` multiplies the 2-torsion real-fiber class; ``pairs``
    holds per handle the coefficients of the two handle cycles (the
    fiber-direction one first); ``line_coeff`` multiplies the reference
    section class.  Section classes have line_coeff 1 and second handle
    coefficients in {0, 1}.
    """

    fiber_bit: int
    pairs: tuple[tuple[int, int], ...]
    line_coeff: int

    def __post_init__(self) -> None:
        if self.fiber_bit not in (0, 1):
            raise ValueError("the fiber coefficient is 2-torsion: expected a bit")


@dataclass(frozen=True)
class H1Delta:
    """Difference of two section classes (the reference line subtracted).

    A separate shape from H1Class so the action formulas can insist on
    genuine section differences.  ``pairs`` holds (integer coefficient on
    the fiber-direction handle cycle, bit on the oval-direction cycle).
    """

    fiber_bit: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.fiber_bit not in (0, 1):
            raise ValueError("the fiber coefficient is 2-torsion: expected a bit")
        if any(k not in (0, 1) for _, k in self.pairs):
            raise ValueError("oval-direction coefficients of a section difference are bits")


def zero_delta(surface: SurfaceType) -> H1Delta:
    return H1Delta(0, ((0, 0),) * surface.handles)


def delta_to_class(delta: H1Delta) -> H1Class:
    """The section class `reference + delta`."""
    return H1Class(delta.fiber_bit, delta.pairs, 1)


def class_of_section(g: ModSElement) -> H1Class:
    """Homology class of the image of the reference section under g."""
    s = g.surface
    if s.double_klein:
        raise UnsupportedTypeError(
            "the double Klein bottle carries no handle frame for section classes"
        )
    p = s.handles
    if p == 0:
        return H1Class(g.fiber_twists[0] % 2, (), 1)
    fiber = (
        sum(g.fiber_twists) + sum(m * (1 - k) for m, k in zip(g.split_twists, g.half_twists))
    ) % 2
    pairs = tuple(
        ((-1) ** (1 - k) * m, k) for m, k in zip(g.split_twists, g.half_twists)
    )
    return H1Class(fiber, pairs, 1)


def section_delta(g: ModSElement) -> H1Delta:
    """Difference between the class of g(section) and the reference class."""
    c = class_of_section(g)
    return H1Delta(c.fiber_bit, c.pairs)


@dataclass(frozen=True)
class H1ActionMatrix:
    """Matrix of a section translation on the homology basis.

    Basis order: fiber class, then the two cycles of each handle, then
    the section class.  The first row is mod-2 valued (the fiber class is
    torsion); everything else is over the integers.
    """

    surface: SurfaceType
    entries: tuple[tuple[int, ...], ...]

    def apply(self, x: H1Class) -> H1Class:
        p = self.surface.handles
        coords = [x.fiber_bit]
        for b, o in x.pairs:
            coords.extend((b, o))
        coords.append(x.line_coeff)
        if len(coords) != 2 * p + 2:
            raise ValueError("class has the wrong number of handles for this surface")
        out = [sum(row[j] * coords[j] for j in range(len(coords))) for row in self.entries]
        out[0] %= 2
        return H1Class(
            out[0],
            tuple((out[2 * i + 1], out[2 * i + 2]) for i in range(p)),
            out[-1],
        )


def action_matrix(surface: SurfaceType, delta: H1Delta) -> H1ActionMatrix:
    """The full homology action of the translation with given section difference."""
    p = surface.handles
    if len(delta.pairs) != p:
        raise ValueError("difference has the wrong number of handles for this surface")
    dim = 2 * p + 2
    m: Matrix = [[0] * dim for _ in range(dim)]
    m[0][0] = 1
    m[dim - 1][dim - 1] = 1
    m[0][dim - 1] = delta.fiber_bit
    for i, (mi, ki) in enumerate(delta.pairs):
        rb, ro = 2 * i + 1, 2 * i + 2
        sign = (-1) ** ki
        m[rb][rb] = sign
        m[rb][ro] = -2 * mi
        m[ro][ro] = sign
        m[rb][dim - 1] = mi
        m[ro][dim - 1] = ki
        m[0][rb] = ki % 2
        m[0][ro] = mi % 2
    return H1ActionMatrix(surface, tuple(tuple(row) for row in m))


def action_mul(a: H1ActionMatrix, b: H1ActionMatrix) -> H1ActionMatrix:
    """Matrix product, reducing the torsion row mod 2."""
    if a.surface != b.surface:
        raise ValueError("matrices act on different surfaces")
    n = len(a.entries)
    prod = [
        [sum(a.entries[i][k] * b.entries[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    prod[0] = [x % 2 for x in prod[0]]
    return H1ActionMatrix(a.surface, tuple(tuple(row) for row in prod))


def mw_sum(surface: SurfaceType, d1: H1Delta, d2: H1Delta) -> H1Delta:
    """Section difference of the composite translation.

    Per handle this is the product of the two upper-triangular matrices
    with diagonal (-1)^k; the fiber bit picks up the cross terms.
    """
    p = surface.handles
    if len(d1.pairs) != p or len(d2.pairs) != p:
        raise ValueError("difference has the wrong number of handles for this surface")
    pairs = []
    cross = 0
    for (m1, k1), (m2, k2) in zip(d1.pairs, d2.pairs):
        pairs.append((((-1) ** k1) * m2 + ((-1) ** k2) * m1, (k1 + k2) % 2))
        cross += k1 * m2 + k2 * m1
    fiber = (d1.fiber_bit + d2.fiber_bit + cross) % 2
    return H1Delta(fiber, tuple(pairs))


def obstruction_kappa(surface: SurfaceType, m: tuple[int, ...], k: tuple[int, ...]) -> int:
    """Forced fiber bit of a section difference realizable by a real line.

    Only two surface types constrain the fiber coefficient: the
    four-handle one and the one-handle-plus-sphere one.
    """
    p = surface.handles
    if len(m) != p or len(k) != p:
        raise ValueError("coefficient tuples must have one entry per handle")
    if any(b not in (0, 1) for b in k):
        raise ValueError("oval-direction coefficients must be bits")
    if not surface.double_klein and (p, surface.spheres) == (4, 0):
        return (m[0] + m[2] + sum(mi * ki for mi, ki in zip(m, k)) + sum(k)) % 2
    if not surface.double_klein and (p, surface.spheres) == (1, 1):
        return 1 if k[0] == 1 else m[0] % 2
    raise UnsupportedTypeError(f"{surface} puts no parity constraint on section classes")


def section_realizable(surface: SurfaceType, g: ModSElement) -> bool:
    """Is the section moved by g isotopic to one cut out by a real line?"""
    if g.surface != surface:
        raise ValueError("element lives on a different surface")
    return is_translation_class(g)


@dataclass(frozen=True)
class LineClassCount:
    """Result of counting homology classes of real lines on a surface.

    ``finite`` is the exact count when the image of the translation
    homomorphism is finite, and None when there are infinitely many
    classes; in the infinite case ``witnesses`` streams pairwise distinct
    section classes of real lines.
    """

    surface: SurfaceType
    finite: int | None

    def witnesses(self, how_many: int) -> tuple[H1Class, ...]:
        if self.finite is not None:
            raise ValueError("finite counts carry no witness stream")
        lattice = build_lattice(self.surface.sextic())
        w = split_twist_preimage(lattice, 1)
        out = []
        for n in count():
            if len(out) == how_many:
                break
            out.append(class_of_section(translation_class(lattice, tuple(n * x for x in w))))
        return tuple(out)


def split_twist_preimage(lattice, i: int):
    """A lattice vector whose translation is the split twist at oval i.

    Either a pendant bridge of the basis, or the root with the matching
    pairing profile when the basis has no pendant at that oval.
    """
    from .intlinalg import solve_left
    from .mapping_class import _pendant_oval

    surface = lattice.sextic.surface()
    for j in lattice.bridge_indices:
        if _pendant_oval(lattice, j) == i:
            return lattice.basis_vector(j)
    target = [0] * lattice.rank
    target[lattice.oval_indices[i - 1]] = 1
    sol = solve_left([list(r) for r in lattice.gram], target)
    if sol is None:
        raise UnsupportedTypeError(f"no split-twist preimage at oval {i} on {surface}")
    assert translation_class(lattice, sol) == split_twist(surface, i)
    return sol


def count_line_classes(surface: SurfaceType) -> LineClassCount:
    """How many homology classes of real lines the surface carries."""
    analysis = translation_analysis(build_lattice(surface.sextic()))
    if analysis.image.free_rank == 0:
        order = 1
        for d in analysis.image.torsion:
            order *= d
        return LineClassCount(surface, order)
    return LineClassCount(surface, None)


def vanishing_orbit(surface: SurfaceType, i: int, n: int) -> H1Class:
    """Class of the i-th vanishing cycle after n turns of monodromy.

    The orbit is infinite: each turn adds the difference of the two
    handle cycles twice (and flips the torsion bit).
    """
    p = surface.handles
    if surface.double_klein or p == 0:
        raise UnsupportedTypeError(f"{surface} has no handles, hence no vanishing cycles")
    if not 1 <= i <= p:
        raise ValueError(f"handle index {i} out of range for {surface}")
    pairs = tuple((-2 * n, 1) if j == i - 1 else (0, 0) for j in range(p))
    return H1Class(n % 2, pairs, 0)
