"""Mod-2 residues, the quadratic refinement, and root lifting."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conelines.lattices import enumerate_roots, norm
from conelines.mod2 import (
    NoRootLiftError,
    all_residues,
    in_radical,
    lift_to_root,
    mod2_pair,
    q0,
    radical_elements,
    reduce_mod2,
    strata_profile,
    zero_residue,
)
from conftest import TYPE_KEYS, lattice_for


@st.composite
def residue_pair(draw):
    lattice = lattice_for(draw(st.sampled_from(TYPE_KEYS)))
    size = lattice.rank
    v = tuple(draw(st.lists(st.integers(-4, 4), min_size=size, max_size=size)))
    w = tuple(draw(st.lists(st.integers(-4, 4), min_size=size, max_size=size)))
    return lattice, v, w


@given(residue_pair())
def test_q0_is_a_quadratic_refinement(data):
    lattice, v, w = data
    x, y = reduce_mod2(lattice, v), reduce_mod2(lattice, w)
    assert (q0(x) + q0(y) + mod2_pair(x, y)) % 2 == q0(x + y)


@given(residue_pair())
def test_q0_reduces_the_integral_norm(data):
    lattice, v, _ = data
    assert q0(reduce_mod2(lattice, v)) == (norm(lattice, v) // 2) % 2


@pytest.mark.parametrize("key", TYPE_KEYS)
def test_roots_reduce_into_the_odd_stratum(key):
    lattice = lattice_for(key)
    for e in enumerate_roots(lattice):
        assert q0(reduce_mod2(lattice, e)) == 1


@pytest.mark.parametrize("key", TYPE_KEYS)
def test_radical_pairs_to_zero_with_everything(key):
    lattice = lattice_for(key)
    for r in radical_elements(lattice):
        assert in_radical(r)
        assert all(mod2_pair(r, x) == 0 for x in all_residues(lattice))


def test_radical_sizes_match_profile():
    for key in TYPE_KEYS:
        lattice = lattice_for(key)
        profile = strata_profile(lattice)
        assert len(radical_elements(lattice)) == profile.size_r
        assert len(all_residues(lattice)) == profile.size_v
        assert profile.size_v == 2**lattice.rank


def test_profile_counts_recount():
    lattice = lattice_for("2|0")
    profile = strata_profile(lattice)
    odd = [x for x in all_residues(lattice) if q0(x) == 1]
    assert profile.size_v1 == len(odd)
    assert profile.size_r1 == sum(1 for x in odd if in_radical(x))
    assert profile.size_v1_minus_r1 == profile.size_v1 - profile.size_r1


@pytest.mark.parametrize("key", ("4|0", "2|0", "1|1", "0|2"))
def test_lift_to_root_round_trips(key):
    lattice = lattice_for(key)
    root_classes = {reduce_mod2(lattice, e) for e in enumerate_roots(lattice)}
    for x in all_residues(lattice):
        if x in root_classes:
            plus, minus = lift_to_root(lattice, x)
            assert reduce_mod2(lattice, plus) == x
            assert norm(lattice, plus) == -2
            assert minus == tuple(-c for c in plus)
        else:
            with pytest.raises(NoRootLiftError):
                lift_to_root(lattice, x)


def test_zero_residue_is_even(e8):
    assert q0(zero_residue(e8)) == 0
    assert in_radical(zero_residue(e8))
