"""Crossing codes: serialization format and the deletion calculus."""

from collections import Counter

import pytest

from conelines.lattices import SexticType, UnsupportedTypeError
from conelines.tritangents import Code, TritangentType, code_census, enumerate_tritangents
from conelines.verify import derived_code_set, expanded_code_atlas

ALPHA = set("uoUOC")


def test_serialize_plain_symbols():
    assert Code(("u", "o", "u", "u")).serialize() == "u o u u"
    assert Code(("C",)).serialize() == "C"


def test_serialize_inserts_the_bracket_at_its_gap():
    assert Code(("U", "U", "u", "u"), bracket_arc=(2, 0)).serialize() == "U U [2,0) u u"
    assert Code(("o", "O", "O", "o"), bracket_arc=(2, 2)).serialize() == "o O [2,2) O o"
    assert Code(("u", "u"), bracket_arc=(0, 1)).serialize() == "[0,1) u u"


def test_band_label_overrides_symbols():
    assert Code((), j_label="BAND_A").serialize() == "BAND_A"


def test_codes_use_the_crossing_alphabet():
    for key in ("4|0", "3|0", "2|0", "1|0", "1|1"):
        for code in code_census(SexticType.from_key(key)):
            symbols = [s for s in code.split(" ") if not s.startswith("[")]
            assert set("".join(symbols)) <= ALPHA


def test_code_length_matches_oval_count():
    for key in ("4|0", "3|0", "2|0", "1|0", "1|1"):
        sextic = SexticType.from_key(key)
        for t in enumerate_tritangents(sextic):
            assert len(t.code.symbols) == sextic.pos_ovals


def test_odd_tangency_symbols_sit_at_tangent_ovals():
    for key in ("4|0", "2|0", "1|1"):
        for t in enumerate_tritangents(SexticType.from_key(key)):
            marked = {
                i + 1 for i, s in enumerate(t.code.symbols) if s in ("U", "O")
            }
            assert marked == t.s_tan


def test_cup_symbol_is_unique_to_the_cradle_type():
    for key in ("4|0", "1|0", "1|1"):
        for t in enumerate_tritangents(SexticType.from_key(key)):
            cups = sum(1 for s in t.code.symbols if s == "C")
            if t.ttype is TritangentType.T0_STAR:
                assert cups == 1
            else:
                assert cups == 0


def test_brackets_appear_exactly_on_double_tangencies():
    # the extra-arc label only disambiguates once at least three ovals exist
    for key in ("4|0", "3|0", "2|0"):
        sextic = SexticType.from_key(key)
        p = sextic.pos_ovals
        for t in enumerate_tritangents(sextic):
            if t.ttype is TritangentType.T2 and p >= 3:
                assert t.code.bracket_arc is not None
                open_gap, close_gap = t.code.bracket_arc
                assert 0 <= open_gap <= p
                assert 0 <= close_gap <= p
            else:
                assert t.code.bracket_arc is None


def test_expanded_atlas_has_120_distinct_codes():
    atlas = expanded_code_atlas()
    assert sum(atlas.values()) == 120
    assert set(atlas.values()) == {1}


def test_single_oval_deletion_set():
    assert derived_code_set(1) == {"u", "o", "C", "U", "O"}


def test_deletion_never_touches_tangency_symbols():
    for p in (1, 2, 3):
        for code in derived_code_set(p):
            symbols = [s for s in code.split(" ") if not s.startswith("[")]
            assert len(symbols) == p


def test_band_census_is_three_labels():
    # code_census refuses the band type; the labels live on the listing
    bands = SexticType.from_key("|||")
    with pytest.raises(UnsupportedTypeError):
        code_census(bands)
    census = Counter(t.code.serialize() for t in enumerate_tritangents(bands))
    assert census == Counter({"J1": 4, "BAND_A": 4, "BAND_B": 4})


@pytest.mark.parametrize("key,total", [("4|0", 120), ("3|0", 63), ("2|0", 30), ("1|0", 13), ("1|1", 12)])
def test_census_sizes(key, total):
    assert sum(code_census(SexticType.from_key(key)).values()) == total
