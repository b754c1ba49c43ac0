import pytest

from parkstat.sequences import SEQUENCES, first_divergence, format_bfile, parse_bfile, terms


def test_spot_rows():
    assert [a for _, a in terms("pf-tie-total", 1, 4)] == [0, 1, 8, 75]
    assert [a for _, a in terms("fubini", 0, 4)] == [1, 1, 3, 13, 75]
    assert [a for _, a in terms("catalan", 0, 4)] == [1, 1, 2, 5, 14]
    assert terms("pf-tie1", 0, 3) == [(2, 1), (3, 4)]


@pytest.mark.parametrize("name", sorted(SEQUENCES))
def test_every_sequence_matches_its_closed_form(name):
    rows = terms(name, 0, 5)
    assert rows[0][0] == SEQUENCES[name].offset


def test_upf_count_equals_fubini():
    assert terms("upf-count", 0, 5) == terms("fubini", 0, 5)


def test_bfile_roundtrip():
    rows = terms("pf-count", 0, 4)
    text = format_bfile(rows)
    assert text.splitlines()[2] == "2 3"
    assert parse_bfile("# comment\n" + text) == rows


def test_first_divergence():
    ours = [(0, 1), (1, 1), (2, 2)]
    assert first_divergence(ours, [(0, 1), (1, 1), (2, 2), (3, 5)]) is None
    assert first_divergence(ours, [(1, 1), (2, 3)]) == {"n": 2, "ours": 2, "fixture": 3}


def test_upf_inv_total_matches_egf_closed_form():
    from math import factorial
    from parkstat.expectations import upf_inv_closed_form
    F = upf_inv_closed_form(5)
    assert [a for _, a in terms("upf-inv-total", 1, 5)] == [F[n] * factorial(n) for n in range(1, 6)]
