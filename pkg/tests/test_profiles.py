"""
Tests for profile parsing, serialization and margins
"""
import numpy as np
import pytest

from errors import DuplicateAlternativeInRanking, EmptyProfile, MalformedLine, UnknownAlternative
from profiles import Ballot, PreferenceProfile, margins, parse_profile, parse_soc, serialize_profile
from synth.mallows import MallowsConfig, mallows_sample


def test_parse_three_ballots():
    profile = parse_profile(b"a,b,c\nb,c,a\nc,a,b")
    assert profile.m == 3
    assert profile.n == 3
    assert profile.names == ["a", "b", "c"]
    assert len({b.ranking for b in profile.ballots}) == 3


def test_parse_multiplicities():
    profile = parse_profile("2: a,b\n1: b,a")
    assert profile.n == 3
    assert [b.multiplicity for b in profile.ballots] == [2, 1]


def test_comments_and_blank_lines_ignored():
    profile = parse_profile("# header\n\na , b\n  # another\n3:b,a\n")
    assert profile.n == 4
    assert profile.ballots[0] == Ballot(1, (0, 1))
    assert profile.ballots[1] == Ballot(3, (1, 0))


def test_duplicate_alternative():
    with pytest.raises(DuplicateAlternativeInRanking):
        parse_profile("a,a,b")


def test_unknown_alternative_reports_line():
    with pytest.raises(UnknownAlternative) as info:
        parse_profile("a,b,c\na,b,d")
    assert "line 2" in str(info.value)


@pytest.mark.parametrize("text, line_no", [
    ("a,b\nx: a,b", 2),
    ("a,b\n0: a,b", 2),
    ("a,,b", 1),
    ("a,b,c\na,b", 2),
])
def test_malformed_lines(text, line_no):
    with pytest.raises(MalformedLine) as info:
        parse_profile(text)
    assert info.value.line_no == line_no


def test_empty_profile():
    with pytest.raises(EmptyProfile):
        parse_profile("# only a comment\n\n")


def test_margins_symmetric_cycle():
    g = margins(parse_profile("a,b,c\nb,c,a\nc,a,b"))
    assert g.weight(0, 1) == 1
    assert g.weight(1, 2) == 1
    assert g.weight(2, 0) == 1


def test_margins_single_voter():
    g = margins(parse_profile("a,b"))
    assert g.weight(0, 1) == 1
    assert g.weight(1, 0) == -1


def test_margins_pair_counting():
    g = margins(parse_profile("a,b,c\na,c,b\nb,c,a"))
    assert (g.weight(0, 1), g.weight(0, 2), g.weight(1, 2)) == (1, 1, 1)


def test_margins_use_multiplicities():
    g = margins(parse_profile("5: a,b,c\n2: c,b,a"))
    assert g.weight(0, 2) == 3
    assert g.weight(1, 0) == -3


def test_margin_antisymmetry_and_parity():
    profile = mallows_sample(MallowsConfig(m=6, n=25, phi=0.8, seed=3))
    matrix = margins(profile).margin
    assert np.array_equal(matrix, -matrix.T)
    off_diagonal = ~np.eye(6, dtype=bool)
    assert np.all(np.abs(matrix[off_diagonal]) <= profile.n)
    assert np.all(matrix[off_diagonal] % 2 == profile.n % 2)


def test_round_trip():
    text = "# election\n3: c,a,b\nb,a,c\n2: a,b,c\n"
    first = parse_profile(text)
    assert parse_profile(serialize_profile(first)) == first


def test_round_trip_generated_profile():
    profile = mallows_sample(MallowsConfig(m=30, n=7, phi=0.5, seed=11))
    assert parse_profile(serialize_profile(profile)) == profile


def test_compressed_merges_identical_rankings():
    profile = parse_profile("a,b\nb,a\na,b\n2: a,b")
    merged = profile.compressed()
    assert merged.ballots == (Ballot(4, (0, 1)), Ballot(1, (1, 0)))
    assert margins(merged) == margins(profile)


def test_profile_rejects_incomplete_ranking():
    with pytest.raises(ValueError):
        PreferenceProfile.from_rankings(["a", "b", "c"], [[0, 1]])


def test_parse_soc():
    text = (
        "# FILE NAME: example.soc\n"
        "# NUMBER ALTERNATIVES: 3\n"
        "# ALTERNATIVE NAME 1: Alice\n"
        "# ALTERNATIVE NAME 2: Bob Smith\n"
        "# ALTERNATIVE NAME 3: Carol\n"
        "4: 1,2,3\n"
        "3: 3,2,1\n"
    )
    profile = parse_soc(text)
    assert profile.names == ["Alice", "Bob_Smith", "Carol"]
    assert profile.n == 7
    assert profile.ballots[1] == Ballot(3, (2, 1, 0))
    assert margins(profile).weight(0, 2) == 1


def test_parse_soc_without_names():
    profile = parse_soc("1: 2,1\n")
    assert profile.names == ["1", "2"]
    assert profile.ballots == (Ballot(1, (1, 0)),)


def test_parse_soc_rejects_out_of_range_id():
    with pytest.raises(UnknownAlternative):
        parse_soc("1: 1,2\n1: 1,3\n")


@pytest.mark.parametrize("text, line_no", [
    ("99999999999999999999: a,b\n", 1),
    ("5000000000000000000: a,b\n5000000000000000000: a,b\n1: b,a\n", 2),
])
def test_voter_count_must_fit_margins(text, line_no):
    with pytest.raises(MalformedLine) as exc:
        parse_profile(text)
    assert exc.value.line_no == line_no


def test_soc_voter_count_must_fit_margins():
    with pytest.raises(MalformedLine):
        parse_soc("99999999999999999999: 1,2\n")


def test_large_multiplicities_keep_exact_margins():
    profile = parse_profile("4000000000000000000: a,b\n4000000000000000000: a,b\n1: b,a\n")
    assert margins(profile).weight(0, 1) == 7999999999999999999


def test_profile_rejects_oversized_voter_count():
    alternatives = PreferenceProfile.from_rankings(["a", "b"], [[0, 1]]).alternatives
    with pytest.raises(ValueError):
        PreferenceProfile(alternatives, (Ballot(2 ** 62, (0, 1)), Ballot(2 ** 62, (1, 0)), Ballot(2 ** 62, (0, 1))))
