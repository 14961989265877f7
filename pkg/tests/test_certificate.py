import random
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fixtures import disjoint_paths_host, path_host, random_host
from sizeramsey.adversary import THREE_PATH, TIGHT_ITERATIVE, AdversaryConfig, run_three_path, run_tight_iterative
from sizeramsey.certificate import (
    LOWER_BOUND,
    NON_ARROW,
    UNKNOWN,
    Certificate,
    ExtractedSet,
    format_certificate,
    parse_certificate,
    verify_certificate,
)
from sizeramsey.errors import RamseyError
from sizeramsey.hypergraph import Color


@pytest.fixture
def lower_bound():
    G = disjoint_paths_host(4, 3, 10, 3)
    cert = run_tight_iterative(G, 10, 4, AdversaryConfig(TIGHT_ITERATIVE, 4, 3, 10, observation_shortcut=False))
    assert cert.variant == LOWER_BOUND
    return G, cert


def failed_codes(rep):
    return {c.code for c in rep.failed()}


def test_lower_bound_verifies(lower_bound):
    G, cert = lower_bound
    rep = verify_certificate(G, cert, (4, 3, 10))
    assert rep.ok and rep.text().endswith("VERIFIED\n")
    assert {c.code for c in rep.checks} >= {"TARGET", "EDGE_NOT_IN_HOST", "DISJOINTNESS", "PATH_SHAPE", "TOTAL", "TOTAL_LE_HOST"}


def test_overlapping_sets_fail_disjointness(lower_bound):
    G, cert = lower_bound
    dup = ExtractedSet("copy", cert.sets[0].path_n, cert.sets[0].edges)
    bad = replace(cert, sets=cert.sets + [dup], total=cert.total + dup.size)
    rep = verify_certificate(G, bad, (4, 3, 10))
    assert failed_codes(rep) == {"DISJOINTNESS"}
    assert "REJECTED" in rep.text()


def test_wrong_shape_and_total(lower_bound):
    G, cert = lower_bound
    broken = ExtractedSet(cert.sets[-1].name, cert.sets[-1].path_n, cert.sets[-1].edges[:-1])
    rep = verify_certificate(G, replace(cert, sets=cert.sets[:-1] + [broken]), (4, 3, 10))
    assert failed_codes(rep) == {"PATH_SHAPE", "TOTAL"}
    scrambled = ExtractedSet("odd", 5, ((0, 1, 2, 3), (20, 21, 22, 23)))
    rep = verify_certificate(G, replace(cert, sets=[scrambled], total=2), (4, 3, 10))
    assert failed_codes(rep) == {"PATH_SHAPE"}


def test_foreign_host_fails(lower_bound):
    _, cert = lower_bound
    other = path_host(4, 3, 12)
    rep = verify_certificate(other, cert, (4, 3, 10))
    assert "EDGE_NOT_IN_HOST" in failed_codes(rep)
    assert failed_codes(verify_certificate(path_host(3, 2, 10), cert, (4, 3, 10))) == {"TARGET"}
    assert failed_codes(verify_certificate(other, cert, (4, 3, 11))) == {"TARGET"}


def test_tampered_non_arrow_fails():
    G = path_host(3, 2, 7)
    cert = run_three_path(G, 7)
    assert cert.variant == NON_ARROW
    assert verify_certificate(G, cert, (3, 2, 7)).ok
    all_red = replace(cert, coloring=(Color.RED,) * G.m)
    rep = verify_certificate(G, all_red, (3, 2, 7))
    assert failed_codes(rep) == {"MONO_ABSENCE"}
    assert any("red copy" in c.detail for c in rep.failed())
    short = replace(cert, coloring=cert.coloring[:-1])
    assert failed_codes(verify_certificate(G, short, (3, 2, 7))) == {"COLORING_TOTAL"}


def test_unknown_is_never_verified():
    G = path_host(3, 2, 7)
    assert failed_codes(verify_certificate(G, Certificate(UNKNOWN, 3, 2, 7), (3, 2, 7))) == {"VERDICT"}


def test_round_trip_of_adversary_output():
    rng = random.Random(8)
    for _ in range(60):
        G = random_host(rng, 3, 9, 18)
        cert = run_three_path(G, 5, AdversaryConfig(THREE_PATH, 3, 2, 5, strict=False))
        text = format_certificate(cert)
        back = parse_certificate(text)
        assert back == cert
        assert format_certificate(back) == text


names = st.text(alphabet="abcxyzPZ_0123456789", min_size=1, max_size=6)
edges = st.lists(st.tuples(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50)), max_size=4).map(tuple)


@given(
    st.sampled_from([NON_ARROW, LOWER_BOUND, UNKNOWN]),
    st.lists(st.sampled_from(list(Color)), min_size=0, max_size=8),
    st.lists(st.tuples(names, st.integers(3, 40), edges), max_size=3),
    st.fractions(-50, 50, max_denominator=9),
    st.booleans(),
    st.lists(st.text(alphabet="abc =0123-", min_size=1, max_size=20).map(str.strip).filter(bool), max_size=3),
)
def test_format_parse_round_trip(variant, colors, sets, bound, sound, notes):
    cert = Certificate(variant, 3, 2, 7, procedure="three-path", paper_bound=bound, sound=sound, notes=notes)
    if variant == NON_ARROW:
        cert.coloring = tuple(colors)
    if variant == LOWER_BOUND:
        cert.sets = [ExtractedSet(*s) for s in sets]
        cert.total = sum(s.size for s in cert.sets)
    text = format_certificate(cert)
    assert parse_certificate(text) == cert
    assert format_certificate(parse_certificate(text)) == text


@pytest.mark.parametrize(
    "text",
    [
        "",
        "CERT v2 NonArrow k=3 l=2 n=7\nTOTAL 0 PAPER_BOUND 1 SOUND yes\n",
        "CERT v1 Maybe k=3 l=2 n=7\nTOTAL 0 PAPER_BOUND 1 SOUND yes\n",
        "CERT v1 NonArrow k=3 l=2 n=7\n0 R\n2 B\nTOTAL 0 PAPER_BOUND 1 SOUND yes\n",
        "CERT v1 NonArrow k=3 l=2 n=7\n0 G\nTOTAL 0 PAPER_BOUND 1 SOUND yes\n",
        "CERT v1 LowerBound k=3 l=2 n=7\nSET a 5 2\n0 1 2\nTOTAL 2 PAPER_BOUND 1 SOUND yes\n",
        "CERT v1 LowerBound k=3 l=2 n=7\nTOTAL 0 PAPER_BOUND x SOUND yes\n",
        "CERT v1 Unknown k=3 l=2 n=7\n0 R\nTOTAL 0 PAPER_BOUND 0 SOUND no\n",
        "CERT v1 Unknown k=3 l=2 n=7\nTOTAL 0 PAPER_BOUND 0 SOUND maybe\n",
    ],
)
def test_parse_errors(text):
    with pytest.raises(RamseyError, match="BAD_FORMAT"):
        parse_certificate(text)


def test_paper_bound_rationals():
    cert = Certificate(LOWER_BOUND, 3, 2, 7, paper_bound=Fraction(28, 3))
    assert "PAPER_BOUND 28/3 SOUND no" in format_certificate(cert)
