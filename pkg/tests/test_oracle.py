"""The brute-force comparison, on its own and against the decision procedure."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from oxtoby.oracle import brute_same_type, families, progression_only_same_type, signature
from oxtoby.ttype import (EventuallyPeriodicSeq as Seq, Same, check_witness, omega_limit,
                          same_topological_type)


def test_families_cover_one_cycle():
    fams = families(6, 2)
    aps = [f for f in fams if f[0][0] == "ap"]
    assert len(aps) == 36
    for (_, a, d), idx in aps:
        assert len(idx) == 6 and min(idx) >= 2
        assert all(n % d == a % d for n in idx)
    unions = [f for f in fams if f[0][0] == "classes"]
    assert len(unions) == 6 + 15


def test_signature_rejects_short_modulus():
    with pytest.raises(ValueError):
        signature(Seq.parse("a b"), 3, 0)
    with pytest.raises(ValueError):
        signature(Seq.parse("x | a b"), 2, 0)


def test_progressions_alone_are_blind():
    s1, s2 = Seq.parse("a a b"), Seq.parse("c d d")
    assert progression_only_same_type(s1, s2, 3, 0)
    assert not brute_same_type(s1, s2)
    assert not isinstance(same_topological_type(s1, s2), Same)


def test_oracle_simple_cases():
    assert brute_same_type(Seq.parse("a b"), Seq.parse("c d"))
    assert not brute_same_type(Seq.parse("a"), Seq.parse("a b"))
    assert brute_same_type(Seq.parse("x y | a"), Seq.parse("b"))


seqs = st.builds(lambda p, t: Seq(tuple(p), tuple(t)),
                 st.lists(st.sampled_from("abcd"), max_size=5),
                 st.lists(st.sampled_from("abcd"), min_size=1, max_size=6))


@settings(max_examples=300, deadline=None)
@given(seqs, seqs)
def test_decision_matches_oracle(s1, s2):
    w = same_topological_type(s1, s2)
    assert isinstance(w, Same) == brute_same_type(s1, s2)
    assert check_witness(s1, s2, w)


@settings(max_examples=200, deadline=None)
@given(seqs, seqs, st.permutations("abcd"))
def test_relabel_invariance(s1, s2, perm):
    sub = dict(zip("abcd", perm))
    r2 = Seq(tuple(sub[x] for x in s2.prefix), tuple(sub[x] for x in s2.tail))
    assert isinstance(same_topological_type(s1, s2), Same) == \
        isinstance(same_topological_type(s1, r2), Same)


@settings(max_examples=200, deadline=None)
@given(seqs, seqs)
def test_same_implies_equal_omega_size(s1, s2):
    if isinstance(same_topological_type(s1, s2), Same):
        assert len(omega_limit(s1)) == len(omega_limit(s2))


def test_oracle_modulus_choice_is_stable():
    rng = random.Random(5)
    for _ in range(200):
        s1 = Seq(tuple(rng.choice("ab") for _ in range(rng.randint(0, 3))),
                 tuple(rng.choice("ab") for _ in range(rng.randint(1, 4))))
        s2 = Seq(tuple(rng.choice("ab") for _ in range(rng.randint(0, 3))),
                 tuple(rng.choice("ab") for _ in range(rng.randint(1, 4))))
        assert brute_same_type(s1, s2) == brute_same_type(s1, s2, 12, 3)
