"""Projective coordinate algebra, the correspondence phi, and projectors."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from halfsphere.algebra import nc_equal, pi
from halfsphere.errors import PreconditionError
from halfsphere.projective import (
    PExpr,
    check_projector_relations,
    phi_inv,
    transport_ideal,
)
from halfsphere.algebra import NCPoly
from halfsphere.scalars import ExactComplex


def p(n, i, j):
    return PExpr.generator(n, i, j)


rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def pexpr_strategy(n, max_len=3):
    pair = st.tuples(st.integers(1, n), st.integers(1, n))
    seq = st.lists(pair, min_size=0, max_size=max_len).map(
        lambda ps: tuple(sorted(ps))
    )
    term = st.tuples(seq, st.builds(ExactComplex, rationals, rationals))
    return st.lists(term, min_size=1, max_size=3).map(
        lambda ts: PExpr(n, {s: c for s, c in ts})
    )


def test_generators_commute():
    n = 3
    assert p(n, 1, 2) * p(n, 2, 1) == p(n, 2, 1) * p(n, 1, 2)


def test_star_swaps_indices():
    n = 2
    assert p(n, 1, 2).star() == p(n, 2, 1)
    x = ExactComplex(0, 1) * p(n, 1, 2)
    assert x.star() == ExactComplex(0, -1) * p(n, 2, 1)


def test_tau_p_swaps_without_conjugating():
    n = 2
    x = ExactComplex(0, 1) * p(n, 1, 2)
    assert x.tau_p() == ExactComplex(0, 1) * p(n, 2, 1)


def test_phi_of_generator_is_pair_word():
    n = 3
    assert nc_equal(p(n, 1, 2).phi(), NCPoly.from_word(n, (1, 2)))
    assert nc_equal(
        (p(n, 1, 2) * p(n, 3, 3)).phi(), NCPoly.from_word(n, (1, 2, 3, 3))
    )


def test_to_model_matches_phi_through_pi():
    n = 2
    x = p(n, 1, 2) * p(n, 2, 1) - ExactComplex(Fraction(1, 2)) * p(n, 1, 1)
    assert pi(x.phi()).f0 == x.to_model()
    assert pi(x.phi()).f1.is_zero()


@settings(max_examples=40, deadline=None, derandomize=True)
@given(pexpr_strategy(3), pexpr_strategy(3))
def test_phi_multiplicative_up_to_model(a, b):
    assert (a * b).to_model() == (a.to_model() * b.to_model()).reduce()
    assert pi((a * b).phi()) == pi(a.phi()) * pi(b.phi())


@settings(max_examples=40, deadline=None, derandomize=True)
@given(pexpr_strategy(2))
def test_phi_inv_round_trip(a):
    assert phi_inv(pi(a.phi())) == a.to_model()


def test_phi_inv_rejects_odd():
    n = 2
    with pytest.raises(PreconditionError):
        phi_inv(pi(NCPoly.generator(n, 1)))


def test_transport_ideal():
    n = 2
    gens = transport_ideal([p(n, 1, 2) - p(n, 2, 1)])
    assert len(gens) == 1
    v1, v2 = NCPoly.generator(n, 1), NCPoly.generator(n, 2)
    assert nc_equal(gens[0], v1 * v2 - v2 * v1)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projector_relations_small(n):
    report = check_projector_relations(n)
    assert report.adjoint_ok and report.idempotent_ok and report.trace_ok
    assert report.passed
    assert report.n == n
