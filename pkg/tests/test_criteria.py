import pytest

from phi_descent.criteria import (
    ClassEvidence,
    Criterion,
    Status,
    SymbolEvidence,
    criterion_i,
    criterion_ii,
    criterion_iii,
    local_solvability,
    verdict,
)
from phi_descent.ntheory import InvalidTriple, Triple, delta, jacobi, primes_between, valid_triples
from phi_descent.quadforms import QuadForm


@pytest.mark.parametrize("p, c, expected", [(7, 3, True), (47, 3, False), (5, 11, False)])
def test_criterion_i(p, c, expected):
    assert criterion_i(p, c) is expected


@pytest.mark.parametrize("p, c, l, expected", [(137, 13, 4, True), (137, 13, 3, False), (47, 3, 2, False)])
def test_criterion_ii(p, c, l, expected):
    assert criterion_ii(p, c, l) is expected


@pytest.mark.parametrize("p, c, l, expected", [(47, 3, 5, True), (47, 3, 10, True), (5, 61, 2, False)])
def test_criterion_iii(p, c, l, expected):
    assert criterion_iii(p, c, l) is expected


def test_criterion_iii_needs_split_prime():
    with pytest.raises(ValueError):
        criterion_iii(7, 3, 5)


def test_reciprocity_makes_ii_imply_i():
    for p in primes_between(5, 150):
        for c in primes_between(3, 150):
            if c != p:
                assert jacobi(delta(p) * p, c) == jacobi(c, p)
                if criterion_ii(p, c, 2):
                    assert criterion_i(p, c)


def test_local_solvability_examples():
    assert local_solvability(47, 3, 5, 1).everywhere_solvable
    rep = local_solvability(137, 13, 4, 1)
    assert 137 in {o.place for o in rep.obstructions}
    rep = local_solvability(7, 3, 2, 1)
    assert 3 in {o.place for o in rep.obstructions}
    assert not rep.everywhere_solvable


def test_local_solvability_formula():
    for t in valid_triples(40, 40, range(2, 6)):
        for alpha in (1, 2):
            rep = local_solvability(t.p, t.c, t.l, alpha)
            expected = jacobi(t.discriminant, t.c) == 1 and (t.l % 2 == 1 or jacobi(t.c, t.p) == 1)
            assert rep.everywhere_solvable is expected
            if criterion_i(t.p, t.c):
                assert not rep.everywhere_solvable


def test_local_solvability_rejects_alpha():
    with pytest.raises(ValueError):
        local_solvability(47, 3, 5, 3)


def test_verdict_examples():
    v = verdict(Triple(137, 13, 2))
    assert (v.status, v.criterion) == (Status.NO_SOLUTIONS, Criterion.II)
    assert v.evidence == SymbolEvidence("(13/137)", -1)

    v = verdict(Triple(47, 3, 5))
    assert (v.status, v.criterion) == (Status.NO_SOLUTIONS, Criterion.III)
    assert v.evidence == ClassEvidence(-47, 5, QuadForm(3, 1, 4), 1)

    assert verdict(Triple(5, 61, 2)).status is Status.INCONCLUSIVE
    assert verdict(Triple(5, 11, 3)).criterion is Criterion.NONE


def test_verdict_odd_l_reports_criterion_i():
    v = verdict(Triple(137, 13, 3))
    assert v.criterion is Criterion.I
    assert v.evidence == SymbolEvidence("(137/13)", -1)
    assert verdict(Triple(7, 3, 3)).criterion is Criterion.I


def test_verdict_47_multiples_of_five():
    subgroup_sizes = {5: 1, 10: 1, 15: 1, 3: 5}
    for l, size in subgroup_sizes.items():
        v = verdict(Triple(47, 3, l))
        if l % 5 == 0:
            assert v.criterion is Criterion.III and v.evidence.power_subgroup_size == size
        else:
            assert v.status is Status.INCONCLUSIVE


def test_verdict_status_matches_criterion():
    for t in valid_triples(60, 30, range(2, 8)):
        v = verdict(t)
        assert (v.status is Status.NO_SOLUTIONS) == (v.criterion is not Criterion.NONE)
        assert (v.evidence is None) == (v.criterion is Criterion.NONE)


def test_verdict_is_deterministic():
    ts = valid_triples(50, 20, [2, 3, 5])
    assert [verdict(t) for t in ts] == [verdict(t) for t in ts]


def test_verdict_rejects_non_triple():
    with pytest.raises(InvalidTriple):
        verdict((137, 13, 2))
