import pytest

import oracles
from conftest import corpus_groups, cyc, grp
from fusionkit.errors import ScaleLimitError
from fusionkit.groups import elementary_abelian, symmetric
from fusionkit.permcore import PermGroup, is_normal
from fusionkit.structure import (
    all_subgroups,
    core_p,
    core_p_prime,
    is_p_power,
    normal_closure,
    o_upper_p,
    p_part,
    sylow_conjugates,
    sylow_subgroup,
)


def elts(G):
    return frozenset(x.images for x in G.elements())


def test_sylow_examples(s3, ce):
    assert sylow_subgroup(s3, 3) == grp(3, cyc(3, [0, 1, 2]))
    assert sylow_subgroup(s3, 5).is_trivial()
    S = sylow_subgroup(ce["G"], 3)
    assert S == grp(6, cyc(6, [0, 1, 2]), cyc(6, [3, 4, 5]))
    assert S.order() == 9


def test_sylow_requires_prime(s3):
    with pytest.raises(ValueError):
        sylow_subgroup(s3, 4)


def test_core_p_examples(s3, ce):
    assert core_p(s3, 3) == grp(3, cyc(3, [0, 1, 2]))
    assert core_p(s3, 2).is_trivial()
    assert core_p(ce["G"], 3) == ce["S"]


def test_core_p_prime_examples(s3):
    assert core_p_prime(s3, 3).is_trivial()
    assert core_p_prime(s3, 2) == grp(3, cyc(3, [0, 1, 2]))
    H = grp(6, cyc(6, [0, 1, 2]), cyc(6, [0, 1], [3, 4]))
    assert core_p_prime(H, 3).is_trivial()


def test_o_upper_p_examples(s3, ce):
    assert o_upper_p(s3, 3) == s3
    assert o_upper_p(s3, 2) == grp(3, cyc(3, [0, 1, 2]))
    G0 = grp(6, *ce["G1"].generators, cyc(6, [3, 4, 5]))
    assert G0.order() == 18
    assert o_upper_p(G0, 3) == o_upper_p(ce["G1"], 3) == ce["G1"]


# counts frozen from oracles.subgroups
@pytest.mark.parametrize("group, count", [
    (elementary_abelian(3, 2), 6),
    (grp(2, cyc(2, [0, 1])), 2),
    (symmetric(3), 6),
    (symmetric(4), 30),
])
def test_all_subgroups_counts(group, count):
    subs = all_subgroups(group)
    assert subs.complete and len(subs) == count


def test_all_subgroups_c3xc3_shape():
    orders = [H.order() for H in all_subgroups(elementary_abelian(3, 2))]
    assert orders == [1, 3, 3, 3, 3, 9]


def test_all_subgroups_scale_limit():
    with pytest.raises(ScaleLimitError, match="729"):
        all_subgroups(elementary_abelian(2, 10))


def test_all_subgroups_order_is_deterministic():
    subs = all_subgroups(symmetric(4))
    keys = [H.sort_key() for H in subs]
    assert keys == sorted(keys)
    assert len({H.key for H in subs}) == len(subs)


CORPUS = [c for c in corpus_groups() if c[1].order() <= 120]
PRIMES = (2, 3, 5)


@pytest.mark.parametrize("name, G", CORPUS, ids=[c[0] for c in CORPUS])
def test_sylow_invariants(name, G):
    for p in PRIMES:
        S = sylow_subgroup(G, p)
        assert S.order() == p_part(G.order(), p)
        assert S.is_subgroup_of(G)
        assert len(sylow_conjugates(G, p)) % p == 1


SMALL = [c for c in CORPUS if c[1].order() <= 60]


@pytest.mark.parametrize("name, G", SMALL, ids=[c[0] for c in SMALL])
def test_cores_match_brute_force(name, G):
    members = elts(G)
    subs = oracles.subgroups(members)
    for p in PRIMES:
        Op = core_p(G, p)
        assert elts(Op) == oracles.o_p(members, p, subs)
        assert is_normal(Op, G)
        assert all(Op.is_subgroup_of(Q) for Q in sylow_conjugates(G, p))

        Opp = core_p_prime(G, p)
        assert elts(Opp) == oracles.o_p_prime(members, p, subs)
        assert is_normal(Opp, G) and Opp.order() % p
        for x in G.elements():
            if x.order() % p:
                N = normal_closure(G, x)
                if N.order() % p:
                    assert N.is_subgroup_of(Opp)

        Op_up = o_upper_p(G, p)
        assert elts(Op_up) == oracles.o_upper_p(members, p, subs)
        assert is_p_power(G.order() // Op_up.order(), p)


@pytest.mark.parametrize("name, G", SMALL, ids=[c[0] for c in SMALL])
def test_all_subgroups_matches_brute_force(name, G):
    subs = all_subgroups(G)
    found = {elts(H) for H in subs}
    assert found == oracles.subgroups(elts(G))
    for x in G.elements():
        assert elts(PermGroup(G.degree, [x])) in found
    members = list(subs)
    for A, B in zip(members[::3], members[1::3]):
        meet = elts(A) & elts(B)
        assert meet in found
        assert oracles.closure(list(elts(A) | elts(B)), G.degree) in found
