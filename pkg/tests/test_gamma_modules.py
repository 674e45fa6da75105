from itertools import product
from math import comb, gcd

import pytest

from torushomfly.cells import nested_pairs
from torushomfly.gamma_modules import (GammaModule, brute_force_ideals,
                                       enumerate_ideals_by_colength,
                                       enumerate_normalized_semimodules)
from torushomfly.semigroup import make_semigroup

G45 = make_semigroup(4, 5)
G23 = make_semigroup(2, 3)


def ideal(sg, gens):
    return GammaModule.from_generators(sg, gens)


def two_expression_generators(j, bound):
    """Literal oracle: minimal elements of {x : x - g in the semigroup for two generators g}."""
    sg = j.sg
    gens = j.generators
    sigma = {x for x in range(bound) if sum(1 for g in gens if sg.contains(x - g)) >= 2}
    return sorted(x for x in sigma if x - sg.n not in sigma and x - sg.k not in sigma)


def test_generators_example():
    j = ideal(G45, [21, 23, 24])
    assert j.generators == (21, 23, 24)
    assert [g for g, _, _ in j.staircase()] == [24, 21, 23]
    assert j.syzygies == (28, 29, 31)
    assert j.staircase_syzygies() == (28, 29, 31)


def test_small_examples():
    assert GammaModule.semigroup_itself(G45).generators == (0,)
    two = ideal(G23, [2])
    assert two.generators == (2,)
    assert two.syzygies == ()
    j = ideal(G23, [3, 4])
    assert [(g, a, b) for g, a, b in j.staircase()] == [(4, 0, 2), (3, 1, 0)]
    assert j.syzygies == (6, 7)


def test_closure_is_validated():
    with pytest.raises(ValueError):
        GammaModule(G23, (0, 5))  # 0 + 3 = 3 is missing
    with pytest.raises(ValueError):
        GammaModule(G23, (1, 3))


def brute_semimodules(sg):
    n, k = sg.n, sg.k
    out = []
    for mins in product(*[range(r, (n - 1) * k + 1, n) for r in range(n)]):
        if mins[0] != 0:
            continue
        if all(mins[(r + k) % n] <= mins[r] + k for r in range(n)):
            out.append(mins)
    return sorted(out)


@pytest.mark.parametrize("n,k,count", [(2, 3, 2), (3, 4, 5), (5, 6, 42)])
def test_semimodule_examples(n, k, count):
    assert len(enumerate_normalized_semimodules(make_semigroup(n, k))) == count


def test_semimodules_match_scan():
    for n, k in [(2, 3), (3, 4), (3, 5), (4, 5), (3, 7), (4, 7)]:
        sg = make_semigroup(n, k)
        assert sorted(d.mins for d in enumerate_normalized_semimodules(sg)) == brute_semimodules(sg)


def test_semimodule_counts_rational_catalan():
    for n in range(2, 13):
        for k in range(n + 1, 15 - n):
            if gcd(n, k) != 1:
                continue
            mods = enumerate_normalized_semimodules(make_semigroup(n, k))
            assert len(mods) == comb(n + k, n) // (n + k)
            assert len(set(d.mins for d in mods)) == len(mods)


def test_ideals_example():
    by = enumerate_ideals_by_colength(G23, 3)
    as_sets = {l: sorted(j.generators for j in js) for l, js in by.items()}
    assert as_sets == {0: [(0,)], 1: [(2, 3)], 2: [(2,), (3, 4)], 3: [(3,), (4, 5)]}
    assert enumerate_ideals_by_colength(G45, 0) == {0: [GammaModule.semigroup_itself(G45)]}
    by = enumerate_ideals_by_colength(G23, 5)
    assert all(len(by[l]) == 2 for l in range(2, 6))


@pytest.mark.parametrize("n,k,L", [(2, 3, 5), (2, 5, 5), (3, 4, 5), (3, 5, 4), (4, 5, 4)])
def test_ideals_match_brute_force(n, k, L):
    sg = make_semigroup(n, k)
    fast = {l: sorted(j.mins for j in js) for l, js in enumerate_ideals_by_colength(sg, L).items()}
    slow = {l: sorted(js) for l, js in brute_force_ideals(sg, L).items()}
    assert fast == slow


@pytest.mark.parametrize("n,k", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5)])
def test_syzygies_three_ways(n, k):
    sg = make_semigroup(n, k)
    for l, js in enumerate_ideals_by_colength(sg, 2 * sg.delta).items():
        for j in js:
            assert j.is_ideal() and j.colength == l
            assert GammaModule.from_generators(sg, j.generators) == j
            syz = j.syzygies
            assert len(syz) == (len(j.generators) if len(j.generators) > 1 else 0)
            assert list(syz) == two_expression_generators(j, sg.conductor + 4 * sg.k + l + 10)
            assert syz == j.staircase_syzygies()
            if len(j.generators) > 1:
                # the two-expression set is itself a module
                GammaModule(sg, j.syzygy_module_mins())


def test_nested_pairs_counts():
    assert len(nested_pairs(ideal(G23, [2]))) == 2
    assert nested_pairs(ideal(G23, [2, 3])) == [(), (2,), (3,), (2, 3)]
    assert len(nested_pairs(ideal(G45, [21, 23, 24]))) == 8


def test_translate_and_normalize():
    j = ideal(G45, [21, 23, 24])
    assert j.normalized().min == 0
    assert j.normalized().translate(j.min) == j
