from math import gcd

import pytest

from torushomfly.semigroup import Semigroup, make_semigroup


def brute_members(n, k, top):
    return {a * k + b * n for a in range(top) for b in range(top) if a * k + b * n <= top}


@pytest.mark.parametrize("n,k,gaps,cond", [
    (2, 3, [1], 2),
    (4, 5, [1, 2, 3, 6, 7, 11], 12),
    (3, 7, [1, 2, 4, 5, 8, 11], 12),
])
def test_examples(n, k, gaps, cond):
    sg = make_semigroup(n, k)
    assert sg.gaps() == gaps
    assert sg.conductor == cond
    assert sg.delta == len(gaps)
    assert sg.mu == 2 * sg.delta


def test_non_coprime_rejected():
    with pytest.raises(ValueError, match="coprime"):
        make_semigroup(4, 6)
    with pytest.raises(ValueError):
        make_semigroup(1, 3)


def test_contains():
    sg = make_semigroup(4, 5)
    assert not sg.contains(7)
    assert 12 in sg
    assert not make_semigroup(2, 3).contains(1)
    assert not sg.contains(-4)


def test_swap_recorded():
    sg = make_semigroup(5, 2)
    assert (sg.n, sg.k, sg.swapped) == (2, 5, True)


@pytest.mark.parametrize("n", range(2, 13))
def test_gap_count_and_conductor(n):
    for k in range(2, 13):
        if k == n or gcd(n, k) != 1:
            continue
        sg = make_semigroup(n, k)
        c = sg.conductor
        mem = brute_members(n, k, c + 2 * k)
        assert [x for x in range(c + k) if x not in mem] == sg.gaps()
        assert len(sg.gaps()) == (n - 1) * (k - 1) // 2
        assert all(sg.contains(x) for x in range(c, c + 3 * k))
        assert not sg.contains(c - 1) or c == 0


def test_membership_symmetric_in_n_k():
    for n, k in [(3, 7), (4, 9), (5, 8)]:
        a, b = Semigroup(n, k), Semigroup(k, n)
        assert a.gaps() == b.gaps()
        assert a.conductor == b.conductor
        assert all(a.contains(x) == b.contains(x) for x in range(-3, 60))


def test_coords():
    sg = make_semigroup(4, 5)
    for x in range(-20, 40):
        a, b = sg.coords(x)
        assert 0 <= a < 4 and a * 5 + b * 4 == x
        assert (b >= 0) == sg.contains(x)
