import pathlib
import random
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from tiedlinks.errors import DomainError
from tiedlinks.partitions import (
    Permutation,
    SetPartition,
    adjacent,
    all_partitions,
    apply_perm,
    bell,
    conjugate_witness,
    embed,
    from_cycle_notation,
    from_cycles,
    gen_decomp,
    identity,
    induced_block_perm,
    join,
    join_all,
    leq,
    mu,
    parse_partition,
    quotient,
    remove_last,
    times,
    trivial,
)


def P(text, n):
    return parse_partition(text, n)


def _random_partition(n, rng):
    parts = list(all_partitions(n))
    return rng.choice(parts)


def _random_perm(n, rng):
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


# ---- permutations ----

def test_composition_convention():
    v, w = adjacent(1, 3), adjacent(2, 3)
    assert (v * w)(3) == v(w(3)) == 1
    assert (v * w).images == (2, 3, 1)


def test_reduced_word_rebuilds_permutation():
    rng = random.Random(4)
    for _ in range(30):
        w = _random_perm(5, rng)
        acc = identity(5)
        word = w.reduced_word()
        for i in word:
            acc = acc * adjacent(i, 5)
        assert acc == w
        assert len(word) == w.length()


def test_cycle_notation():
    w = from_cycle_notation([(1, 6), (2, 3, 4, 5)], 6)
    assert w(1) == 6 and w(2) == 3 and w(5) == 2
    assert str(w) == "(1,6)(2,3,4,5)"


# ---- mu / join / leq ----

def test_mu():
    assert mu(1, 2, 3) == SetPartition.from_blocks([(1, 2)], 3)
    assert mu(3, 6, 6).blocks == ((1,), (2,), (3, 6), (4,), (5,))
    with pytest.raises(DomainError):
        mu(2, 2, 3)


def test_join():
    assert join(P("{1 2}", 3), mu(2, 3, 3)) == P("{1 2 3}", 3)
    rng = random.Random(1)
    for _ in range(40):
        I, J, K = (_random_partition(4, rng) for _ in range(3))
        assert join(I, I) == I
        assert join(I, J) == join(J, I)
        assert join(join(I, J), K) == join(I, join(J, K))
        assert join(I, trivial(4)) == I
        if leq(I, J):
            assert join(I, J) == J


def test_leq():
    assert leq(trivial(4), P("{1 2 | 3 4}", 4))
    assert leq(P("{1 2 | 3 4}", 4), P("{1 2 3 4}", 4))
    assert not leq(P("{1 3}", 3), P("{1 2}", 3))


def test_size_mismatch():
    with pytest.raises(DomainError):
        join(trivial(2), trivial(3))


# ---- action of S_n ----

def test_apply_perm_example():
    w = from_cycle_notation([(1, 6), (2, 3, 4, 5)], 6)
    I = P("{1 2 | 4 5}", 6)
    assert apply_perm(w, I) == P("{2 5 | 3 6}", 6)
    assert apply_perm(identity(6), I) == I
    assert apply_perm(adjacent(1, 3), P("{1 3}", 3)) == P("{2 3}", 3)


def test_apply_perm_is_an_action():
    rng = random.Random(8)
    for _ in range(30):
        v, w = _random_perm(5, rng), _random_perm(5, rng)
        I = _random_partition(5, rng)
        assert apply_perm(v * w, I) == apply_perm(v, apply_perm(w, I))
        assert apply_perm(w, I).size_profile() == I.size_profile()


def test_induced_block_perm_example():
    w = from_cycle_notation([(1, 6), (2, 3, 4, 5)], 6)
    I = P("{1 2 | 4 5}", 6)
    Iprime = apply_perm(w, I)
    assert induced_block_perm(I, Iprime, w) == from_cycle_notation([(1, 3, 2, 4)], 4)


def test_conjugate_witness():
    I = P("{1 2 | 4 5}", 6)
    w, blocks = conjugate_witness(I, I)
    assert w == identity(6) and blocks == identity(I.count)
    assert conjugate_witness(P("{1 2}", 2), trivial(2)) is None
    rng = random.Random(3)
    for _ in range(20):
        J = _random_partition(5, rng)
        K = apply_perm(_random_perm(5, rng), J)
        w, _ = conjugate_witness(J, K)
        assert apply_perm(w, J) == K


# ---- closure combinatorics ----

def test_quotient_example():
    I = P("{1 2 5 | 3 4}", 5)
    K = P("{1 2 | 3 4}", 5)
    assert quotient(I, K) == P("{1 3 | 2}", 3)
    assert quotient(I, I) == trivial(2)
    assert quotient(I, trivial(5)) == I
    with pytest.raises(DomainError):
        quotient(K, I)


def test_times_example_and_round_trip():
    K = P("{1 2 | 3 4}", 5)
    J = P("{1 3}", 3)
    assert times(K, J) == P("{1 2 5 | 3 4}", 5)
    assert times(K, trivial(3)) == K
    rng = random.Random(6)
    for _ in range(30):
        K = _random_partition(5, rng)
        J = _random_partition(K.count, rng)
        assert quotient(times(K, J), K) == J
    with pytest.raises(DomainError):
        times(K, trivial(K.count + 1))


def test_from_cycles():
    w = from_cycle_notation([(1, 2), (3, 6)], 6)
    assert from_cycles(w) == P("{1 2 | 3 6}", 6)
    assert from_cycles(identity(4)) == trivial(4)
    assert from_cycles(from_cycle_notation([(1, 2, 3, 4)], 4)) == P("{1 2 3 4}", 4)


def test_embed_and_remove_last():
    I = P("{1 2}", 2)
    assert embed(I) == P("{1 2}", 3)
    assert remove_last(embed(I)) == I
    assert remove_last(P("{1 3}", 3)) == trivial(2)


def test_gen_decomp():
    I = P("{1 3 | 2 5 6}", 6)
    assert gen_decomp(I) == [(1, 3), (2, 5), (5, 6)]
    assert gen_decomp(trivial(4)) == []
    assert gen_decomp(P("{1 2 3}", 3)) == [(1, 2), (2, 3)]
    rng = random.Random(9)
    for _ in range(20):
        J = _random_partition(5, rng)
        assert join_all((mu(i, j, 5) for i, j in gen_decomp(J)), 5) == J


def test_join_absorbs_cycle_action():
    # I ∗ J = I ∗ w(J) whenever the cycles of w are the blocks of I
    I = P("{1 3 | 2 4 5}", 5)
    w = from_cycle_notation([(1, 3), (2, 4, 5)], 5)
    rng = random.Random(12)
    for _ in range(20):
        J = _random_partition(5, rng)
        assert join(I, J) == join(I, apply_perm(w, J))


@pytest.mark.parametrize("n,expected", [(1, 1), (2, 2), (3, 5), (4, 15), (5, 52), (6, 203)])
def test_bell_numbers(n, expected):
    assert bell(n) == expected
    assert sum(1 for _ in all_partitions(n)) == expected


def test_text_syntax():
    I = parse_partition("{1 3 | 2 5 6}", 6)
    assert str(I) == "{1 3 | 2 5 6 | 4}"
    with pytest.raises(DomainError):
        parse_partition("1 2", 2)
