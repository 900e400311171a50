import itertools
import pathlib
import sys
from concurrent.futures import ThreadPoolExecutor

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from tiedlinks.braids import SigmaNeg, SigmaPos, Tau
from tiedlinks.errors import DomainError
from tiedlinks.hecke import (
    NAMED_LINKS,
    HeckeElement,
    check_specialization,
    generic_algebra,
    hecke_gen,
    hecke_markov_check,
    hecke_mul,
    hecke_skein_check,
    hecke_unit,
    homflypt,
    ocneanu_trace,
    to_field,
)
from tiedlinks.invariants import InvariantKind
from tiedlinks.partitions import Permutation, adjacent, identity


@pytest.fixture()
def H():
    return generic_algebra()


def test_quadratic_relation(H):
    T1 = hecke_gen(1, 2, H)
    sq = hecke_mul(T1, T1)
    assert sq.coefficient(identity(2)) == H.q
    assert sq.coefficient(adjacent(1, 2)) == H.q - 1


def test_inverse_and_unit(H):
    T2, T2inv = hecke_gen(2, 3, H), hecke_gen(2, 3, H, inverse=True)
    prod = hecke_mul(T2, T2inv)
    assert prod.terms == hecke_unit(3, H).terms
    assert hecke_mul(hecke_unit(3, H), T2).terms == T2.terms


def test_length_adds_on_reduced_products(H):
    T1, T2 = hecke_gen(1, 3, H), hecke_gen(2, 3, H)
    prod = hecke_mul(T1, T2)
    assert prod.terms == {adjacent(1, 3) * adjacent(2, 3): H.K.one}


def test_strand_mismatch(H):
    with pytest.raises(DomainError):
        hecke_mul(hecke_unit(2, H), hecke_unit(3, H))


def test_ocneanu_trace_values(H):
    q, z = H.q, H.z
    T1, T2 = hecke_gen(1, 3, H), hecke_gen(2, 3, H)
    assert ocneanu_trace(hecke_unit(3, H)) == 1
    assert ocneanu_trace(T1) == z
    assert ocneanu_trace(hecke_mul(T1, T2)) == z**2
    assert ocneanu_trace(hecke_mul(hecke_mul(T1, T2), T1)) == z * (q + (q - 1) * z)
    assert ocneanu_trace(hecke_mul(T1, T1)) == q + (q - 1) * z


def test_trace_memo_is_shared_safely_across_threads():
    perms = [Permutation(p) for p in itertools.permutations(range(1, 5))]
    sequential = generic_algebra()
    expected = [ocneanu_trace(HeckeElement(4, sequential, {w: sequential.K.one})).as_expr() for w in perms]

    shared = generic_algebra()

    def trace_of(w):
        return ocneanu_trace(HeckeElement(4, shared, {w: shared.K.one})).as_expr()

    with ThreadPoolExecutor(max_workers=8) as pool:
        got = list(pool.map(trace_of, perms * 4))
    assert got == expected * 4
    assert set(shared._memo) >= set(perms)


def test_homflypt_anchors():
    assert homflypt([], 1) == 1
    assert homflypt([SigmaPos(1)], 2) == 1
    assert homflypt([SigmaNeg(1)], 2) == 1
    assert homflypt([SigmaPos(1), SigmaPos(1), SigmaPos(1)], 2) == homflypt(
        [SigmaPos(2), SigmaPos(1), SigmaPos(1), SigmaPos(1), SigmaNeg(2), SigmaPos(2)], 3
    )


def test_homflypt_refuses_singular_letters():
    with pytest.raises(DomainError):
        homflypt([Tau(1)], 2)
    with pytest.raises(DomainError):
        homflypt([SigmaPos(2)], 2)


def test_to_field_of_constants():
    assert to_field(homflypt([], 1), InvariantKind.PHI) == InvariantKind.PHI.presentation.field.one()
    assert to_field(homflypt([], 1), InvariantKind.PHI_PRIME) == InvariantKind.PHI_PRIME.presentation.field.one()


def test_hecke_skein_and_markov():
    skein = hecke_skein_check(trials=3, seed=2, max_n=3, max_len=4)
    markov = hecke_markov_check(trials=3, seed=2, max_n=3, max_len=4)
    assert skein.ok, [c.to_dict() for c in skein.failures()]
    assert markov.ok, [c.to_dict() for c in markov.failures()]


def test_specialization_on_named_links():
    rep = check_specialization(trials=2, seed=4, max_n=3, max_len=4)
    assert rep.ok, [c.to_dict() for c in rep.failures()]
    names = {c.name for c in rep.checks}
    for name, _, _ in NAMED_LINKS:
        assert f"phi:{name}" in names
        assert f"phi-prime:{name}" in names
