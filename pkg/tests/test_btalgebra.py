import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from tiedlinks.btalgebra import (
    T_FORM,
    V_FORM,
    GenKind,
    basis,
    basis_element,
    dim_selftest,
    e_of,
    embed_element,
    gen,
    juxtapose,
    linear,
    mul,
    product,
    render_element,
    scale,
    unit,
)
from tiedlinks.errors import DomainError
from tiedlinks.partitions import adjacent, identity, mu, parse_partition, trivial


@pytest.mark.parametrize("n,size", [(1, 1), (2, 4), (3, 30)])
def test_basis_size(n, size):
    assert len(basis(n)) == size


@pytest.mark.parametrize("pres", [T_FORM, V_FORM], ids=["T", "V"])
@pytest.mark.parametrize("n", [2, 3])
def test_dim_selftest(pres, n):
    rep = dim_selftest(n, pres, trials=8, seed=5)
    assert rep.ok, [c.to_dict() for c in rep.failures()]
    names = {c.name for c in rep.checks}
    assert {"basis-size", "bt2", "inverse", "span", "associativity", "conjugation"} <= names
    if n == 3:
        assert {"bt5", "bt6", "bt8", "eij"} <= names


def test_printed_tie_braid_relation_is_reported_only():
    rep = dim_selftest(3, T_FORM, trials=1, seed=1)
    printed = next(c for c in rep.checks if c.name == "bt5-printed")
    assert printed.reported_only


def test_quadratic_relation_t_form():
    F = T_FORM.field
    T1, E1 = gen(GenKind.T, 1, 2, T_FORM), gen(GenKind.E, 1, 2, T_FORM)
    um1 = F.var("u") - F.one()
    expected = linear([(F.one(), unit(2, T_FORM)), (um1, E1), (um1, mul(E1, T1))], 2, T_FORM)
    assert mul(T1, T1) == expected


def test_quadratic_relation_v_form():
    F = V_FORM.field
    v = F.var("v")
    V1, E1 = gen(GenKind.T, 1, 2, V_FORM), gen(GenKind.E, 1, 2, V_FORM)
    expected = linear([(F.one(), unit(2, V_FORM)), (v - F.one() / v, mul(E1, V1))], 2, V_FORM)
    assert mul(V1, V1) == expected


def test_inverse_generators():
    for pres in (T_FORM, V_FORM):
        G, Ginv = gen(GenKind.T, 2, 3, pres), gen(GenKind.TINV, 2, 3, pres)
        assert mul(G, Ginv) == unit(3, pres)


def test_tie_product_rule():
    # E_I · T_w · E_J = E_{I ∗ w(J)} · T_w
    I, J = mu(1, 2, 3), mu(2, 3, 3)
    w = adjacent(1, 3)
    lhs = mul(basis_element(I, w, T_FORM), e_of(J, T_FORM))
    assert lhs == basis_element(parse_partition("{1 2 3}", 3), w, T_FORM)


def test_scale_and_zero():
    F = T_FORM.field
    T1 = gen(GenKind.T, 1, 2, T_FORM)
    assert scale(T1, F.zero()).is_zero()
    assert scale(T1, F.var("a")).coefficient(trivial(2), adjacent(1, 2)) == F.var("a")


def test_embed_and_juxtapose():
    T1 = gen(GenKind.T, 1, 2, T_FORM)
    up = embed_element(T1)
    assert up == gen(GenKind.T, 1, 3, T_FORM)
    both = juxtapose(T1, unit(1, T_FORM))
    assert both == up
    shifted = juxtapose(unit(1, T_FORM), T1)
    assert shifted == gen(GenKind.T, 2, 3, T_FORM)


def test_product_of_nothing_is_unit():
    assert product([], 3, V_FORM) == unit(3, V_FORM)


def test_mismatches_are_domain_errors():
    with pytest.raises(DomainError):
        mul(unit(2, T_FORM), unit(3, T_FORM))
    with pytest.raises(DomainError):
        mul(unit(2, T_FORM), unit(2, V_FORM))
    with pytest.raises(DomainError):
        gen(GenKind.E, 3, 3, T_FORM)
    with pytest.raises(DomainError):
        basis_element(trivial(2), identity(3), T_FORM)


def test_render_element():
    E1 = gen(GenKind.E, 1, 2, T_FORM)
    assert render_element(E1) == "1 · E{1 2} T[1 2]"
    assert render_element(scale(E1, T_FORM.field.zero())) == "0"
