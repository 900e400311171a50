import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from tiedlinks.btalgebra import T_FORM, V_FORM, GenKind, basis_element, e_of, gen, mul, product, unit
from tiedlinks.config import DEFAULTS
from tiedlinks.errors import DomainError
from tiedlinks.partitions import adjacent, from_cycle_notation, parse_partition
from tiedlinks.trace import TraceEvaluator, check_trace_rules, configure, evaluator_for, rho


@pytest.fixture()
def T():
    F = T_FORM.field
    return F, F.var("a"), F.var("b"), F.var("u")


def test_anchor_values(T):
    F, a, b, u = T
    T1 = gen(GenKind.T, 1, 2, T_FORM)
    E1 = gen(GenKind.E, 1, 2, T_FORM)
    assert rho(unit(3, T_FORM)) == F.one()
    assert rho(T1) == a
    assert rho(E1) == b
    assert rho(mul(E1, T1)) == a
    assert rho(gen(GenKind.TINV, 1, 2, T_FORM)) == (a + (F.one() - u) * b) / u


def test_v_form_anchor():
    F = V_FORM.field
    assert rho(gen(GenKind.T, 1, 2, V_FORM)) == F.var("a") / F.var("v")
    assert rho(gen(GenKind.E, 1, 2, V_FORM)) == F.var("b")


def test_separated_ties_multiply(T):
    F, a, b, u = T
    assert rho(e_of(parse_partition("{1 2 | 3 4}", 4), T_FORM)) == b * b
    assert rho(e_of(parse_partition("{1 2 3}", 3), T_FORM)) == b * b


def test_long_cycle_is_a_power_of_a(T):
    F, a, b, u = T
    w = from_cycle_notation([(1, 2, 3, 4)], 4)
    assert rho(basis_element(parse_partition("{}", 4), w, T_FORM)) == a * a * a


def test_trefoil_trace(T):
    F, a, b, u = T
    T1 = gen(GenKind.T, 1, 2, T_FORM)
    value = rho(product([T1, T1, T1], 2, T_FORM))
    expected = a + (u - F.one()) * u * (a + b)
    assert value == expected


def test_cross_presentation_is_refused():
    ev = TraceEvaluator(T_FORM)
    with pytest.raises(DomainError):
        ev.rho(unit(2, V_FORM))


def test_memo_is_shared_and_clearable():
    ev = TraceEvaluator(T_FORM)
    ev.rho(gen(GenKind.T, 2, 3, T_FORM))
    assert ev.memo_size > 0
    ev.clear()
    assert ev.memo_size == 0


@pytest.mark.parametrize("pres", [T_FORM, V_FORM], ids=["T", "V"])
def test_trace_rules(pres):
    rep = check_trace_rules(2, trials=4, pres=pres, seed=11)
    assert rep.ok, [c.to_dict() for c in rep.failures()]
    names = {c.name for c in rep.checks}
    assert {"unit", "cyclicity", "embedding", "rule-two", "rule-two-tied", "rule-three", "multiplicativity"} <= names


def test_trace_rules_three_strands():
    rep = check_trace_rules(3, trials=2, pres=T_FORM, seed=2)
    assert rep.ok, [c.to_dict() for c in rep.failures()]


def test_adjacent_basis_values(T):
    F, a, b, u = T
    assert rho(basis_element(parse_partition("{1 3}", 3), adjacent(2, 3), T_FORM)) == a * b


def test_configured_warn_threshold_reaches_module_evaluators(T, capsys):
    F, a, b, u = T
    ev = evaluator_for(T_FORM)
    try:
        configure(dict(DEFAULTS, memo_warn_keys=1))
        ev.clear()
        rho(gen(GenKind.T, 1, 2, T_FORM))
        assert "[trace] WARN: memo holds" in capsys.readouterr().err
    finally:
        configure(DEFAULTS)
    ev.clear()
    rho(gen(GenKind.T, 1, 2, T_FORM))
    assert "WARN" not in capsys.readouterr().err
