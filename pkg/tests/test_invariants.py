import pathlib
import sys

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from tiedlinks.braids import SigmaNeg, SigmaPos, Tau, braid, clasp_component, normalize, single_block
from tiedlinks.btalgebra import T_FORM, V_FORM
from tiedlinks.config import DEFAULTS
from tiedlinks.errors import DomainError
from tiedlinks.invariants import (
    ALL_KINDS,
    InvariantKind,
    apply_substitution,
    check_anchors,
    check_clasp,
    check_classical,
    check_gamma_bar_markov,
    check_homogeneity,
    check_markov,
    check_relations,
    check_rule_two,
    check_singular_pair,
    check_skein,
    check_tie_comparison,
    check_tie_transport,
    clasp_factor,
    gamma_bar,
    invariant_value,
    morphism_image,
    unlink_factor,
    value_of,
)
from tiedlinks.partitions import parse_partition


SMALL = dict(DEFAULTS, trials=2, max_n=3, max_len=4, moves_per_braid=2, skein_trials=3, homogeneity_trials=5)


@pytest.fixture()
def T():
    F = T_FORM.field
    return F, F.var("x"), F.var("y"), F.var("a"), F.var("b"), F.radical()


def _assert_ok(rep):
    assert rep.ok, [c.to_dict() for c in rep.failures()]


# ---- kinds ----

def test_kind_parse():
    assert InvariantKind.parse("all") == list(ALL_KINDS)
    assert InvariantKind.parse("psi-prime") == [InvariantKind.PSI_PRIME]
    with pytest.raises(DomainError):
        InvariantKind.parse("chi")


def test_kind_properties():
    assert InvariantKind.PHI.presentation is T_FORM
    assert InvariantKind.PSI_PRIME.presentation is V_FORM
    assert InvariantKind.PHI_PRIME.tied and InvariantKind.PHI_PRIME.primed
    assert not InvariantKind.PSI.tied
    assert InvariantKind.PHI_PRIME.symbol == "Φ′"


# ---- anchor values ----

@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_unknot_unlink_and_sigma_closure(kind):
    one = kind.presentation.field.one()
    assert value_of(braid(1), kind) == one
    assert value_of(braid(2, [SigmaPos(1)]), kind) == one
    assert value_of(braid(2, [SigmaNeg(1)]), kind) == one
    assert value_of(braid(2), kind) == unlink_factor(kind)


def test_unlink_factor_values(T):
    F, x, y, a, b, s = T
    assert unlink_factor(InvariantKind.PSI) == F.one() / (a * s)
    Fv = V_FORM.field
    assert unlink_factor(InvariantKind.PHI_PRIME) == Fv.var("v") / (Fv.var("a") * Fv.radical())


def test_tau_closure(T):
    F, x, y, a, b, s = T
    tau1 = braid(2, [Tau(1)])
    assert value_of(tau1, InvariantKind.PHI) == x * b / (a * s) + y
    assert value_of(tau1, InvariantKind.PSI) == x / (a * s) + y


def test_tied_unlink_equals_unknot_for_phi(T):
    # a tie across the 2-unlink: ρ(E1) = b
    F, x, y, a, b, s = T
    tied = braid(2, [], parse_partition("{1 2}", 2))
    assert value_of(tied, InvariantKind.PHI) == b / (a * s)


def test_trefoil_is_conjugation_invariant():
    trefoil = braid(2, [SigmaPos(1)] * 3)
    conj = braid(3, [SigmaPos(2), SigmaPos(1), SigmaPos(1), SigmaPos(1), SigmaPos(2), SigmaNeg(2)])
    for kind in ALL_KINDS:
        assert value_of(trefoil, kind) == value_of(conj, kind)


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_clasp_factor_on_unknot(kind):
    clasped = clasp_component(braid(1))
    assert value_of(clasped, kind) == clasp_factor(kind)


def test_morphism_image_carries_radical_power():
    b = braid(2, [SigmaPos(1), SigmaPos(1)])
    image = morphism_image(b, InvariantKind.PHI)
    assert not image.is_zero()
    assert image.n == 2


def test_result_metadata():
    b = normalize(
        [SigmaPos(1), SigmaPos(3), SigmaPos(4), SigmaPos(5), SigmaPos(4), SigmaPos(3)],
        6,
        ties=parse_partition("{1 3 | 4 5}", 6),
    )
    res = invariant_value(b, InvariantKind.PHI)
    assert res.metadata() == {"strands": 6, "components": 4, "sc_partition": "{1 2 | 3 4}", "singularities": 0}
    assert res.to_dict()["kind"] == "phi"


# ---- Γ̄ ----

def test_gamma_bar(T):
    F, x, y, a, b, s = T
    assert gamma_bar(braid(2, [Tau(1)])) == b / a + F.one()
    assert gamma_bar(braid(1)) == F.one()
    with pytest.raises(DomainError):
        gamma_bar(braid(1), InvariantKind.PSI)


def test_gamma_bar_markov():
    _assert_ok(check_gamma_bar_markov(seed=4, cfg=SMALL))


# ---- substitution ----

def test_substitution_x_equals_y(T):
    F, x, y, a, b, s = T
    res = invariant_value(braid(2, [Tau(1)]), InvariantKind.PHI)
    out = apply_substitution(res, "x=y")
    assert out.value == y * (b / (a * s) + F.one())
    assert out.components == res.components


def test_substitution_rejects_bad_input():
    res = invariant_value(braid(2, [Tau(1)]), InvariantKind.PSI)
    for text in ("a=1", "x", "x=s"):
        with pytest.raises(DomainError):
            apply_substitution(res, text)


# ---- harnesses ----

@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_markov(kind):
    rep = check_markov(kind, seed=3, cfg=SMALL)
    _assert_ok(rep)
    assert rep.checks[0].name == "trefoil-conjugate"


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_markov_draws_every_requested_move(kind):
    rep = check_markov(kind, trials=3, moves=5, max_n=3, max_len=4, seed=12, cfg=SMALL)
    _assert_ok(rep)
    drawn = sum(c.count for c in rep.checks if c.name != "trefoil-conjugate")
    assert drawn == 3 * 5


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_skein_random(kind):
    _assert_ok(check_skein(kind, seed=6, cfg=SMALL))


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_skein_given_instance(kind):
    rep = check_skein(kind, alpha=[SigmaPos(2)], i=1, beta=[SigmaNeg(2), Tau(1)], n=3)
    _assert_ok(rep)
    assert rep.trials == 1
    printed = [c for c in rep.checks if c.name.endswith("-printed")]
    assert printed and all(c.reported_only for c in printed)


@pytest.mark.parametrize("kind", ALL_KINDS, ids=lambda k: k.value)
def test_homogeneity(kind):
    _assert_ok(check_homogeneity(kind, seed=2, cfg=SMALL))


def test_anchors():
    _assert_ok(check_anchors())


def test_classical_rule_two_and_clasp():
    _assert_ok(check_classical(seed=5, cfg=SMALL))
    _assert_ok(check_rule_two(seed=5, cfg=SMALL))
    _assert_ok(check_clasp(seed=5, cfg=SMALL))


def test_singular_pair_trefoil_and_unknot():
    rep = check_singular_pair(braid(2, [SigmaPos(1)] * 3), braid(1))
    _assert_ok(rep)
    names = {c.name for c in rep.checks}
    assert {"phi:S", "phi:S'", "phi:distinct", "phi:vanishes-at-x=y", "phi-prime:distinct"} <= names
    assert len(rep.notes) == 2


def test_singular_pair_needs_knots():
    with pytest.raises(DomainError):
        check_singular_pair(braid(2), braid(1))


def test_tie_comparison():
    rep = check_tie_comparison(seed=7, cfg=SMALL)
    _assert_ok(rep)
    assert any(c.name == "phi:hopf" and c.passed for c in rep.checks)


def test_tie_transport_asserts_phi_kinds_only():
    rep = check_tie_transport(seed=8, cfg=SMALL)
    _assert_ok(rep)
    for c in rep.checks:
        if c.name.startswith("psi"):
            assert c.reported_only


def test_single_block_phi_ignores_position_of_ties():
    b = braid(3, [SigmaPos(1), Tau(2), SigmaNeg(1)])
    blocked = single_block(b)
    moved = single_block(braid(3, [Tau(2), SigmaNeg(1), SigmaPos(1)]))
    assert value_of(blocked, InvariantKind.PHI) == value_of(moved, InvariantKind.PHI)


def test_relations_hold_for_phi_kinds():
    rep = check_relations(trials=2, seed=5, max_n=4, max_len=4, cfg=SMALL)
    _assert_ok(rep)
    names = {c.name for c in rep.checks}
    assert {"tsb7:phi", "tsb7:phi-prime", "eta4:closure", "sb-far:perm", "inverse:partition"} <= names
    assert not rep.notes


def test_relations_note_missing_far_generators():
    rep = check_relations(trials=1, seed=5, max_n=3, max_len=4, cfg=SMALL, kinds=[InvariantKind.PHI])
    _assert_ok(rep)
    assert rep.notes
    assert not any(c.name.startswith("braid-far") for c in rep.checks)


def test_relations_refuse_psi_kinds():
    with pytest.raises(DomainError):
        check_relations(trials=1, seed=5, cfg=SMALL, kinds=[InvariantKind.PSI])
