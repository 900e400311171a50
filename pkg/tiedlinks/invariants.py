#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/invariants.py — Φ, Ψ, Φ′, Ψ′ of tied singular braid closures and
the harnesses that check their identities.

Morphisms into the bt-algebra (w = s for Φ/Ψ over u, w = r for Φ′/Ψ′ over v,
G_i = T_i resp. V_i):

    σ_i ↦ w·G_i      σ_i⁻¹ ↦ w⁻¹·G_i⁻¹      η_i ↦ E_i
    τ_i ↦ x + y·w·G_i            (Ψ, Ψ′)
    τ_i ↦ x·E_i + y·w·E_i·G_i    (Φ, Φ′)

and the value of (I, ω) over n strands is

    (1/(a·s))^{n−1} · ρ(E_I · image(ω))       (Φ, Ψ)
    (v/(a·r))^{n−1} · ρ(E_I · image(ω))       (Φ′, Ψ′)

The powers of w carried by σ letters are pulled out as w^ε and applied after
the trace, so the radicand only enters the value through w^{ε−(n−1)}.

Public API
----------
InvariantKind, InvariantResult
morphism_image(b, kind), invariant_value(b, kind), gamma_bar(b)
apply_substitution(result, "x=y")
check_markov, check_skein, check_homogeneity, check_classical, check_rule_two,
check_clasp, check_singular_pair, check_tie_comparison, check_gamma_bar_markov,
check_tie_transport, check_relations     → Report

Domains
-------
ψ and ψ′ extended by η ↦ E do not respect τ_i·η_j = σ_i·η_j·σ_i⁻¹·τ_i, so Ψ-kind
values of braids that mix ties with τ letters depend on where the ties were
written. Markov harnesses draw Ψ-kind braids from the two domains where the
extension is a morphism (tied braids without τ, singular braids without
ties); check_tie_transport reports the mixed case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from .braids import (
    Eta,
    Letter,
    LetterKind,
    Relation,
    SigmaNeg,
    SigmaPos,
    Tau,
    TiedSingularBraid,
    braid,
    build_singular_pair,
    clasp_component,
    closure_partition,
    commute_pair,
    defining_relations,
    format_word,
    move_m1,
    move_m2_split,
    move_m3,
    normalize,
    perm_of,
    with_partition,
)
from .btalgebra import (
    T_FORM,
    V_FORM,
    AlgebraElement,
    GenKind,
    Presentation,
    e_of,
    gen,
    linear,
    mul,
    scale,
    unit,
)
from .checks import Report
from .coeffs import QuadExt, qx_collect, qx_parse, qx_pow, qx_subst, qx_sum
from .config import DEFAULTS
from .errors import DomainError
from .partitions import SetPartition, embed, trivial
from .sampling import random_braid, random_partition, random_raw_word, random_singular_braid, random_word
from .trace import rho


# --------------------------- Kinds and results ---------------------------

class InvariantKind(str, Enum):
    PHI = "phi"
    PSI = "psi"
    PHI_PRIME = "phi-prime"
    PSI_PRIME = "psi-prime"

    @property
    def presentation(self) -> Presentation:
        return V_FORM if self.primed else T_FORM

    @property
    def primed(self) -> bool:
        return self in (InvariantKind.PHI_PRIME, InvariantKind.PSI_PRIME)

    @property
    def tied(self) -> bool:
        """τ carries E_i in its image (Φ-kinds)."""
        return self in (InvariantKind.PHI, InvariantKind.PHI_PRIME)

    @property
    def symbol(self) -> str:
        return {"phi": "Φ", "psi": "Ψ", "phi-prime": "Φ′", "psi-prime": "Ψ′"}[self.value]

    @classmethod
    def parse(cls, text: str) -> List["InvariantKind"]:
        if text == "all":
            return list(cls)
        try:
            return [cls(text)]
        except ValueError:
            raise DomainError("invariant", f"unknown kind {text!r}") from None


ALL_KINDS: Tuple[InvariantKind, ...] = tuple(InvariantKind)


@dataclass
class InvariantResult:
    value: QuadExt
    kind: InvariantKind
    n: int
    components: int
    partition: SetPartition
    singularities: int
    braid: Optional[TiedSingularBraid] = None

    def render(self) -> str:
        return str(self.value)

    def metadata(self) -> Dict[str, Any]:
        return {
            "strands": self.n,
            "components": self.components,
            "sc_partition": str(self.partition),
            "singularities": self.singularities,
        }

    def to_dict(self) -> Dict[str, Any]:
        return {"kind": self.kind.value, "value": self.render(), "metadata": self.metadata()}


# --------------------------- Morphism images ---------------------------

def _radical(kind: InvariantKind) -> QuadExt:
    return kind.presentation.field.radical()


@lru_cache(maxsize=None)
def _letter_image(kind: InvariantKind, letter: Letter, n: int) -> AlgebraElement:
    """Image with the σ-carried radical powers stripped (see module notes)."""
    pres = kind.presentation
    F = pres.field
    i = letter.index
    if letter.kind is LetterKind.SIGMA_POS:
        return gen(GenKind.T, i, n, pres)
    if letter.kind is LetterKind.SIGMA_NEG:
        return gen(GenKind.TINV, i, n, pres)
    if letter.kind is LetterKind.ETA:
        return gen(GenKind.E, i, n, pres)
    x, yw = F.var("x"), F.var("y") * _radical(kind)
    G = gen(GenKind.T, i, n, pres)
    if kind.tied:
        E = gen(GenKind.E, i, n, pres)
        return linear([(x, E), (yw, mul(E, G))], n, pres)
    return linear([(x, unit(n, pres)), (yw, G)], n, pres)


def _raw_image(b: TiedSingularBraid, kind: InvariantKind) -> AlgebraElement:
    image = e_of(b.partition, kind.presentation)
    for letter in b.word:
        image = mul(image, _letter_image(kind, letter, b.n))
    return image


def morphism_image(b: TiedSingularBraid, kind: InvariantKind) -> AlgebraElement:
    return scale(_raw_image(b, kind), kind.presentation.field.radical_pow(b.exponent))


def _prefactor(kind: InvariantKind, n: int, exponent: int) -> QuadExt:
    """(1/(a·w))^{n−1}·w^ε, times v^{n−1} for the primed kinds."""
    F = kind.presentation.field
    k = n - 1
    out = qx_pow(F.var("a"), -k) * F.radical_pow(exponent - k)
    if kind.primed:
        out = out * qx_pow(F.var("v"), k)
    return out


def invariant_value(b: TiedSingularBraid, kind: InvariantKind) -> InvariantResult:
    value = _prefactor(kind, b.n, b.exponent) * rho(_raw_image(b, kind))
    k, J = closure_partition(b)
    return InvariantResult(
        value=value, kind=kind, n=b.n, components=k, partition=J, singularities=b.singularities, braid=b
    )


def value_of(b: TiedSingularBraid, kind: InvariantKind) -> QuadExt:
    return invariant_value(b, kind).value


def gamma_bar(b: TiedSingularBraid, kind: InvariantKind = InvariantKind.PHI) -> QuadExt:
    """w^m · V with x ↦ 1, y ↦ 1/w (m = number of τ letters)."""
    if not kind.tied:
        raise DomainError("gamma_bar", f"defined from Φ or Φ′, not {kind.symbol}")
    F = kind.presentation.field
    one = F.frac_const(1)
    val = value_of(b, kind)
    winv = F.radical_pow(-1)
    parts = qx_collect(val, "y")
    total = qx_sum((qx_subst(c, {"x": one}) * qx_pow(winv, e) for e, c in parts.items()), F)
    return total * F.radical_pow(b.singularities)


def apply_substitution(result: InvariantResult, text: str) -> InvariantResult:
    """`x=<expr>` or `y=<expr>`; the expression must not involve the radical."""
    name, sep, rhs = text.partition("=")
    name = name.strip()
    if not sep or name not in ("x", "y"):
        raise DomainError("subst", f"expected 'x=<expr>' or 'y=<expr>', got {text!r}")
    F = result.kind.presentation.field
    expr = qx_parse(rhs.strip(), F)
    if not expr.odd.is_zero():
        raise DomainError("subst", f"{rhs!r} involves {F.radical_name}")
    value = qx_subst(result.value, {name: expr.even})
    return InvariantResult(
        value=value,
        kind=result.kind,
        n=result.n,
        components=result.components,
        partition=result.partition,
        singularities=result.singularities,
        braid=result.braid,
    )


# --------------------------- Random inputs per domain ---------------------------

def _budget(cfg: Optional[Dict[str, Any]], key: str, given: Optional[Any]) -> Any:
    if given is not None:
        return given
    return (cfg or DEFAULTS)[key]


def _sample_in_domain(kind: InvariantKind, rng: random.Random, max_n: int, max_len: int, cfg: Dict[str, Any]):
    """(braid, domain) with domain in {'any', 'tied', 'singular'}."""
    tie_p, tau_p = cfg["tie_probability"], cfg["tau_probability"]
    if kind.tied:
        return random_braid(rng, max_n, max_len, tie_p, tau_p), "any"
    if rng.random() < 0.5:
        return random_braid(rng, max_n, max_len, max(tie_p, 0.3), 0.0), "tied"
    return random_braid(rng, max_n, max_len, 0.0, max(tau_p, 0.25)), "singular"


def _companion(b: TiedSingularBraid, domain: str, rng: random.Random, max_len: int, cfg: Dict[str, Any]):
    """A random braid over b.n from the same domain (the other factor of a commute)."""
    tie_p = 0.0 if domain == "singular" else cfg["tie_probability"]
    tau_p = 0.0 if domain == "tied" else cfg["tau_probability"]
    word = random_word(b.n, rng.randint(0, max_len), rng, tau_p)
    return TiedSingularBraid(b.n, random_partition(b.n, rng, tie_p), word)


def _markov_moves(
    b: TiedSingularBraid, domain: str, rng: random.Random, moves: int, max_len: int, cfg: Dict[str, Any]
) -> Iterator[Tuple[str, TiedSingularBraid, TiedSingularBraid]]:
    """Yield (move, lhs, rhs) pairs whose closures are equivalent cts-links."""
    current = b
    stabilized = False
    for _ in range(moves):
        options = ["m2-split", "commute"]
        cycles = [c for c in perm_of(current.word, current.n).cycles() if len(c) > 1]
        # m1 needs two strands closing into one component
        if domain != "singular" and cycles:
            options.append("m1")
        if not stabilized:
            options.append("m3")
        move = rng.choice(options)
        if move == "m1":
            i, j = rng.sample(rng.choice(cycles), 2)
            nxt = move_m1(current, i, j)
            yield "m1", current, nxt
            current = nxt
        elif move == "m2-split":
            nxt = move_m2_split(current, rng.randint(0, len(current.word)))
            yield "m2-split", current, nxt
            current = nxt
        elif move == "commute":
            q = _companion(current, domain, rng, max(1, max_len // 2), cfg)
            pq, qp = commute_pair(current, q)
            yield "m2", pq, qp
        else:
            nxt = move_m3(current, rng.choice((1, -1)))
            stabilized = True
            yield "m3", current, nxt
            current = nxt


def _pair_text(lhs: TiedSingularBraid, rhs: TiedSingularBraid) -> str:
    return f"{format_word(lhs)}\n---\n{format_word(rhs)}"


# --------------------------- Markov invariance ---------------------------

def check_markov(
    kind: InvariantKind,
    trials: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    seed: Optional[int] = None,
    moves: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    moves = _budget(cfg, "moves_per_braid", moves)
    seed = _budget(cfg, "seed", seed)
    rep = Report(name=f"markov[{kind.value}]", seed=seed, trials=trials)
    rng = random.Random(seed)

    trefoil = braid(2, [SigmaPos(1)] * 3)
    conjugate = braid(3, [SigmaPos(2), SigmaPos(1), SigmaPos(1), SigmaPos(1), SigmaPos(2), SigmaNeg(2)])
    rep.record("trefoil-conjugate", value_of(trefoil, kind) == value_of(conjugate, kind), _pair_text(trefoil, conjugate))

    for _ in range(trials):
        b, domain = _sample_in_domain(kind, rng, max_n, max_len, cfg)
        for move, lhs, rhs in _markov_moves(b, domain, rng, moves, max_len, cfg):
            rep.record(move, value_of(lhs, kind) == value_of(rhs, kind), _pair_text(lhs, rhs), detail=f"domain={domain}")
    return rep


def check_gamma_bar_markov(
    trials: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    seed: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    seed = _budget(cfg, "seed", seed)
    rep = Report(name="gamma-bar", seed=seed, trials=trials)
    rng = random.Random(seed)

    F = T_FORM.field
    tau1 = braid(2, [Tau(1)])
    rep.record("tau-closure", gamma_bar(tau1) == F.var("b") / F.var("a") + F.one(), format_word(tau1))
    for _ in range(trials):
        b, domain = _sample_in_domain(InvariantKind.PHI, rng, max_n, max_len, cfg)
        for move, lhs, rhs in _markov_moves(b, domain, rng, cfg["moves_per_braid"], max_len, cfg):
            rep.record(move, gamma_bar(lhs) == gamma_bar(rhs), _pair_text(lhs, rhs))
    return rep


def check_tie_transport(
    trials: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    seed: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """
    Braids mixing ties and τ letters under the in-place commute. Φ-kinds are
    asserted; Ψ-kinds are reported, they depend on where a tie was written.
    """
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    seed = _budget(cfg, "seed", seed)
    rep = Report(name="tie-transport", seed=seed, trials=trials)
    rng = random.Random(seed)

    # τ₂ commuted past a tie on strands 1, 2
    head = normalize([Tau(2)], 3)
    tail = normalize([Eta(1), SigmaPos(1)], 3)
    lhs, rhs = commute_pair(head, tail)
    for kind in ALL_KINDS:
        same = value_of(lhs, kind) == value_of(rhs, kind)
        rep.record(f"{kind.value}:tau-eta", same, _pair_text(lhs, rhs), reported_only=not kind.tied)

    differing = 0
    for _ in range(trials):
        b = random_braid(rng, max_n, max_len, max(cfg["tie_probability"], 0.5), max(cfg["tau_probability"], 0.3))
        k = rng.randint(0, len(b.word))
        moved = move_m2_split(b, k)
        for kind in ALL_KINDS:
            same = value_of(b, kind) == value_of(moved, kind)
            if not same and not kind.tied:
                differing += 1
            rep.record(f"{kind.value}:m2-split", same, _pair_text(b, moved), reported_only=not kind.tied)
    rep.note(f"Ψ-kind values changed on {differing} mixed tie/τ commutes")
    return rep


# --------------------------- Skein identities ---------------------------

@dataclass
class SkeinInstance:
    n: int
    partition: SetPartition
    alpha: Tuple[Letter, ...]
    i: int
    beta: Tuple[Letter, ...]

    def with_letters(self, letters: Sequence[Letter]) -> TiedSingularBraid:
        return normalize(list(self.alpha) + list(letters) + list(self.beta), self.n, ties=self.partition)

    def describe(self) -> str:
        return format_word(self.with_letters([Tau(self.i)]))


def _random_instance(rng: random.Random, max_n: int, max_len: int, alpha_taus: bool, cfg: Dict[str, Any]) -> SkeinInstance:
    n = rng.randint(2, max_n)
    tau_p = cfg["tau_probability"]
    alpha = random_word(n, rng.randint(0, max_len // 2), rng, tau_p if alpha_taus else 0.0)
    beta = random_word(n, rng.randint(0, max_len // 2), rng, tau_p)
    return SkeinInstance(n, random_partition(n, rng, cfg["tie_probability"]), alpha, rng.randint(1, n - 1), beta)


def skein_identities(kind: InvariantKind, inst: SkeinInstance) -> List[Tuple[str, bool, bool]]:
    """[(rule, holds, reported_only)] for one (α, i, β)."""
    F = kind.presentation.field
    one = F.one()
    w = _radical(kind)
    winv = F.radical_pow(-1)
    x, y = F.var("x"), F.var("y")
    i = inst.i

    def V(*letters: Letter) -> QuadExt:
        return value_of(inst.with_letters(letters), kind)

    plus, minus, tie = V(SigmaPos(i)), V(SigmaNeg(i)), V(Eta(i))
    out: List[Tuple[str, bool, bool]] = []
    if kind.primed:
        v = F.var("v")
        rhs = (v - one / v) * tie
        out.append(("III'", winv * plus - w * minus == rhs, False))
        out.append(("III'-printed", winv * plus + w * minus == rhs, True))
    else:
        u = F.var("u")
        rhs = (one - one / u) * (winv * V(Eta(i), SigmaPos(i)) + tie)
        out.append(("III", winv * plus - w * minus == rhs, False))
        out.append(("III-printed", winv * plus + w * minus == rhs, True))
    singular = V(Tau(i))
    if kind.tied:
        out.append(("IV", singular == x * tie + y * V(Eta(i), SigmaPos(i)), False))
    else:
        out.append(("IV'", singular == x * V() + y * plus, False))
        out.append(("IV'-printed", singular == x * tie + y * plus, True))
    return out


def check_skein(
    kind: InvariantKind,
    alpha: Optional[Sequence[Letter]] = None,
    i: Optional[int] = None,
    beta: Optional[Sequence[Letter]] = None,
    trials: Optional[int] = None,
    n: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """
    One given (α, i, β) when alpha/beta/i are passed, otherwise `trials`
    random instances. The tie letters of rule III sit right after α, so for
    Ψ-kinds α is drawn without τ letters.
    """
    cfg = cfg or DEFAULTS
    seed = _budget(cfg, "seed", seed)
    rng = random.Random(seed)
    if i is not None:
        size = n or max([i + 1] + [l.index + 1 for l in (*(alpha or ()), *(beta or ()))])
        instances = [SkeinInstance(size, trivial(size), tuple(alpha or ()), i, tuple(beta or ()))]
    else:
        trials = _budget(cfg, "skein_trials", trials)
        max_n = _budget(cfg, "max_n", max_n)
        max_len = _budget(cfg, "max_len", max_len)
        instances = [_random_instance(rng, max_n, max_len, kind.tied, cfg) for _ in range(trials)]
    rep = Report(name=f"skein[{kind.value}]", seed=seed, trials=len(instances))
    for inst in instances:
        for rule, holds, reported in skein_identities(kind, inst):
            rep.record(rule, holds, inst.describe(), reported_only=reported)
    return rep


# --------------------------- Homogeneity ---------------------------

def check_homogeneity(
    kind: InvariantKind,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """V(x, y) = x^m · V(1, y/x) for braids with m singular letters."""
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "homogeneity_trials", trials)
    seed = _budget(cfg, "seed", seed)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    rep = Report(name=f"homogeneity[{kind.value}]", seed=seed, trials=trials)
    rng = random.Random(seed)
    F = kind.presentation.field
    x = F.var("x")
    bindings = {"x": F.frac_const(1), "y": F.frac_var("y") * F.frac_var("x").inv()}
    for t in range(trials):
        m = t % 4 if t < 4 else rng.randint(1, 3)
        b = random_singular_braid(rng, max_n, max_len, m)
        if kind.tied or rng.random() < 0.5:
            b = with_partition(b, random_partition(b.n, rng, cfg["tie_probability"]))
        val = value_of(b, kind)
        rescaled = qx_pow(x, m) * qx_subst(val, bindings)
        rep.record(f"degree-{m}", val == rescaled, format_word(b))
    return rep


# --------------------------- Specializations and anchors ---------------------------

def check_classical(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """Φ = Ψ and Φ′ = Ψ′ on tied braids without τ letters."""
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    seed = _budget(cfg, "seed", seed)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    rep = Report(name="classical", seed=seed, trials=trials)
    rng = random.Random(seed)
    for _ in range(trials):
        b = random_braid(rng, max_n, max_len, cfg["tie_probability"], 0.0)
        text = format_word(b)
        rep.record("phi=psi", value_of(b, InvariantKind.PHI) == value_of(b, InvariantKind.PSI), text)
        rep.record("phi'=psi'", value_of(b, InvariantKind.PHI_PRIME) == value_of(b, InvariantKind.PSI_PRIME), text)
    return rep


def check_relations(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
    kinds: Sequence[InvariantKind] = (InvariantKind.PHI, InvariantKind.PHI_PRIME),
) -> Report:
    """Both sides of every defining relation, inside random tied contexts, give the same closure data and Φ-values."""
    for kind in kinds:
        if not kind.tied:
            raise DomainError("check_relations", f"{kind.value} is not a morphism on tied singular braids")
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "relation_trials", trials)
    seed = _budget(cfg, "seed", seed)
    max_n = max(3, _budget(cfg, "max_n", max_n))
    max_len = _budget(cfg, "max_len", max_len)
    rep = Report(name="relations", seed=seed, trials=trials)
    rng = random.Random(seed)
    families: Dict[str, List[Tuple[int, Relation]]] = {}
    for n in range(3, max_n + 1):
        for r in defining_relations(n):
            families.setdefault(r.family, []).append((n, r))
    if max_n < 4:
        rep.note("max_n < 4: relations between far-apart generators were not drawn")
    side = max(1, max_len // 4)
    tie_p, tau_p = cfg["tie_probability"], cfg["tau_probability"]
    for _ in range(trials):
        for family, instances in families.items():
            n, r = rng.choice(instances)
            alpha = random_raw_word(n, rng.randint(0, side), rng, tie_p, tau_p)
            beta = random_raw_word(n, rng.randint(0, side), rng, tie_p, tau_p)
            lhs = normalize(alpha + r.lhs + beta, n)
            rhs = normalize(alpha + r.rhs + beta, n)
            text, detail = _pair_text(lhs, rhs), str(r)
            rep.record(f"{family}:partition", lhs.partition == rhs.partition, text, detail=detail)
            rep.record(f"{family}:perm", perm_of(lhs.word, n) == perm_of(rhs.word, n), text, detail=detail)
            rep.record(f"{family}:closure", closure_partition(lhs) == closure_partition(rhs), text, detail=detail)
            for kind in kinds:
                rep.record(f"{family}:{kind.value}", value_of(lhs, kind) == value_of(rhs, kind), text, detail=detail)
    return rep


def unlink_factor(kind: InvariantKind) -> QuadExt:
    """1/(a·s) for Φ/Ψ, v/(a·r) for Φ′/Ψ′."""
    F = kind.presentation.field
    base = F.one() / (F.var("a") * _radical(kind))
    return base * F.var("v") if kind.primed else base


def check_anchors() -> Report:
    """Unknot, 2-unlink and the closures of σ₁, τ₁."""
    rep = Report(name="anchors")
    for kind in ALL_KINDS:
        F = kind.presentation.field
        rep.record(f"{kind.value}:unknot", value_of(braid(1), kind) == F.one(), "n=1\n")
        rep.record(f"{kind.value}:unlink", value_of(braid(2), kind) == unlink_factor(kind), "n=2\n")
        rep.record(f"{kind.value}:sigma-closure", value_of(braid(2, [SigmaPos(1)]), kind) == F.one(), "n=2\ns1")
    F = T_FORM.field
    x, y, a, b, s = F.var("x"), F.var("y"), F.var("a"), F.var("b"), F.radical()
    tau1 = braid(2, [Tau(1)])
    rep.record("phi:tau-closure", value_of(tau1, InvariantKind.PHI) == x * b / (a * s) + y, "n=2\nt1")
    rep.record("psi:tau-closure", value_of(tau1, InvariantKind.PSI) == x / (a * s) + y, "n=2\nt1")
    return rep


def check_rule_two(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """An extra untouched strand multiplies every kind by its unlink factor."""
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    seed = _budget(cfg, "seed", seed)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    rep = Report(name="rule-two", seed=seed, trials=trials)
    rng = random.Random(seed)
    for _ in range(trials):
        b = random_braid(rng, max_n, max_len, cfg["tie_probability"], cfg["tau_probability"])
        wider = TiedSingularBraid(b.n + 1, embed(b.partition), b.word)
        for kind in ALL_KINDS:
            rep.record(kind.value, value_of(wider, kind) == value_of(b, kind) * unlink_factor(kind), format_word(b))
    return rep


def clasp_factor(kind: InvariantKind) -> QuadExt:
    """The factor picked up by clasp_component: x + y·f/s, x + y/(a·s), x + y·f·v/r, x + y·v/(a·r)."""
    F = kind.presentation.field
    x, y, a, b = F.var("x"), F.var("y"), F.var("a"), F.var("b")
    w = _radical(kind)
    core = b / (a * w) if kind.tied else F.one() / (a * w)
    if kind.primed:
        core = core * F.var("v")
    return x + y * core


def check_clasp(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    seed = _budget(cfg, "seed", seed)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    rep = Report(name="clasp", seed=seed, trials=trials)
    rng = random.Random(seed)
    for _ in range(trials):
        b = random_braid(rng, max_n, max_len, cfg["tie_probability"], cfg["tau_probability"], min_n=1)
        clasped = clasp_component(b)
        for kind in ALL_KINDS:
            rep.record(kind.value, value_of(clasped, kind) == value_of(b, kind) * clasp_factor(kind), format_word(b))
    return rep


def check_singular_pair(a_braid: TiedSingularBraid, b_braid: TiedSingularBraid) -> Report:
    """
    S = (a⊕b)·τ_p·σ_p⁻¹ (two components) against S′ = (a⊕b)·τ_p (one
    component). Φ and Φ′ formulas are asserted; for Ψ(S′) and Ψ′(S′) both
    the tied and the untied x-term candidates are reported.
    """
    S, Sp = build_singular_pair(a_braid, b_braid)
    rep = Report(name="singular-pair")
    text = _pair_text(S, Sp)
    for kind in ALL_KINDS:
        F = kind.presentation.field
        x, y, a, b = F.var("x"), F.var("y"), F.var("a"), F.var("b")
        w = _radical(kind)
        v_ = F.var("v") if kind.primed else F.one()
        f_term = b * v_ / (a * w)
        plain_term = v_ / (a * w)
        AB = value_of(a_braid, kind) * value_of(b_braid, kind)
        vS, vSp = value_of(S, kind), value_of(Sp, kind)
        if kind.tied:
            rep.record(f"{kind.value}:S", vS == AB * (x + y * f_term), text)
            rep.record(f"{kind.value}:S'", vSp == AB * (x * f_term + y), text)
            diff = vS - vSp
            rep.record(f"{kind.value}:distinct", not diff.is_zero(), text)
            rep.record(
                f"{kind.value}:vanishes-at-x=y",
                qx_subst(diff, {"x": F.frac_var("y")}).is_zero(),
                text,
            )
        else:
            rep.record(f"{kind.value}:S", vS == AB * (x + y * plain_term), text)
            algebraic = vSp == AB * (x * plain_term + y)
            printed = vSp == AB * (x * f_term + y)
            rep.record(f"{kind.value}:S'-untied-x-term", algebraic, text, reported_only=True)
            rep.record(f"{kind.value}:S'-tied-x-term", printed, text, reported_only=True)
            which = "untied" if algebraic else ("tied" if printed else "neither")
            rep.note(f"{kind.symbol}(S′) matches the {which} x-term candidate")
    return rep


def check_tie_comparison(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """
    A tie next to a singular crossing: Φ(α·η_i·τ_i·β) = Φ(α·τ_i·β) always;
    Ψ tells them apart when the crossing joins two different components.
    """
    cfg = cfg or DEFAULTS
    trials = _budget(cfg, "trials", trials)
    seed = _budget(cfg, "seed", seed)
    max_n = _budget(cfg, "max_n", max_n)
    max_len = _budget(cfg, "max_len", max_len)
    rep = Report(name="tie-comparison", seed=seed, trials=trials)
    rng = random.Random(seed)

    base = braid(2, [Tau(1), SigmaPos(1)])
    tied = with_partition(base, SetPartition.from_blocks([(1, 2)], 2))
    for kind in ALL_KINDS:
        same = value_of(base, kind) == value_of(tied, kind)
        if kind.tied:
            rep.record(f"{kind.value}:hopf", same, _pair_text(base, tied))
        else:
            rep.record(f"{kind.value}:hopf-separates", not same, _pair_text(base, tied), reported_only=True)

    for _ in range(trials):
        n = rng.randint(2, max_n)
        alpha = random_word(n, rng.randint(0, max_len // 2), rng)
        beta = random_word(n, rng.randint(0, max_len // 2), rng, cfg["tau_probability"])
        i = rng.randint(1, n - 1)
        plain = normalize(list(alpha) + [Tau(i)] + list(beta), n)
        tied_b = normalize(list(alpha) + [Eta(i), Tau(i)] + list(beta), n)
        pi = perm_of(alpha, n)
        cycles = perm_of(plain.word, n).cycles()
        p, q = pi(i), pi(i + 1)
        split = next(c for c in cycles if p in c) != next(c for c in cycles if q in c)
        for kind in ALL_KINDS:
            same = value_of(plain, kind) == value_of(tied_b, kind)
            if kind.tied:
                rep.record(f"{kind.value}:tie-absorbed", same, _pair_text(plain, tied_b))
            elif split:
                rep.record(f"{kind.value}:separates-components", not same, _pair_text(plain, tied_b), reported_only=True)
    return rep
