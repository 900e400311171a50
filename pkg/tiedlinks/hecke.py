#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/hecke.py — Iwahori–Hecke algebra, Ocneanu trace and the Homflypt
polynomial, kept apart from the bt-algebra as an independent oracle.

    T_i² = (q−1)·T_i + q          T_i⁻¹ = q⁻¹·T_i + q⁻¹ − 1
    tr(1) = 1                     tr(X·T_n) = z·tr(X)  for X in H_n

homflypt(word, n) works in Q(q, t) with λ = t² and z = (q−1)/(1 − q·t²):

    P(β̂) = (1/(z·t))^{n−1} · t^{ε(β)} · tr(β)

to_field moves a Homflypt value into a coefficient field through the
renaming configured under `homflypt_renaming`, so it can be compared with
Φ / Φ′ on single-block partitions.

Public API
----------
HeckeAlgebra, generic_algebra(), homflypt_algebra()
HeckeElement, hecke_unit, hecke_gen, hecke_add, hecke_mul
ocneanu_trace(elem), homflypt(word, n), to_field(value, kind)
hecke_skein_check, hecke_markov_check, check_specialization   → Report
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.fields import FracElement, FracField, field

from .braids import Letter, LetterKind, SigmaNeg, SigmaPos, braid, format_word, single_block
from .checks import Report
from .coeffs import QuadExt, qx_parse, qx_pow, qx_sum
from .config import DEFAULTS
from .errors import DomainError
from .invariants import InvariantKind, value_of
from .partitions import Permutation, adjacent, identity
from .sampling import random_word


# --------------------------- Algebra ---------------------------

class HeckeAlgebra:
    """H_n over a sympy fraction field, with the lock-guarded memo of the Ocneanu trace of each T_w."""

    def __init__(
        self, K: FracField, q: FracElement, z: FracElement, name: str = "generic", t: Optional[FracElement] = None
    ):
        self.K = K
        self.q = q
        self.z = z
        self.t = t
        self.name = name
        self.qinv = 1 / q
        self._memo: Dict[Permutation, FracElement] = {}
        self._lock = threading.RLock()

    def __repr__(self) -> str:
        return f"HeckeAlgebra({self.name})"


def generic_algebra() -> HeckeAlgebra:
    K, q, z = field("q,z", QQ)
    return HeckeAlgebra(K, q, z, "q,z")


def homflypt_algebra() -> HeckeAlgebra:
    K, q, t = field("q,t", QQ)
    return HeckeAlgebra(K, q, (q - 1) / (1 - q * t**2), "q,t", t=t)


Terms = Dict[Permutation, FracElement]


@dataclass
class HeckeElement:
    n: int
    algebra: HeckeAlgebra
    terms: Terms = dc_field(default_factory=dict)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_add(self, other)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return hecke_mul(self, other)

    def coefficient(self, w: Permutation) -> FracElement:
        return self.terms.get(w, self.algebra.K.zero)


def _acc(out: Terms, w: Permutation, c: FracElement) -> None:
    total = out.get(w, 0) + c
    if total:
        out[w] = total
    else:
        out.pop(w, None)


def _check(where: str, lhs: HeckeElement, rhs: HeckeElement) -> None:
    if lhs.n != rhs.n:
        raise DomainError(where, f"strand mismatch {lhs.n} vs {rhs.n}")
    if lhs.algebra is not rhs.algebra:
        raise DomainError(where, f"{lhs.algebra!r} vs {rhs.algebra!r}")


def hecke_unit(n: int, alg: HeckeAlgebra) -> HeckeElement:
    return HeckeElement(n, alg, {identity(n): alg.K.one})


def hecke_gen(i: int, n: int, alg: HeckeAlgebra, inverse: bool = False) -> HeckeElement:
    s = adjacent(i, n)
    if not inverse:
        return HeckeElement(n, alg, {s: alg.K.one})
    return HeckeElement(n, alg, {s: alg.qinv, identity(n): alg.qinv - 1})


def hecke_add(lhs: HeckeElement, rhs: HeckeElement) -> HeckeElement:
    _check("hecke_add", lhs, rhs)
    out = dict(lhs.terms)
    for w, c in rhs.terms.items():
        _acc(out, w, c)
    return HeckeElement(lhs.n, lhs.algebra, out)


def _times_generator(terms: Terms, i: int, n: int, alg: HeckeAlgebra) -> Terms:
    s = adjacent(i, n)
    out: Terms = {}
    for w, c in terms.items():
        ws = w * s
        if w(i) < w(i + 1):
            _acc(out, ws, c)
        else:
            # T_w·T_i = T_{ws}·T_i² = (q−1)·T_w + q·T_{ws}
            _acc(out, w, c * (alg.q - 1))
            _acc(out, ws, c * alg.q)
    return out


def _times_inverse(terms: Terms, i: int, n: int, alg: HeckeAlgebra) -> Terms:
    out = {w: c * alg.qinv for w, c in _times_generator(terms, i, n, alg).items()}
    for w, c in terms.items():
        _acc(out, w, c * (alg.qinv - 1))
    return out


def hecke_mul(lhs: HeckeElement, rhs: HeckeElement) -> HeckeElement:
    _check("hecke_mul", lhs, rhs)
    out: Terms = {}
    for v, c2 in rhs.terms.items():
        part = {w: c1 * c2 for w, c1 in lhs.terms.items()}
        for i in v.reduced_word():
            part = _times_generator(part, i, lhs.n, lhs.algebra)
        for w, c in part.items():
            _acc(out, w, c)
    return HeckeElement(lhs.n, lhs.algebra, out)


# --------------------------- Ocneanu trace ---------------------------

def _basis_trace(w: Permutation, alg: HeckeAlgebra) -> FracElement:
    n = w.n
    if n == 1:
        return alg.K.one
    with alg._lock:
        hit = alg._memo.get(w)
        if hit is not None:
            return hit
        val = _reduce_trace(w, alg)
        alg._memo[w] = val
        return val


def _reduce_trace(w: Permutation, alg: HeckeAlgebra) -> FracElement:
    n = w.n
    k = w(n)
    if k == n:
        return _basis_trace(w.restrict(), alg)
    # T_w = T_k⋯T_{n−1}·T_w′ with w′(n) = n; cyclicity then tr(X·T_{n−1}) = z·tr(X)
    images = list(range(1, n + 1))
    images[k - 1] = n
    for i in range(k + 1, n + 1):
        images[i - 1] = i - 1
    wp = Permutation(tuple(images)) * w
    terms: Terms = {wp.restrict(): alg.K.one}
    for i in range(k, n - 1):
        terms = _times_generator(terms, i, n - 1, alg)
    return alg.z * sum((c * _basis_trace(v, alg) for v, c in terms.items()), alg.K.zero)


def ocneanu_trace(elem: HeckeElement) -> FracElement:
    alg = elem.algebra
    return sum((c * _basis_trace(w, alg) for w, c in elem.terms.items()), alg.K.zero)


# --------------------------- Homflypt ---------------------------

_HOMFLYPT = homflypt_algebra()


def _classical(word: Sequence[Letter], n: int) -> None:
    for letter in word:
        if letter.kind not in (LetterKind.SIGMA_POS, LetterKind.SIGMA_NEG):
            raise DomainError("homflypt", f"{letter} is not a classical braid letter")
        if not 1 <= letter.index < n:
            raise DomainError("homflypt", f"{letter} out of range for n={n}")


def braid_element(word: Sequence[Letter], n: int, alg: HeckeAlgebra) -> HeckeElement:
    _classical(word, n)
    terms: Terms = {identity(n): alg.K.one}
    for letter in word:
        if letter.kind is LetterKind.SIGMA_POS:
            terms = _times_generator(terms, letter.index, n, alg)
        else:
            terms = _times_inverse(terms, letter.index, n, alg)
    return HeckeElement(n, alg, terms)


def homflypt(word: Sequence[Letter], n: int) -> FracElement:
    """P of the closure of a classical braid word over n strands, in Q(q, t)."""
    alg = _HOMFLYPT
    t = alg.t
    eps = sum(1 if l.kind is LetterKind.SIGMA_POS else -1 for l in word)
    tr = ocneanu_trace(braid_element(word, n, alg))
    return (1 / (alg.z * t)) ** (n - 1) * t**eps * tr


def to_field(value: FracElement, kind: InvariantKind, cfg: Optional[Dict[str, Any]] = None) -> QuadExt:
    """Evaluate a Q(q, t) value at the configured (q, t) of kind's field."""
    renaming = (cfg or DEFAULTS)["homflypt_renaming"][kind.presentation.tag]
    F = kind.presentation.field
    q, t = qx_parse(renaming["q"], F), qx_parse(renaming["t"], F)

    def evaluate(poly) -> QuadExt:
        return qx_sum((F.const(c) * qx_pow(q, i) * qx_pow(t, j) for (i, j), c in poly.terms()), F)

    return evaluate(value.numer) / evaluate(value.denom)


# --------------------------- Checks ---------------------------

NAMED_LINKS: Tuple[Tuple[str, int, Tuple[Letter, ...]], ...] = (
    ("unknot", 1, ()),
    ("hopf+", 2, (SigmaPos(1), SigmaPos(1))),
    ("hopf-", 2, (SigmaNeg(1), SigmaNeg(1))),
    ("trefoil", 2, (SigmaPos(1),) * 3),
    ("figure-eight", 3, (SigmaPos(1), SigmaNeg(2)) * 2),
)


def _tokens(word: Sequence[Letter], n: int) -> str:
    return format_word(braid(n, word))


def hecke_skein_check(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
) -> Report:
    """q⁻¹·(1/t)·P₊ − t·P₋ = (1 − q⁻¹)·P₀ on (ασ_iβ, ασ_i⁻¹β, αβ)."""
    trials = DEFAULTS["skein_trials"] if trials is None else trials
    seed = DEFAULTS["seed"] if seed is None else seed
    max_n = DEFAULTS["max_n"] if max_n is None else max_n
    max_len = DEFAULTS["max_len"] if max_len is None else max_len
    rep = Report(name="hecke-skein", seed=seed, trials=trials)
    rng = random.Random(seed)
    q, t = _HOMFLYPT.q, _HOMFLYPT.t
    for _ in range(trials):
        n = rng.randint(2, max_n)
        alpha = list(random_word(n, rng.randint(0, max_len // 2), rng))
        beta = list(random_word(n, rng.randint(0, max_len // 2), rng))
        i = rng.randint(1, n - 1)
        plus = homflypt(alpha + [SigmaPos(i)] + beta, n)
        minus = homflypt(alpha + [SigmaNeg(i)] + beta, n)
        zero = homflypt(alpha + beta, n)
        holds = plus / (q * t) - t * minus == (1 - 1 / q) * zero
        rep.record("skein", holds, _tokens(alpha + [SigmaPos(i)] + beta, n))
    return rep


def hecke_markov_check(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
) -> Report:
    trials = DEFAULTS["trials"] if trials is None else trials
    seed = DEFAULTS["seed"] if seed is None else seed
    max_n = DEFAULTS["max_n"] if max_n is None else max_n
    max_len = DEFAULTS["max_len"] if max_len is None else max_len
    rep = Report(name="hecke-markov", seed=seed, trials=trials)
    rng = random.Random(seed)

    rep.record("unknot", homflypt([], 1) == 1, "n=1\n")
    rep.record("sigma-closure", homflypt([SigmaPos(1)], 2) == 1, "n=2\ns1")
    trefoil = homflypt([SigmaPos(1)] * 3, 2)
    wider = [SigmaPos(2), SigmaPos(1), SigmaPos(1), SigmaPos(1), SigmaNeg(2), SigmaPos(2)]
    rep.record("trefoil-3-strands", homflypt(wider, 3) == trefoil, _tokens(wider, 3))

    for _ in range(trials):
        n = rng.randint(2, max_n)
        word = list(random_word(n, rng.randint(0, max_len), rng))
        base = homflypt(word, n)
        k = rng.randint(0, len(word))
        rep.record("conjugation", homflypt(word[k:] + word[:k], n) == base, _tokens(word, n))
        sign = rng.choice((SigmaPos(n), SigmaNeg(n)))
        rep.record("stabilization", homflypt(word + [sign], n + 1) == base, _tokens(word, n))
    return rep


def check_specialization(
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    max_n: Optional[int] = None,
    max_len: Optional[int] = None,
    cfg: Optional[Dict[str, Any]] = None,
) -> Report:
    """Single-block Φ and Φ′ against the renamed Homflypt polynomial."""
    cfg = cfg or DEFAULTS
    trials = cfg["trials"] if trials is None else trials
    seed = cfg["seed"] if seed is None else seed
    max_n = cfg["max_n"] if max_n is None else max_n
    max_len = cfg["max_len"] if max_len is None else max_len
    rep = Report(name="specialization", seed=seed, trials=trials)
    rng = random.Random(seed)
    kinds = (InvariantKind.PHI, InvariantKind.PHI_PRIME)

    cases: List[Tuple[str, int, Sequence[Letter]]] = list(NAMED_LINKS)
    for _ in range(trials):
        n = rng.randint(2, max_n)
        cases.append(("random", n, random_word(n, rng.randint(0, max_len), rng)))

    for name, n, word in cases:
        P = homflypt(word, n)
        sb = single_block(braid(n, word))
        for kind in kinds:
            rep.record(f"{kind.value}:{name}", value_of(sb, kind) == to_field(P, kind, cfg), format_word(sb))
    return rep
