#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/trace.py — the Markov trace ρ on the bt-algebra.

ρ is the unique family of linear maps with ρ(1) = 1, ρ(XY) = ρ(YX),
ρ(X·T_n) = ρ(X·T_n·E_n) = a·ρ(X) and ρ(X·E_n) = b·ρ(X). It is evaluated on
a basis term E_I·T_w of E_n by removing the last strand:

  w(n) = n     T_w lies in E_{n−1}. If {n} is a block of I the term is
               already in E_{n−1}; otherwise E_I = E_{I∖n}·E_{j,n} for a
               mate j and E_{j,n} contributes a factor b.
  w(n) = k<n   T_w = T_k⋯T_{n−1}·T_w′ with w′ fixing n. Cyclicity moves T_w′
               to the front, E_{j,n} is pushed through to E_{j′,n−1} next to
               T_{n−1}, rule two contributes a, and the remaining product
               T_w′·T_k⋯T_{n−2} is re-expanded in the basis of E_{n−1}.

Public API
----------
ev = TraceEvaluator(pres)      memoized per (I, w); safe to share between threads
ev.rho(elem) / rho(elem)       linear extension (module evaluators per presentation)
configure(cfg)                 memo warning threshold of the module evaluators
check_trace_rules(n, trials, pres, seed) → Report
"""

from __future__ import annotations

import random
import sys
import threading
from typing import Any, Dict, List, Mapping, Optional

from .btalgebra import (
    PRESENTATIONS,
    T_FORM,
    AlgebraElement,
    GenKind,
    Key,
    Presentation,
    basis_element,
    embed_element,
    gen,
    juxtapose,
    mul,
    times_generator,
    unit,
)
from .checks import Report
from .coeffs import QuadExt, qx_sum
from .config import DEFAULTS
from .errors import DomainError
from .partitions import Permutation, SetPartition, adjacent, apply_perm, join, mu, remove_last, trivial
from .sampling import random_element


class TraceEvaluator:
    """ρ on one presentation's basis, with a lock-guarded memo of basis values."""

    def __init__(self, pres: Presentation, warn_keys: Optional[int] = None):
        self.pres = pres
        F = pres.field
        self._a = F.var("a")
        self._b = F.var("b")
        self._one = F.one()
        self._memo: Dict[Key, QuadExt] = {}
        self._lock = threading.RLock()
        self._warn_keys = warn_keys or int(DEFAULTS["memo_warn_keys"])
        self._warned = False

    @property
    def memo_size(self) -> int:
        return len(self._memo)

    def clear(self) -> None:
        with self._lock:
            self._memo.clear()
            self._warned = False

    def set_warn_keys(self, keys: int) -> None:
        with self._lock:
            self._warn_keys = keys
            self._warned = False

    def rho(self, elem: AlgebraElement) -> QuadExt:
        if elem.presentation is not self.pres:
            raise DomainError("rho", f"{self.pres.tag}-form evaluator given a {elem.presentation.tag}-form element")
        return qx_sum((c * self.basis_value(I, w) for (I, w), c in elem.terms.items()), self.pres.field)

    def _rho_terms(self, terms: Dict[Key, QuadExt]) -> QuadExt:
        return qx_sum((c * self.basis_value(I, w) for (I, w), c in terms.items()), self.pres.field)

    def basis_value(self, I: SetPartition, w: Permutation) -> QuadExt:
        n = w.n
        if n == 1:
            return self._one
        key = (I, w)
        with self._lock:
            hit = self._memo.get(key)
            if hit is not None:
                return hit
            val = self._reduce(I, w)
            self._memo[key] = val
            if not self._warned and len(self._memo) >= self._warn_keys:
                self._warned = True
                print(f"[trace] WARN: memo holds {len(self._memo)} basis keys", file=sys.stderr)
            return val

    def _reduce(self, I: SetPartition, w: Permutation) -> QuadExt:
        n = w.n
        k = w(n)
        block = I.block_of(n)
        if k == n:
            rest = self.basis_value(remove_last(I), w.restrict())
            return rest if len(block) == 1 else self._b * rest

        # w = c ∘ w′ with c = s_k ∘ ... ∘ s_{n−1}, w′(n) = n
        c_inv = Permutation(tuple(_coset_inverse(n, k)))
        wp = c_inv * w
        J = apply_perm(wp, I)
        # p = w′ ∘ s_k ∘ ... ∘ s_{n−2}; E_A·Y = Y·E_{p⁻¹(A)}
        tail = list(range(k, n - 1))
        L = remove_last(J)
        jblock = J.block_of(n)
        if len(jblock) > 1:
            j = next(x for x in jblock if x != n)
            p = wp
            for i in tail:
                p = p * adjacent(i, n)
            jp = p.inverse()(j)
            if jp != n - 1:
                L = join(L, mu(jp, n - 1, n - 1))
        terms: Dict[Key, QuadExt] = {(L, wp.restrict()): self._one}
        for i in tail:
            terms = times_generator(terms, i, n - 1, self.pres)
        return self._a * self._rho_terms(terms)


def _coset_inverse(n: int, k: int) -> List[int]:
    """One-line images of (s_k ∘ ... ∘ s_{n−1})⁻¹: k ↦ n, i ↦ i−1 for k < i ≤ n."""
    images = list(range(1, n + 1))
    images[k - 1] = n
    for i in range(k + 1, n + 1):
        images[i - 1] = i - 1
    return images


_EVALUATORS = {tag: TraceEvaluator(pres) for tag, pres in PRESENTATIONS.items()}


def configure(cfg: Mapping[str, Any]) -> None:
    """Apply `memo_warn_keys` of a resolved config to the module evaluators."""
    keys = int(cfg.get("memo_warn_keys", DEFAULTS["memo_warn_keys"]))
    for ev in _EVALUATORS.values():
        ev.set_warn_keys(keys)


def evaluator_for(pres: Presentation) -> TraceEvaluator:
    return _EVALUATORS[pres.tag]


def rho(elem: AlgebraElement) -> QuadExt:
    return evaluator_for(elem.presentation).rho(elem)


# --------------------------- Rule checks ---------------------------

def _anchors(rep: Report, pres: Presentation) -> None:
    F = pres.field
    a, b = F.var("a"), F.var("b")
    T1, E1, Tinv1 = (gen(kind, 1, 2, pres) for kind in (GenKind.T, GenKind.E, GenKind.TINV))
    if pres is T_FORM:
        u = F.var("u")
        rep.record("anchor:T1", rho(T1) == a, "n=2\ns1")
        rep.record("anchor:E1T1", rho(mul(E1, T1)) == a, "n=2\nties={1 2}\ns1")
        rep.record("anchor:Tinv1", rho(Tinv1) == (a + (F.one() - u) * b) / u, "n=2\ns1'")
    else:
        v = F.var("v")
        rep.record("anchor:V1", rho(T1) == a / v, "n=2\ns1")
    rep.record("anchor:E1", rho(E1) == b, "n=2\nties={1 2}")


def check_trace_rules(n: int, trials: int, pres: Presentation = T_FORM, seed: Optional[int] = None) -> Report:
    """ρ(1) = 1, anchors, cyclicity on E_n, rules two and three on E_n ⊂ E_{n+1}, embedding, multiplicativity."""
    rep = Report(name=f"trace[{pres.tag}, n={n}]", seed=seed, trials=trials)
    rng = random.Random(seed)
    F = pres.field
    a, b = F.var("a"), F.var("b")
    rep.record("unit", rho(unit(n, pres)) == F.one())
    _anchors(rep, pres)
    m = n + 1
    Tn = basis_element(trivial(m), adjacent(n, m), pres)
    En = gen(GenKind.E, n, m, pres)
    for _ in range(trials):
        X, Y = random_element(n, pres, rng), random_element(n, pres, rng)
        rep.record("cyclicity", rho(mul(X, Y)) == rho(mul(Y, X)), f"X={X!r} Y={Y!r}")
        rX = rho(X)
        Xe = embed_element(X)
        rep.record("embedding", rho(Xe) == rX, f"X={X!r}")
        rep.record("rule-two", rho(mul(Xe, Tn)) == a * rX, f"X={X!r}")
        rep.record("rule-two-tied", rho(mul(mul(Xe, Tn), En)) == a * rX, f"X={X!r}")
        rep.record("rule-three", rho(mul(Xe, En)) == b * rX, f"X={X!r}")
        q = rng.randint(1, max(1, n - 1))
        Z = random_element(q, pres, rng)
        rep.record("multiplicativity", rho(juxtapose(X, Z)) == rX * rho(Z), f"X={X!r} Z={Z!r}")
    return rep

