#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/btalgebra.py — the bt-algebra E_n as sparse combinations of E_I·T_w.

Public API
----------
T_FORM, V_FORM                      the two presentations (over u, over v with u = v²)
AlgebraElement(n, presentation, terms)
e_of(I, pres), gen(GenKind.T | TINV | E, i, n, pres), unit(n, pres)
basis(n), basis_element(I, w, pres)
mul(lhs, rhs), add(lhs, rhs), scale(elem, coeff), element_eq(lhs, rhs)
linear([(coeff, elem), ...], n, pres), product(factors, n, pres)
juxtapose(X, Y)                     X ⊗ Y on strands 1..p, p+1..p+q
embed_element(elem)                 E_n ⊂ E_{n+1}
render_element(elem)                "coeff · E{...} T[one-line]" terms
dim_selftest(n, pres, trials, seed) → Report

Kernel
------
Every element is stored over the basis {E_I·T_w}; V-form elements use the
same basis with V_i = T_i + (v⁻¹−1)·E_i·T_i expanded. A basis product is

    (E_I T_w)(E_J T_v) = E_{I ∗ w(J)} · T_w · T_v

and T_w·T_v is built by right multiplication with T_i over a reduced word
of v. When w(i) > w(i+1), write w = w′s_i:

    E_K T_w T_i = E_K T_w′ + (u−1)·E_{K ∗ w′(μ_i)} T_w′ + (u−1)·E_{K ∗ w′(μ_i)} T_w

Coefficients of a product are polynomials in u (or v) times the inputs'.
"""

from __future__ import annotations

import random
from enum import Enum
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Dict, Iterable, List, Optional, Tuple

from .checks import Report
from .coeffs import T_FIELD, V_FIELD, CoeffField, QuadExt
from .errors import DomainError
from .partitions import (
    Permutation,
    SetPartition,
    adjacent,
    all_partitions,
    apply_perm,
    bell,
    embed,
    identity,
    join,
    mu,
    trivial,
)


Key = Tuple[SetPartition, Permutation]


# --------------------------- Presentations ---------------------------

class Presentation:
    """Coefficient field plus the constants the kernel and the generators need."""

    def __init__(self, tag: str, field: CoeffField):
        self.tag = tag
        self.field = field
        one = field.one()
        if tag == "T":
            u = field.var("u")
            self.u = u
            self.gen_shift = field.zero()                          # T_i = T_i
            self.inv_e = field.const(1) / u - one                  # T⁻¹ = T + (u⁻¹−1)E + (u⁻¹−1)ET
            self.inv_et = self.inv_e
        else:
            v = field.var("v")
            self.u = v * v
            vinv = one / v
            self.gen_shift = vinv - one                            # V_i = T_i + (v⁻¹−1)E_iT_i
            self.v_minus_vinv = v - vinv
            self.inv_e = -self.v_minus_vinv                        # V⁻¹ = V − (v−v⁻¹)E
            self.inv_et = self.gen_shift
        self.u_minus_one = self.u - one

    def __repr__(self) -> str:
        return f"Presentation({self.tag}-form)"


T_FORM = Presentation("T", T_FIELD)
V_FORM = Presentation("V", V_FIELD)

PRESENTATIONS = {"T": T_FORM, "V": V_FORM}


class GenKind(str, Enum):
    T = "T"
    TINV = "Tinv"
    E = "E"


# --------------------------- Elements ---------------------------

def _key_order(key: Key):
    I, w = key
    return (I.sort_key(), w.images)


class AlgebraElement:
    """Immutable sparse map (I, w) → coefficient; zero coefficients never stored."""

    __slots__ = ("n", "presentation", "terms")

    def __init__(self, n: int, presentation: Presentation, terms: Dict[Key, QuadExt]):
        self.n = n
        self.presentation = presentation
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def items(self) -> List[Tuple[Key, QuadExt]]:
        return sorted(self.terms.items(), key=lambda kv: _key_order(kv[0]))

    def coefficient(self, I: SetPartition, w: Permutation) -> QuadExt:
        return self.terms.get((I, w), self.presentation.field.zero())

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return add(self, other)

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return mul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return element_eq(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"AlgebraElement[{self.presentation.tag}, n={self.n}]({render_element(self)})"


def _acc(out: Dict[Key, QuadExt], key: Key, c: QuadExt) -> None:
    prev = out.get(key)
    out[key] = c if prev is None else prev + c


def _clean(terms: Dict[Key, QuadExt]) -> Dict[Key, QuadExt]:
    return {k: c for k, c in terms.items() if not c.is_zero()}


def _same(where: str, lhs: AlgebraElement, rhs: AlgebraElement) -> None:
    if lhs.n != rhs.n:
        raise DomainError(where, f"size mismatch {lhs.n} vs {rhs.n}")
    if lhs.presentation is not rhs.presentation:
        raise DomainError(where, f"presentation mismatch {lhs.presentation.tag} vs {rhs.presentation.tag}")


# --------------------------- Constructors ---------------------------

def basis_element(I: SetPartition, w: Permutation, pres: Presentation) -> AlgebraElement:
    if I.n != w.n:
        raise DomainError("basis_element", f"partition over {I.n} vs permutation over {w.n}")
    return AlgebraElement(I.n, pres, {(I, w): pres.field.one()})


def unit(n: int, pres: Presentation) -> AlgebraElement:
    return basis_element(trivial(n), identity(n), pres)


def zero(n: int, pres: Presentation) -> AlgebraElement:
    return AlgebraElement(n, pres, {})


def e_of(I: SetPartition, pres: Presentation) -> AlgebraElement:
    return basis_element(I, identity(I.n), pres)


def gen(kind: GenKind, i: int, n: int, pres: Presentation) -> AlgebraElement:
    """T(i) / Tinv(i) / E(i); in the V-form T(i) and Tinv(i) are V_i and V_i⁻¹."""
    if not 1 <= i < n:
        raise DomainError("gen", f"generator index {i} out of range for n={n}")
    F = pres.field
    one_n, e = trivial(n), identity(n)
    s, m = adjacent(i, n), mu(i, i + 1, n)
    if kind is GenKind.E:
        return AlgebraElement(n, pres, {(m, e): F.one()})
    terms: Dict[Key, QuadExt] = {(one_n, s): F.one()}
    if kind is GenKind.T:
        terms[(m, s)] = pres.gen_shift
    else:
        terms[(m, e)] = pres.inv_e
        terms[(m, s)] = pres.inv_et
    return AlgebraElement(n, pres, _clean(terms))


def basis(n: int) -> List[Key]:
    perms = [Permutation(p) for p in permutations(range(1, n + 1))]
    return sorted(((I, w) for I in all_partitions(n) for w in perms), key=_key_order)


# --------------------------- Linear structure ---------------------------

def add(lhs: AlgebraElement, rhs: AlgebraElement) -> AlgebraElement:
    _same("add", lhs, rhs)
    out = dict(lhs.terms)
    for k, c in rhs.terms.items():
        _acc(out, k, c)
    return AlgebraElement(lhs.n, lhs.presentation, _clean(out))


def scale(elem: AlgebraElement, coeff: QuadExt) -> AlgebraElement:
    if coeff.is_zero():
        return zero(elem.n, elem.presentation)
    return AlgebraElement(elem.n, elem.presentation, _clean({k: c * coeff for k, c in elem.terms.items()}))


def linear(pairs: Iterable[Tuple[QuadExt, AlgebraElement]], n: int, pres: Presentation) -> AlgebraElement:
    out: Dict[Key, QuadExt] = {}
    for coeff, elem in pairs:
        for k, c in elem.terms.items():
            _acc(out, k, c * coeff)
    return AlgebraElement(n, pres, _clean(out))


def element_eq(lhs: AlgebraElement, rhs: AlgebraElement) -> bool:
    _same("element_eq", lhs, rhs)
    if lhs.terms.keys() != rhs.terms.keys():
        return False
    return all(c == rhs.terms[k] for k, c in lhs.terms.items())


def embed_element(elem: AlgebraElement) -> AlgebraElement:
    m = elem.n + 1
    return AlgebraElement(m, elem.presentation, {(embed(I), w.extend(m)): c for (I, w), c in elem.terms.items()})


def juxtapose(lhs: AlgebraElement, rhs: AlgebraElement) -> AlgebraElement:
    """X ⊗ Y in E_{p+q}: rhs moved onto strands p+1..p+q."""
    if lhs.presentation is not rhs.presentation:
        raise DomainError("juxtapose", "presentation mismatch")
    p, m = lhs.n, lhs.n + rhs.n
    out: Dict[Key, QuadExt] = {}
    for (I, w), c1 in lhs.terms.items():
        for (J, v), c2 in rhs.terms.items():
            blocks = I.blocks + tuple(tuple(x + p for x in b) for b in J.blocks)
            perm = Permutation(w.images + tuple(x + p for x in v.images))
            _acc(out, (SetPartition.from_blocks(blocks, m), perm), c1 * c2)
    return AlgebraElement(m, lhs.presentation, _clean(out))


# --------------------------- Multiplication ---------------------------

@lru_cache(maxsize=None)
def _moved_mu(w: Permutation, i: int) -> SetPartition:
    return apply_perm(w, mu(i, i + 1, w.n))


@lru_cache(maxsize=None)
def _adjacent(i: int, n: int) -> Permutation:
    return adjacent(i, n)


def times_generator(terms: Dict[Key, QuadExt], i: int, n: int, pres: Presentation) -> Dict[Key, QuadExt]:
    """Right-multiply a term map by T_i (the bare T-basis generator)."""
    s = _adjacent(i, n)
    out: Dict[Key, QuadExt] = {}
    for (K, w), c in terms.items():
        ws = w * s
        if w(i) < w(i + 1):
            _acc(out, (K, ws), c)
            continue
        K2 = join(K, _moved_mu(ws, i))
        cc = c * pres.u_minus_one
        _acc(out, (K, ws), c)
        _acc(out, (K2, ws), cc)
        _acc(out, (K2, w), cc)
    return _clean(out)


def mul(lhs: AlgebraElement, rhs: AlgebraElement) -> AlgebraElement:
    _same("mul", lhs, rhs)
    n, pres = lhs.n, lhs.presentation
    acc: Dict[Key, QuadExt] = {}
    for (J, v), c2 in rhs.terms.items():
        part: Dict[Key, QuadExt] = {}
        for (I, w), c1 in lhs.terms.items():
            _acc(part, (join(I, apply_perm(w, J)), w), c1 * c2)
        for i in v.reduced_word():
            part = times_generator(part, i, n, pres)
        for k, c in part.items():
            _acc(acc, k, c)
    return AlgebraElement(n, pres, _clean(acc))


def product(factors: Iterable[AlgebraElement], n: int, pres: Presentation) -> AlgebraElement:
    acc = unit(n, pres)
    for f in factors:
        acc = mul(acc, f)
    return acc


# --------------------------- Rendering ---------------------------

def render_element(elem: AlgebraElement) -> str:
    if elem.is_zero():
        return "0"
    parts = []
    for (I, w), c in elem.items():
        text = str(c)
        if " " in text:
            text = f"({text})"
        parts.append(f"{text} · E{I} T[{' '.join(map(str, w.images))}]")
    return " + ".join(parts)


# --------------------------- Self-test ---------------------------

def _t_word(w: Permutation, pres: Presentation, inverse: bool = False) -> AlgebraElement:
    """T_w (or T_w⁻¹) over the reduced word of w."""
    word = w.reduced_word()
    if inverse:
        factors = [gen(GenKind.TINV, i, w.n, pres) for i in reversed(word)]
    else:
        factors = [gen(GenKind.T, i, w.n, pres) for i in word]
    return product(factors, w.n, pres)


def dim_selftest(n: int, pres: Presentation, trials: int = 50, seed: Optional[int] = None) -> Report:
    """
    Basis size b_n·n!, every defining relation as an element identity, and
    randomized associativity / conjugation laws. The relation E_iT_jT_i =
    T_jT_iE_i is checked as stated and reported only; the form with E_j on
    the right is asserted.
    """
    rep = Report(name=f"dim-selftest[{pres.tag}, n={n}]", seed=seed, trials=trials)
    keys = basis(n)
    rep.record("basis-size", len(keys) == bell(n) * factorial(n), detail=f"{len(keys)} vs {bell(n) * factorial(n)}")
    if n < 2:
        return rep

    F = pres.field
    one = unit(n, pres)
    G = {i: gen(GenKind.T, i, n, pres) for i in range(1, n)}
    Ginv = {i: gen(GenKind.TINV, i, n, pres) for i in range(1, n)}
    E = {i: gen(GenKind.E, i, n, pres) for i in range(1, n)}

    def m(*xs: AlgebraElement) -> AlgebraElement:
        return product(xs, n, pres)

    g = "V" if pres.tag == "V" else "T"
    idx = range(1, n)
    for i in idx:
        rep.record("bt2", m(E[i], E[i]) == E[i], f"E{i}E{i}")
        rep.record("bt4", m(E[i], G[i]) == m(G[i], E[i]), f"E{i}{g}{i}")
        if pres.tag == "T":
            rhs = linear([(F.one(), one), (pres.u_minus_one, E[i]), (pres.u_minus_one, m(E[i], G[i]))], n, pres)
            rep.record("bt9", m(G[i], G[i]) == rhs, f"{g}{i}^2")
        else:
            rhs = linear([(F.one(), one), (pres.v_minus_vinv, m(E[i], G[i]))], n, pres)
            rep.record("newbt9", m(G[i], G[i]) == rhs, f"{g}{i}^2")
        rep.record("inverse", m(G[i], Ginv[i]) == one and m(Ginv[i], G[i]) == one, f"{g}{i}")
        for j in idx:
            rep.record("bt1", m(E[i], E[j]) == m(E[j], E[i]), f"E{i}E{j}")
            if abs(i - j) > 1:
                rep.record("bt3", m(E[i], G[j]) == m(G[j], E[i]), f"E{i}{g}{j}")
                rep.record("bt7", m(G[i], G[j]) == m(G[j], G[i]), f"{g}{i}{g}{j}")
            if abs(i - j) == 1:
                lhs = m(E[i], G[j], G[i])
                rep.record("bt5-printed", lhs == m(G[j], G[i], E[i]), f"E{i}{g}{j}{g}{i}", reported_only=True)
                rep.record("bt5", lhs == m(G[j], G[i], E[j]), f"E{i}{g}{j}{g}{i}")
                a6, b6, c6 = m(E[i], E[j], G[i]), m(E[j], G[i], E[j]), m(G[i], E[i], E[j])
                rep.record("bt6", a6 == b6 and b6 == c6, f"E{i}E{j}{g}{i}")
                rep.record("bt8", m(G[i], G[j], G[i]) == m(G[j], G[i], G[j]), f"{g}{i}{g}{j}{g}{i}")

    # E_{i,j} = T_i⋯T_{j−2} E_{j−1} T_{j−2}⁻¹⋯T_i⁻¹
    for i in idx:
        for j in range(i + 2, n + 1):
            left = [G[k] for k in range(i, j - 1)]
            right = [Ginv[k] for k in reversed(range(i, j - 1))]
            rep.record("eij", m(*left, E[j - 1], *right) == e_of(mu(i, j, n), pres), f"E{i},{j}")

    keyset = set(keys)
    lands = all(
        set(mul(x, basis_element(I, w, pres)).terms) <= keyset
        for (I, w) in keys
        for x in (*G.values(), *E.values())
    )
    rep.record("span", lands)

    rng = random.Random(seed)
    for _ in range(trials):
        x, y, z = (basis_element(*rng.choice(keys), pres) for _ in range(3))
        rep.record("associativity", mul(mul(x, y), z) == mul(x, mul(y, z)),
                   f"{render_element(x)} | {render_element(y)} | {render_element(z)}")
        I, w = rng.choice(keys)
        conj = m(_t_word(w, pres), e_of(I, pres), _t_word(w, pres, inverse=True))
        rep.record("conjugation", conj == e_of(apply_perm(w, I), pres), f"w={w} I={I}")
    return rep
