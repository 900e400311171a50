#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/braids.py — tied singular braids in semidirect normal form.

A tied singular braid is stored as the pair (I, ω): a set partition I of
the strands and a word ω over σ_i^{±1} and τ_i. Tie letters η_i occurring in
raw input are pushed to the left by `normalize`, which is how every tied
braid gets its normal form; a word never contains η after normalization.

Public API
----------
Letter, SigmaPos(i), SigmaNeg(i), Tau(i), Eta(i), parse_letter(token)
TiedSingularBraid(n, partition, word)      .singularities, .exponent, .components
normalize(raw, n, ties=None)               raw letters (η allowed) → normal form
multiply(lhs, rhs)                         (I ∗ π_f(α)(J), αβ)
perm_of(word, n), f_map(word), f_minus(word), word_for_perm(w)
closure_partition(b) → (k, J)              sc-partition of the closure
alexander_lift(word, J, n)                 (K × J, word)
move_m1, move_m2_split, move_m3, commute_pair
disjoint_sum, build_singular_pair, clasp_component, single_block
Relation, defining_relations(n)            instances of the relations presenting TSB_n
format_word(b)                             input-language text (reparseable)

Conventions
-----------
- Words are tuples of Letters read left to right = top to bottom.
- perm_of(word) = s_i1 ∘ ... ∘ s_ik; τ_i contributes s_i like σ_i.
- Words are never reduced; equality of braids is decided downstream.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, List, Optional, Sequence, Tuple

from .errors import DomainError, MoveRejected
from .partitions import (
    Permutation,
    SetPartition,
    adjacent,
    apply_perm,
    embed,
    from_cycles,
    identity,
    join,
    mu,
    quotient,
    single_block_partition,
    times,
    trivial,
)


# --------------------------- Letters ---------------------------

class LetterKind(str, Enum):
    SIGMA_POS = "s"
    SIGMA_NEG = "s'"
    TAU = "t"
    ETA = "e"


@dataclass(frozen=True)
class Letter:
    kind: LetterKind
    index: int

    def token(self) -> str:
        if self.kind is LetterKind.SIGMA_NEG:
            return f"s{self.index}'"
        return f"{self.kind.value}{self.index}"

    def shifted(self, by: int) -> "Letter":
        return Letter(self.kind, self.index + by)

    def __str__(self) -> str:
        return self.token()


def SigmaPos(i: int) -> Letter:
    return Letter(LetterKind.SIGMA_POS, i)


def SigmaNeg(i: int) -> Letter:
    return Letter(LetterKind.SIGMA_NEG, i)


def Tau(i: int) -> Letter:
    return Letter(LetterKind.TAU, i)


def Eta(i: int) -> Letter:
    return Letter(LetterKind.ETA, i)


def parse_letter(token: str) -> Letter:
    """'s3' → σ₃, "s3'" → σ₃⁻¹, 't2' → τ₂, 'e4' → η₄. Raises ValueError on junk."""
    if len(token) < 2 or token[0] not in "ste":
        raise ValueError(f"unknown token {token!r}")
    head, body = token[0], token[1:]
    inverse = body.endswith("'")
    if inverse:
        if head != "s":
            raise ValueError(f"only σ letters have inverses: {token!r}")
        body = body[:-1]
    if not body.isdigit():
        raise ValueError(f"bad index in {token!r}")
    i = int(body)
    if i < 1:
        raise ValueError(f"indices start at 1: {token!r}")
    if head == "s":
        return SigmaNeg(i) if inverse else SigmaPos(i)
    return Tau(i) if head == "t" else Eta(i)


Word = Tuple[Letter, ...]


# --------------------------- Braids ---------------------------

@dataclass(frozen=True)
class TiedSingularBraid:
    n: int
    partition: SetPartition
    word: Word = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise DomainError("braid", f"strand count must be positive, got {self.n}")
        if self.partition.n != self.n:
            raise DomainError("braid", f"partition over {self.partition.n} points for {self.n} strands")
        for letter in self.word:
            if letter.kind is LetterKind.ETA:
                raise DomainError("braid", "tie letters must be normalized into the partition")
            if not 1 <= letter.index < self.n:
                raise DomainError("braid", f"letter {letter} out of range for n={self.n}")

    @property
    def singularities(self) -> int:
        return sum(1 for l in self.word if l.kind is LetterKind.TAU)

    @property
    def exponent(self) -> int:
        """ε(ω): #σ minus #σ⁻¹ (τ letters carry their radical inside the morphism image)."""
        return sum(
            1 if l.kind is LetterKind.SIGMA_POS else -1
            for l in self.word
            if l.kind in (LetterKind.SIGMA_POS, LetterKind.SIGMA_NEG)
        )

    @property
    def components(self) -> int:
        return len(perm_of(self.word, self.n).cycles())

    def __str__(self) -> str:
        return format_word(self).replace("\n", "  ")


def braid(n: int, word: Iterable[Letter] = (), partition: Optional[SetPartition] = None) -> TiedSingularBraid:
    return TiedSingularBraid(n, partition or trivial(n), tuple(word))


def _check_range(raw: Sequence[Letter], n: int) -> None:
    for k, letter in enumerate(raw):
        if not 1 <= letter.index < n:
            raise DomainError("normalize", f"letter {k + 1} ({letter}) out of range for n={n}")


def normalize(raw: Sequence[Letter], n: int, ties: Optional[SetPartition] = None) -> TiedSingularBraid:
    """Push every η to the left: η after prefix α becomes π_f(α)(μ_{i,i+1})."""
    _check_range(raw, n)
    I = ties or trivial(n)
    prefix = identity(n)
    word: List[Letter] = []
    for letter in raw:
        if letter.kind is LetterKind.ETA:
            I = join(I, apply_perm(prefix, mu(letter.index, letter.index + 1, n)))
        else:
            word.append(letter)
            prefix = prefix * adjacent(letter.index, n)
    return TiedSingularBraid(n, I, tuple(word))


def multiply(lhs: TiedSingularBraid, rhs: TiedSingularBraid) -> TiedSingularBraid:
    if lhs.n != rhs.n:
        raise DomainError("multiply", f"size mismatch {lhs.n} vs {rhs.n}")
    moved = apply_perm(perm_of(lhs.word, lhs.n), rhs.partition)
    return TiedSingularBraid(lhs.n, join(lhs.partition, moved), lhs.word + rhs.word)


def perm_of(word: Sequence[Letter], n: int) -> Permutation:
    w = identity(n)
    for letter in word:
        if letter.kind is LetterKind.ETA:
            continue
        w = w * adjacent(letter.index, n)
    return w


def f_map(word: Sequence[Letter]) -> Word:
    return tuple(SigmaPos(l.index) if l.kind is LetterKind.TAU else l for l in word)


def f_minus(word: Sequence[Letter]) -> Word:
    return tuple(SigmaNeg(l.index) if l.kind is LetterKind.TAU else l for l in word)


def word_for_perm(w: Permutation) -> Word:
    """A positive braid word whose permutation is w."""
    return tuple(SigmaPos(i) for i in w.reduced_word())


def shift_word(word: Sequence[Letter], by: int) -> Word:
    return tuple(l.shifted(by) for l in word)


def inverse_word(word: Sequence[Letter]) -> Word:
    out = []
    for l in reversed(word):
        if l.kind is LetterKind.SIGMA_POS:
            out.append(SigmaNeg(l.index))
        elif l.kind is LetterKind.SIGMA_NEG:
            out.append(SigmaPos(l.index))
        else:
            raise DomainError("inverse_word", f"{l} has no inverse")
    return tuple(out)


# --------------------------- Closure combinatorics ---------------------------

def closure_partition(b: TiedSingularBraid) -> Tuple[int, SetPartition]:
    K = from_cycles(perm_of(b.word, b.n))
    return K.count, quotient(join(b.partition, K), K)


def alexander_lift(word: Sequence[Letter], J: SetPartition, n: int) -> TiedSingularBraid:
    K = from_cycles(perm_of(word, n))
    if J.n != K.count:
        raise DomainError("alexander_lift", f"J has {J.n} points but the closure has {K.count} components")
    return TiedSingularBraid(n, times(K, J), tuple(word))


# --------------------------- Markov moves ---------------------------

def move_m1(b: TiedSingularBraid, i: int, j: int) -> TiedSingularBraid:
    """t-stabilization: tie two strands lying in one cycle of π_f(ω)."""
    i, j = min(i, j), max(i, j)
    if i == j or not 1 <= i < j <= b.n:
        raise DomainError("move_m1", f"bad strand pair ({i},{j}) for n={b.n}")
    perm = perm_of(b.word, b.n)
    cycle = next(c for c in perm.cycles() if i in c)
    if j not in cycle:
        raise MoveRejected("move_m1", f"strands {i} and {j} close up into different components")
    return multiply(b, TiedSingularBraid(b.n, mu(i, j, b.n)))


def move_m2_split(b: TiedSingularBraid, k: int) -> TiedSingularBraid:
    """Commute the factorization (I, ω[:k])·(1_n, ω[k:])."""
    if not 0 <= k <= len(b.word):
        raise DomainError("move_m2_split", f"split point {k} outside 0..{len(b.word)}")
    head = TiedSingularBraid(b.n, b.partition, b.word[:k])
    tail = TiedSingularBraid(b.n, trivial(b.n), b.word[k:])
    return multiply(tail, head)


def move_m3(b: TiedSingularBraid, sign: int) -> TiedSingularBraid:
    """Stabilization by σ_n^{±1} onto a new strand."""
    if sign not in (1, -1):
        raise DomainError("move_m3", f"sign must be ±1, got {sign}")
    letter = SigmaPos(b.n) if sign > 0 else SigmaNeg(b.n)
    return TiedSingularBraid(b.n + 1, embed(b.partition), b.word + (letter,))


def commute_pair(p: TiedSingularBraid, q: TiedSingularBraid) -> Tuple[TiedSingularBraid, TiedSingularBraid]:
    return multiply(p, q), multiply(q, p)


# --------------------------- Constructions ---------------------------

def disjoint_sum(lhs: TiedSingularBraid, rhs: TiedSingularBraid) -> TiedSingularBraid:
    p = lhs.n
    blocks = lhs.partition.blocks + tuple(tuple(x + p for x in blk) for blk in rhs.partition.blocks)
    part = SetPartition.from_blocks(blocks, p + rhs.n)
    return TiedSingularBraid(p + rhs.n, part, lhs.word + shift_word(rhs.word, p))


def _require_knot(where: str, b: TiedSingularBraid) -> None:
    if b.components != 1:
        raise DomainError(where, f"{format_word(b)!r} closes to {b.components} components, expected a knot")


def build_singular_pair(a: TiedSingularBraid, b: TiedSingularBraid) -> Tuple[TiedSingularBraid, TiedSingularBraid]:
    """S = (1, (a⊕b)·τ_p·σ_p⁻¹) and S′ = (1, (a⊕b)·τ_p) for knot braids a over p, b over q."""
    _require_knot("build_singular_pair", a)
    _require_knot("build_singular_pair", b)
    base = disjoint_sum(braid(a.n, a.word), braid(b.n, b.word))
    p = a.n
    S = TiedSingularBraid(base.n, trivial(base.n), base.word + (Tau(p), SigmaNeg(p)))
    Sprime = TiedSingularBraid(base.n, trivial(base.n), base.word + (Tau(p),))
    return S, Sprime


def clasp_component(b: TiedSingularBraid) -> TiedSingularBraid:
    """A new unknotted component clasping strand n with one singular and one negative crossing."""
    return TiedSingularBraid(b.n + 1, embed(b.partition), b.word + (Tau(b.n), SigmaNeg(b.n)))


def single_block(b: TiedSingularBraid) -> TiedSingularBraid:
    return TiedSingularBraid(b.n, single_block_partition(b.n), b.word)


def with_partition(b: TiedSingularBraid, partition: SetPartition) -> TiedSingularBraid:
    return TiedSingularBraid(b.n, partition, b.word)


# --------------------------- Defining relations ---------------------------

@dataclass(frozen=True)
class Relation:
    """One instance lhs = rhs of a defining relation; words may hold η letters."""

    family: str
    lhs: Word
    rhs: Word

    def __str__(self) -> str:
        def show(w: Word) -> str:
            return " ".join(l.token() for l in w) or "1"

        return f"{self.family}: {show(self.lhs)} = {show(self.rhs)}"


def defining_relations(n: int) -> List[Relation]:
    """Every index instance over n strands of the relations presenting TSB_n."""
    s, si, t, e = SigmaPos, SigmaNeg, Tau, Eta
    gens = range(1, n)
    pairs = [(i, j) for i in gens for j in gens if i != j]
    adj = [(i, j) for i, j in pairs if abs(i - j) == 1]
    far = [(i, j) for i, j in pairs if abs(i - j) > 1]
    out: List[Relation] = []

    def rel(family: str, lhs: Sequence[Letter], rhs: Sequence[Letter]) -> None:
        out.append(Relation(family, tuple(lhs), tuple(rhs)))

    # braid relations
    for i in gens:
        rel("inverse", [s(i), si(i)], [])
        rel("inverse", [si(i), s(i)], [])
    for i, j in adj:
        rel("braid", [s(i), s(j), s(i)], [s(j), s(i), s(j)])
    for i, j in far:
        rel("braid-far", [s(i), s(j)], [s(j), s(i)])

    # ties
    for i, j in pairs:
        rel("eta1", [e(i), e(j)], [e(j), e(i)])
    for i in gens:
        rel("eta2", [e(i), s(i)], [s(i), e(i)])
        rel("eta7", [e(i), e(i)], [e(i)])
    for i, j in far:
        rel("eta3", [e(i), s(j)], [s(j), e(i)])
    for i, j in adj:
        rel("eta4", [e(i), s(j), s(i)], [s(j), s(i), e(j)])
        rel("eta5", [e(i), s(j), si(i)], [s(j), si(i), e(j)])
        rel("eta6", [e(i), e(j), s(i)], [e(j), s(i), e(j)])
        rel("eta6", [e(i), e(j), s(i)], [s(i), e(i), e(j)])

    # singular crossings
    for i, j in far:
        rel("sb-far", [t(i), t(j)], [t(j), t(i)])
        rel("sb-far", [s(i), t(j)], [t(j), s(i)])
    for i in gens:
        rel("sb-commute", [s(i), t(i)], [t(i), s(i)])
    for i, j in adj:
        rel("sb-slide", [s(i), s(j), t(i)], [t(j), s(i), s(j)])

    # ties with singular crossings
    for i in gens:
        rel("tsb1", [t(i), e(i)], [e(i), t(i)])
    for i, j in far:
        rel("tsb2", [t(i), e(j)], [e(j), t(i)])
    for i, j in adj:
        rel("tsb3", [e(i), t(j), t(i)], [t(j), t(i), e(j)])
        rel("tsb4", [e(i), e(j), t(i)], [e(j), t(i), e(j)])
        rel("tsb4", [e(i), e(j), t(i)], [t(i), e(i), e(j)])
        rel("tsb5", [e(i), t(j), s(i)], [t(j), s(i), e(j)])
        rel("tsb6", [e(i), s(j), t(i)], [s(j), t(i), e(j)])
        rel("tsb7", [t(i), e(j)], [s(i), e(j), si(i), t(i)])
        rel("tsb7", [t(i), e(j)], [si(i), e(j), s(i), t(i)])
    return out


def format_word(b: TiedSingularBraid) -> str:
    lines = [f"n={b.n}"]
    if not b.partition.is_trivial():
        lines.append(f"ties={b.partition}")
    lines.append(" ".join(l.token() for l in b.word))
    return "\n".join(lines)
