#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/sampling.py — seeded random partitions, words, braids and algebra elements.

Every harness owns a `random.Random(seed)` and passes it down here, so a
report's seed reproduces its trials exactly.
"""

from __future__ import annotations

import random
from typing import List, Optional, Tuple

from .braids import Eta, Letter, SigmaNeg, SigmaPos, Tau, TiedSingularBraid
from .btalgebra import AlgebraElement, Presentation, basis_element, linear
from .partitions import Permutation, SetPartition, all_partitions, join, mu, trivial


def random_partition(n: int, rng: random.Random, tie_probability: float = 0.3) -> SetPartition:
    I = trivial(n)
    if n < 2:
        return I
    for _ in range(n - 1):
        if rng.random() < tie_probability:
            i, j = sorted(rng.sample(range(1, n + 1), 2))
            I = join(I, mu(i, j, n))
    return I


def random_letter(n: int, rng: random.Random, tau_probability: float = 0.0) -> Letter:
    i = rng.randint(1, n - 1)
    if rng.random() < tau_probability:
        return Tau(i)
    return SigmaPos(i) if rng.random() < 0.5 else SigmaNeg(i)


def random_word(n: int, length: int, rng: random.Random, tau_probability: float = 0.0) -> Tuple[Letter, ...]:
    if n < 2:
        return ()
    return tuple(random_letter(n, rng, tau_probability) for _ in range(length))


def random_raw_word(
    n: int, length: int, rng: random.Random, tie_probability: float = 0.3, tau_probability: float = 0.25
) -> Tuple[Letter, ...]:
    """Letters as typed by a user: ties may sit anywhere in the word."""
    if n < 2:
        return ()
    return tuple(
        Eta(rng.randint(1, n - 1)) if rng.random() < tie_probability else random_letter(n, rng, tau_probability)
        for _ in range(length)
    )


def random_braid(
    rng: random.Random,
    max_n: int = 4,
    max_len: int = 8,
    tie_probability: float = 0.3,
    tau_probability: float = 0.25,
    min_n: int = 2,
) -> TiedSingularBraid:
    n = rng.randint(min_n, max_n)
    length = rng.randint(0, max_len)
    word = random_word(n, length, rng, tau_probability)
    return TiedSingularBraid(n, random_partition(n, rng, tie_probability), word)


def random_singular_braid(rng: random.Random, max_n: int, max_len: int, singularities: int) -> TiedSingularBraid:
    """Untied braid with exactly `singularities` τ letters."""
    n = rng.randint(2, max_n)
    word: List[Letter] = list(random_word(n, rng.randint(0, max(0, max_len - singularities)), rng))
    for _ in range(singularities):
        word.insert(rng.randint(0, len(word)), Tau(rng.randint(1, n - 1)))
    return TiedSingularBraid(n, trivial(n), tuple(word))


def random_element(
    n: int,
    pres: Presentation,
    rng: random.Random,
    terms: int = 3,
    partitions: Optional[List[SetPartition]] = None,
) -> AlgebraElement:
    """A short combination of basis elements with small integer coefficients."""
    parts = partitions or list(all_partitions(n))
    images = list(range(1, n + 1))
    pairs = []
    for _ in range(terms):
        rng.shuffle(images)
        k = rng.choice([-3, -2, -1, 1, 2, 3])
        pairs.append((pres.field.const(k), basis_element(rng.choice(parts), Permutation(tuple(images)), pres)))
    return linear(pairs, n, pres)
