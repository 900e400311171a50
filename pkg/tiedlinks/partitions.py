#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
tiedlinks/partitions.py — set partitions of {1..n}, permutations, and the
closure combinatorics built from them.

Conventions
-----------
- Points are 1-based. A Permutation stores its one-line images
  (w(1), ..., w(n)); composition is (v*w)(i) = v(w(i)) everywhere.
- A SetPartition stores every block explicitly (singletons included), each
  block sorted, blocks ordered by their minimum (standard indexation).
  Block indices handed out by this module are 1-based standard indices.
- Text syntax: "{1 3 | 2 5 6 | 4}"; singletons may be omitted on input.

Public API
----------
Permutation, identity(n), adjacent(i, n), transposition(i, j, n), from_cycle_notation(cycles, n)
SetPartition, trivial(n), mu(i, j, n), parse_partition(text, n)
join, leq, apply_perm, conjugate_witness, induced_block_perm
quotient, times, from_cycles, embed, remove_last, gen_decomp
all_partitions(n), bell(n)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from .errors import DomainError


# --------------------------- Permutations ---------------------------

@dataclass(frozen=True, order=True)
class Permutation:
    images: Tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise DomainError("permutation", f"size mismatch {self.n} vs {other.n}")
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == i for i, w in enumerate(self.images, start=1))

    def length(self) -> int:
        """Coxeter length = number of inversions."""
        im = self.images
        return sum(1 for i, j in combinations(range(self.n), 2) if im[i] > im[j])

    def reduced_word(self) -> List[int]:
        """Indices i1..ik with self = s_i1 ∘ ... ∘ s_ik (bubble sort, deterministic)."""
        line = list(self.images)
        swaps: List[int] = []
        changed = True
        while changed:
            changed = False
            for i in range(len(line) - 1):
                if line[i] > line[i + 1]:
                    line[i], line[i + 1] = line[i + 1], line[i]
                    swaps.append(i + 1)
                    changed = True
        return swaps[::-1]

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    def extend(self, m: int) -> "Permutation":
        """Same permutation viewed in S_m, m ≥ n, fixing the new points."""
        return Permutation(self.images + tuple(range(self.n + 1, m + 1)))

    def restrict(self) -> "Permutation":
        """Drop the last point; it must be fixed."""
        if self.images[-1] != self.n:
            raise DomainError("permutation", f"{self} does not fix {self.n}")
        return Permutation(self.images[:-1])

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "e"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def transposition(i: int, j: int, n: int) -> Permutation:
    if not (1 <= i <= n and 1 <= j <= n):
        raise DomainError("transposition", f"({i},{j}) out of range for n={n}")
    im = list(range(1, n + 1))
    im[i - 1], im[j - 1] = j, i
    return Permutation(tuple(im))


def adjacent(i: int, n: int) -> Permutation:
    """The Coxeter generator s_i = (i, i+1)."""
    if not 1 <= i < n:
        raise DomainError("adjacent", f"s_{i} undefined for n={n}")
    return transposition(i, i + 1, n)


def from_cycle_notation(cycles: Iterable[Sequence[int]], n: int) -> Permutation:
    """from_cycle_notation([(1,6),(2,3,4,5)], 6) → (1,6)(2,3,4,5)."""
    im = list(range(1, n + 1))
    seen = set()
    for cyc in cycles:
        for k, p in enumerate(cyc):
            if not 1 <= p <= n or p in seen:
                raise DomainError("from_cycle_notation", f"bad point {p} in cycles for n={n}")
            seen.add(p)
            im[p - 1] = cyc[(k + 1) % len(cyc)]
    return Permutation(tuple(im))


# --------------------------- Set partitions ---------------------------

def _canonical(blocks: Iterable[Iterable[int]]) -> Tuple[Tuple[int, ...], ...]:
    return tuple(sorted((tuple(sorted(b)) for b in blocks if b), key=lambda b: b[0]))


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int) -> "SetPartition":
        """Build from (possibly partial) blocks; missing points become singletons."""
        seen: Dict[int, int] = {}
        given = [list(b) for b in blocks]
        for b in given:
            for p in b:
                if not 1 <= p <= n:
                    raise DomainError("partition", f"point {p} outside 1..{n}")
                if p in seen:
                    raise DomainError("partition", f"point {p} appears twice")
                seen[p] = 1
        given.extend([p] for p in range(1, n + 1) if p not in seen)
        return cls(n, _canonical(given))

    @cached_property
    def _where(self) -> Dict[int, int]:
        return {p: k for k, b in enumerate(self.blocks, start=1) for p in b}

    def block_index(self, p: int) -> int:
        """Standard (1-based) index of the block containing p."""
        return self._where[p]

    def block_of(self, p: int) -> Tuple[int, ...]:
        return self.blocks[self._where[p] - 1]

    @property
    def count(self) -> int:
        return len(self.blocks)

    def is_trivial(self) -> bool:
        return self.count == self.n

    def size_profile(self) -> List[int]:
        return sorted(len(b) for b in self.blocks)

    def __str__(self) -> str:
        return "{" + " | ".join(" ".join(map(str, b)) for b in self.blocks) + "}"

    def sort_key(self) -> str:
        return str(self)


def trivial(n: int) -> SetPartition:
    """1_n, all singletons."""
    return SetPartition(n, tuple((p,) for p in range(1, n + 1)))


def single_block_partition(n: int) -> SetPartition:
    return SetPartition(n, (tuple(range(1, n + 1)),))


def mu(i: int, j: int, n: int) -> SetPartition:
    if not 1 <= i < j <= n:
        raise DomainError("mu", f"need 1 ≤ i < j ≤ n, got i={i}, j={j}, n={n}")
    return SetPartition.from_blocks([(i, j)], n)


def parse_partition(text: str, n: int) -> SetPartition:
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise DomainError("parse_partition", f"expected '{{...}}', got {text!r}")
    body = body[1:-1].strip()
    blocks: List[List[int]] = []
    if body:
        for chunk in body.split("|"):
            parts = chunk.split()
            if not parts:
                raise DomainError("parse_partition", f"empty block in {text!r}")
            try:
                blocks.append([int(p) for p in parts])
            except ValueError:
                raise DomainError("parse_partition", f"non-integer point in {text!r}") from None
    return SetPartition.from_blocks(blocks, n)


def _same_n(where: str, I: SetPartition, J: SetPartition) -> None:
    if I.n != J.n:
        raise DomainError(where, f"size mismatch {I.n} vs {J.n}")


def join(I: SetPartition, J: SetPartition) -> SetPartition:
    """Least common coarsening I ∗ J."""
    _same_n("join", I, J)
    parent = list(range(I.n + 1))

    def find(p: int) -> int:
        while parent[p] != p:
            parent[p] = parent[parent[p]]
            p = parent[p]
        return p

    for part in (I, J):
        for b in part.blocks:
            root = find(b[0])
            for p in b[1:]:
                rp = find(p)
                if rp != root:
                    parent[rp] = root
    groups: Dict[int, List[int]] = {}
    for p in range(1, I.n + 1):
        groups.setdefault(find(p), []).append(p)
    return SetPartition(I.n, _canonical(groups.values()))


def leq(I: SetPartition, J: SetPartition) -> bool:
    """I ⪯ J: every block of I lies inside one block of J."""
    _same_n("leq", I, J)
    return all(len({J.block_index(p) for p in b}) == 1 for b in I.blocks)


def apply_perm(w: Permutation, I: SetPartition) -> SetPartition:
    if w.n != I.n:
        raise DomainError("apply_perm", f"size mismatch {w.n} vs {I.n}")
    return SetPartition(I.n, _canonical([w(p) for p in b] for b in I.blocks))


def induced_block_perm(I: SetPartition, Iprime: SetPartition, w: Permutation) -> Permutation:
    """σ with w(I_j) = I′_σ(j), on standard block indices."""
    if apply_perm(w, I) != Iprime:
        raise DomainError("induced_block_perm", f"{w} does not map {I} onto {Iprime}")
    return Permutation(tuple(Iprime.block_index(w(b[0])) for b in I.blocks))


def conjugate_witness(I: SetPartition, Iprime: SetPartition) -> Optional[Tuple[Permutation, Permutation]]:
    """Canonical w with w(I) = I′ plus its block permutation, or None."""
    _same_n("conjugate_witness", I, Iprime)
    src = sorted(I.blocks, key=lambda b: (len(b), b[0]))
    dst = sorted(Iprime.blocks, key=lambda b: (len(b), b[0]))
    if [len(b) for b in src] != [len(b) for b in dst]:
        return None
    im = [0] * I.n
    for b, c in zip(src, dst):
        for p, q in zip(b, c):
            im[p - 1] = q
    w = Permutation(tuple(im))
    return w, induced_block_perm(I, Iprime, w)


def quotient(I: SetPartition, K: SetPartition) -> SetPartition:
    """I/K over the standard indices of K's blocks (requires K ⪯ I)."""
    if not leq(K, I):
        raise DomainError("quotient", f"{K} is not finer than {I}")
    groups: Dict[int, List[int]] = {}
    for j, b in enumerate(K.blocks, start=1):
        groups.setdefault(I.block_index(b[0]), []).append(j)
    return SetPartition(K.count, _canonical(groups.values()))


def times(K: SetPartition, J: SetPartition) -> SetPartition:
    """K × J: the i-th block merges the K-blocks indexed by J_i."""
    if J.n != K.count:
        raise DomainError("times", f"J partitions {J.n} points but K has {K.count} blocks")
    return SetPartition(K.n, _canonical([p for j in bj for p in K.blocks[j - 1]] for bj in J.blocks))


def from_cycles(p: Permutation) -> SetPartition:
    return SetPartition(p.n, _canonical(p.cycles()))


def embed(I: SetPartition) -> SetPartition:
    return SetPartition(I.n + 1, I.blocks + ((I.n + 1,),))


def remove_last(I: SetPartition) -> SetPartition:
    if I.n < 2:
        raise DomainError("remove_last", "needs n ≥ 2")
    return SetPartition(I.n - 1, _canonical([p for p in b if p != I.n] for b in I.blocks))


def gen_decomp(I: SetPartition) -> List[Tuple[int, int]]:
    """Arc representation: each point tied to the next larger point of its block."""
    arcs = [(b[k], b[k + 1]) for b in I.blocks for k in range(len(b) - 1)]
    return sorted(arcs)


def join_all(parts: Iterable[SetPartition], n: int) -> SetPartition:
    acc = trivial(n)
    for P in parts:
        acc = join(acc, P)
    return acc


# --------------------------- Enumeration ---------------------------

def all_partitions(n: int) -> Iterator[SetPartition]:
    """Every partition of {1..n}, via restricted growth strings."""
    if n == 0:
        return

    def grow(prefix: List[int], top: int) -> Iterator[List[int]]:
        if len(prefix) == n:
            yield prefix
            return
        for k in range(top + 2):
            yield from grow(prefix + [k], max(top, k))

    for rgs in grow([0], 0):
        groups: Dict[int, List[int]] = {}
        for p, k in enumerate(rgs, start=1):
            groups.setdefault(k, []).append(p)
        yield SetPartition(n, _canonical(groups.values()))


def bell(n: int) -> int:
    """Bell numbers by the Bell triangle."""
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1] if n > 0 else 1
