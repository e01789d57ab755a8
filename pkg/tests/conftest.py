"""Shared fixtures and independent reference implementations.

The reference helpers here deliberately avoid the library's fast paths:
cycle strings are evaluated by regex orbit-walking, and labelling counts
are recomputed by plain dictionary lookups over itertools products.  Tests
freeze derived expected values only after computing them with these.
"""

from __future__ import annotations

import itertools
import random
import re

import pytest

from birack import (BraidGenerator, BraidWord, FiniteBirack, Permutation,
                    SwitchMap, builtin)
from birack.permutation import random_permutation

CATALOG_NAMES = ("R5_40", "R6_114", "BR6_125")


@pytest.fixture(scope="session")
def catalog() -> dict[str, FiniteBirack]:
    return {name: builtin(name) for name in CATALOG_NAMES}


def eval_cycles(text: str, n: int) -> dict[int, int]:
    """Independent cycle-notation evaluator (regex + orbit walk)."""
    mapping = {x: x for x in range(1, n + 1)}
    if text.strip() in ("id", "ι"):
        return mapping
    for body in re.findall(r"\(([^()]*)\)", text):
        entries = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
        for a, b in zip(entries, entries[1:] + entries[:1]):
            mapping[a] = b
    return mapping


def random_switch(rng: random.Random, n: int, rack: bool = False) -> SwitchMap:
    up = tuple(random_permutation(n, rng) for _ in range(n))
    if rack:
        down = tuple(Permutation.identity(n) for _ in range(n))
    else:
        down = tuple(random_permutation(n, rng) for _ in range(n))
    return SwitchMap(up, down)


def random_fully_formed_switch(rng: random.Random, n: int) -> SwitchMap:
    while True:
        sw = random_switch(rng, n)
        if sw.fully_formed:
            return sw


def random_word(rng: random.Random, strands: int | None = None,
                length: int | None = None, tags=("s",), signed: bool = True) -> BraidWord:
    r = strands if strands is not None else rng.randint(1, 4)
    n_gens = length if length is not None else rng.randint(0, 8)
    gens = []
    if r > 1:
        for _ in range(n_gens):
            gens.append(BraidGenerator(rng.randint(1, r - 1), rng.choice(tags),
                                       rng.choice((1, -1)) if signed else 1))
    return BraidWord(r, tuple(gens))


def brute_pair_maps(birack: FiniteBirack, tag: str):
    """Forward/backward crossing action on 0-based (lower, upper) pairs,
    straight from the defining relation: the switch reads the incoming
    column top-first, S(upper, lower) = (new upper, new lower)."""
    sw = birack.component(tag)
    n = sw.size
    fwd = {}
    for p in range(1, n + 1):
        for q in range(1, n + 1):
            new_q, new_p = sw.apply(q, p)
            fwd[(p - 1, q - 1)] = (new_p - 1, new_q - 1)
    bwd = {v: k for k, v in fwd.items()}
    assert len(bwd) == n * n, "brute tables need a fully formed switch"
    return fwd, bwd


def brute_count(word: BraidWord, birack: FiniteBirack) -> int:
    """Reference labelling count: dict-based action over all vectors."""
    n = birack.size
    tables = {tag: brute_pair_maps(birack, tag) for tag in word.tags_used()}
    count = 0
    for vec in itertools.product(range(n), repeat=word.strands):
        cur = list(vec)
        for g in word.gens:
            fwd, bwd = tables[g.tag]
            i = g.position - 1
            pair = (cur[i], cur[i + 1])
            cur[i], cur[i + 1] = fwd[pair] if g.polarity > 0 else bwd[pair]
        if tuple(cur) == vec:
            count += 1
    return count


def brute_closure(birack: FiniteBirack, labels) -> frozenset[int]:
    """Reference sub-birack closure by repeated full sweeps."""
    current = set(labels)
    switches = list(birack.components.values())
    while True:
        new = set(current)
        for x in current:
            for y in current:
                for sw in switches:
                    new.add(sw.up_of(y, x))
                    new.add(sw.down_of(y, x))
        if new == current:
            return frozenset(current)
        current = new
