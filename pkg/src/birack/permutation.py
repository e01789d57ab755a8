"""Permutations of the label set {1..n}, with disjoint-cycle notation.

Labels are 1-based everywhere in the public interface, matching the cycle
notation used in birack files (``(1 3)(2 5)``, with ``ι`` or ``id`` for the
identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError, ParseError

IDENTITY_TOKENS = ("ι", "id")  # ι, id


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i]`` is the image of label i+1.

    >>> p = Permutation.from_cycles("(1 3)", 5)
    >>> p(1), p(2), p(3)
    (3, 2, 1)
    >>> str(p * p)
    'ι'
    """

    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if n == 0:
            raise InputError("permutation must have positive size")
        if sorted(self.images) != list(range(1, n + 1)):
            raise InputError(f"not a permutation of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, text: str, size: int) -> Permutation:
        """Parse disjoint-cycle notation on {1..size}.

        Cycle entries may be separated by spaces or commas; ``ι`` and ``id``
        denote the identity.
        """
        text = text.strip()
        if text in IDENTITY_TOKENS:
            return cls.identity(size)
        if not text.startswith("("):
            raise ParseError(f"expected cycle notation or identity, got {text!r}")
        images = list(range(1, size + 1))
        seen: set[int] = set()
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
                continue
            if ch != "(":
                raise ParseError(f"unexpected {ch!r} in cycle notation", position=i)
            close = text.find(")", i)
            if close < 0:
                raise ParseError("unclosed cycle", position=i)
            body = text[i + 1:close].replace(",", " ")
            try:
                entries = [int(tok) for tok in body.split()]
            except ValueError:
                raise ParseError(f"non-integer entry in cycle {text[i:close + 1]!r}", position=i)
            if not entries:
                raise ParseError("empty cycle", position=i)
            for x in entries:
                if not 1 <= x <= size:
                    raise ParseError(f"cycle entry {x} outside 1..{size}", position=i)
                if x in seen:
                    raise ParseError(f"label {x} repeated across cycles", position=i)
                seen.add(x)
            for a, b in zip(entries, entries[1:] + entries[:1]):
                images[a - 1] = b
            i = close + 1
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.size:
            raise InputError(f"label {x} outside 1..{self.size}")
        return self.images[x - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition: ``(p * q)(x) == p(q(x))``."""
        if self.size != other.size:
            raise InputError("cannot compose permutations of different sizes")
        return Permutation(tuple(self.images[i - 1] for i in other.images))

    @cached_property
    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for x, y in enumerate(self.images, start=1):
            inv[y - 1] = x
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return all(y == x for x, y in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each rotated to start at its least element and
        listed in increasing order of that element."""
        out = []
        seen: set[int] = set()
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_count(self) -> int:
        """Number of cycles including fixed points (orbit count)."""
        return len(self.cycles(include_fixed=True))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles(include_fixed=True)))

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return IDENTITY_TOKENS[0]
        return "".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in cycs)


def permutation_from(value, size: int) -> Permutation:
    """Coerce a cycle string, image sequence, or Permutation to a Permutation."""
    if isinstance(value, Permutation):
        if value.size != size:
            raise InputError(f"permutation has size {value.size}, expected {size}")
        return value
    if isinstance(value, str):
        return Permutation.from_cycles(value, size)
    if isinstance(value, Iterable):
        return Permutation(tuple(int(x) for x in value))
    raise InputError(f"cannot interpret {value!r} as a permutation")


def random_permutation(n: int, rng) -> Permutation:
    """A uniformly random permutation of {1..n} from the given ``random.Random``."""
    images = list(range(1, n + 1))
    rng.shuffle(images)
    return Permutation(tuple(images))


def is_bijection_row(row: Sequence[int], size: int) -> bool:
    """Whether ``row`` (1-based images) is a bijection of {1..size}."""
    return len(row) == size and sorted(row) == list(range(1, size + 1))
