"""Finite biracks: families of switch maps indexed by crossing-type tags.

A FiniteBirack bundles one SwitchMap per crossing type present in a knot
theory.  Only the positive crossing of each type is stored; the negative
crossing acts by the inverse bijection on pairs and is derived on demand.

Tags are single letters shared with the braid grammar: ``s`` classical,
``v`` virtual, ``q`` singular.
"""

from __future__ import annotations

from functools import cached_property
from typing import Iterable, Mapping

from .errors import InputError, StructureError
from .permutation import Permutation
from .switch import SwitchMap

CLASSICAL_TAG = "s"
VIRTUAL_TAG = "v"
SINGULAR_TAG = "q"
KNOWN_TAGS = (CLASSICAL_TAG, VIRTUAL_TAG, SINGULAR_TAG)


class FiniteBirack:
    """An immutable tag -> SwitchMap family of one common size."""

    def __init__(self, components: Mapping[str, SwitchMap] | Iterable[tuple[str, SwitchMap]],
                 name: str | None = None):
        items = tuple(sorted(dict(components).items()))
        if not items:
            raise InputError("a birack needs at least one component")
        sizes = {sw.size for _, sw in items}
        if len(sizes) != 1:
            raise InputError(f"component switches have mixed sizes {sorted(sizes)}")
        self._components = items
        self.name = name

    @classmethod
    def single(cls, switch: SwitchMap, tag: str = CLASSICAL_TAG, name: str | None = None) -> FiniteBirack:
        return cls({tag: switch}, name=name)

    @property
    def size(self) -> int:
        return self._components[0][1].size

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(tag for tag, _ in self._components)

    @property
    def components(self) -> dict[str, SwitchMap]:
        return dict(self._components)

    def component(self, tag: str) -> SwitchMap:
        for t, sw in self._components:
            if t == tag:
                return sw
        raise InputError(f"no component for crossing type {tag!r} "
                         f"(available: {', '.join(self.tags)})")

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteBirack) and self._components == other._components

    def __hash__(self) -> int:
        return hash(self._components)

    def __repr__(self) -> str:
        label = self.name or "birack"
        return f"<FiniteBirack {label} size={self.size} tags={','.join(self.tags)}>"

    # -- derived structure --------------------------------------------------

    def biquandle_tags(self) -> dict[str, bool]:
        """Per crossing type, whether that component satisfies the diagonal
        condition (an a-biquandle in that tag)."""
        return {tag: sw.is_biquandle for tag, sw in self._components}

    def stabilization_period(self, tag: str = CLASSICAL_TAG) -> int:
        sw = self.component(tag)
        if not sw.fully_formed:
            raise StructureError(f"component {tag!r} is not fully formed")
        return sw.stabilization_period

    def relabelled(self, perm: Permutation) -> FiniteBirack:
        return FiniteBirack({tag: sw.relabelled(perm) for tag, sw in self._components},
                            name=self.name)


def subbirack_closure(birack: FiniteBirack, labels: Iterable[int]) -> frozenset[int]:
    """The smallest subset containing ``labels`` closed under every up and
    down action of every component.

    For finite X, closure under the forward actions alone suffices: each row
    restricted to a closed subset is injective, hence bijective, so the
    inverse actions stay inside as well.
    """
    seed = frozenset(labels)
    n = birack.size
    if not seed:
        raise InputError("closure of the empty label set is undefined")
    for x in seed:
        if not 1 <= x <= n:
            raise InputError(f"label {x} outside 1..{n}")
    closed = set(seed)
    frontier = list(seed)
    switches = [sw for _, sw in sorted(birack.components.items())]
    while frontier:
        x = frontier.pop()
        for y in tuple(closed):
            for sw in switches:
                for new in (sw.up_of(y, x), sw.down_of(y, x),
                            sw.up_of(x, y), sw.down_of(x, y)):
                    if new not in closed:
                        closed.add(new)
                        frontier.append(new)
    return frozenset(closed)


def sub_biracks(birack: FiniteBirack) -> list[frozenset[int]]:
    """All nonempty closed subsets, smallest first (the sub-birack lattice)."""
    n = birack.size
    if n > 20:
        raise InputError("sub-birack lattice enumeration is limited to size 20")
    found = []
    switches = list(birack.components.values())
    for mask in range(1, 1 << n):
        subset = frozenset(x for x in range(1, n + 1) if mask >> (x - 1) & 1)
        if all(sw.up_of(y, x) in subset and sw.down_of(y, x) in subset
               for sw in switches for x in subset for y in subset):
            found.append(subset)
    found.sort(key=lambda s: (len(s), sorted(s)))
    return found
