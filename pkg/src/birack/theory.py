"""Knot-theory descriptors: which moves each theory permits, and the axiom
report a birack must satisfy to label diagrams in that theory.

The four built-in descriptors are the classical-style theories whose
labelling counts stratify by writhe: classical knots, rotational virtual
knots, and the singular varieties of both.  They share one constraint: the
only first move permitted is the classical one.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .birack import CLASSICAL_TAG, SINGULAR_TAG, VIRTUAL_TAG, FiniteBirack
from .errors import InputError
from .switch import CheckResult, check_commute, check_fully_formed, check_yang_baxter


@dataclass(frozen=True)
class TheoryDescriptor:
    """Move permissions of a generalised knot theory.

    ``dominance`` holds ordered pairs (a, b): the braid-like triple move
    where two a-crossings slide past a b-crossing is permitted.
    ``commuting`` holds unordered pairs (stored sorted) for the permitted
    crossing-swap move.
    """

    name: str
    crossing_types: frozenset[str]
    regular: frozenset[str]
    r1_permitted: frozenset[str]
    dominance: frozenset[tuple[str, str]]
    commuting: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        for tag in self.regular | self.r1_permitted:
            if tag not in self.crossing_types:
                raise InputError(f"theory {self.name!r} references undeclared type {tag!r}")
        for a, b in self.dominance | self.commuting:
            if a not in self.crossing_types or b not in self.crossing_types:
                raise InputError(f"theory {self.name!r} pairs undeclared types ({a}, {b})")

    def forbidden_dominance(self) -> tuple[tuple[str, str], ...]:
        return tuple(sorted(
            (a, b)
            for a in sorted(self.crossing_types)
            for b in sorted(self.crossing_types)
            if (a, b) not in self.dominance
        ))


def _pairs(*pairs: tuple[str, str]) -> frozenset[tuple[str, str]]:
    return frozenset(pairs)


CLASSICAL = TheoryDescriptor(
    name="classical",
    crossing_types=frozenset({CLASSICAL_TAG}),
    regular=frozenset({CLASSICAL_TAG}),
    r1_permitted=frozenset({CLASSICAL_TAG}),
    dominance=_pairs(("s", "s")),
)

ROTATIONAL = TheoryDescriptor(
    name="rotational",
    crossing_types=frozenset({CLASSICAL_TAG, VIRTUAL_TAG}),
    regular=frozenset({CLASSICAL_TAG, VIRTUAL_TAG}),
    r1_permitted=frozenset({CLASSICAL_TAG}),
    dominance=_pairs(("s", "s"), ("v", "v"), ("v", "s")),
)

SINGULAR = TheoryDescriptor(
    name="singular",
    crossing_types=frozenset({CLASSICAL_TAG, SINGULAR_TAG}),
    regular=frozenset({CLASSICAL_TAG, SINGULAR_TAG}),
    r1_permitted=frozenset({CLASSICAL_TAG}),
    dominance=_pairs(("s", "s"), ("s", "q")),
    commuting=_pairs(("q", "s")),
)

SINGULAR_ROTATIONAL = TheoryDescriptor(
    name="singular-rotational",
    crossing_types=frozenset({CLASSICAL_TAG, VIRTUAL_TAG, SINGULAR_TAG}),
    regular=frozenset({CLASSICAL_TAG, VIRTUAL_TAG, SINGULAR_TAG}),
    r1_permitted=frozenset({CLASSICAL_TAG}),
    dominance=_pairs(("s", "s"), ("v", "v"), ("v", "s"), ("s", "q"), ("v", "q")),
    commuting=_pairs(("q", "s"), ("q", "v")),
)

THEORIES: dict[str, TheoryDescriptor] = {
    t.name: t for t in (CLASSICAL, ROTATIONAL, SINGULAR, SINGULAR_ROTATIONAL)
}


def theory(name: str) -> TheoryDescriptor:
    try:
        return THEORIES[name]
    except KeyError:
        raise InputError(f"unknown theory {name!r} (choose from {', '.join(sorted(THEORIES))})")


@dataclass(frozen=True)
class CheckReport:
    """A list of named axiom checks; passes only if every entry passes."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def __iter__(self):
        return iter(self.checks)

    def __str__(self) -> str:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"{status}  {c.name}{suffix}")
        return "\n".join(lines)


def check_birack_for_theory(birack: FiniteBirack, descriptor: TheoryDescriptor,
                            essential: bool = False) -> CheckReport:
    """Verify the birack axioms for the given theory.

    Checks, in order: a component exists for every declared crossing type;
    regular components are fully formed; every permitted dominance pair
    satisfies the composite triple-move equation; every permitted commuting
    pair commutes.  With ``essential=True`` additionally requires every
    forbidden dominance pair to fail its triple-move equation somewhere.
    """
    extra = set(birack.tags) - set(descriptor.crossing_types)
    if extra:
        raise InputError(
            f"birack has components {sorted(extra)} not in theory {descriptor.name!r}")
    checks: list[CheckResult] = []
    present = dict(birack.components)
    for tag in sorted(descriptor.crossing_types):
        if tag not in present:
            checks.append(CheckResult(f"component({tag})", False,
                                      f"no component for crossing type {tag!r}"))
    available = lambda *tags: all(t in present for t in tags)

    for tag in sorted(descriptor.regular):
        if available(tag):
            result = check_fully_formed(present[tag])
            checks.append(CheckResult(f"fully_formed({tag})", result.passed, result.witness))
    for a, b in sorted(descriptor.dominance):
        if available(a, b):
            result = check_yang_baxter(present[a], present[b])
            checks.append(CheckResult(f"dominance({a},{a},{b})", result.passed, result.witness))
    for a, b in sorted(descriptor.commuting):
        if available(a, b):
            result = check_commute(present[a], present[b])
            checks.append(CheckResult(f"commute({a},{b})", result.passed, result.witness))
    if essential:
        for a, b in descriptor.forbidden_dominance():
            if available(a, b):
                result = check_yang_baxter(present[a], present[b])
                checks.append(CheckResult(
                    f"respects_forbidden({a},{a},{b})", not result.passed,
                    None if not result.passed else
                    f"forbidden triple move ({a},{a},{b}) is supported everywhere"))
    return CheckReport(tuple(checks))
