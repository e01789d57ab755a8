"""Switch maps on ordered label pairs, their sideways companions, and the
axiom checks they must satisfy.

Conventions, fixed project-wide:

* A switch S on the label set X = {1..n} is stored as two families of
  permutations: ``up`` rows (row a sends y to y^a) and ``down`` rows
  (row a sends y to y_a).  Applied to an ordered pair it realises the
  crossing relation ``S(x, y) = (y_x, x^y)``.
* A switch whose rows are all bijections is *formed*; SwitchMap enforces
  this at construction.  It is *fully formed* when the induced map on
  ordered pairs is itself a bijection; that is checked lazily and cached.
* The sideways map (twitch) T is the companion bijection defined by
  ``S(u, x) = (v, y)  <=>  T(x, y) = (u, v)``.  For a formed switch it is
  total and bijective; the reverse construction ``twitch_to_switch`` can
  fail, which is exactly how invertible-but-not-formed switches show up.
* Composite maps on triples are composed right to left: in
  ``(Sa x 1)(1 x Sa)(Sb x 1)`` the factor ``(Sb x 1)`` acts first.

All values here are immutable after construction; cached properties are
computed idempotently and may be shared across threads or processes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from math import lcm

from .errors import InputError, StructureError
from .permutation import Permutation, is_bijection_row, permutation_from


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single named axiom check, with a witness on failure."""

    name: str
    passed: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.passed


@dataclass(frozen=True)
class PairMap:
    """A function X^2 -> X^2 stored as an explicit table.

    ``entries[(x-1)*n + (y-1)]`` is the image of (x, y), 1-based.  The table
    need not be a bijection; twitch tables built from degenerate data are
    represented here too, so that their defects can be reported.
    """

    size: int
    entries: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if len(self.entries) != self.size * self.size:
            raise InputError("pair table has wrong length")

    @classmethod
    def from_function(cls, n: int, fn) -> PairMap:
        return cls(n, tuple(fn(x, y) for x in range(1, n + 1) for y in range(1, n + 1)))

    def apply(self, x: int, y: int) -> tuple[int, int]:
        n = self.size
        if not (1 <= x <= n and 1 <= y <= n):
            raise InputError(f"pair ({x}, {y}) outside 1..{n} squared")
        return self.entries[(x - 1) * n + (y - 1)]

    def pairs(self):
        """Iterate ((x, y), (z, w)) over the whole table."""
        n = self.size
        for i, image in enumerate(self.entries):
            yield (i // n + 1, i % n + 1), image

    @cached_property
    def bijection_witness(self) -> str | None:
        """None when bijective, else a message naming a pair with two preimages."""
        seen: dict[tuple[int, int], tuple[int, int]] = {}
        for src, image in self.pairs():
            if image in seen:
                return f"pair {image} has preimages {seen[image]} and {src}"
            seen[image] = src
        return None

    @property
    def is_bijection(self) -> bool:
        return self.bijection_witness is None

    def inverse(self) -> PairMap:
        witness = self.bijection_witness
        if witness is not None:
            raise StructureError(f"pair map is not a bijection: {witness}")
        n = self.size
        inv: list[tuple[int, int] | None] = [None] * (n * n)
        for src, (z, w) in self.pairs():
            inv[(z - 1) * n + (w - 1)] = src
        return PairMap(n, tuple(inv))  # type: ignore[arg-type]

    def compose(self, other: PairMap) -> PairMap:
        """``self`` after ``other``: (self o other)(x, y)."""
        if self.size != other.size:
            raise InputError("cannot compose pair maps of different sizes")
        return PairMap(self.size, tuple(self.apply(*img) for _, img in other.pairs()))

    def diagonal_fixed_count(self) -> int:
        """How many x have (x, x) fixed pointwise by this map."""
        return sum(1 for x in range(1, self.size + 1) if self.apply(x, x) == (x, x))


def swap_map(n: int) -> PairMap:
    """tau(a, b) = (b, a); also the switch of the identity-rows structure."""
    return PairMap.from_function(n, lambda x, y: (y, x))


@dataclass(frozen=True)
class SwitchMap:
    """One crossing type's switch: up rows, down rows, crossing relation.

    Construction validates formedness eagerly; pass raw candidate rows to
    :func:`check_formed` instead when a report is wanted rather than an
    exception.
    """

    up: tuple[Permutation, ...]
    down: tuple[Permutation, ...]

    def __post_init__(self):
        n = len(self.up)
        if n == 0 or len(self.down) != n:
            raise StructureError("up and down must be non-empty row families of equal size")
        for label, row in enumerate(itertools.chain(self.up, self.down), start=1):
            if row.size != n:
                which = "up" if label <= n else "down"
                raise StructureError(f"{which} row {((label - 1) % n) + 1} has size {row.size}, expected {n}")

    @classmethod
    def from_rows(cls, up_rows, down_rows=None, *, size: int | None = None) -> SwitchMap:
        """Build from sequences of rows (cycle strings, image tuples, or
        Permutations).  ``down_rows=None`` means all-identity down rows."""
        up_rows = list(up_rows)
        if size is None:
            size = len(up_rows)
        if down_rows is None:
            down_rows = [Permutation.identity(size)] * size
        up = tuple(permutation_from(r, size) for r in up_rows)
        down = tuple(permutation_from(r, size) for r in down_rows)
        return cls(up, down)

    @classmethod
    def identity(cls, n: int) -> SwitchMap:
        """All rows identity; the switch is the swap (x, y) -> (y, x)."""
        rows = tuple(Permutation.identity(n) for _ in range(n))
        return cls(rows, rows)

    @property
    def size(self) -> int:
        return len(self.up)

    # -- the four basic operations x^a, x_a and their bar inverses --------

    def up_of(self, x: int, a: int) -> int:
        """x^a."""
        return self.up[a - 1](x)

    def down_of(self, x: int, a: int) -> int:
        """x_a."""
        return self.down[a - 1](x)

    def up_bar(self, x: int, a: int) -> int:
        """x^{a-bar}, the inverse of the up action."""
        return self.up[a - 1].inverse(x)

    def down_bar(self, x: int, a: int) -> int:
        """x_{a-bar}, the inverse of the down action."""
        return self.down[a - 1].inverse(x)

    def apply(self, x: int, y: int) -> tuple[int, int]:
        """The crossing relation (z, w) = (y_x, x^y)."""
        n = self.size
        if not (1 <= x <= n and 1 <= y <= n):
            raise InputError(f"labels ({x}, {y}) outside 1..{n}")
        return self.down[x - 1](y), self.up[y - 1](x)

    @cached_property
    def pair_map(self) -> PairMap:
        return PairMap.from_function(self.size, self.apply)

    @cached_property
    def fully_formed(self) -> bool:
        return self.pair_map.is_bijection

    def invert(self) -> PairMap:
        """The inverse bijection on ordered pairs (the negative crossing).

        The result is a bare pair table: inverses of switches are generally
        not of switch form themselves.
        """
        witness = self.pair_map.bijection_witness
        if witness is not None:
            raise StructureError(f"switch is not fully formed: {witness}")
        return self.pair_map.inverse()

    @cached_property
    def sideways(self) -> PairMap:
        """The twitch table T with S(u, x) = (v, y) <=> T(x, y) = (u, v).

        Total and bijective for every formed switch; verified defensively.
        """
        n = self.size
        table: list[tuple[int, int] | None] = [None] * (n * n)
        for u in range(1, n + 1):
            for x in range(1, n + 1):
                v, y = self.apply(u, x)
                idx = (x - 1) * n + (y - 1)
                if table[idx] is not None:
                    raise StructureError(
                        f"not formed/fully formed: twitch argument ({x}, {y}) receives two images"
                    )
                table[idx] = (u, v)
        missing = [i for i, img in enumerate(table) if img is None]
        if missing:
            x, y = missing[0] // n + 1, missing[0] % n + 1
            raise StructureError(
                f"not formed/fully formed: twitch argument ({x}, {y}) receives no image"
            )
        return PairMap(n, tuple(table))  # type: ignore[arg-type]

    @cached_property
    def w_map(self) -> PairMap:
        """W = tau o T, the pair transformation driven by successive
        positive stabilizations."""
        return swap_map(self.size).compose(self.sideways)

    def pair_period(self, x: int, y: int) -> int:
        """Length of the W-cycle through (x, y)."""
        if not self.fully_formed:
            raise StructureError("pair periods require a fully formed switch")
        start = (x, y)
        cur = self.w_map.apply(*start)
        period = 1
        while cur != start:
            cur = self.w_map.apply(*cur)
            period += 1
        return period

    @cached_property
    def stabilization_period(self) -> int:
        """The least k >= 1 with W^k mapping the diagonal onto itself setwise.

        Setwise preservation suffices: diagonal points may be permuted among
        themselves, so k can be smaller than every individual pair period.
        """
        if not self.fully_formed:
            raise StructureError("stabilization period requires a fully formed switch")
        n = self.size
        diagonal = frozenset((x, x) for x in range(1, n + 1))
        bound = lcm(*(self.pair_period(x, x) for x in range(1, n + 1)))
        current = diagonal
        for k in range(1, bound + 1):
            current = frozenset(self.w_map.apply(*p) for p in current)
            if current == diagonal:
                return k
        raise AssertionError("kth power bound exceeded; unreachable for bijective W")

    # -- structural predicates --------------------------------------------

    @cached_property
    def biquandle_witness(self) -> str | None:
        """None when x^y = y <=> y_x = x holds for all x, y, else a witness."""
        for x in range(1, self.size + 1):
            for y in range(1, self.size + 1):
                if (self.up_of(x, y) == y) != (self.down_of(y, x) == x):
                    return (f"x={x}, y={y}: x^y={self.up_of(x, y)}, "
                            f"y_x={self.down_of(y, x)}")
        return None

    @property
    def is_biquandle(self) -> bool:
        return self.biquandle_witness is None

    def relabelled(self, perm: Permutation) -> SwitchMap:
        """Transport the structure along a relabelling of X."""
        n = self.size
        if perm.size != n:
            raise InputError("relabelling permutation has wrong size")
        inv = perm.inverse

        def conjugate(rows: tuple[Permutation, ...]) -> tuple[Permutation, ...]:
            return tuple(
                Permutation(tuple(perm(rows[inv(a) - 1](inv(b))) for b in range(1, n + 1)))
                for a in range(1, n + 1)
            )

        return SwitchMap(conjugate(self.up), conjugate(self.down))


def twitch_to_switch(twitch: PairMap) -> SwitchMap:
    """Rebuild the switch from a twitch table; inverse of ``SwitchMap.sideways``.

    Raises StructureError when some switch argument receives zero or two
    images (the twitch was not formed), or when the resulting rows are not
    bijections (the switch is invertible but not formed).
    """
    n = twitch.size
    table: list[tuple[int, int] | None] = [None] * (n * n)
    for (x, y), (u, v) in twitch.pairs():
        idx = (u - 1) * n + (x - 1)
        if table[idx] is not None:
            raise StructureError(
                f"not formed/fully formed: switch argument ({u}, {x}) receives two images"
            )
        table[idx] = (v, y)
    missing = [i for i, img in enumerate(table) if img is None]
    if missing:
        u, x = missing[0] // n + 1, missing[0] % n + 1
        raise StructureError(
            f"not formed/fully formed: switch argument ({u}, {x}) receives no image"
        )
    # S(u, x) = (x_u, u^x): first components fill down row u, second up row x.
    down_rows = [[0] * n for _ in range(n)]
    up_rows = [[0] * n for _ in range(n)]
    for i, (v, y) in enumerate(table):  # type: ignore[misc]
        u, x = i // n + 1, i % n + 1
        down_rows[u - 1][x - 1] = v
        up_rows[x - 1][u - 1] = y
    for which, rows in (("down", down_rows), ("up", up_rows)):
        for a, row in enumerate(rows, start=1):
            if not is_bijection_row(row, n):
                raise StructureError(
                    f"resulting switch is not formed: {which} row {a} = {tuple(row)} is not a bijection"
                )
    return SwitchMap.from_rows([tuple(r) for r in up_rows], [tuple(r) for r in down_rows])


# -- report-style checks on raw candidates or built switches ---------------


def check_formed(up_rows, down_rows, *, size: int | None = None) -> CheckResult:
    """Are all rows bijections?  Accepts raw rows; never raises on bad data."""
    up_rows = [list(r) for r in up_rows]
    down_rows = [list(r) for r in down_rows]
    n = size if size is not None else len(up_rows)
    for which, rows in (("up", up_rows), ("down", down_rows)):
        if len(rows) != n:
            return CheckResult("formed", False, f"{which} has {len(rows)} rows, expected {n}")
        for a, row in enumerate(rows, start=1):
            if not is_bijection_row(row, n):
                return CheckResult("formed", False, f"{which} row {a} = {tuple(row)} is not a bijection")
    return CheckResult("formed", True)


def check_fully_formed(switch: SwitchMap) -> CheckResult:
    witness = switch.pair_map.bijection_witness
    return CheckResult("fully_formed", witness is None, witness)


def check_biquandle(switch: SwitchMap) -> CheckResult:
    witness = switch.biquandle_witness
    return CheckResult("biquandle", witness is None, witness)


def _triple_maps(sa: SwitchMap, sb: SwitchMap):
    """The two composite maps on ordered triples whose equality expresses
    compatibility of the braid-like triple move R3(a, a, b)."""

    def low(s: SwitchMap, t):
        z, w = s.apply(t[0], t[1])
        return (z, w, t[2])

    def high(s: SwitchMap, t):
        z, w = s.apply(t[1], t[2])
        return (t[0], z, w)

    def lhs(t):
        return low(sa, high(sa, low(sb, t)))

    def rhs(t):
        return high(sb, low(sa, high(sa, t)))

    return lhs, rhs


def check_yang_baxter(sa: SwitchMap, sb: SwitchMap) -> CheckResult:
    """Brute-force the composite-map equation over all ordered triples."""
    if sa.size != sb.size:
        raise InputError("switches have different sizes")
    lhs, rhs = _triple_maps(sa, sb)
    n = sa.size
    for t in itertools.product(range(1, n + 1), repeat=3):
        left, right = lhs(t), rhs(t)
        if left != right:
            return CheckResult(
                "yang_baxter", False,
                f"triple {t}: composites give {left} vs {right}")
    return CheckResult("yang_baxter", True)


def yang_baxter_identities(s: SwitchMap) -> CheckResult:
    """The three sideways-form identities for the self move, checked on all
    triples.  Cross-validated against :func:`check_yang_baxter` in tests."""
    up, dn = s.up_of, s.down_of
    n = s.size
    for x, y, z in itertools.product(range(1, n + 1), repeat=3):
        if dn(dn(z, x), dn(y, x)) != dn(dn(z, y), up(x, y)):
            return CheckResult("yang_baxter_identities", False,
                               f"x={x}, y={y}, z={z}: down-down identity fails")
        if up(up(x, z), up(y, z)) != up(up(x, y), dn(z, y)):
            return CheckResult("yang_baxter_identities", False,
                               f"x={x}, y={y}, z={z}: up-up identity fails")
        if up(dn(y, x), dn(z, x)) != dn(up(y, z), up(x, z)):
            return CheckResult("yang_baxter_identities", False,
                               f"x={x}, y={y}, z={z}: mixed identity fails")
    return CheckResult("yang_baxter_identities", True)


def check_commute(sa: SwitchMap, sb: SwitchMap) -> CheckResult:
    """Sa o Sb = Sb o Sa on pairs, plus both mixed twitch conditions
    Ta o Tb^-1 = Tb o Ta^-1 and Ta^-1 o Tb = Tb^-1 o Ta."""
    if sa.size != sb.size:
        raise InputError("switches have different sizes")
    for s, label in ((sa, "first"), (sb, "second")):
        if not s.fully_formed:
            raise StructureError(f"{label} switch is not fully formed")
    pa, pb = sa.pair_map, sb.pair_map
    if pa.compose(pb) != pb.compose(pa):
        for src, _ in pa.pairs():
            if pa.apply(*pb.apply(*src)) != pb.apply(*pa.apply(*src)):
                return CheckResult("commute", False, f"switch composition differs at {src}")
    ta, tb = sa.sideways, sb.sideways
    ta_inv, tb_inv = ta.inverse(), tb.inverse()
    if ta.compose(tb_inv) != tb.compose(ta_inv):
        return CheckResult("commute", False, "twitch condition T_a T_b^-1 = T_b T_a^-1 fails")
    if ta_inv.compose(tb) != tb_inv.compose(ta):
        return CheckResult("commute", False, "twitch condition T_a^-1 T_b = T_b^-1 T_a fails")
    return CheckResult("commute", True)
