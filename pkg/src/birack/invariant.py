"""The braid action on label vectors, labelling counts, and the (refined)
birack polynomial.

Crossing convention, frozen project-wide: at a positive generator the upper
incoming strand feeds the first switch argument, so with lower label p and
upper label q the new pair is ``(new_p, new_q) = (q^p, p_q)``.  This is the
orientation consistent with the sideways map, and it reproduces the bundled
reference tables exactly.  The mirror assignment (lower strand first) is
implemented behind the same constant and reproduces the tables as well,
being the mirror-image convention; the *crossed* write-back, which swaps
the inputs without swapping the outputs, breaks move invariance and is kept
only as a documented counterexample in the tests.  Negative generators act
by the inverse pair bijection, so a crossing followed by its inverse is the
identity by construction.

Counting is plain enumeration of X^r in odometer order (strand 1 is the
most significant digit), vectorised over fixed-size blocks.  Workers may
partition the leading-strand label range via ``lead_range``; partial
censuses merge by addition, so results are deterministic regardless of the
split.  An enumeration whose total vector count exceeds the budget is
refused up front.

``oracle_count`` recounts labellings by an entirely different method --
constraint propagation with backtracking over one unknown per arc of the
closed diagram -- and exists to cross-check the enumeration.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .birack import CLASSICAL_TAG, FiniteBirack
from .braid import BraidWord
from .errors import BudgetError, InputError, StructureError, UnsupportedTheoryError
from .polynomial import BirackPolynomial
from .birack import subbirack_closure

DEFAULT_BUDGET = 10**8
CROSSING_CONVENTION = "sideways"  # frozen; see module docstring
_BLOCK_ROWS = 1 << 16

CLASSICAL_TRACE_TAGS = frozenset({"s", "v", "q"})


def _switch_tables(birack: FiniteBirack, tag: str) -> tuple[np.ndarray, np.ndarray]:
    sw = birack.component(tag)
    n = sw.size
    up = np.array([[row(b) - 1 for b in range(1, n + 1)] for row in sw.up], dtype=np.int64)
    down = np.array([[row(b) - 1 for b in range(1, n + 1)] for row in sw.down], dtype=np.int64)
    return up, down


def _generator_tables(birack: FiniteBirack, tags, convention: str):
    """Per (tag, polarity): 0-based lookup tables (new_lower, new_upper),
    each indexed [lower, upper].  Requires every used tag fully formed."""
    n = birack.size
    tables = {}
    for tag in sorted(set(tags)):
        up, down = _switch_tables(birack, tag)
        p = np.arange(n)[:, None]  # lower
        q = np.arange(n)[None, :]  # upper
        if convention == "sideways":
            new_p, new_q = up[p, q], down[q, p]
        elif convention == "mirror":
            new_p, new_q = down[p, q], up[q, p]
        elif convention == "crossed":
            new_p, new_q = down[q, p], up[p, q]
        else:
            raise InputError(f"unknown crossing convention {convention!r}")
        new_p = new_p + np.zeros((n, n), dtype=np.int64)
        new_q = new_q + np.zeros((n, n), dtype=np.int64)
        inv_p = np.full((n, n), -1, dtype=np.int64)
        inv_q = np.full((n, n), -1, dtype=np.int64)
        inv_p[new_p, new_q] = p + np.zeros((n, n), dtype=np.int64)
        inv_q[new_p, new_q] = q + np.zeros((n, n), dtype=np.int64)
        if (inv_p < 0).any():
            raise StructureError(f"component {tag!r} is not fully formed; "
                                 "negative crossings have no well-defined action")
        tables[(tag, 1)] = (new_p, new_q)
        tables[(tag, -1)] = (inv_p, inv_q)
    return tables


def _apply_word(block: np.ndarray, word: BraidWord, tables) -> None:
    """Apply the braid action in place to a (rows, strands) block."""
    for g in word.gens:
        new_p_tab, new_q_tab = tables[(g.tag, g.polarity)]
        i = g.position - 1
        p, q = block[:, i], block[:, i + 1]
        new_p = new_p_tab[p, q]
        new_q = new_q_tab[p, q]
        block[:, i] = new_p
        block[:, i + 1] = new_q


def braid_action(word: BraidWord, birack: FiniteBirack, vector,
                 convention: str = CROSSING_CONVENTION) -> tuple[int, ...]:
    """Apply the braid to one label vector (1-based labels, one per strand)."""
    vec = tuple(vector)
    n = birack.size
    if len(vec) != word.strands:
        raise InputError(f"vector has {len(vec)} entries, expected {word.strands}")
    if any(not 1 <= x <= n for x in vec):
        raise InputError(f"labels must lie in 1..{n}")
    tables = _generator_tables(birack, word.tags_used(), convention)
    block = np.array([vec], dtype=np.int64) - 1
    _apply_word(block, word, tables)
    return tuple(int(x) + 1 for x in block[0])


@dataclass
class LabellingCensus:
    """Count of labellings, optionally with a histogram of the sizes of the
    smallest sub-biracks containing each labelling's arc labels."""

    count: int
    sizes: dict[int, int] | None = None

    def merge(self, other: LabellingCensus) -> LabellingCensus:
        sizes = None
        if self.sizes is not None or other.sizes is not None:
            sizes = dict(self.sizes or {})
            for k, v in (other.sizes or {}).items():
                sizes[k] = sizes.get(k, 0) + v
        return LabellingCensus(self.count + other.count, sizes)


def _check_budget(n: int, strands: int, budget: int) -> None:
    required = n**strands
    if required > budget:
        raise BudgetError(
            f"enumerating {n}^{strands} = {required} label vectors exceeds the "
            f"budget of {budget}; rerun with a budget of at least {required}",
            required=required, budget=budget)


def _suffix_block(n: int, strands: int, lead: int, start: int, stop: int) -> np.ndarray:
    """Rows [start, stop) of the odometer over vectors with leading label
    ``lead`` (0-based), strand 2 the next most significant digit."""
    rows = stop - start
    block = np.empty((rows, strands), dtype=np.int64)
    block[:, 0] = lead
    idx = np.arange(start, stop, dtype=np.int64)
    for col in range(strands - 1, 0, -1):
        block[:, col] = idx % n
        idx //= n
    return block


def labelling_census(word: BraidWord, birack: FiniteBirack, *, refined: bool = False,
                     budget: int = DEFAULT_BUDGET, lead_range: tuple[int, int] | None = None,
                     convention: str = CROSSING_CONVENTION) -> LabellingCensus:
    """Count fixed label vectors of the braid action by block enumeration.

    ``lead_range`` restricts strand 1 to labels [lo, hi) (1-based) so that
    callers can fan the enumeration out over workers; the budget guard is
    applied to the whole enumeration either way, keeping refusals
    deterministic.  With ``refined=True`` the census also bins each fixed
    vector by the size of the smallest sub-birack containing the labels on
    all arcs of the closed diagram (every intermediate vector included).
    """
    n = birack.size
    r = word.strands
    _check_budget(n, r, budget)
    tables = _generator_tables(birack, word.tags_used(), convention)
    lo, hi = lead_range if lead_range is not None else (1, n + 1)
    if not (1 <= lo <= hi <= n + 1):
        raise InputError(f"lead range [{lo}, {hi}) outside 1..{n}")
    suffixes = n ** (r - 1)
    count = 0
    sizes: dict[int, int] | None = {} if refined else None
    closure_memo: dict[int, int] = {}
    for lead in range(lo - 1, hi - 1):
        for start in range(0, suffixes, _BLOCK_ROWS):
            stop = min(start + _BLOCK_ROWS, suffixes)
            initial = _suffix_block(n, r, lead, start, stop)
            block = initial.copy()
            _apply_word(block, word, tables)
            fixed_mask = (block == initial).all(axis=1)
            count += int(fixed_mask.sum())
            if refined and fixed_mask.any():
                _bin_by_closure(initial[fixed_mask], word, birack, tables,
                                sizes, closure_memo)
    return LabellingCensus(count, sizes)


def _bin_by_closure(fixed: np.ndarray, word: BraidWord, birack: FiniteBirack,
                    tables, sizes: dict[int, int], memo: dict[int, int]) -> None:
    """Replay the action on the fixed vectors, collecting every arc label,
    and bin each vector by its smallest containing sub-birack size."""
    m, _ = fixed.shape
    n = birack.size
    present = np.zeros((m, n), dtype=bool)
    rows = np.arange(m)
    present[rows[:, None], fixed] = True
    block = fixed.copy()
    for g in word.gens:
        new_p_tab, new_q_tab = tables[(g.tag, g.polarity)]
        i = g.position - 1
        p, q = block[:, i], block[:, i + 1]
        new_p, new_q = new_p_tab[p, q], new_q_tab[p, q]
        block[:, i] = new_p
        block[:, i + 1] = new_q
        present[rows, new_p] = True
        present[rows, new_q] = True
    masks = present @ (1 << np.arange(n, dtype=np.int64))
    for mask in masks.tolist():
        size = memo.get(mask)
        if size is None:
            labels = [x + 1 for x in range(n) if mask >> x & 1]
            size = len(subbirack_closure(birack, labels))
            memo[mask] = size
        sizes[size] = sizes.get(size, 0) + 1


def count_labellings(word: BraidWord, birack: FiniteBirack, *,
                     budget: int = DEFAULT_BUDGET,
                     lead_range: tuple[int, int] | None = None,
                     convention: str = CROSSING_CONVENTION) -> int:
    """|{x in X^r : the braid action fixes x}|, by enumeration."""
    return labelling_census(word, birack, budget=budget, lead_range=lead_range,
                            convention=convention).count


def _require_classical(word: BraidWord, birack: FiniteBirack) -> None:
    bad = word.tags_used() - CLASSICAL_TRACE_TAGS
    if bad:
        raise UnsupportedTheoryError(
            f"no polynomial is defined for crossing types {sorted(bad)}")
    if CLASSICAL_TAG not in birack.tags:
        raise InputError("polynomial needs a classical component to stabilize with")
    if not birack.component(CLASSICAL_TAG).fully_formed:
        raise StructureError("classical component must be fully formed")


def birack_polynomial(word: BraidWord, birack: FiniteBirack, *,
                      refined: bool = False, budget: int = DEFAULT_BUDGET,
                      census_fn=None,
                      convention: str = CROSSING_CONVENTION) -> BirackPolynomial:
    """The writhe-stratified labelling-count polynomial of the closure.

    Coefficient assembly: with k the stabilization period and w0 the writhe
    of the word, the count after j extra positive classical stabilizations
    lands on residue (w0 + j) mod k; the j = 0..k-1 counts fill all
    residues.  ``census_fn(word, birack, refined)`` may be supplied to run
    the per-stabilization censuses elsewhere (e.g. on a worker pool); it
    must agree with :func:`labelling_census`.
    """
    _require_classical(word, birack)
    if census_fn is None:
        def census_fn(w, b, ref):
            return labelling_census(w, b, refined=ref, budget=budget,
                                    convention=convention)
    k = birack.stabilization_period(CLASSICAL_TAG)
    w0 = word.writhe()
    coefficients = [0] * k
    refined_parts: list[tuple[tuple[int, int], ...]] = [()] * k
    for j in range(k):
        census = census_fn(word.stabilized(j), birack, refined)
        residue = (w0 + j) % k
        coefficients[residue] = census.count
        if refined:
            refined_parts[residue] = tuple(sorted((census.sizes or {}).items()))
    return BirackPolynomial(k, tuple(coefficients),
                            tuple(refined_parts) if refined else None)


def refined_polynomial(word: BraidWord, birack: FiniteBirack, *,
                       budget: int = DEFAULT_BUDGET, census_fn=None,
                       convention: str = CROSSING_CONVENTION) -> BirackPolynomial:
    """The two-variable refinement, grading counts by sub-birack size."""
    return birack_polynomial(word, birack, refined=True, budget=budget,
                             census_fn=census_fn, convention=convention)


# -- independent oracle -------------------------------------------------------


def oracle_count(word: BraidWord, birack: FiniteBirack, *,
                 budget: int = DEFAULT_BUDGET,
                 convention: str = CROSSING_CONVENTION) -> int:
    """Count labellings by constraint solving over the diagram's arcs.

    One unknown per arc: r strands times (generators + 1) time slices, with
    untouched slots aliased across time and the closure identifying the two
    ends of every strand.  Each crossing contributes a 4-ary constraint
    whose allowed tuples are the graph of the pair bijection.  Solutions
    are counted by backtracking with generalized arc consistency; variables
    free of any constraint contribute a factor of n each.
    """
    n = birack.size
    r = word.strands
    _check_budget(n, r, budget)
    tables = _generator_tables(birack, word.tags_used(), convention)

    slots = (len(word.gens) + 1) * r
    parent = list(range(slots))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def slot(t: int, i: int) -> int:
        return t * r + i

    constraints: list[tuple[tuple[int, int, int, int], list[tuple[int, int, int, int]]]] = []
    tuple_cache: dict[tuple[str, int], list[tuple[int, int, int, int]]] = {}
    for t, g in enumerate(word.gens):
        i = g.position - 1
        for j in range(r):
            if j != i and j != i + 1:
                union(slot(t + 1, j), slot(t, j))
        key = (g.tag, g.polarity)
        if key not in tuple_cache:
            new_p_tab, new_q_tab = tables[key]
            tuple_cache[key] = [(p, q, int(new_p_tab[p, q]), int(new_q_tab[p, q]))
                                for p in range(n) for q in range(n)]
        constraints.append(((slot(t, i), slot(t, i + 1), slot(t + 1, i), slot(t + 1, i + 1)),
                            tuple_cache[key]))
    for j in range(r):
        union(slot(len(word.gens), j), slot(0, j))

    constraints = [(tuple(find(v) for v in vars4), allowed) for vars4, allowed in constraints]
    constrained: list[int] = sorted({v for vars4, _ in constraints for v in vars4})
    free_roots = {find(s) for s in range(slots)} - set(constrained)

    by_var: dict[int, list[int]] = {v: [] for v in constrained}
    for ci, (vars4, _) in enumerate(constraints):
        for v in set(vars4):
            by_var[v].append(ci)

    full = frozenset(range(n))
    domains: dict[int, frozenset[int]] = {v: full for v in constrained}

    def propagate(doms: dict[int, frozenset[int]], queue: list[int]) -> bool:
        pending = set(queue)
        while pending:
            ci = pending.pop()
            vars4, allowed = constraints[ci]
            live = [tup for tup in allowed
                    if all(tup[pos] in doms[vars4[pos]] for pos in range(4))]
            if not live:
                return False
            for pos, v in enumerate(vars4):
                seen = doms[v] & frozenset(tup[pos] for tup in live)
                if seen != doms[v]:
                    if not seen:
                        return False
                    doms[v] = seen
                    pending.update(by_var[v])
        return True

    if not propagate(domains, list(range(len(constraints)))):
        return 0

    def search(doms: dict[int, frozenset[int]]) -> int:
        open_vars = [v for v in constrained if len(doms[v]) > 1]
        if not open_vars:
            return 1
        var = min(open_vars, key=lambda v: len(doms[v]))
        total = 0
        for value in sorted(doms[var]):
            trial = dict(doms)
            trial[var] = frozenset((value,))
            if propagate(trial, by_var[var]):
                total += search(trial)
        return total

    return search(domains) * n ** len(free_roots)


def triple_move_rewrite(word: BraidWord, index: int) -> BraidWord:
    """Rewrite gens[index:index+3] from (i, i+1, i) to (i+1, i, i+1) braid
    pattern (same tag, all positive); raises if the pattern is absent."""
    gens = word.gens
    if index < 0 or index + 3 > len(gens):
        raise InputError("rewrite index out of range")
    a, b, c = gens[index:index + 3]
    if not (a.tag == b.tag == c.tag and a.polarity == b.polarity == c.polarity == 1
            and a.position == c.position and b.position == a.position + 1):
        raise InputError("word does not match the braid-like triple pattern at that index")
    i, tag = a.position, a.tag
    replacement = (
        gens[:index]
        + (type(a)(i + 1, tag, 1), type(a)(i, tag, 1), type(a)(i + 1, tag, 1))
        + gens[index + 3:]
    )
    return BraidWord(word.strands, replacement)


def unlink_word(components: int) -> BraidWord:
    """The identity braid on ``components`` strands."""
    return BraidWord(components, ())


def all_vectors(n: int, r: int):
    """Iterator over X^r in odometer order (tiny sizes; used by oracles)."""
    return itertools.product(range(1, n + 1), repeat=r)
