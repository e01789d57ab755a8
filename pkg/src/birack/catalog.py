"""Built-in birack structures, the birack text format, and small-size
enumeration.

Text format, one structure per stanza, stanzas separated by ``---``::

    name: R5_40
    size: 5
    U(s) = ((1 3), (4 5), (1 3), (2 5), (2 4))
    D(s) = ι

Each row is a permutation of {1..n} in disjoint-cycle notation, with ``ι``
or ``id`` for the identity; a bare ``ι``/``id`` on the right-hand side of a
``U``/``D`` line abbreviates a whole family of identity rows.  Unknown tags
are accepted as long as they are single letters matching the braid grammar.
"""

from __future__ import annotations

import itertools
from math import factorial

from .birack import CLASSICAL_TAG, FiniteBirack
from .errors import BudgetError, InputError, ParseError
from .permutation import IDENTITY_TOKENS, Permutation
from .switch import SwitchMap, check_yang_baxter

_BUILTIN_ROWS = {
    # From a public census of small racks and biracks; names kept as opaque
    # identifiers.  R5_40 and R6_114 are racks (identity down rows) that are
    # not quandles; BR6_125 is neither a rack nor a biquandle.
    "R5_40": (
        ("(1 3)", "(4 5)", "(1 3)", "(2 5)", "(2 4)"),
        None,
    ),
    "R6_114": (
        ("(2 3)(4 5 6)", "(2 3)", "(2 3)", "(1 6 5)(2 3)", "(1 4 6)(2 3)", "(1 5 4)(2 3)"),
        None,
    ),
    "BR6_125": (
        ("(3 4 6)", "(3 4 6)", "(1 5 2)", "(1 5 2)", "(3 4 6)", "(1 5 2)"),
        ("(1 2 5)(3 4 6)", "(1 2 5)(3 4 6)", "(4 6)", "(3 6)", "(1 2 5)(3 4 6)", "(3 4)"),
    ),
}

BUILTIN_NAMES = tuple(_BUILTIN_ROWS)


def builtin(name: str) -> FiniteBirack:
    """One of the bundled catalog structures: R5_40, R6_114, BR6_125."""
    try:
        up_rows, down_rows = _BUILTIN_ROWS[name]
    except KeyError:
        raise InputError(f"unknown builtin {name!r} (choose from {', '.join(BUILTIN_NAMES)})")
    switch = SwitchMap.from_rows(up_rows, down_rows)
    return FiniteBirack.single(switch, CLASSICAL_TAG, name=name)


# -- text format ---------------------------------------------------------------


def dumps(biracks) -> str:
    """Serialize one or more biracks in the stanza format."""
    if isinstance(biracks, FiniteBirack):
        biracks = [biracks]
    stanzas = []
    for b in biracks:
        lines = []
        if b.name:
            lines.append(f"name: {b.name}")
        lines.append(f"size: {b.size}")
        for tag, sw in sorted(b.components.items()):
            lines.append(f"U({tag}) = {_format_rows(sw.up)}")
            lines.append(f"D({tag}) = {_format_rows(sw.down)}")
        stanzas.append("\n".join(lines) + "\n")
    return "---\n".join(stanzas)


def _format_rows(rows: tuple[Permutation, ...]) -> str:
    if all(r.is_identity for r in rows):
        return IDENTITY_TOKENS[0]
    return "(" + ", ".join(str(r) for r in rows) + ")"


def loads(text: str) -> list[FiniteBirack]:
    """Parse the stanza format; every structure is formedness-validated."""
    biracks = []
    stanza_lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(itertools.chain(text.splitlines(), ["---"]), start=1):
        line = raw.strip()
        if line == "---":
            if stanza_lines:
                biracks.append(_parse_stanza(stanza_lines))
                stanza_lines = []
            continue
        if line and not line.startswith("#"):
            stanza_lines.append((lineno, line))
    return biracks


def _parse_stanza(lines: list[tuple[int, str]]) -> FiniteBirack:
    name: str | None = None
    size: int | None = None
    rows: dict[tuple[str, str], tuple[int, tuple[Permutation, ...] | None]] = {}
    for lineno, line in lines:
        if line.startswith("name:"):
            name = line[len("name:"):].strip()
            continue
        if line.startswith("size:"):
            try:
                size = int(line[len("size:"):].strip())
            except ValueError:
                raise ParseError("size must be an integer", line=lineno)
            if size < 1:
                raise ParseError("size must be positive", line=lineno)
            continue
        kind = line[:1]
        head, eq, rhs = line.partition("=")
        if kind in ("U", "D") and eq and "(" in head and ")" in head:
            if size is None:
                raise ParseError("size must be declared before any row family", line=lineno)
            tag = head[head.index("(") + 1:head.index(")")].strip()
            if not tag:
                raise ParseError("missing crossing-type tag", line=lineno)
            if (kind, tag) in rows:
                raise ParseError(f"duplicate {kind}({tag}) line", line=lineno)
            rows[(kind, tag)] = (lineno, _parse_row_family(rhs.strip(), size, lineno))
            continue
        raise ParseError(f"unrecognised line {line!r}", line=lineno)
    if size is None:
        raise ParseError("stanza missing a size line", line=lines[0][0] if lines else None)
    tags = {tag for _, tag in rows}
    components = {}
    for tag in sorted(tags):
        missing = [k for k in ("U", "D") if (k, tag) not in rows]
        if missing:
            raise ParseError(f"tag {tag!r} is missing its {missing[0]} line",
                             line=lines[0][0])
        _, up = rows[("U", tag)]
        _, down = rows[("D", tag)]
        identity = tuple(Permutation.identity(size) for _ in range(size))
        components[tag] = SwitchMap(up or identity, down or identity)
    if not components:
        raise ParseError("stanza declares no row families", line=lines[0][0])
    return FiniteBirack(components, name=name)


def _parse_row_family(rhs: str, size: int, lineno: int) -> tuple[Permutation, ...] | None:
    """None means the whole-family identity shorthand."""
    if rhs in IDENTITY_TOKENS:
        return None
    if not (rhs.startswith("(") and rhs.endswith(")")):
        raise ParseError("row family must be parenthesised or an identity token", line=lineno)
    body = rhs[1:-1]
    parts: list[str] = []
    depth = 0
    current: list[str] = []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses in row family", line=lineno)
        if ch == "," and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    if depth != 0:
        raise ParseError("unbalanced parentheses in row family", line=lineno)
    parts.append("".join(current))
    rows = []
    for index, part in enumerate(parts, start=1):
        try:
            rows.append(Permutation.from_cycles(part.strip(), size))
        except ParseError as exc:
            raise ParseError(f"row {index}: {exc}", line=lineno)
    if len(rows) != size:
        raise ParseError(f"row family has {len(rows)} rows, expected {size}", line=lineno)
    return tuple(rows)


def save(biracks, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(biracks))


def load(path) -> list[FiniteBirack]:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


# -- enumeration ---------------------------------------------------------------

ENUMERATION_MODES = ("rack", "birack", "biquandle")
DEFAULT_NODE_BUDGET = 5_000_000


def enumerate_biracks(n: int, mode: str = "rack", *, up_to_relabelling: bool = True,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> list[FiniteBirack]:
    """All size-n structures of the requested kind, by backtracking search.

    ``rack`` fixes identity down rows and searches up-row families closed
    under the self triple-move condition; ``birack`` searches both families
    with full-formedness and triple-move pruning; ``biquandle`` adds the
    diagonal condition.  With ``up_to_relabelling`` the output keeps one
    representative per simultaneous-relabelling class, in canonical order.
    Aborts with BudgetError (partial results attached) past ``node_budget``
    search nodes.
    """
    if mode not in ENUMERATION_MODES:
        raise InputError(f"unknown mode {mode!r} (choose from {', '.join(ENUMERATION_MODES)})")
    if n < 1:
        raise InputError("size must be positive")
    limit = 5 if mode == "rack" else 4
    if n > limit:
        raise InputError(f"{mode} enumeration is limited to size {limit}")
    if mode == "rack":
        raw = _enumerate_racks(n, node_budget)
    else:
        raw = _enumerate_general(n, mode, node_budget)
    structures = [FiniteBirack.single(SwitchMap.from_rows(up, down), CLASSICAL_TAG)
                  for up, down in raw]
    if not up_to_relabelling:
        return sorted(structures, key=_serialize_key)
    seen: dict[tuple, FiniteBirack] = {}
    for b in structures:
        key, canonical = _canonical_form(b)
        seen.setdefault(key, canonical)
    return [seen[key] for key in sorted(seen)]


def _serialize_key(b: FiniteBirack):
    sw = b.component(CLASSICAL_TAG)
    return tuple(r.images for r in sw.up) + tuple(r.images for r in sw.down)


def _canonical_form(b: FiniteBirack) -> tuple[tuple, FiniteBirack]:
    """Least serialization over all simultaneous relabellings, and the
    relabelled structure achieving it."""
    best_key, best = None, b
    for images in itertools.permutations(range(1, b.size + 1)):
        candidate = b.relabelled(Permutation(images))
        key = _serialize_key(candidate)
        if best_key is None or key < best_key:
            best_key, best = key, candidate
    return best_key, best


class _NodeBudget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise _BudgetHit


class _BudgetHit(Exception):
    pass


def _enumerate_racks(n: int, node_budget: int) -> list[tuple[tuple, tuple]]:
    """Identity down rows; up rows must satisfy row[y^z] = row_z row_y row_z^-1.

    Assigning a row forces rows at all labels reachable through assigned
    rows, so assignments propagate; branch on the least unassigned label.
    """
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    index = {p: i for i, p in enumerate(perms)}
    compose = {(a, b): index[tuple(perms[a][x] for x in perms[b])]
               for a in range(len(perms)) for b in range(len(perms))}
    inverse = [index[_invert0(p)] for p in perms]
    budget = _NodeBudget(node_budget)
    results: list[tuple[tuple, tuple]] = []
    identity_rows = tuple(Permutation.identity(n) for _ in range(n))

    def propagate(rows: list[int | None], pending: list[int]) -> bool:
        while pending:
            y = pending.pop()
            for z in range(n):
                if rows[z] is None:
                    continue
                for a, b in ((y, z), (z, y)):
                    if rows[a] is None or rows[b] is None:
                        continue
                    # row at b^a must equal row_a row_b row_a^-1
                    target = perms[rows[a]][b]
                    forced = compose[(compose[(rows[a], rows[b])], inverse[rows[a]])]
                    if rows[target] is None:
                        rows[target] = forced
                        pending.append(target)
                    elif rows[target] != forced:
                        return False
        return True

    def extend(rows: list[int | None]):
        budget.spend()
        try:
            y = rows.index(None)
        except ValueError:
            results.append((tuple(Permutation(tuple(x + 1 for x in perms[i])) for i in rows),
                            identity_rows))
            return
        for choice in range(len(perms)):
            trial = rows[:]
            trial[y] = choice
            if propagate(trial, [y]):
                extend(trial)

    try:
        extend([None] * n)
    except _BudgetHit:
        raise BudgetError(
            f"rack enumeration exceeded {node_budget} search nodes",
            required=budget.used, budget=node_budget,
            partial=[FiniteBirack.single(SwitchMap(u, d), CLASSICAL_TAG) for u, d in results])
    return results


def _enumerate_general(n: int, mode: str, node_budget: int) -> list[tuple[tuple, tuple]]:
    """Search over up and down row families with row-forcing propagation.

    The three sideways-form triple identities regroup as operator equations
    indexed by label pairs, each side the composition of two rows:

        U[U_z(y)] o U_z = U[D_y(z)] o U_y
        D[D_x(y)] o D_x = D[U_y(x)] o D_y
        U[D_x(z)] o D_x = D[U_z(x)] o U_z

    Whenever all but one row in an instance is known, the remaining row is
    forced, so assignments cascade; full verification happens again on every
    emitted candidate, keeping the propagation a pure pruning device.
    """
    perms = [tuple(p) for p in itertools.permutations(range(n))]
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    compose = [[index[tuple(perms[a][x] for x in perms[b])] for b in range(m)]
               for a in range(m)]
    inverse = [index[_invert0(p)] for p in perms]
    budget = _NodeBudget(node_budget)
    results: list[tuple[tuple, tuple]] = []

    def propagate(up: list[int | None], down: list[int | None]) -> bool:
        changed = True
        while changed:
            changed = False
            for y in range(n):
                for z in range(n):
                    # up-up instance at (y, z)
                    if up[z] is not None and down[y] is not None:
                        a = perms[up[z]][y]
                        b = perms[down[y]][z]
                        known = [up[a], up[z], up[b], up[y]]
                        holes = known.count(None)
                        if holes == 0:
                            if compose[up[a]][up[z]] != compose[up[b]][up[y]]:
                                return False
                        elif holes == 1 and up[y] is not None:
                            if up[a] is None:
                                up[a] = compose[compose[up[b]][up[y]]][inverse[up[z]]]
                            else:
                                up[b] = compose[compose[up[a]][up[z]]][inverse[up[y]]]
                            changed = True
                    # down-down instance at (x, y) = (y, z)
                    if down[y] is not None and up[z] is not None:
                        a = perms[down[y]][z]
                        b = perms[up[z]][y]
                        known = [down[a], down[y], down[b], down[z]]
                        holes = known.count(None)
                        if holes == 0:
                            if compose[down[a]][down[y]] != compose[down[b]][down[z]]:
                                return False
                        elif holes == 1 and down[z] is not None:
                            if down[a] is None:
                                down[a] = compose[compose[down[b]][down[z]]][inverse[down[y]]]
                            else:
                                down[b] = compose[compose[down[a]][down[y]]][inverse[down[z]]]
                            changed = True
                    # mixed instance at (x, z) = (y, z)
                    if down[y] is not None and up[z] is not None:
                        a = perms[down[y]][z]
                        b = perms[up[z]][y]
                        ua, db = up[a], down[b]
                        if ua is not None and db is not None:
                            if compose[ua][down[y]] != compose[db][up[z]]:
                                return False
                        elif ua is None and db is not None:
                            up[a] = compose[compose[db][up[z]]][inverse[down[y]]]
                            changed = True
                        elif db is None and ua is not None:
                            down[b] = compose[compose[ua][down[y]]][inverse[up[z]]]
                            changed = True
        # Pair-map injectivity and, if wanted, the diagonal condition, on
        # every pair whose rows are determined.
        seen = set()
        for x in range(n):
            if down[x] is None:
                continue
            for y in range(n):
                if up[y] is None:
                    continue
                image = (perms[down[x]][y], perms[up[y]][x])
                if image in seen:
                    return False
                seen.add(image)
                if mode == "biquandle" and (perms[up[y]][x] == y) != (perms[down[x]][y] == x):
                    return False
        return True

    def emit(up: list[int], down: list[int]):
        up_rows = tuple(Permutation(tuple(x + 1 for x in perms[i])) for i in up)
        down_rows = tuple(Permutation(tuple(x + 1 for x in perms[i])) for i in down)
        switch = SwitchMap(up_rows, down_rows)
        if not switch.fully_formed:
            return
        if not check_yang_baxter(switch, switch).passed:
            return
        if mode == "biquandle" and not switch.is_biquandle:
            return
        results.append((up_rows, down_rows))

    def extend(up: list[int | None], down: list[int | None]):
        budget.spend()
        slot = next(((which, i) for i in range(n) for which in (0, 1)
                     if (up, down)[which][i] is None), None)
        if slot is None:
            emit(up, down)  # type: ignore[arg-type]
            return
        which, i = slot
        for choice in range(m):
            trial_up, trial_down = up[:], down[:]
            (trial_up, trial_down)[which][i] = choice
            if propagate(trial_up, trial_down):
                extend(trial_up, trial_down)

    try:
        extend([None] * n, [None] * n)
    except _BudgetHit:
        raise BudgetError(
            f"{mode} enumeration exceeded {node_budget} search nodes",
            required=budget.used, budget=node_budget,
            partial=[FiniteBirack.single(SwitchMap(u, d), CLASSICAL_TAG) for u, d in results])
    return results


def _invert0(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def brute_force_rack_count(n: int) -> int:
    """Reference count of identity-down structures passing the self
    triple-move check, by filtering every row family (test oracle; n <= 3)."""
    if n > 3:
        raise InputError("brute-force reference is limited to size 3")
    count = 0
    for rows in itertools.product(itertools.permutations(range(1, n + 1)), repeat=n):
        switch = SwitchMap.from_rows(rows)
        if check_yang_baxter(switch, switch).passed:
            count += 1
    return count
