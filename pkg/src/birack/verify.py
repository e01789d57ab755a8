"""Frozen reference outputs for the bundled catalog, and the runner that
reproduces them.

Every cell pairs a built-in braid macro and a built-in birack with the
byte-exact canonical serialization of its (refined) polynomial.  The
verify command recomputes all cells and reports any drift; the closures of
the two commutator braids are certified as distinguished from the unlinks
on the same number of components by the plain-table cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import macro
from .catalog import builtin
from .invariant import DEFAULT_BUDGET, birack_polynomial

GOLDEN_CELLS: tuple[tuple[str, str, str, bool, str], ...] = (
    # (table, braid macro, birack, refined, expected)
    ("knots", "unknot", "R5_40", False, "3t + 5"),
    ("knots", "unknot", "R6_114", False, "4t + 6"),
    ("knots", "unknot", "BR6_125", False, "3t^2 + 3t + 6"),
    ("knots", "trefoil", "R5_40", False, "9t + 11"),
    ("knots", "trefoil", "R6_114", False, "16t + 18"),
    ("knots", "trefoil", "BR6_125", False, "9t^2 + 9t + 12"),
    ("knots", "fig8", "R5_40", False, "3t + 5"),
    ("knots", "fig8", "R6_114", False, "16t + 18"),
    ("knots", "fig8", "BR6_125", False, "3t^2 + 3t + 6"),
    ("knots", "unknot", "R5_40", True, "3t + (2s+3)"),
    ("knots", "unknot", "R6_114", True, "4t + (2s+4)"),
    ("knots", "unknot", "BR6_125", True, "3t^2 + 3t + (3s^2+3)"),
    ("knots", "trefoil", "R5_40", True, "(6s^2+3)t + (6s^2+2s+3)"),
    ("knots", "trefoil", "R6_114", True, "(12s^3+4)t + (12s^3+2s+4)"),
    ("knots", "trefoil", "BR6_125", True, "(6s^2+3)t^2 + (6s^2+3)t + (9s^2+3)"),
    ("knots", "fig8", "R5_40", True, "3t + (2s+3)"),
    ("knots", "fig8", "R6_114", True, "(12s^3+4)t + (12s^3+2s+4)"),
    ("knots", "fig8", "BR6_125", True, "3t^2 + 3t + (3s^2+3)"),
    ("links", "unlink5", "R5_40", False, "1875t + 3125"),
    ("links", "bigelow1", "R5_40", False, "1443t + 2549"),
    ("links", "unlink6", "R5_40", False, "9375t + 15625"),
    ("links", "bigelow2", "R5_40", False, "3567t + 7273"),
    ("links", "unlink5", "R5_40", True, "(1392s^4+480s^2+3)t + (2220s^4+870s^2+32s+3)"),
    ("links", "bigelow1", "R5_40", True, "(960s^4+480s^2+3)t + (1644s^4+870s^2+32s+3)"),
    ("links", "unlink6", "R5_40", True, "(7920s^4+1452s^2+3)t + (12840s^4+2718s^2+64s+3)"),
    ("links", "bigelow2", "R5_40", True, "(2112s^4+1452s^2+3)t + (4488s^4+2718s^2+64s+3)"),
)

@dataclass(frozen=True)
class CellResult:
    label: str
    expected: str
    got: str

    @property
    def ok(self) -> bool:
        return self.expected == self.got


def run_verification(*, budget: int = DEFAULT_BUDGET, census_fn=None,
                     cells=None) -> list[CellResult]:
    """Recompute every golden cell; deterministic for any census_fn that
    agrees with the library census."""
    if cells is None:
        cells = GOLDEN_CELLS
    results = []
    for table, braid_name, birack_name, refined, expected in cells:
        word = macro(braid_name)
        structure = builtin(birack_name)
        poly = birack_polynomial(word, structure, refined=refined, budget=budget,
                                 census_fn=census_fn)
        kind = "refined" if refined else "plain"
        label = f"{table}/{braid_name}/{birack_name}/{kind}"
        results.append(CellResult(label, expected, str(poly)))
    return results
