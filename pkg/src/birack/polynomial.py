"""The birack polynomial value type and its canonical serialization.

Coefficients are indexed by writhe residue modulo the stabilization period
k; coefficient w counts the labellings of any representing diagram whose
writhe is congruent to w.  The refined form grades each coefficient by the
size of the smallest sub-birack containing the labels in use, recorded as
the exponent of ``s`` plus one.

Canonical text form (the byte-exact target of the golden tests): terms in
descending powers of t joined by `` + ``, zero coefficients omitted; each
coefficient is a bare integer, or for refined polynomials a parenthesised
polynomial in s with descending powers and no interior spaces, e.g.
``(6s^2+3)t + (6s^2+2s+3)``.  A refined coefficient supported entirely on
size-one sub-biracks prints as a bare integer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError

RefinedCoefficient = tuple[tuple[int, int], ...]  # ((subbirack size, count), ...)


@dataclass(frozen=True)
class BirackPolynomial:
    """Writhe-indexed labelling counts, optionally graded by sub-birack size."""

    period: int
    coefficients: tuple[int, ...]
    refined: tuple[RefinedCoefficient, ...] | None = None

    def __post_init__(self):
        if self.period < 1 or len(self.coefficients) != self.period:
            raise InputError("coefficient list must have exactly one entry per residue")
        if any(c < 0 for c in self.coefficients):
            raise InputError("coefficients must be nonnegative")
        if self.refined is not None:
            if len(self.refined) != self.period:
                raise InputError("refined data must have one entry per residue")
            for w, parts in enumerate(self.refined):
                if any(count < 0 or size < 1 for size, count in parts):
                    raise InputError("refined entries must pair positive sizes with nonnegative counts")
                if sum(count for _, count in parts) != self.coefficients[w]:
                    raise InputError(
                        f"refined counts at residue {w} sum to "
                        f"{sum(c for _, c in parts)}, expected {self.coefficients[w]}")

    def coefficient(self, writhe: int) -> int:
        return self.coefficients[writhe % self.period]

    def refined_coefficient(self, writhe: int) -> dict[int, int]:
        if self.refined is None:
            raise InputError("polynomial carries no refined data")
        return dict(self.refined[writhe % self.period])

    def unrefined(self) -> BirackPolynomial:
        return BirackPolynomial(self.period, self.coefficients)

    def __str__(self) -> str:
        terms = []
        for w in range(self.period - 1, -1, -1):
            if self.coefficients[w] == 0:
                continue
            if self.refined is not None:
                coeff = _format_refined(self.refined[w])
                bare_one = False
            else:
                coeff = str(self.coefficients[w])
                bare_one = self.coefficients[w] == 1
            if w == 0:
                terms.append(coeff)
            else:
                power = "t" if w == 1 else f"t^{w}"
                terms.append(power if bare_one else f"{coeff}{power}")
        return " + ".join(terms) if terms else "0"


def _format_refined(parts: RefinedCoefficient) -> str:
    by_size = dict(parts)
    if set(by_size) <= {1}:
        return str(by_size.get(1, 0))
    pieces = []
    for size in sorted(by_size, reverse=True):
        count = by_size[size]
        if count == 0:
            continue
        exponent = size - 1
        if exponent == 0:
            pieces.append(str(count))
        else:
            lead = "" if count == 1 else str(count)
            pieces.append(f"{lead}s" if exponent == 1 else f"{lead}s^{exponent}")
    return "(" + "+".join(pieces) + ")" if pieces else "0"
