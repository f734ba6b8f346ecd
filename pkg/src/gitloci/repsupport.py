"""Weight supports of irreducible highest-weight representations.

Only the set of weights matters for the stability solver, so multiplicities
are never computed. The support of the irreducible module with dominant
highest weight ``hw`` is the saturated set: all weights ``mu`` whose dominant
representative ``delta`` satisfies ``hw - delta = sum k_j alpha_j`` with
every ``k_j`` a non-negative integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NonDominantError, ParseError, RankMismatchError, ResourceGuardError
from .rootdata import (
    SimpleGroup,
    Weight,
    _dominant_coeffs,
    reflect_weight_coeffs,
)

DEFAULT_SUPPORT_GUARD = 10**6


@dataclass(frozen=True, slots=True)
class RepresentationSupport:
    """The weight set of a representation, canonically sorted.

    `highest` is None when the support was supplied directly as a raw weight
    list instead of being generated from a highest weight.
    """

    group: SimpleGroup
    highest: Weight | None
    weights: tuple[Weight, ...]

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __contains__(self, w):
        return w in self._weight_set()

    def _weight_set(self):
        return frozenset(self.weights)

    def coeff_set(self):
        return frozenset(w.coeffs for w in self.weights)


def parse_highest_weight(group, text):
    """Parse a dominant highest weight from user notation.

    Three forms are accepted: ``rank`` comma-separated integers (fundamental
    coefficients); for type A, ``rank+1`` comma-separated integers
    (L-coordinates, which must be weakly decreasing); and ``d*w<i>`` meaning
    d times the i-th fundamental weight.
    """
    raw = str(text).strip()
    if not raw:
        raise ParseError("empty weight specification")
    star = re.fullmatch(r"(\d+)\s*\*\s*w(\d+)", raw)
    if star is not None:
        multiple, index = int(star.group(1)), int(star.group(2))
        if not 1 <= index <= group.rank:
            raise ParseError(
                f"fundamental weight index {index} out of range for {group.name}"
            )
        coeffs = [0] * group.rank
        coeffs[index - 1] = multiple
        return Weight(group, tuple(coeffs))
    parts = [p for p in re.split(r"[,\s]+", raw) if p]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ParseError(f"cannot parse weight specification {text!r}") from None
    if len(values) == group.rank:
        if any(c < 0 for c in values):
            raise NonDominantError(
                f"fundamental coefficients must be non-negative, got {tuple(values)}"
            )
        return Weight(group, tuple(values))
    if group.dynkin.letter == "A" and len(values) == group.rank + 1:
        if any(values[i] < values[i + 1] for i in range(group.rank)):
            raise NonDominantError(
                f"L-coordinates must be weakly decreasing, got {tuple(values)}"
            )
        return Weight(group, tuple(values[i] - values[i + 1] for i in range(group.rank)))
    raise ParseError(
        f"weight specification {text!r} has length {len(values)}; expected"
        f" {group.rank} fundamental coefficients"
        + (f" or {group.rank + 1} L-coordinates" if group.dynkin.letter == "A" else "")
        + " or the form 'd*w<i>'"
    )


def _saturation_test(group, hw_coeffs):
    """Membership test for dominant representatives, memoized per call site.

    delta is in the support iff adj(cartan) . (hw - delta) is componentwise
    divisible by det(cartan) with non-negative quotients, i.e. hw - delta is
    a non-negative integer combination of simple roots.
    """
    adjugate = group.cartan_adjugate
    det = group.cartan_det
    rank = group.rank
    cache = {}

    def member(delta):
        known = cache.get(delta)
        if known is not None:
            return known
        diff = [hw_coeffs[i] - delta[i] for i in range(rank)]
        verdict = True
        for j in range(rank):
            value = sum(adjugate[j][k] * diff[k] for k in range(rank))
            if value % det != 0 or value < 0:
                verdict = False
                break
        cache[delta] = verdict
        return verdict

    return member


def weight_support(group, highest, guard=DEFAULT_SUPPORT_GUARD):
    """All weights of the irreducible representation with the given dominant
    highest weight, found by descending from it through simple-root
    subtractions with a memoized dominant-representative membership test."""
    if highest.group != group:
        raise RankMismatchError("highest weight belongs to a different group")
    if not highest.is_dominant:
        raise NonDominantError(f"highest weight {highest.coeffs} is not dominant")
    rank = group.rank
    cartan = group.cartan
    simple_root_columns = group.simple_roots_fundamental
    member = _saturation_test(group, highest.coeffs)
    start = highest.coeffs
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for coeffs in frontier:
            for alpha in simple_root_columns:
                cand = tuple(coeffs[k] - alpha[k] for k in range(rank))
                if cand in seen:
                    continue
                if member(_dominant_coeffs(cartan, cand)):
                    seen.add(cand)
                    nxt.append(cand)
                    if len(seen) > guard:
                        raise ResourceGuardError(
                            f"weight support exceeded the guard of {guard} weights"
                        )
        frontier = nxt
    weights = tuple(Weight(group, c) for c in sorted(seen))
    return RepresentationSupport(group=group, highest=highest, weights=weights)


def support_from_weights(group, coeff_rows):
    """Build a support directly from fundamental-coefficient rows, after
    validating closure under the Weyl group (the solver's correctness and the
    meaning of its outputs both need a Weyl-stable weight set)."""
    coeffs = sorted({tuple(int(c) for c in row) for row in coeff_rows})
    if not coeffs:
        raise ParseError("weight list is empty")
    for row in coeffs:
        if len(row) != group.rank:
            raise RankMismatchError(
                f"weight {row} has length {len(row)}; group {group.name} has rank {group.rank}"
            )
    universe = set(coeffs)
    for row in coeffs:
        for i in range(group.rank):
            image = reflect_weight_coeffs(group.cartan, row, i)
            if image not in universe:
                raise ParseError(
                    f"weight set is not closed under the Weyl group: reflection {i + 1}"
                    f" maps {row} to {image}, which is missing"
                )
    weights = tuple(Weight(group, c) for c in coeffs)
    return RepresentationSupport(group=group, highest=None, weights=weights)
