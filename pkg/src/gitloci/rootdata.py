"""Root systems of the simple Dynkin types, their lattices and Weyl groups.

Internal bases
--------------
Characters (weights) are integer vectors of fundamental-weight coefficients;
one-parameter subgroups are integer vectors of fundamental-coweight
coefficients. With these choices the fundamental chamber on the coweight side
is exactly the non-negative orthant, and the perfect pairing of a weight with
a coweight is the plain dot product of the weight's coefficients against the
coweight's expansion in simple coroots.

Cartan convention
-----------------
``cartan[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``, so that row i
holds the simple coroot ``alpha_i^vee`` in fundamental-coweight coordinates
and column j holds the simple root ``alpha_j`` in fundamental-weight
coordinates. Every reflection and conversion formula in this module refers
back to this single convention:

* reflection of a weight:    ``s_i(c)[j]   = c[j] - c[i] * cartan[j][i]``
* reflection of a coweight:  ``s_i(m)[j]   = m[j] - m[i] * cartan[i][j]``

Type A extras
-------------
For type A (rank r) two display systems are supported beyond the canonical
ones. "L" writes a weight of SL(r+1) as r+1 monomial exponents (defined up to
adding a constant to every entry; the ``trace`` argument pins that choice).
"H" writes a one-parameter subgroup as r+1 diagonal exponents summing to
zero. "T" holds the consecutive differences of H, which coincide with the
fundamental-coweight coefficients.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm

from .errors import (
    ConversionError,
    InvalidRankError,
    ParseError,
    RankMismatchError,
    ResourceGuardError,
)
from .exactgeom import determinant, invert_matrix, primitive_vector

DEFAULT_WEYL_GUARD = 10**6

_RANK_RULES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (2, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

_E_TYPE_EDGES = {
    6: ((1, 3), (3, 4), (4, 5), (5, 6), (2, 4)),
    7: ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)),
    8: ((1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)),
}

_D2_WARNING = (
    "D2 is semisimple but not simple (it is A1 x A1); outputs describe the product action."
)


@dataclass(frozen=True, slots=True)
class DynkinType:
    letter: str
    rank: int

    def __post_init__(self):
        if self.letter not in _RANK_RULES:
            raise InvalidRankError(f"unknown Dynkin letter {self.letter!r}")
        low, high = _RANK_RULES[self.letter]
        if not isinstance(self.rank, int) or self.rank < low or (high is not None and self.rank > high):
            raise InvalidRankError(f"no simple group of type {self.letter}{self.rank}")

    @property
    def name(self):
        return f"{self.letter}{self.rank}"


def _euclidean_simple_roots(letter, rank):
    """Simple roots in the classical display coordinates (types A-D and F4)."""
    rows = []
    if letter == "A":
        n = rank + 1
        for i in range(rank):
            row = [0] * n
            row[i], row[i + 1] = 1, -1
            rows.append(tuple(row))
    elif letter in ("B", "C", "D"):
        for i in range(rank - 1):
            row = [0] * rank
            row[i], row[i + 1] = 1, -1
            rows.append(tuple(row))
        last = [0] * rank
        if letter == "B":
            last[rank - 1] = 1
        elif letter == "C":
            last[rank - 1] = 2
        else:
            last[rank - 2], last[rank - 1] = 1, 1
        rows.append(tuple(last))
    elif letter == "F":
        half = Fraction(1, 2)
        rows = [
            (0, 1, -1, 0),
            (0, 0, 1, -1),
            (0, 0, 0, 1),
            (half, -half, -half, -half),
        ]
    else:
        raise InvalidRankError(f"no Euclidean display coordinates for type {letter}")
    return tuple(rows)


def _cartan_from_roots(roots):
    matrix = []
    for alpha in roots:
        norm = sum(Fraction(x) * Fraction(x) for x in alpha)
        row = []
        for beta in roots:
            value = 2 * sum(Fraction(x) * Fraction(y) for x, y in zip(alpha, beta)) / norm
            if value.denominator != 1:
                raise ValueError("non-integral Cartan entry; root data is inconsistent")
            row.append(int(value))
        matrix.append(tuple(row))
    return tuple(matrix)


def _cartan_matrix(letter, rank):
    if letter == "G":
        return ((2, -1), (-3, 2))
    if letter == "E":
        matrix = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for a, b in _E_TYPE_EDGES[rank]:
            matrix[a - 1][b - 1] = -1
            matrix[b - 1][a - 1] = -1
        return tuple(tuple(row) for row in matrix)
    return _cartan_from_roots(_euclidean_simple_roots(letter, rank))


@dataclass(frozen=True, eq=False)
class SimpleGroup:
    """A simple algebraic group, carried entirely by its root-system data."""

    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]
    cartan_adjugate: tuple[tuple[int, ...], ...]
    cartan_det: int
    simple_roots_display: tuple[tuple, ...]
    simple_roots_fundamental: tuple[tuple[int, ...], ...]
    chamber_generators: tuple[tuple[int, ...], ...]
    weyl_generators: tuple[tuple[tuple[int, ...], ...], ...]
    weyl_cogenerators: tuple[tuple[tuple[int, ...], ...], ...]
    warnings: tuple[str, ...]

    def __eq__(self, other):
        return isinstance(other, SimpleGroup) and self.dynkin == other.dynkin

    def __hash__(self):
        return hash(self.dynkin)

    def __repr__(self):
        return f"SimpleGroup({self.dynkin.name})"

    def group_type(self):
        return self.dynkin.letter

    def rnk(self):
        return self.dynkin.rank

    @property
    def rank(self):
        return self.dynkin.rank

    @property
    def name(self):
        return self.dynkin.name


def _reflection_on_weights(cartan, i):
    rank = len(cartan)
    rows = []
    for j in range(rank):
        row = [1 if j == k else 0 for k in range(rank)]
        row[i] = (1 if j == i else 0) - cartan[j][i]
        rows.append(tuple(row))
    return tuple(rows)


def _reflection_on_coweights(cartan, i):
    rank = len(cartan)
    rows = []
    for j in range(rank):
        row = [1 if j == k else 0 for k in range(rank)]
        row[i] = (1 if j == i else 0) - cartan[i][j]
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def _build_group(letter, rank):
    dynkin = DynkinType(letter, rank)
    cartan = _cartan_matrix(letter, rank)
    inverse = invert_matrix(cartan)
    det = determinant(cartan)
    if det.denominator != 1 or det <= 0:
        raise ValueError("Cartan determinant must be a positive integer")
    det = int(det)
    adjugate = []
    for row in inverse:
        adj_row = []
        for entry in row:
            scaled = entry * det
            if scaled.denominator != 1:
                raise ValueError("adjugate entry is not integral; this is a bug")
            adj_row.append(int(scaled))
        adjugate.append(tuple(adj_row))
    roots_fundamental = tuple(
        tuple(cartan[i][j] for i in range(rank)) for j in range(rank)
    )
    if letter in ("E", "G"):
        display = roots_fundamental
    else:
        display = _euclidean_simple_roots(letter, rank)
    chamber = tuple(primitive_vector(row) for row in inverse)
    warnings = (_D2_WARNING,) if (letter, rank) == ("D", 2) else ()
    return SimpleGroup(
        dynkin=dynkin,
        cartan=cartan,
        cartan_inverse=tuple(tuple(x for x in row) for row in inverse),
        cartan_adjugate=tuple(adjugate),
        cartan_det=det,
        simple_roots_display=display,
        simple_roots_fundamental=roots_fundamental,
        chamber_generators=chamber,
        weyl_generators=tuple(_reflection_on_weights(cartan, i) for i in range(rank)),
        weyl_cogenerators=tuple(_reflection_on_coweights(cartan, i) for i in range(rank)),
        warnings=warnings,
    )


def make_group(letter, rank=None):
    """Build the simple group of the given Dynkin type.

    Accepts either ``make_group("B", 2)`` or the combined form
    ``make_group("B2")``.
    """
    if rank is None:
        match = re.fullmatch(r"([A-Za-z])\s*(\d+)", str(letter).strip())
        if match is None:
            raise ParseError(f"cannot parse group name {letter!r}; expected forms like 'B2'")
        letter, rank = match.group(1), int(match.group(2))
    return _build_group(str(letter).strip().upper(), int(rank))


def fundamental_chamber_generators(group):
    """Extreme rays of the fundamental chamber, written in simple-coroot
    coordinates with denominators cleared to primitive integer vectors."""
    return group.chamber_generators


@dataclass(frozen=True, slots=True)
class Weight:
    """A character of the maximal torus, in fundamental-weight coefficients."""

    group: SimpleGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.rank:
            raise RankMismatchError(
                f"weight of length {len(self.coeffs)} for group {self.group.name}"
            )

    @property
    def is_dominant(self):
        return all(c >= 0 for c in self.coeffs)

    @property
    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __repr__(self):
        return f"Weight({self.group.name}, {self.coeffs})"


@dataclass(frozen=True, slots=True)
class OneParameterSubgroup:
    """A one-parameter subgroup of the maximal torus, in fundamental-coweight
    coefficients.

    The coefficients are stored exactly as given: no rescaling happens here,
    because the pairing against weights depends on the scale. `primitive()`
    returns the gcd-reduced representative of the same ray for display and
    deduplication.
    """

    group: SimpleGroup
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.rank:
            raise RankMismatchError(
                f"one-parameter subgroup of length {len(self.coeffs)} for group {self.group.name}"
            )
        if all(c == 0 for c in self.coeffs):
            raise ValueError("a one-parameter subgroup must be nonzero")

    def primitive(self):
        return OneParameterSubgroup(self.group, primitive_vector(self.coeffs))

    @property
    def in_fundamental_chamber(self):
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self):
        return f"OneParameterSubgroup({self.group.name}, {self.coeffs})"


def weight(group, coords, system="fundamental-weight"):
    """Build a Weight from coordinates in any supported weight system."""
    vec = convert_coordinates(group, coords, system, "fundamental-weight")
    out = []
    for x in vec:
        frac = Fraction(x)
        if frac.denominator != 1:
            raise ConversionError(f"{coords!r} in system {system!r} is not an integral weight")
        out.append(int(frac))
    return Weight(group, tuple(out))


def one_param_subgroup(group, coords, system="fundamental-coweight"):
    """Build a OneParameterSubgroup from coordinates in any supported
    coweight system, clearing denominators minimally (the direction and the
    relative scale of the input are preserved)."""
    vec = [Fraction(x) for x in convert_coordinates(group, coords, system, "fundamental-coweight")]
    mult = lcm(*(x.denominator for x in vec))
    return OneParameterSubgroup(group, tuple(int(x * mult) for x in vec))


def _require_same_group(a, b):
    if a.group != b.group:
        raise RankMismatchError(f"operands belong to {a.group.name} and {b.group.name}")


def pairing(chi, lam):
    """The perfect pairing <chi, lam>: the dot product of the weight's
    fundamental coefficients with the coweight's simple-coroot expansion."""
    _require_same_group(chi, lam)
    coroot_coords = convert_coordinates(
        chi.group, lam.coeffs, "fundamental-coweight", "coroot"
    )
    return Fraction(sum(Fraction(c) * Fraction(m) for c, m in zip(chi.coeffs, coroot_coords)))


def reflect_weight_coeffs(cartan, coeffs, i):
    return tuple(coeffs[j] - coeffs[i] * cartan[j][i] for j in range(len(coeffs)))


def reflect_coweight_coeffs(cartan, coeffs, i):
    return tuple(coeffs[j] - coeffs[i] * cartan[i][j] for j in range(len(coeffs)))


def weyl_orbit(group, w, guard=DEFAULT_WEYL_GUARD):
    """Full Weyl orbit of a weight, by breadth-first closure."""
    if w.group != group:
        raise RankMismatchError("weight belongs to a different group")
    rank = group.rank
    seen = {w.coeffs}
    frontier = [w.coeffs]
    while frontier:
        nxt = []
        for coeffs in frontier:
            for i in range(rank):
                image = reflect_weight_coeffs(group.cartan, coeffs, i)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
                    if len(seen) > guard:
                        raise ResourceGuardError(
                            f"Weyl orbit exceeded the guard of {guard} elements"
                        )
        frontier = nxt
    return frozenset(Weight(group, c) for c in seen)


def dominant_representative(group, w):
    """The unique dominant element of the Weyl orbit of w."""
    if w.group != group:
        raise RankMismatchError("weight belongs to a different group")
    return Weight(group, _dominant_coeffs(group.cartan, w.coeffs))


def _dominant_coeffs(cartan, coeffs):
    current = tuple(coeffs)
    while True:
        i = next((k for k, c in enumerate(current) if c < 0), None)
        if i is None:
            return current
        current = reflect_weight_coeffs(cartan, current, i)


def weyl_group_order(group):
    """Order of the Weyl group, by the classical product formulas."""
    letter, rank = group.dynkin.letter, group.rank
    if letter == "A":
        return factorial(rank + 1)
    if letter in ("B", "C"):
        return 2**rank * factorial(rank)
    if letter == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if letter == "G":
        return 12
    if letter == "F":
        return 1152
    return {6: 51840, 7: 2903040, 8: 696729600}[rank]


@dataclass(frozen=True)
class WeylElement:
    """One Weyl group element, as a pair of integer matrices: its action on
    fundamental-weight coordinates and on fundamental-coweight coordinates."""

    weight_matrix: tuple[tuple[int, ...], ...]
    coweight_matrix: tuple[tuple[int, ...], ...]

    def apply_to_weight_coeffs(self, coeffs):
        return tuple(sum(row[k] * coeffs[k] for k in range(len(coeffs))) for row in self.weight_matrix)

    def apply_to_coweight_coeffs(self, coeffs):
        return tuple(
            sum(row[k] * coeffs[k] for k in range(len(coeffs))) for row in self.coweight_matrix
        )


def _matmul(a, b):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )


_WEYL_ELEMENT_CACHE: dict[DynkinType, tuple[WeylElement, ...]] = {}


def weyl_elements(group, guard=DEFAULT_WEYL_GUARD):
    """All Weyl group elements, enumerated by breadth-first closure over the
    generator matrices. Guarded: E7/E8-sized groups are refused by default."""
    cached = _WEYL_ELEMENT_CACHE.get(group.dynkin)
    if cached is not None:
        if len(cached) > guard:
            raise ResourceGuardError(
                f"Weyl enumeration exceeded the guard of {guard} elements"
            )
        return cached
    rank = group.rank
    identity = tuple(tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank))
    elements = {identity: WeylElement(identity, identity)}
    frontier = [elements[identity]]
    while frontier:
        nxt = []
        for element in frontier:
            for s_weight, s_coweight in zip(group.weyl_generators, group.weyl_cogenerators):
                weight_matrix = _matmul(s_weight, element.weight_matrix)
                if weight_matrix in elements:
                    continue
                new_element = WeylElement(
                    weight_matrix, _matmul(s_coweight, element.coweight_matrix)
                )
                elements[weight_matrix] = new_element
                nxt.append(new_element)
                if len(elements) > guard:
                    raise ResourceGuardError(
                        f"Weyl enumeration exceeded the guard of {guard} elements"
                    )
        frontier = nxt
    result = tuple(elements.values())
    _WEYL_ELEMENT_CACHE[group.dynkin] = result
    return result


_M_SYSTEMS = {"fundamental-weight", "L"}
_N_SYSTEMS = {"fundamental-coweight", "coroot", "H", "T"}
_TYPE_A_ONLY = {"L", "H", "T"}


def _canonical_system_name(name):
    text = str(name).strip()
    low = text.lower()
    if low in ("l", "h", "t"):
        return low.upper()
    if low in ("fundamental-weight", "fundamental-coweight", "coroot"):
        return low
    raise ConversionError(f"unknown coordinate system {name!r}")


def _system_length(group, system):
    if system in ("L", "H"):
        return group.rank + 1
    return group.rank


def _exactify(v):
    return [Fraction(x) for x in v]


def _intify(values):
    out = []
    for x in values:
        frac = Fraction(x)
        out.append(int(frac) if frac.denominator == 1 else frac)
    return tuple(out)


def convert_coordinates(group, v, source, target, *, trace=None):
    """Exact linear change of coordinates between the supported systems.

    Weight-side systems: "fundamental-weight" and, for type A, "L" (length
    rank+1, defined up to a constant shift; `trace` pins the shift when
    converting to L). Coweight-side systems: "fundamental-coweight",
    "coroot", and for type A "H" (length rank+1, entries summing to zero) and
    "T" (the consecutive differences of H, equal to fundamental-coweight
    coefficients). Conversions across the two sides are refused.
    """
    src = _canonical_system_name(source)
    dst = _canonical_system_name(target)
    for system in (src, dst):
        if system in _TYPE_A_ONLY and group.dynkin.letter != "A":
            raise ConversionError(f"coordinate system {system!r} needs a type A group")
    if (src in _M_SYSTEMS) != (dst in _M_SYSTEMS):
        raise ConversionError(
            f"cannot convert between weight system {src!r} and coweight system {dst!r}"
        )
    if trace is not None and dst != "L":
        raise ConversionError("the trace argument only applies when converting to L")
    values = _exactify(v)
    if len(values) != _system_length(group, src):
        raise RankMismatchError(
            f"system {src!r} for {group.name} expects length {_system_length(group, src)},"
            f" got {len(values)}"
        )
    rank = group.rank
    if src == "H" and sum(values) != 0:
        raise ConversionError("H-coordinates must sum to zero")
    if src == dst and trace is None:
        return _intify(values)

    if src in _M_SYSTEMS:
        if src == "L":
            canonical = [values[i] - values[i + 1] for i in range(rank)]
        else:
            canonical = values
        if dst == "fundamental-weight":
            return _intify(canonical)
        lifted = [sum(canonical[j] for j in range(i, rank)) for i in range(rank)] + [Fraction(0)]
        if trace is not None:
            shift = (Fraction(trace) - sum(lifted)) / (rank + 1)
            lifted = [x + shift for x in lifted]
        return _intify(lifted)

    if src == "coroot":
        canonical = [
            sum(group.cartan[i][j] * values[i] for i in range(rank)) for j in range(rank)
        ]
    elif src == "H":
        canonical = [values[i] - values[i + 1] for i in range(rank)]
    else:
        canonical = values
    if dst in ("fundamental-coweight", "T"):
        return _intify(canonical)
    if dst == "coroot":
        return _intify(
            sum(group.cartan_inverse[i][j] * canonical[i] for i in range(rank))
            for j in range(rank)
        )
    lifted = [sum(canonical[j] for j in range(i, rank)) for i in range(rank)] + [Fraction(0)]
    mean = sum(lifted) / (rank + 1)
    return _intify(x - mean for x in lifted)
