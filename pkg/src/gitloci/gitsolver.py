"""The GIT stability engine.

Given the weight support of a representation, the solver reports three
families of states (subsets of the support cut out by a sign condition
against a one-parameter subgroup): maximal non-stable states (pairings all
>= 0), maximal unstable states (pairings all > 0), and strictly polystable
states (pairings all = 0 with the origin in the relative interior of the
state's hull).

Why the candidate set is complete
---------------------------------
Work in fundamental-coweight coordinates, where the fundamental chamber is
the non-negative orthant and every weight chi contributes the linear form
``lam -> <chi, lam>``. These forms cut the chamber into a central hyperplane
arrangement, and the sign vector of lam (hence its state, for every mode) is
constant on each relatively open face.

* For the >= 0 mode, signs only gain zeros when lam specializes onto more
  hyperplanes, and ``>= 0`` survives the limit: if a face F' lies in the
  closure of a face F, each weight non-negative on F is non-negative on F'.
  The chamber is a pointed cone, so iterating the specialization ends at a
  1-dimensional face. Every >= 0 state is therefore contained in the >= 0
  state of an arrangement ray, and the maximal ones are attained on rays.
* For the > 0 mode the monotonicity is reversed: if a weight pairs strictly
  positively with a point of F', continuity gives a nearby point of any
  adjacent full-dimensional cell F with the same strict sign, and signs are
  constant on F. So the > 0 state of any lam is contained in the > 0 state
  of an adjacent open cell, and the maximal ones are attained on cells.
* The = 0 states of all rays and all cell witnesses cover every zero set
  attainable in the chamber up to the solver's Weyl deduplication, because
  the = 0 state is constant on faces and every face's sign data is realized
  through the ray/cell skeleton enumerated above.

The dense-sampling acceptance test exercises exactly this containment claim
against brute force.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import ParseError, RankMismatchError, ResourceGuardError
from .exactgeom import (
    DEFAULT_CELL_GUARD,
    arrangement_cells,
    arrangement_rays,
    zero_in_relative_interior,
)
from .repsupport import (
    DEFAULT_SUPPORT_GUARD,
    RepresentationSupport,
    support_from_weights,
    weight_support,
)
from .rootdata import (
    DEFAULT_WEYL_GUARD,
    OneParameterSubgroup,
    SimpleGroup,
    Weight,
    one_param_subgroup,
    pairing,
    reflect_weight_coeffs,
    weyl_elements,
)

_MODES = {">=0": "nonstable", ">0": "unstable", "=0": "strictly_polystable"}


def pairing_vector(group, weight_coeffs):
    """Integer vector u with u . m = det(cartan) * <chi, lam> for every
    coweight vector m; the adjugate of the Cartan matrix applied to chi."""
    adjugate = group.cartan_adjugate
    rank = group.rank
    return tuple(
        sum(adjugate[j][k] * weight_coeffs[k] for k in range(rank)) for j in range(rank)
    )


@dataclass(frozen=True)
class State:
    """A set of weights cut out by one sign condition, with its witness."""

    kind: str
    weights: tuple[Weight, ...]
    witness: OneParameterSubgroup | None

    @property
    def size(self):
        return len(self.weights)

    def coeff_set(self):
        return frozenset(w.coeffs for w in self.weights)

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def __contains__(self, chi):
        return chi in self.weights

    def __repr__(self):
        wit = self.witness.coeffs if self.witness is not None else None
        return f"State({self.kind}, {self.size} weights, witness={wit})"


class GITProblem:
    """A stability problem: a group acting on the span of a weight support.

    Ray and cell candidates are computed lazily from the nonzero weights (as
    pairing normals) and the fundamental chamber, then cached.
    """

    def __init__(
        self,
        group,
        support,
        *,
        weyl_optimisation=False,
        cell_guard=DEFAULT_CELL_GUARD,
        weyl_guard=DEFAULT_WEYL_GUARD,
    ):
        if support.group != group:
            raise RankMismatchError("support belongs to a different group")
        self.group = group
        self.support = support
        self.weyl_optimisation = bool(weyl_optimisation)
        self.cell_guard = cell_guard
        self.weyl_guard = weyl_guard
        self._pairing_vectors = tuple(
            (w, pairing_vector(group, w.coeffs)) for w in support.weights
        )
        self._normals = tuple(
            u for _, u in self._pairing_vectors if any(x != 0 for x in u)
        )
        rank = group.rank
        self._chamber = tuple(
            tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
        )
        self._rays = None
        self._cells = None
        self._set_canonical_cache = {}

    def rays(self):
        if self._rays is None:
            self._rays = tuple(
                arrangement_rays(self._normals, self._chamber, self.group.rank)
            )
        return self._rays

    def cells(self):
        if self._cells is None:
            self._cells = tuple(
                arrangement_cells(
                    self._normals, self._chamber, self.group.rank, guard=self.cell_guard
                )
            )
        return self._cells

    def _select(self, coweight_coeffs, mode):
        if mode == ">=0":
            keep = lambda s: s >= 0
        elif mode == ">0":
            keep = lambda s: s > 0
        elif mode == "=0":
            keep = lambda s: s == 0
        else:
            raise ValueError(f"unknown mode {mode!r}")
        return tuple(
            w
            for w, u in self._pairing_vectors
            if keep(sum(a * b for a, b in zip(u, coweight_coeffs)))
        )


def new_problem(
    group,
    highest,
    weyl_optimisation=False,
    *,
    support_guard=DEFAULT_SUPPORT_GUARD,
    cell_guard=DEFAULT_CELL_GUARD,
    weyl_guard=DEFAULT_WEYL_GUARD,
):
    """Build a problem from a dominant highest weight."""
    support = weight_support(group, highest, guard=support_guard)
    return GITProblem(
        group,
        support,
        weyl_optimisation=weyl_optimisation,
        cell_guard=cell_guard,
        weyl_guard=weyl_guard,
    )


def problem_from_weights(
    group,
    coeff_rows,
    weyl_optimisation=False,
    *,
    cell_guard=DEFAULT_CELL_GUARD,
    weyl_guard=DEFAULT_WEYL_GUARD,
):
    """Build a problem from an explicit, Weyl-closed weight list."""
    support = support_from_weights(group, coeff_rows)
    return GITProblem(
        group,
        support,
        weyl_optimisation=weyl_optimisation,
        cell_guard=cell_guard,
        weyl_guard=weyl_guard,
    )


def state_of(problem, lam, mode):
    """The state of one-parameter subgroup lam under the given mode."""
    if lam.group != problem.group:
        raise RankMismatchError("one-parameter subgroup belongs to a different group")
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {sorted(_MODES)}")
    selected = problem._select(lam.coeffs, mode)
    return State(kind=_MODES[mode], weights=selected, witness=lam)


def _state_sort_key(weights):
    return tuple(w.coeffs for w in weights)


def _unique_keep_first(candidates):
    """candidates: iterable of (weights tuple, witness point). Deduplicates
    identical weight sets, keeping the first witness encountered."""
    out = {}
    for weights, point in candidates:
        key = frozenset(w.coeffs for w in weights)
        if key not in out:
            out[key] = (weights, point)
    return list(out.values())


def _maximal_only(entries):
    keys = [frozenset(w.coeffs for w in weights) for weights, _ in entries]
    kept = []
    for i, entry in enumerate(entries):
        if any(j != i and keys[i] < keys[j] for j in range(len(entries))):
            continue
        kept.append(entry)
    return kept


def _weyl_canonical_set(problem, coeff_set):
    """Canonical form of a weight set under the Weyl group action, by
    breadth-first closure over set images; used for set-level deduplication."""
    cached = problem._set_canonical_cache.get(coeff_set)
    if cached is not None:
        return cached
    cartan = problem.group.cartan
    rank = problem.group.rank
    seen = {coeff_set}
    frontier = [coeff_set]
    while frontier:
        nxt = []
        for current in frontier:
            for i in range(rank):
                image = frozenset(reflect_weight_coeffs(cartan, c, i) for c in current)
                if image not in seen:
                    seen.add(image)
                    nxt.append(image)
                    if len(seen) > problem.weyl_guard:
                        raise ResourceGuardError(
                            f"Weyl set closure exceeded the guard of {problem.weyl_guard}"
                        )
        frontier = nxt
    canonical = min(tuple(sorted(s)) for s in seen)
    for member in seen:
        problem._set_canonical_cache[member] = canonical
    return canonical


def _drop_weyl_duplicates(problem, entries):
    kept = []
    seen = set()
    for weights, point in entries:
        canonical = _weyl_canonical_set(problem, frozenset(w.coeffs for w in weights))
        if canonical in seen:
            continue
        seen.add(canonical)
        kept.append((weights, point))
    return kept


def _as_states(kind, entries):
    states = []
    for weights, point in entries:
        witness = OneParameterSubgroup(weights[0].group, point) if weights else None
        states.append(State(kind=kind, weights=weights, witness=witness))
    return states


def solve_non_stable(problem):
    """Maximal non-stable states: >= 0 states over the arrangement rays,
    filtered to inclusion-maximal ones."""
    candidates = []
    for witness in problem.rays():
        selected = problem._select(witness.point, ">=0")
        if selected:
            candidates.append((selected, witness.point))
    entries = _maximal_only(_unique_keep_first(candidates))
    entries.sort(key=lambda e: (-len(e[0]), _state_sort_key(e[0])))
    if problem.weyl_optimisation:
        entries = _drop_weyl_duplicates(problem, entries)
    return _as_states("nonstable", entries)


def solve_unstable(problem):
    """Maximal unstable states: > 0 states over the open-cell witnesses,
    filtered to inclusion-maximal ones; empty states are dropped."""
    candidates = []
    for witness in problem.cells():
        selected = problem._select(witness.point, ">0")
        if selected:
            candidates.append((selected, witness.point))
    entries = _maximal_only(_unique_keep_first(candidates))
    entries.sort(key=lambda e: (-len(e[0]), _state_sort_key(e[0])))
    if problem.weyl_optimisation:
        entries = _drop_weyl_duplicates(problem, entries)
    return _as_states("unstable", entries)


def solve_strictly_polystable(problem):
    """Strictly polystable states: = 0 states over rays and cell witnesses
    whose hull has the origin in its relative interior, deduplicated up to
    Weyl equivalence of the weight sets. Nested states are kept on purpose."""
    candidates = []
    for witness in (*problem.rays(), *problem.cells()):
        selected = problem._select(witness.point, "=0")
        if not selected:
            continue
        if not zero_in_relative_interior(
            [pairing_vector(problem.group, w.coeffs) for w in selected]
        ):
            continue
        candidates.append((selected, witness.point))
    entries = _unique_keep_first(candidates)
    entries.sort(key=lambda e: (len(e[0]), _state_sort_key(e[0])))
    entries = _drop_weyl_duplicates(problem, entries)
    return _as_states("strictly_polystable", entries)


def hm_mu(problem, point_support, lam):
    """Hilbert-Mumford pairing floor: min over the point's support of
    <chi, lam>. The point is non-stable for lam exactly when this is >= 0."""
    weights = tuple(point_support)
    if not weights:
        raise ValueError("hm_mu needs a non-empty support")
    available = problem.support.coeff_set()
    for w in weights:
        if w.coeffs not in available:
            raise ValueError(f"weight {w.coeffs} is not in the problem's support")
    return min(pairing(w, lam) for w in weights)


@dataclass(frozen=True)
class TorusClassification:
    verdict: str
    certificate: OneParameterSubgroup | None


def classify_torus(problem, point_support):
    """Classify a point (given by its weight support) against the maximal
    torus: "T-unstable" when the support fits inside some Weyl image of a
    maximal unstable state (certificate: the conjugated witness),
    "T-non-stable-semistable" when it only fits a non-stable state, and
    "T-stable" otherwise. G-stability is out of scope: only torus data is
    consulted."""
    weights = tuple(point_support)
    if not weights:
        raise ValueError("classify_torus needs a non-empty support")
    available = problem.support.coeff_set()
    for w in weights:
        if w.coeffs not in available:
            raise ValueError(f"weight {w.coeffs} is not in the problem's support")
    target = frozenset(w.coeffs for w in weights)
    elements = weyl_elements(problem.group, guard=problem.weyl_guard)
    for states, verdict in (
        (solve_unstable(problem), "T-unstable"),
        (solve_non_stable(problem), "T-non-stable-semistable"),
    ):
        for state in states:
            state_set = state.coeff_set()
            for element in elements:
                image = frozenset(element.apply_to_weight_coeffs(c) for c in state_set)
                if target <= image:
                    conjugated = element.apply_to_coweight_coeffs(state.witness.coeffs)
                    certificate = OneParameterSubgroup(problem.group, conjugated).primitive()
                    return TorusClassification(verdict=verdict, certificate=certificate)
    return TorusClassification(verdict="T-stable", certificate=None)


@dataclass(frozen=True)
class GITSolution:
    """Solver output for the requested loci, plus run metadata. Loci that
    were not requested are None; timings are in seconds and excluded from
    equality comparisons."""

    group: SimpleGroup
    support: RepresentationSupport
    weyl_optimisation: bool
    nonstable: tuple[State, ...] | None
    unstable: tuple[State, ...] | None
    strictly_polystable: tuple[State, ...] | None
    timings: dict = field(compare=False, default_factory=dict)


_LOCI_SOLVERS = {
    "nonstable": solve_non_stable,
    "unstable": solve_unstable,
    "polystable": solve_strictly_polystable,
}


def solve_all(problem, loci=("nonstable", "unstable", "polystable")):
    """Solve the requested loci and collect the results with timings."""
    if isinstance(loci, str):
        loci = loci.split(",")
    requested = []
    for name in loci:
        cleaned = str(name).strip().lower()
        if cleaned not in _LOCI_SOLVERS:
            raise ParseError(
                f"unknown locus {name!r}; expected any of nonstable, unstable, polystable"
            )
        if cleaned not in requested:
            requested.append(cleaned)
    if not requested:
        raise ParseError("no loci requested")
    results = {}
    timings = {}
    for name in requested:
        start = time.perf_counter()
        results[name] = tuple(_LOCI_SOLVERS[name](problem))
        timings[name] = time.perf_counter() - start
    return GITSolution(
        group=problem.group,
        support=problem.support,
        weyl_optimisation=problem.weyl_optimisation,
        nonstable=results.get("nonstable"),
        unstable=results.get("unstable"),
        strictly_polystable=results.get("polystable"),
        timings=timings,
    )
