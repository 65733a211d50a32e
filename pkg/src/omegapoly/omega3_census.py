"""Vertex-pair case analysis for three parts, and facet censuses.

Relabeling the n parts and swapping the two vertices inside any part
give a symmetry group of order n! * 2^n acting on assignments, on the
full coordinate space and on linear forms.  Every question about a pair
of distinct vertices therefore reduces to one representative per orbit;
for n = 3 the orbit of a pair is determined by how many parts agree:

    0 agreeing parts  ->  "disjoint":       the pair misses a facet that
                          contains the other six vertices (a six-term
                          hyperplane sums the edges internal to either clique)
    2 agreeing parts  ->  "shared_edge":    a single edge coordinate
                          vanishes on exactly the other six vertices
    1 agreeing part   ->  "shared_vertex":  the other six vertices are
                          not a face at all; a four-term witness form
                          separates the excluded pair (values 0 and 2)
                          across the hyperplane holding the six at 1

facet_census converts the reduced vertex set to facets by double
description and reports counts, per-facet vertex counts, the constant
per-vertex incidence, and facet orbits under the symmetry group.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .graph2p import Assignment
from .guards import ScaleGuardError
from . import omega_core, polyhedra
from .omega_core import coord_count, coord_index, coord_tuples
from .polyhedra import FaceVerdict, HRep, LinearForm, VRep

_ZERO = Fraction(0)
_ONE = Fraction(1)

CENSUS_DEFAULT_MAX = 4
CENSUS_OPTIN_MAX = 5


# --- symmetry group ---------------------------------------------------------

@dataclass(frozen=True)
class Symmetry:
    """Relabel parts by perm, then swap positions where swaps says so.

    perm lists the images of parts 1..n; swaps[k] applies to the part
    labeled k+1 after relabeling.  On assignments:

        (g . a)(k) = s_k(a(perm^{-1}(k)))

    where s_k exchanges 1 and 2 when swaps[k-1] is true.
    """

    perm: tuple[int, ...]
    swaps: tuple[bool, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("perm %r is not a permutation of 1..%d"
                             % (self.perm, n))
        if len(self.swaps) != n:
            raise ValueError("need one swap flag per part")

    @property
    def n(self) -> int:
        return len(self.perm)


def identity_symmetry(n: int) -> Symmetry:
    return Symmetry(tuple(range(1, n + 1)), (False,) * n)


def all_symmetries(n: int, limit: int = 6) -> list[Symmetry]:
    """The whole group, n! * 2^n elements, in lexicographic order."""
    if n > limit:
        raise ScaleGuardError(
            "bruteforce", limit, n,
            "enumerating the symmetry group for %d parts is too large" % (n,))
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for swaps in itertools.product((False, True), repeat=n):
            out.append(Symmetry(perm, swaps))
    return out


def _inverse_perm(perm: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for k, v in enumerate(perm, start=1):
        inv[v - 1] = k
    return tuple(inv)


def _swap(pos: int, flag: bool) -> int:
    return (3 - pos) if flag else pos


def apply_to_assignment(g: Symmetry, a: Assignment) -> Assignment:
    if a.n != g.n:
        raise ValueError("assignment has %d parts, symmetry has %d"
                         % (a.n, g.n))
    inv = _inverse_perm(g.perm)
    choice = tuple(_swap(a.rho(inv[k - 1]), g.swaps[k - 1])
                   for k in range(1, g.n + 1))
    return Assignment(choice)


def _permuted_index_map(g: Symmetry):
    """Shared index permutation for points and forms.

    Both transform by reading the source value at (perm^{-1}(i),
    perm^{-1}(j), s_i(p), s_j(q)); the swaps are involutions, which is
    why one map serves both directions.
    """
    n = g.n
    inv = _inverse_perm(g.perm)
    mapping = []
    for (i, j, p, q) in coord_tuples(n):
        src = coord_index(n, inv[i - 1], inv[j - 1],
                          _swap(p, g.swaps[i - 1]), _swap(q, g.swaps[j - 1]))
        mapping.append(src)
    return mapping


def apply_to_point(g: Symmetry, x: omega_core.OmegaPoint) -> omega_core.OmegaPoint:
    if x.n != g.n:
        raise ValueError("point has %d parts, symmetry has %d" % (x.n, g.n))
    mapping = _permuted_index_map(g)
    return omega_core.OmegaPoint(g.n, tuple(x.coords[s] for s in mapping))


def apply_to_form(g: Symmetry, f: LinearForm) -> LinearForm:
    """Transport a full-space form so that values on transported points match:
    (g . f)(g . x) = f(x)."""
    n = g.n
    if len(f.coeffs) != coord_count(n):
        raise ValueError("form has %d coefficients, expected %d"
                         % (len(f.coeffs), coord_count(n)))
    mapping = _permuted_index_map(g)
    return LinearForm(tuple(f.coeffs[s] for s in mapping), f.rhs)


# --- pair classification ----------------------------------------------------

@dataclass(frozen=True)
class PairClass:
    """kind is "disjoint", "shared_edge" or "shared_vertex"; parts lists
    the agreeing parts (empty, two, or one respectively)."""

    kind: str
    parts: tuple[int, ...]


def classify_pair(a: Assignment, b: Assignment) -> PairClass:
    """Sort a pair of distinct three-part assignments into its orbit type."""
    if a.n != 3 or b.n != 3:
        raise ValueError("classification is specific to three parts")
    if a == b:
        raise ValueError("assignments must be distinct")
    agree = tuple(i for i in range(1, 4) if a.rho(i) == b.rho(i))
    kind = {0: "disjoint", 1: "shared_vertex", 2: "shared_edge"}[len(agree)]
    return PairClass(kind, agree)


def _full_form(n: int, entries: dict, rhs) -> LinearForm:
    coeffs = [_ZERO] * coord_count(n)
    for (i, j, p, q), w in entries.items():
        coeffs[coord_index(n, i, j, p, q)] = Fraction(w)
    return LinearForm(tuple(coeffs), Fraction(rhs))


# orbit representatives for the three cases, all with a = (1,1,1)
_REP_A = Assignment((1, 1, 1))
_REP_B_DISJOINT = Assignment((2, 2, 2))
_REP_B_SHARED_EDGE = Assignment((1, 1, 2))        # agrees on parts 1, 2
_REP_B_SHARED_VERTEX = Assignment((1, 2, 2))      # agrees on part 1


def _rep_disjoint_form() -> LinearForm:
    entries = {}
    for (i, j) in ((1, 2), (1, 3), (2, 3)):
        entries[(i, j, 1, 1)] = 1   # edges internal to the all-ones clique
        entries[(i, j, 2, 2)] = 1   # edges internal to the all-twos clique
    return _full_form(3, entries, 1)


def _rep_shared_edge_form() -> LinearForm:
    return _full_form(3, {(1, 2, 1, 1): 1}, 0)


def _rep_shared_vertex_witness() -> LinearForm:
    entries = {(1, 2, 2, 2): 1, (1, 3, 1, 2): 1,
               (1, 2, 1, 2): 1, (1, 2, 2, 1): 1}
    return _full_form(3, entries, 1)


def _transport(a: Assignment, b: Assignment, cls: PairClass) -> Symmetry:
    """The symmetry carrying the class representative pair onto (a, b)."""
    if cls.kind == "disjoint":
        order = (1, 2, 3)
    elif cls.kind == "shared_edge":
        i, j = cls.parts
        k = next(t for t in (1, 2, 3) if t not in cls.parts)
        order = (i, j, k)
    else:
        i = cls.parts[0]
        j, k = (t for t in (1, 2, 3) if t != i)
        order = (i, j, k)
    perm = [0, 0, 0]
    for src, dst in enumerate(order, start=1):
        perm[src - 1] = dst
    # the representative a is all ones, so part t swaps exactly when a(t) = 2
    swaps = tuple(a.rho(t) == 2 for t in range(1, 4))
    g = Symmetry(tuple(perm), swaps)
    assert apply_to_assignment(g, _REP_A) == a
    return g


def _fold_to_upper(f: LinearForm, n: int) -> LinearForm:
    """Move off-diagonal coefficients onto the i < j side.

    Block symmetry makes X[j,i,q,p] equal X[i,j,p,q] on the polytope, so
    folding never changes values there, and it keeps transported forms in
    the same shape as the written-out representatives.
    """
    coeffs = list(f.coeffs)
    for (i, j, p, q) in coord_tuples(n):
        if i > j:
            lo = coord_index(n, j, i, q, p)
            hi = coord_index(n, i, j, p, q)
            coeffs[lo] += coeffs[hi]
            coeffs[hi] = _ZERO
    return LinearForm(tuple(coeffs), f.rhs)


def _case_form(a: Assignment, b: Assignment, expected_kind: str,
               rep_form: LinearForm, rep_b: Assignment) -> LinearForm:
    cls = classify_pair(a, b)
    if cls.kind != expected_kind:
        raise ValueError("pair %s, %s is %s, not %s"
                         % (a, b, cls.kind, expected_kind))
    g = _transport(a, b, cls)
    assert apply_to_assignment(g, rep_b) == b
    return _fold_to_upper(apply_to_form(g, rep_form), 3)


def _pair_evaluations(form: LinearForm, a: Assignment, b: Assignment):
    """Form values at the excluded two and at the six remaining vertices."""
    excluded = []
    others = []
    for z in omega_core.all_assignments(3):
        val = form.value(omega_core.vertex_from_assignment(3, z).coords)
        if z == a or z == b:
            excluded.append(val)
        else:
            others.append(val)
    return excluded, others


def _six_face_verdict(a: Assignment, b: Assignment) -> FaceVerdict:
    """is_face on the six vertices other than a and b, in reduced space."""
    vrep = omega_core.reduced_vertex_vrep(3)
    assigns = omega_core.all_assignments(3)
    subset = [k for k, z in enumerate(assigns) if z != a and z != b]
    return polyhedra.is_face(vrep, subset)


def case_disjoint_form(a: Assignment, b: Assignment) -> LinearForm:
    """Facet equation missing a fully disjoint pair: the six edge
    coordinates internal to either clique sum to 1 on the other six
    vertices and to 3 on each of the excluded two."""
    form = _case_form(a, b, "disjoint", _rep_disjoint_form(), _REP_B_DISJOINT)
    excluded, others = _pair_evaluations(form, a, b)
    if sorted(excluded) != [3, 3] or any(v != 1 for v in others):
        raise RuntimeError("disjoint form failed evaluation for %s, %s" % (a, b))
    verdict = _six_face_verdict(a, b)
    if verdict.kind != "facet":
        raise RuntimeError("six vertices opposite %s, %s are not a facet" % (a, b))
    return form


def case_shared_edge_form(a: Assignment, b: Assignment) -> LinearForm:
    """Single edge coordinate that vanishes on exactly the other six
    vertices when the pair agrees on two parts."""
    form = _case_form(a, b, "shared_edge", _rep_shared_edge_form(),
                      _REP_B_SHARED_EDGE)
    excluded, others = _pair_evaluations(form, a, b)
    if sorted(excluded) != [1, 1] or any(v != 0 for v in others):
        raise RuntimeError("shared-edge form failed evaluation for %s, %s"
                           % (a, b))
    return form


def case_shared_vertex_witness(a: Assignment, b: Assignment) -> LinearForm:
    """Witness that the six vertices opposite a one-part-agreeing pair are
    no face: the form holds the six at 1 while the excluded pair lands on
    0 and 2, one on each side."""
    form = _case_form(a, b, "shared_vertex", _rep_shared_vertex_witness(),
                      _REP_B_SHARED_VERTEX)
    excluded, others = _pair_evaluations(form, a, b)
    if sorted(excluded) != [0, 2] or any(v != 1 for v in others):
        raise RuntimeError("shared-vertex witness failed evaluation for %s, %s"
                           % (a, b))
    verdict = _six_face_verdict(a, b)
    if verdict.kind != "not_face":
        raise RuntimeError("six vertices opposite %s, %s unexpectedly form "
                           "a face" % (a, b))
    return form


@dataclass(frozen=True)
class CaseReport:
    """Everything the case analysis produces for one vertex pair."""

    pair_class: PairClass
    form: LinearForm
    verdict: FaceVerdict
    excluded_values: tuple[Fraction, ...]
    other_values: tuple[Fraction, ...]


def analyze_pair(a: Assignment, b: Assignment) -> CaseReport:
    """Run the right case for the pair and bundle form, verdict, values."""
    cls = classify_pair(a, b)
    if cls.kind == "disjoint":
        form = case_disjoint_form(a, b)
    elif cls.kind == "shared_edge":
        form = case_shared_edge_form(a, b)
    else:
        form = case_shared_vertex_witness(a, b)
    excluded, others = _pair_evaluations(form, a, b)
    verdict = _six_face_verdict(a, b)
    return CaseReport(cls, form, verdict, tuple(excluded), tuple(others))


# --- facet census ------------------------------------------------------------

@dataclass(frozen=True)
class FacetRecord:
    form: LinearForm                  # reduced-space inequality, canonical
    tight: tuple[Assignment, ...]     # vertices satisfied with equality
    vertices_on: int


@dataclass(frozen=True)
class OrbitRecord:
    size: int
    representative: int               # smallest facet index in the orbit


@dataclass(frozen=True)
class CensusReport:
    n: int
    facets: tuple[FacetRecord, ...]
    facet_count: int
    per_vertex_incidence: int
    orbits: tuple[OrbitRecord, ...] | None


def _orbit_generators(n: int) -> list[Symmetry]:
    gens = []
    for t in range(1, n):  # adjacent part transpositions
        perm = list(range(1, n + 1))
        perm[t - 1], perm[t] = perm[t], perm[t - 1]
        gens.append(Symmetry(tuple(perm), (False,) * n))
    swaps = tuple(k == 0 for k in range(n))  # swap inside part 1
    gens.append(Symmetry(tuple(range(1, n + 1)), swaps))
    return gens


def facet_census(n: int, include_orbits: bool = True,
                 allow_large: bool = False) -> CensusReport:
    """Full facet description of the reduced polytope for small n.

    n up to 4 is quick; n = 5 runs double description in dimension 15 and
    must be requested explicitly via allow_large.
    """
    if n < 2:
        raise ValueError("census needs n >= 2")
    limit = CENSUS_OPTIN_MAX if allow_large else CENSUS_DEFAULT_MAX
    if n > limit:
        raise ScaleGuardError(
            "census", limit, n,
            "census for %d parts exceeds bound %d%s"
            % (n, limit,
               "" if allow_large else " (pass allow_large for n = 5)"))

    assigns = omega_core.all_assignments(n)
    vrep = omega_core.reduced_vertex_vrep(n)
    hrep = polyhedra.convex_hull_facets(
        vrep, max_dim=omega_core.reduced_count(n), max_points=len(vrep.points))
    if hrep.equalities:
        raise RuntimeError("reduced vertex set is unexpectedly degenerate")

    records = []
    incidence = [0] * len(assigns)
    for form in hrep.inequalities:
        tight = []
        for k, p in enumerate(vrep.points):
            if form.slack(p) == 0:
                tight.append(assigns[k])
                incidence[k] += 1
        records.append(FacetRecord(form, tuple(tight), len(tight)))

    counts = set(incidence)
    if len(counts) != 1:
        raise RuntimeError("per-vertex facet incidence is not constant: %r"
                           % (sorted(counts),))

    orbits = _facet_orbits(n, records, assigns) if include_orbits else None
    return CensusReport(n, tuple(records), len(records), counts.pop(), orbits)


def _facet_orbits(n, records, assigns):
    index_of = {a: k for k, a in enumerate(assigns)}
    facet_of_tight = {frozenset(index_of[a] for a in rec.tight): k
                      for k, rec in enumerate(records)}
    gens = _orbit_generators(n)
    gen_maps = []
    for g in gens:
        gen_maps.append(tuple(index_of[apply_to_assignment(g, a)]
                              for a in assigns))
    seen = [False] * len(records)
    orbits = []
    for start in range(len(records)):
        if seen[start]:
            continue
        frontier = [frozenset(index_of[a] for a in records[start].tight)]
        members = {start}
        seen[start] = True
        while frontier:
            tight = frontier.pop()
            for gm in gen_maps:
                image = frozenset(gm[k] for k in tight)
                k = facet_of_tight.get(image)
                if k is None:
                    raise RuntimeError("symmetry image of a facet is not a "
                                       "facet; census is inconsistent")
                if not seen[k]:
                    seen[k] = True
                    members.add(k)
                    frontier.append(image)
        orbits.append(OrbitRecord(len(members), min(members)))
    orbits.sort(key=lambda o: o.representative)
    return tuple(orbits)


def form_to_reduced(form: LinearForm, n: int) -> LinearForm:
    """Restrict a full-space form to the reduced coordinates.

    The lift is affine, so probing it at zero and at the unit reduced
    points recovers the composed form exactly.
    """
    if len(form.coeffs) != coord_count(n):
        raise ValueError("form has %d coefficients, expected %d"
                         % (len(form.coeffs), coord_count(n)))
    k = omega_core.reduced_count(n)
    zero = omega_core.ReducedPoint(n, (_ZERO,) * k)
    base = form.value(omega_core.lift_point(zero).coords)
    coeffs = []
    for m in range(k):
        unit = omega_core.ReducedPoint(
            n, tuple(_ONE if t == m else _ZERO for t in range(k)))
        coeffs.append(form.value(omega_core.lift_point(unit).coords) - base)
    return LinearForm(tuple(coeffs), form.rhs - base)


# --- serialization ------------------------------------------------------------

def census_to_dict(report: CensusReport) -> dict:
    facets = []
    for rec in report.facets:
        facets.append({
            "coeffs": [str(c) for c in rec.form.coeffs],
            "rhs": str(rec.form.rhs),
            "vertices_on": rec.vertices_on,
        })
    out = {
        "n": report.n,
        "facets": facets,
        "facet_count": report.facet_count,
        "per_vertex_incidence": report.per_vertex_incidence,
    }
    if report.orbits is not None:
        out["orbits"] = [{"size": o.size, "representative": o.representative}
                         for o in report.orbits]
    return out


def census_to_json(report: CensusReport) -> str:
    return json.dumps(census_to_dict(report), indent=1)
