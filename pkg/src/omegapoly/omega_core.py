"""Vertices and affine structure of the two-per-part clique polytope.

The polytope for n parts lives in a 4 n^2 coordinate space indexed by
X[i, j, p, q] with parts i, j in 1..n and positions p, q in {1, 2}.  The
vertex of an assignment rho puts weight [p = rho(i)] * [q = rho(j)] on
X[i, j, p, q]: diagonal blocks (i = j) carry the chosen vertices of the
graph, off-diagonal blocks carry the chosen edges.

Four families of affine equalities hold at every vertex and cut out the
affine hull:

    (1)  X[i,j,p,q] = X[j,i,q,p]                  block symmetry
    (2)  X[i,i,1,1] + X[i,i,2,2] = 1               one pick per part
    (3)  X[i,i,1,2] = 0                            no mixed diagonal
    (4)  X[i,j,p,1] + X[i,j,p,2] = X[i,i,p,p]      edges sum to their vertex

They make the n(n+1)/2 coordinates y[i,j] = X[i,j,1,1] (i <= j) a full
parametrization; reduce_point and lift_point convert back and forth.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction

from .graph2p import Assignment
from .guards import DEFAULT_BRUTEFORCE_BOUND, check_bruteforce
from . import polyhedra
from .polyhedra import VRep

_ZERO = Fraction(0)
_ONE = Fraction(1)


def coord_count(n: int) -> int:
    return 4 * n * n


def coord_index(n: int, i: int, j: int, p: int, q: int) -> int:
    """Flat position of X[i,j,p,q] in lexicographic (i, j, p, q) order."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("parts (%d, %d) out of range 1..%d" % (i, j, n))
    if p not in (1, 2) or q not in (1, 2):
        raise ValueError("positions must be 1 or 2")
    return (((i - 1) * n + (j - 1)) * 2 + (p - 1)) * 2 + (q - 1)


def coord_tuples(n: int):
    """All (i, j, p, q) in flat order."""
    return itertools.product(range(1, n + 1), range(1, n + 1), (1, 2), (1, 2))


def reduced_count(n: int) -> int:
    return n * (n + 1) // 2


def reduced_index(n: int, i: int, j: int) -> int:
    """Flat position of y[i,j] (for i <= j) in lexicographic order."""
    if not (1 <= i <= j <= n):
        raise ValueError("need 1 <= i <= j <= n, got (%d, %d)" % (i, j))
    return (i - 1) * (2 * n - i + 2) // 2 + (j - i)


def reduced_pairs(n: int):
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            yield (i, j)


@dataclass(frozen=True)
class OmegaPoint:
    """A point of the full 4 n^2 dimensional coordinate space."""

    n: int
    coords: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coords) != coord_count(self.n):
            raise ValueError("expected %d coordinates, got %d"
                             % (coord_count(self.n), len(self.coords)))

    def coord(self, i: int, j: int, p: int, q: int) -> Fraction:
        return self.coords[coord_index(self.n, i, j, p, q)]


@dataclass(frozen=True)
class ReducedPoint:
    """A point in the n(n+1)/2 coordinates y[i,j] = X[i,j,1,1], i <= j."""

    n: int
    y: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.y) != reduced_count(self.n):
            raise ValueError("expected %d reduced coordinates, got %d"
                             % (reduced_count(self.n), len(self.y)))

    def value(self, i: int, j: int) -> Fraction:
        return self.y[reduced_index(self.n, i, j)]


def vertex_from_assignment(n: int, a: Assignment) -> OmegaPoint:
    """The 0/1 vertex of an assignment: X[i,j,p,q] = [p = rho(i)][q = rho(j)]."""
    if a.n != n:
        raise ValueError("assignment has %d parts, expected %d" % (a.n, n))
    coords = []
    for (i, j, p, q) in coord_tuples(n):
        hit = (p == a.rho(i)) and (q == a.rho(j))
        coords.append(_ONE if hit else _ZERO)
    return OmegaPoint(n, tuple(coords))


def all_assignments(n: int,
                    bound: int = DEFAULT_BRUTEFORCE_BOUND) -> list[Assignment]:
    check_bruteforce(n, bound, "all_assignments")
    return [Assignment(c) for c in itertools.product((1, 2), repeat=n)]


def all_vertices(n: int,
                 bound: int = DEFAULT_BRUTEFORCE_BOUND) -> list[OmegaPoint]:
    """The 2^n vertices in lexicographic assignment order."""
    return [vertex_from_assignment(n, a) for a in all_assignments(n, bound)]


@dataclass(frozen=True)
class EqualityViolation:
    equation: int            # 1..4, numbering the families in the docstring
    indices: tuple[int, ...]
    residual: Fraction


@dataclass(frozen=True)
class EqualityReport:
    violations: tuple[EqualityViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def check_equalities(x: OmegaPoint) -> EqualityReport:
    """Evaluate every instance of equality families (1)-(4) on x.

    Residuals are left-hand side minus right-hand side; the report lists
    each violated instance with its indices.
    """
    n = x.n
    bad = []
    for (i, j, p, q) in coord_tuples(n):
        r = x.coord(i, j, p, q) - x.coord(j, i, q, p)
        if r != 0:
            bad.append(EqualityViolation(1, (i, j, p, q), r))
    for i in range(1, n + 1):
        r = x.coord(i, i, 1, 1) + x.coord(i, i, 2, 2) - 1
        if r != 0:
            bad.append(EqualityViolation(2, (i,), r))
        r = x.coord(i, i, 1, 2)
        if r != 0:
            bad.append(EqualityViolation(3, (i,), r))
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for p in (1, 2):
                r = (x.coord(i, j, p, 1) + x.coord(i, j, p, 2)
                     - x.coord(i, i, p, p))
                if r != 0:
                    bad.append(EqualityViolation(4, (i, j, p), r))
    return EqualityReport(tuple(bad))


def reduce_point(x: OmegaPoint) -> ReducedPoint:
    """Keep the coordinates y[i,j] = X[i,j,1,1], i <= j.

    Only meaningful on points satisfying the equalities, so anything else
    is rejected.
    """
    report = check_equalities(x)
    if not report.ok:
        raise ValueError("point violates %d equality instances, cannot reduce"
                         % (len(report.violations),))
    y = [x.coord(i, j, 1, 1) for (i, j) in reduced_pairs(x.n)]
    return ReducedPoint(x.n, tuple(y))


def lift_point(r: ReducedPoint) -> OmegaPoint:
    """The unique point of the affine hull with the given y coordinates.

    Diagonal blocks follow from (2) and (3), off-diagonal blocks from (4)
    and block symmetry (1):

        X[i,i,1,1] = y[i,i]            X[i,i,2,2] = 1 - y[i,i]
        X[i,j,1,1] = y[i,j]            X[i,j,1,2] = y[i,i] - y[i,j]
        X[i,j,2,1] = y[j,j] - y[i,j]   X[i,j,2,2] = 1 - y[i,i] - y[j,j] + y[i,j]

    for i < j, and X[j,i,q,p] = X[i,j,p,q].  Total on all inputs.
    """
    n = r.n
    coords = [_ZERO] * coord_count(n)

    def put(i, j, p, q, val):
        coords[coord_index(n, i, j, p, q)] = val

    for i in range(1, n + 1):
        yii = r.value(i, i)
        put(i, i, 1, 1, yii)
        put(i, i, 2, 2, _ONE - yii)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            yii, yjj, yij = r.value(i, i), r.value(j, j), r.value(i, j)
            vals = {(1, 1): yij,
                    (1, 2): yii - yij,
                    (2, 1): yjj - yij,
                    (2, 2): _ONE - yii - yjj + yij}
            for (p, q), val in vals.items():
                put(i, j, p, q, val)
                put(j, i, q, p, val)
    out = OmegaPoint(n, tuple(coords))
    assert check_equalities(out).ok
    return out


def reduced_vertex(n: int, a: Assignment) -> ReducedPoint:
    """y[i,j] = [rho(i) = 1][rho(j) = 1], without the full-space detour."""
    if a.n != n:
        raise ValueError("assignment has %d parts, expected %d" % (a.n, n))
    y = [_ONE if a.rho(i) == 1 and a.rho(j) == 1 else _ZERO
         for (i, j) in reduced_pairs(n)]
    return ReducedPoint(n, tuple(y))


def reduced_vertex_vrep(n: int,
                        bound: int = DEFAULT_BRUTEFORCE_BOUND) -> VRep:
    """All 2^n reduced vertices as a VRep, in assignment order."""
    pts = [reduced_vertex(n, a).y for a in all_assignments(n, bound)]
    return VRep(reduced_count(n), pts)


def independent_family(n: int) -> list[Assignment]:
    """n(n+1)/2 + 1 assignments whose vertices are affinely independent.

    The all-twos assignment, the n assignments with a single 1, and the
    C(n, 2) assignments with exactly two 1s, in that order.
    """
    if n < 1:
        raise ValueError("need at least one part")
    fam = [Assignment((2,) * n)]
    for i in range(1, n + 1):
        fam.append(Assignment(tuple(1 if k == i else 2
                                    for k in range(1, n + 1))))
    for i, j in itertools.combinations(range(1, n + 1), 2):
        fam.append(Assignment(tuple(1 if k in (i, j) else 2
                                    for k in range(1, n + 1))))
    return fam


def omega_dimension(n: int, bound: int = DEFAULT_BRUTEFORCE_BOUND) -> int:
    """Affine dimension of the vertex set, computed from scratch."""
    if n < 2:
        raise ValueError("dimension needs n >= 2")
    vertices = all_vertices(n, bound)
    return polyhedra.affine_rank(VRep(coord_count(n), [v.coords for v in vertices]))


# --- serialization --------------------------------------------------------

def point_to_dict(x: OmegaPoint) -> dict:
    """Canonical JSON object; stores the reduced coordinates only."""
    r = reduce_point(x)
    return reduced_to_dict(r)


def reduced_to_dict(r: ReducedPoint) -> dict:
    vals = {"%d,%d" % (i, j): str(r.value(i, j)) for (i, j) in reduced_pairs(r.n)}
    return {"n": r.n, "reduced": vals}


def point_from_dict(obj: dict) -> OmegaPoint:
    return lift_point(reduced_from_dict(obj))


def reduced_from_dict(obj: dict) -> ReducedPoint:
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise ValueError("bad part count %r" % (n,))
    raw = obj["reduced"]
    y = [_ZERO] * reduced_count(n)
    seen = set()
    for key, val in raw.items():
        i, j = (int(t) for t in key.split(","))
        y[reduced_index(n, i, j)] = Fraction(val)
        seen.add((i, j))
    missing = [ij for ij in reduced_pairs(n) if ij not in seen]
    if missing:
        raise ValueError("reduced coordinates missing entries %r" % (missing,))
    return ReducedPoint(n, tuple(y))


def point_to_json(x: OmegaPoint) -> str:
    return json.dumps(point_to_dict(x), indent=1)


def point_from_json(text: str) -> OmegaPoint:
    return point_from_dict(json.loads(text))
