"""Edge certificates: every pair of distinct vertices spans an edge.

For two assignments a and b, a nonnegative weighting of the cross-part
edge coordinates gives a linear form F that evaluates to 1 on both
vertices and at least 2 on every other vertex.  The hyperplane F = 1
then supports the polytope exactly on conv(a, b), so {a, b} is a 1-face.
Weights: 2 on edges used by neither clique, 1 on one marked edge of each
clique, 0 on every other clique edge.

The marked edges are chosen deterministically: i* is the smallest part
where a and b differ, j* the smallest other part, and each clique marks
its own edge between parts i* and j*.  Any choice of one edge per clique
meeting the other clique nowhere works; construction always re-verifies
by full enumeration, so a bad choice cannot slip through.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .graph2p import Assignment, VertexRef
from .guards import DEFAULT_BRUTEFORCE_BOUND, check_bruteforce
from . import omega_core, polyhedra

AlphaKey = tuple[int, int, int, int]  # (i, j, p, q) with i > j


@dataclass(frozen=True)
class EdgeCertificate:
    """Weights alpha over edge coordinates X[i,j,p,q], i > j, plus the
    recorded evaluations: f_a and f_b must be 1 and min_other >= 2."""

    n: int
    a: Assignment
    b: Assignment
    marked_a: tuple[VertexRef, VertexRef]
    marked_b: tuple[VertexRef, VertexRef]
    alpha: dict[AlphaKey, int]
    f_a: int
    f_b: int
    min_other: int


def _alpha_keys(n: int):
    for i in range(2, n + 1):
        for j in range(1, i):
            for p in (1, 2):
                for q in (1, 2):
                    yield (i, j, p, q)


def evaluate_alpha(alpha: dict[AlphaKey, int], a: Assignment) -> int:
    """Value of sum alpha[i,j,p,q] * X[i,j,p,q] at the vertex of a."""
    total = 0
    for i in range(2, a.n + 1):
        for j in range(1, i):
            total += alpha.get((i, j, a.rho(i), a.rho(j)), 0)
    return total


def _marked_edges(a: Assignment, b: Assignment):
    istar = next(i for i in range(1, a.n + 1) if a.rho(i) != b.rho(i))
    jstar = 1 if istar != 1 else 2
    mark_a = (VertexRef(istar, a.rho(istar)), VertexRef(jstar, a.rho(jstar)))
    mark_b = (VertexRef(istar, b.rho(istar)), VertexRef(jstar, b.rho(jstar)))
    return mark_a, mark_b


def edge_certificate(n: int, a: Assignment, b: Assignment,
                     bound: int = DEFAULT_BRUTEFORCE_BOUND) -> EdgeCertificate:
    """Build and exhaustively verify the certificate for the pair {a, b}."""
    if n < 2:
        raise ValueError("need at least two parts")
    if a.n != n or b.n != n:
        raise ValueError("assignments must have %d parts" % (n,))
    if a == b:
        raise ValueError("assignments must be distinct")
    check_bruteforce(n, bound, "edge_certificate")

    mark_a, mark_b = _marked_edges(a, b)
    marked = set()
    for (u, v) in (mark_a, mark_b):
        hi, lo = (u, v) if u.part > v.part else (v, u)
        marked.add((hi.part, lo.part, hi.pos, lo.pos))

    alpha: dict[AlphaKey, int] = {}
    for (i, j, p, q) in _alpha_keys(n):
        in_a = (a.rho(i) == p and a.rho(j) == q)
        in_b = (b.rho(i) == p and b.rho(j) == q)
        if not in_a and not in_b:
            alpha[(i, j, p, q)] = 2
        elif (i, j, p, q) in marked:
            alpha[(i, j, p, q)] = 1
        else:
            alpha[(i, j, p, q)] = 0

    f_a = evaluate_alpha(alpha, a)
    f_b = evaluate_alpha(alpha, b)
    min_other = None
    for choice in itertools.product((1, 2), repeat=n):
        z = Assignment(choice)
        if z == a or z == b:
            continue
        val = evaluate_alpha(alpha, z)
        if min_other is None or val < min_other:
            min_other = val
    if f_a != 1 or f_b != 1 or (min_other is not None and min_other < 2):
        raise RuntimeError(
            "certificate construction failed for %s, %s: F(a)=%d F(b)=%d "
            "min_other=%s" % (a, b, f_a, f_b, min_other))
    return EdgeCertificate(n, a, b, mark_a, mark_b, alpha, f_a, f_b,
                           min_other if min_other is not None else 2)


def verify_certificate(c: EdgeCertificate,
                       bound: int = DEFAULT_BRUTEFORCE_BOUND) -> bool:
    """Recompute every evaluation from alpha alone; nothing is trusted."""
    check_bruteforce(c.n, bound, "verify_certificate")
    if c.a == c.b or c.a.n != c.n or c.b.n != c.n:
        return False
    for choice in itertools.product((1, 2), repeat=c.n):
        z = Assignment(choice)
        val = evaluate_alpha(c.alpha, z)
        if z == c.a or z == c.b:
            if val != 1:
                return False
        elif val < 2:
            return False
    return True


def edges_via_hull(n: int) -> int:
    """Count vertex pairs that are 1-faces, by supporting-hyperplane LPs.

    Independent of the certificate route: works on the reduced vertex
    set and asks polyhedra.is_face about every pair.
    """
    if not 2 <= n <= 4:
        raise ValueError("geometric edge count is supported for n = 2..4")
    vrep = omega_core.reduced_vertex_vrep(n)
    count = 0
    for i, j in itertools.combinations(range(len(vrep.points)), 2):
        verdict = polyhedra.is_face(vrep, (i, j))
        if verdict.kind in ("facet", "proper_face"):
            assert verdict.dimension == 1
            count += 1
    return count


# --- serialization --------------------------------------------------------

def certificate_to_dict(c: EdgeCertificate) -> dict:
    marked = []
    for (u, v) in (c.marked_a, c.marked_b):
        lo, hi = (u, v) if u.part < v.part else (v, u)
        marked.append([[lo.part, lo.pos], [hi.part, hi.pos]])
    alpha = [{"i": i, "j": j, "p": p, "q": q, "w": c.alpha[(i, j, p, q)]}
             for (i, j, p, q) in _alpha_keys(c.n)]
    return {
        "n": c.n,
        "a": list(c.a.choice),
        "b": list(c.b.choice),
        "marked": marked,
        "alpha": alpha,
        "F_a": str(c.f_a),
        "F_b": str(c.f_b),
        "min_other": str(c.min_other),
    }


def certificate_from_dict(obj: dict) -> EdgeCertificate:
    n = obj["n"]
    a = Assignment(tuple(obj["a"]))
    b = Assignment(tuple(obj["b"]))
    marked = []
    for pair in obj["marked"]:
        (ip, pp), (jp, qp) = pair
        marked.append((VertexRef(ip, pp), VertexRef(jp, qp)))
    alpha = {}
    for ent in obj["alpha"]:
        alpha[(ent["i"], ent["j"], ent["p"], ent["q"])] = int(ent["w"])
    return EdgeCertificate(n, a, b, marked[0], marked[1], alpha,
                           int(obj["F_a"]), int(obj["F_b"]),
                           int(obj["min_other"]))


def certificate_to_json(c: EdgeCertificate) -> str:
    return json.dumps(certificate_to_dict(c), indent=1)


def certificate_from_json(text: str) -> EdgeCertificate:
    return certificate_from_dict(json.loads(text))
