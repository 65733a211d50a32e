"""Exact rational polyhedral geometry.

Everything here runs on fractions.Fraction; there is no floating point
anywhere, so ranks, facet lists, optima and face verdicts are exact and
reproducible bit for bit.

Contents: affine rank, vertex-to-facet conversion by double description,
a two-phase primal simplex with dual extraction, supporting-hyperplane
face tests, the three regular polytope families used as fixtures, and a
small cdd-style text format for V- and H-representations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .guards import (DEFAULT_HULL_MAX_DIM, DEFAULT_HULL_MAX_POINTS,
                     ScaleGuardError)

Vector = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _frac_vector(xs: Iterable) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _dot(u: Sequence, v: Sequence):
    total = 0
    for a, b in zip(u, v):
        total += a * b
    return total


@dataclass(frozen=True)
class LinearForm:
    """coeffs . x compared against rhs.

    Used both as the inequality coeffs . x >= rhs and, where stated, as
    the hyperplane coeffs . x = rhs.
    """

    coeffs: Vector
    rhs: Fraction

    def value(self, point: Sequence) -> Fraction:
        if len(point) != len(self.coeffs):
            raise ValueError("point has dimension %d, form has %d"
                             % (len(point), len(self.coeffs)))
        return Fraction(_dot(self.coeffs, point))

    def slack(self, point: Sequence) -> Fraction:
        return self.value(point) - self.rhs


def linear_form(coeffs: Iterable, rhs) -> LinearForm:
    return LinearForm(_frac_vector(coeffs), Fraction(rhs))


class VRep:
    """A polytope as a duplicate-free ordered list of points."""

    def __init__(self, dim: int, points: Iterable[Sequence]):
        if dim < 1:
            raise ValueError("dimension must be positive")
        pts = tuple(_frac_vector(p) for p in points)
        for p in pts:
            if len(p) != dim:
                raise ValueError("point %r does not have dimension %d" % (p, dim))
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points in V-representation")
        self.dim = dim
        self.points = pts

    def __eq__(self, other):
        return (isinstance(other, VRep)
                and self.dim == other.dim and self.points == other.points)

    def __repr__(self):
        return "VRep(dim=%d, points=%d)" % (self.dim, len(self.points))


@dataclass(frozen=True)
class HRep:
    """A polyhedron as inequalities coeffs . x >= rhs plus equalities."""

    dim: int
    inequalities: tuple[LinearForm, ...]
    equalities: tuple[LinearForm, ...]

    def holds(self, point: Sequence) -> bool:
        return (all(f.slack(point) >= 0 for f in self.inequalities)
                and all(f.slack(point) == 0 for f in self.equalities))


# --- exact linear algebra -----------------------------------------------

def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and pivot columns.

    RREF is unique for a given row space, which keeps everything built on
    it (ranks, affine hulls, null space bases) canonical.
    """
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        piv = mat[r][c]
        mat[r] = [x / piv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def matrix_rank(rows: Iterable[Sequence]) -> int:
    frows = [[Fraction(x) for x in row] for row in rows]
    if not frows:
        return 0
    _, pivots = _rref(frows)
    return len(pivots)


def affine_rank(v: VRep) -> int:
    """Dimension of the affine hull of the points."""
    base = v.points[0]
    rows = [[x - b for x, b in zip(p, base)] for p in v.points[1:]]
    return matrix_rank(rows) if rows else 0


def _solve_square(mat: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a nonsingular square system exactly."""
    m = len(mat)
    aug = [list(mat[i]) + [rhs[i]] for i in range(m)]
    for c in range(m):
        pr = next((i for i in range(c, m) if aug[i][c] != 0), None)
        if pr is None:
            raise ValueError("singular system")
        aug[c], aug[pr] = aug[pr], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for i in range(m):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return [aug[i][m] for i in range(m)]


def _primitive_ints(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive rational to coprime integers."""
    fracs = [Fraction(x) for x in vec]
    if all(f == 0 for f in fracs):
        return tuple(0 for _ in fracs)
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints)


def _normalize_inequality(coeffs: Sequence, rhs) -> LinearForm:
    """Canonical representative under positive scaling: coprime integers.

    Only positive scaling is allowed, otherwise the sense of >= flips,
    so the leading sign stays whatever it is.
    """
    prim = _primitive_ints(tuple(coeffs) + (Fraction(rhs),))
    return LinearForm(tuple(Fraction(c) for c in prim[:-1]), Fraction(prim[-1]))


def _normalize_equality(coeffs: Sequence, rhs) -> LinearForm:
    """Coprime integers with the first nonzero coefficient positive."""
    prim = list(_primitive_ints(tuple(coeffs) + (Fraction(rhs),)))
    lead = next((x for x in prim[:-1] if x != 0), 0)
    if lead < 0:
        prim = [-x for x in prim]
    return LinearForm(tuple(Fraction(c) for c in prim[:-1]), Fraction(prim[-1]))


def _form_key(f: LinearForm):
    return (f.coeffs, f.rhs)


# --- affine hull ---------------------------------------------------------

def _affine_hull(points: Sequence[Vector]):
    """RREF basis of the direction space plus canonical hull equalities.

    Returns (pivot columns, rref rows, equalities).  Because the basis is
    a full RREF, the reduced coordinate of a direction vector t is simply
    t restricted to the pivot columns.
    """
    base = points[0]
    d = len(base)
    rows = [[x - b for x, b in zip(p, base)] for p in points[1:]]
    rref, pivots = _rref(rows) if rows else ([], [])
    pivset = set(pivots)
    free_cols = [c for c in range(d) if c not in pivset]
    equalities = []
    for fc in free_cols:
        coeffs = [_ZERO] * d
        coeffs[fc] = _ONE
        for r, pc in enumerate(pivots):
            coeffs[pc] = -rref[r][fc]
        rhs = _dot(coeffs, base)
        equalities.append(_normalize_equality(coeffs, rhs))
    equalities.sort(key=_form_key)
    return pivots, rref, tuple(equalities)


# --- double description --------------------------------------------------

def _dd_extreme_rays(m: int, cons: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Extreme rays of {y in Q^m : a . y >= 0 for every a in cons}.

    Incremental double description.  Starts from the full space as
    lineality, eliminates one lineality vector per independent constraint,
    then splits rays with the usual positive/zero/negative step, keeping
    only adjacent pairs (Fukuda-Prodon combinatorial test on tight sets).
    The final cone must be pointed, which holds whenever the constraint
    normals span Q^m; the caller guarantees that.

    Rays and constraints are primitive integer vectors so every dot
    product stays in plain int arithmetic.
    """
    lineality: list[tuple[int, ...]] = [
        tuple(1 if k == i else 0 for k in range(m)) for i in range(m)]
    rays: list[tuple[tuple[int, ...], int]] = []  # (vector, tight bitmask)

    for idx, a in enumerate(cons):
        bit = 1 << idx
        hit = next((k for k, v in enumerate(lineality) if _dot(a, v) != 0), None)
        if hit is not None:
            v = lineality.pop(hit)
            dv = _dot(a, v)
            if dv < 0:
                v = tuple(-x for x in v)
                dv = -dv
            new_lin = []
            for u in lineality:
                du = _dot(a, u)
                if du != 0:
                    u = _primitive_ints(tuple(dv * ux - du * vx
                                              for ux, vx in zip(u, v)))
                new_lin.append(u)
            lineality = new_lin
            new_rays = []
            for r, mask in rays:
                dr = _dot(a, r)
                if dr != 0:
                    r = _primitive_ints(tuple(dv * rx - dr * vx
                                              for rx, vx in zip(r, v)))
                new_rays.append((r, mask | bit))
            # v itself was orthogonal to every earlier constraint, so it
            # is tight on all of them and strictly feasible on this one
            new_rays.append((v, bit - 1))
            rays = new_rays
            continue

        plus: list[tuple[tuple[int, ...], int, int]] = []
        zero: list[tuple[tuple[int, ...], int]] = []
        minus: list[tuple[tuple[int, ...], int, int]] = []
        for r, mask in rays:
            t = _dot(a, r)
            if t > 0:
                plus.append((r, mask, t))
            elif t < 0:
                minus.append((r, mask, t))
            else:
                zero.append((r, mask | bit))
        if not minus:
            rays = [(r, mask) for (r, mask, _) in plus] + zero
            continue
        survivors = [(r, mask) for (r, mask, _) in plus] + zero
        blockers = rays  # masks before this step, extra bits are harmless
        for rp, mp, tp in plus:
            for rn, mn, tn in minus:
                common = mp & mn
                adjacent = True
                for ro, mo in blockers:
                    if ro is rp or ro is rn:
                        continue
                    if (mo & common) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = _primitive_ints(tuple(tp * nx - tn * px
                                          for px, nx in zip(rp, rn)))
                survivors.append((w, common | bit))
        rays = survivors

    if lineality:
        raise ValueError("cone is not pointed; constraints do not span")
    return [r for (r, _) in rays]


def convex_hull_facets(v: VRep,
                       max_dim: int = DEFAULT_HULL_MAX_DIM,
                       max_points: int = DEFAULT_HULL_MAX_POINTS) -> HRep:
    """Irredundant H-representation of conv(points).

    Output is the canonical affine hull equalities plus exactly one
    canonically scaled inequality per facet, sorted, so equal point sets
    always produce byte-identical results regardless of input order.
    """
    if v.dim > max_dim:
        raise ScaleGuardError(
            "hull-dim", max_dim, v.dim,
            "hull in dimension %d exceeds bound %d" % (v.dim, max_dim))
    if len(v.points) > max_points:
        raise ScaleGuardError(
            "hull-points", max_points, len(v.points),
            "hull of %d points exceeds bound %d" % (len(v.points), max_points))

    pivots, _, equalities = _affine_hull(v.points)
    k = len(pivots)
    if k == 0:
        # a single point: the equalities already pin it down
        return HRep(v.dim, (), equalities)

    base = v.points[0]
    cons = []
    for p in v.points:
        u = tuple(p[c] - base[c] for c in pivots)
        cons.append(_primitive_ints((1,) + u))
    rays = _dd_extreme_rays(k + 1, cons)

    ineqs = []
    for ray in rays:
        b, c = ray[0], ray[1:]
        coeffs = [_ZERO] * v.dim
        for j, pc in enumerate(pivots):
            coeffs[pc] = Fraction(c[j])
        rhs = _dot(coeffs, base) - b
        ineqs.append(_normalize_inequality(coeffs, rhs))
    ineqs.sort(key=_form_key)
    return HRep(v.dim, tuple(ineqs), equalities)


# --- linear programming --------------------------------------------------

@dataclass(frozen=True)
class LpResult:
    """Outcome of lp_solve.

    status is "optimal", "infeasible" or "unbounded".  For an optimal
    solve, dual holds one multiplier per constraint (inequalities first,
    then equalities, in the order given) satisfying exactly

        sum_i dual[i] * coeffs_i = objective coefficients
        sum_i dual[i] * rhs_i    = optimum

    with dual[i] <= 0 on inequalities when maximizing and dual[i] >= 0
    when minimizing.  lp_solve checks these identities before returning.
    """

    status: str
    optimum: Fraction | None = None
    argument: Vector | None = None
    dual: Vector | None = None


def _price_out(tableau, basis, cost, red):
    """Reset red to z - c for the given cost vector."""
    ncols = len(red)
    for j in range(ncols):
        red[j] = -cost[j] if j < len(cost) else _ZERO
    red[-1] = _ZERO
    for i, bv in enumerate(basis):
        cb = cost[bv]
        if cb != 0:
            row = tableau[i]
            for j in range(ncols):
                red[j] += cb * row[j]


def _simplex_iterate(tableau, basis, red, allowed):
    """Run primal simplex to optimality; returns False on unbounded.

    Entering and leaving follow Bland's rule (smallest improving column,
    ratio ties broken by smallest basic variable), which cannot cycle.
    """
    m = len(tableau)
    while True:
        enter = None
        for j in allowed:
            if red[j] < 0:
                enter = j
                break
        if enter is None:
            return True
        leave = None
        best = None
        for i in range(m):
            coef = tableau[i][enter]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (
                        ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return False
        _pivot(tableau, basis, red, leave, enter)


def _pivot(tableau, basis, red, row, col):
    piv = tableau[row][col]
    tableau[row] = [x / piv for x in tableau[row]]
    prow = tableau[row]
    for i in range(len(tableau)):
        if i != row:
            f = tableau[i][col]
            if f != 0:
                tableau[i] = [a - f * b for a, b in zip(tableau[i], prow)]
    f = red[col]
    if f != 0:
        for j in range(len(red)):
            red[j] -= f * prow[j]
    basis[row] = col


def lp_solve(objective: LinearForm, constraints: HRep,
             sense: str = "max") -> LpResult:
    """Exact two-phase simplex over the rationals on free variables.

    Maximizes or minimizes objective.coeffs . x subject to the HRep.
    The objective rhs is ignored.  See LpResult for the dual convention.
    """
    if sense not in ("max", "min"):
        raise ValueError("sense must be 'max' or 'min'")
    d = constraints.dim
    if len(objective.coeffs) != d:
        raise ValueError("objective has dimension %d, constraints %d"
                         % (len(objective.coeffs), d))
    obj = objective.coeffs if sense == "max" else tuple(-c for c in objective.coeffs)

    forms = list(constraints.inequalities) + list(constraints.equalities)
    n_ineq = len(constraints.inequalities)
    m = len(forms)
    nreal = 2 * d + n_ineq  # x+ | x- | surplus
    cost2 = [_ZERO] * nreal
    for k in range(d):
        cost2[k] = obj[k]
        cost2[d + k] = -obj[k]

    rows: list[list[Fraction]] = []
    signs: list[int] = []
    for i, f in enumerate(forms):
        row = [_ZERO] * nreal
        for k in range(d):
            row[k] = f.coeffs[k]
            row[d + k] = -f.coeffs[k]
        if i < n_ineq:
            row[2 * d + i] = Fraction(-1)
        rhs = f.rhs
        if rhs < 0:
            row = [-x for x in row]
            rhs = -rhs
            signs.append(-1)
        else:
            signs.append(1)
        rows.append(row + [rhs])
    base_rows = [list(r) for r in rows]  # pristine copy for the dual solve

    # phase 1: artificial basis
    ncols = nreal + m + 1
    tableau = []
    for i, row in enumerate(rows):
        full = row[:-1] + [_ZERO] * m + [row[-1]]
        full[nreal + i] = _ONE
        tableau.append(full)
    basis = [nreal + i for i in range(m)]
    cost1 = [_ZERO] * (nreal + m)
    for i in range(m):
        cost1[nreal + i] = Fraction(-1)
    red = [_ZERO] * ncols
    _price_out(tableau, basis, cost1, red)
    ok = _simplex_iterate(tableau, basis, red, range(nreal + m))
    assert ok, "phase 1 is bounded by construction"
    if red[-1] != 0:  # red[-1] = z = -(sum of artificials) at optimum
        return LpResult(status="infeasible")

    # drive leftover artificials out of the basis, dropping redundant rows
    keep = list(range(m))
    i = 0
    while i < len(tableau):
        if basis[i] >= nreal:
            col = next((j for j in range(nreal) if tableau[i][j] != 0), None)
            if col is None:
                del tableau[i]
                del basis[i]
                del keep[i]
                continue
            _pivot(tableau, basis, red, i, col)
        i += 1

    # phase 2
    _price_out(tableau, basis, cost2, red)
    ok = _simplex_iterate(tableau, basis, red, range(nreal))
    if not ok:
        return LpResult(status="unbounded")

    values = [_ZERO] * nreal
    for i, bv in enumerate(basis):
        if bv < nreal:
            values[bv] = tableau[i][-1]
    argument = tuple(values[k] - values[d + k] for k in range(d))
    optimum_max = Fraction(_dot(obj, argument))

    # dual multipliers: solve y . A_B = c_B on the kept rows, then undo
    # the sign flips; dropped redundant rows get multiplier zero
    mm = len(basis)
    mat = [[base_rows[keep[i]][basis[j]] for i in range(mm)] for j in range(mm)]
    rhsv = [cost2[basis[j]] for j in range(mm)]
    y = _solve_square(mat, rhsv) if mm else []
    dual = [_ZERO] * m
    for i in range(mm):
        dual[keep[i]] = signs[keep[i]] * y[i]

    for k in range(d):
        total = sum(dual[i] * forms[i].coeffs[k] for i in range(m))
        assert total == obj[k], "dual stationarity failed"
    assert sum(dual[i] * forms[i].rhs for i in range(m)) == optimum_max, \
        "strong duality failed"
    assert all(dual[i] <= 0 for i in range(n_ineq)), "dual sign failed"

    if sense == "max":
        return LpResult("optimal", optimum_max, argument, tuple(dual))
    return LpResult("optimal", -optimum_max, argument,
                    tuple(-x for x in dual))


# --- face tests -----------------------------------------------------------

@dataclass(frozen=True)
class FaceVerdict:
    """Answer of is_face.

    kind is one of "facet", "proper_face", "not_face", "empty",
    "whole_polytope".  For the first two, form supports the polytope with
    equality exactly on the subset and dimension is the face dimension.
    For "not_face", form is the best separating attempt found and
    evaluations lists its value on every input point in order.
    """

    kind: str
    form: LinearForm | None = None
    dimension: int | None = None
    evaluations: Vector | None = None

    @property
    def is_face(self) -> bool:
        return self.kind in ("facet", "proper_face", "empty", "whole_polytope")


def is_face(v: VRep, subset: Iterable[int]) -> FaceVerdict:
    """Decide whether the given point indices form a face of conv(points).

    Looks for a hyperplane through the subset with every other point
    strictly on the positive side, maximizing the smallest slack (capped
    at 1, which scaling makes harmless).  A positive optimum certifies a
    face; optimum zero certifies there is none and the failed separator
    with its evaluations is returned as the witness.
    """
    idx = sorted(set(subset))
    npts = len(v.points)
    for i in idx:
        if not 0 <= i < npts:
            raise ValueError("point index %d out of range" % (i,))
    if not idx:
        return FaceVerdict(kind="empty", dimension=-1)
    if len(idx) == npts:
        return FaceVerdict(kind="whole_polytope", dimension=affine_rank(v))

    d = v.dim
    inside = set(idx)
    s0 = v.points[idx[0]]
    eqs = []
    for i in idx[1:]:
        diff = tuple(a - b for a, b in zip(v.points[i], s0))
        eqs.append(LinearForm(diff + (_ZERO,), _ZERO))
    ineqs = []
    for i in range(npts):
        if i in inside:
            continue
        diff = tuple(a - b for a, b in zip(v.points[i], s0))
        ineqs.append(LinearForm(diff + (Fraction(-1),), _ZERO))
    ineqs.append(LinearForm((_ZERO,) * d + (Fraction(-1),), Fraction(-1)))
    objective = LinearForm((_ZERO,) * d + (_ONE,), _ZERO)
    res = lp_solve(objective, HRep(d + 1, tuple(ineqs), tuple(eqs)), "max")
    assert res.status == "optimal", "face LP is feasible and bounded"

    f = res.argument[:d]
    rhs = Fraction(_dot(f, s0))
    if res.optimum > 0:
        form = _normalize_inequality(f, rhs)
        sub_dim = affine_rank(VRep(d, [v.points[i] for i in idx]))
        whole_dim = affine_rank(v)
        kind = "facet" if sub_dim == whole_dim - 1 else "proper_face"
        return FaceVerdict(kind=kind, form=form, dimension=sub_dim)
    witness = LinearForm(f, rhs)
    evals = tuple(Fraction(_dot(f, p)) for p in v.points)
    return FaceVerdict(kind="not_face", form=witness, evaluations=evals)


# --- fixtures -------------------------------------------------------------

def regular_polytope(kind: str, d: int) -> VRep:
    """Standard simplex, unit cube, or cross polytope vertices in Q^d."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if kind == "simplex":
        pts = [(0,) * d]
        pts += [tuple(1 if k == i else 0 for k in range(d)) for i in range(d)]
    elif kind == "cube":
        pts = list(itertools.product((0, 1), repeat=d))
    elif kind == "cross":
        pts = [tuple(1 if k == i else 0 for k in range(d)) for i in range(d)]
        pts += [tuple(-1 if k == i else 0 for k in range(d)) for i in range(d)]
    else:
        raise ValueError("kind must be simplex, cube or cross")
    return VRep(d, pts)


# --- cdd-style text -------------------------------------------------------

def _format_frac(x: Fraction) -> str:
    return str(x)


def vrep_to_text(v: VRep) -> str:
    lines = ["V-representation", "begin",
             "%d %d rational" % (len(v.points), v.dim + 1)]
    for p in v.points:
        lines.append(" ".join(["1"] + [_format_frac(x) for x in p]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def hrep_to_text(h: HRep) -> str:
    """Rows are "b c1 .. cd" meaning b + c . x >= 0 (= 0 for linearity rows).

    Equalities come first so the linearity indices are a simple prefix.
    """
    lines = ["H-representation"]
    neq = len(h.equalities)
    if neq:
        lines.append("linearity %d %s"
                     % (neq, " ".join(str(i + 1) for i in range(neq))))
    lines.append("begin")
    lines.append("%d %d rational" % (neq + len(h.inequalities), h.dim + 1))
    for f in list(h.equalities) + list(h.inequalities):
        row = [_format_frac(-f.rhs)] + [_format_frac(c) for c in f.coeffs]
        lines.append(" ".join(row))
    lines.append("end")
    return "\n".join(lines) + "\n"


def _parse_block(text: str, expected_header: str):
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("*")]
    if not lines or lines[0] != expected_header:
        raise ValueError("expected header %r" % (expected_header,))
    linearity: list[int] = []
    i = 1
    while i < len(lines) and lines[i] != "begin":
        toks = lines[i].split()
        if toks[0] == "linearity":
            count = int(toks[1])
            linearity = [int(t) for t in toks[2:]]
            if len(linearity) != count:
                raise ValueError("linearity count mismatch")
        else:
            raise ValueError("unexpected line %r" % (lines[i],))
        i += 1
    if i == len(lines):
        raise ValueError("missing begin")
    header = lines[i + 1].split()
    nrows, ncols = int(header[0]), int(header[1])
    rows = []
    for k in range(nrows):
        toks = lines[i + 2 + k].split()
        if len(toks) != ncols:
            raise ValueError("row %d has %d entries, want %d"
                             % (k + 1, len(toks), ncols))
        rows.append([Fraction(t) for t in toks])
    if lines[i + 2 + nrows] != "end":
        raise ValueError("missing end")
    return rows, ncols - 1, linearity


def vrep_from_text(text: str) -> VRep:
    rows, dim, linearity = _parse_block(text, "V-representation")
    if linearity:
        raise ValueError("linearity not supported in V-representations here")
    pts = []
    for row in rows:
        if row[0] != 1:
            raise ValueError("only points (leading 1) are supported, got %s"
                             % (row[0],))
        pts.append(row[1:])
    return VRep(dim, pts)


def hrep_from_text(text: str) -> HRep:
    rows, dim, linearity = _parse_block(text, "H-representation")
    linset = set(linearity)
    for i in linset:
        if not 1 <= i <= len(rows):
            raise ValueError("linearity index %d out of range" % (i,))
    ineqs = []
    eqs = []
    for i, row in enumerate(rows, start=1):
        form = LinearForm(tuple(row[1:]), -row[0])
        if i in linset:
            eqs.append(form)
        else:
            ineqs.append(form)
    return HRep(dim, tuple(ineqs), tuple(eqs))
