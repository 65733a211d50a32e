import itertools
import random

import pytest

from omegapoly import graph2p as g2
from omegapoly.guards import ScaleGuardError


def test_assignment_basics():
    a = g2.Assignment((1, 2, 1))
    assert a.n == 3
    assert a.rho(1) == 1 and a.rho(2) == 2 and a.rho(3) == 1
    assert str(a) == "1,2,1"
    assert g2.assignment_from_text("1,2,1") == a
    assert g2.assignment_from_text(" 2 , 1 ") == g2.Assignment((2, 1))
    with pytest.raises(ValueError):
        g2.Assignment((1, 3))
    with pytest.raises(ValueError):
        g2.Assignment(())
    with pytest.raises(ValueError):
        g2.assignment_from_text("1,,2")
    with pytest.raises(ValueError):
        a.rho(4)


def test_assignments_sort_lexicographically():
    a = g2.Assignment((1, 2))
    b = g2.Assignment((2, 1))
    assert a < b
    assert sorted([b, a]) == [a, b]


def test_complete_graph_shape():
    for n in (2, 3, 5):
        g = g2.complete_graph(n)
        assert len(g.edges) == 4 * n * (n - 1) // 2
        assert g.missing_edges() == []
    # one part is fine: no cross-part pairs, so both assignments are cliques
    assert g2.enumerate_cliques(g2.complete_graph(1)) == [
        g2.Assignment((1,)), g2.Assignment((2,))]
    with pytest.raises(ValueError):
        g2.Graph2P(0)


def test_edge_validation():
    g = g2.complete_graph(2)
    assert g.has_edge((1, 1), (2, 2))
    assert g.has_edge((2, 2), (1, 1))  # orientation free
    with pytest.raises(ValueError):
        g.has_edge((1, 1), (1, 2))  # same part never adjacent
    with pytest.raises(ValueError):
        g.has_edge((1, 3), (2, 1))
    with pytest.raises(ValueError):
        g.has_edge((0, 1), (2, 1))
    with pytest.raises(ValueError):
        g.has_edge((1, 1), (3, 1))  # part beyond n


def test_without_edges_and_cliques():
    g = g2.complete_graph(3)
    assert g2.is_clique(g, g2.Assignment((1, 1, 1)))
    assert len(g2.enumerate_cliques(g)) == 8

    g = g2.without_edges(g, [((1, 1), (2, 1))])
    assert not g.has_edge((2, 1), (1, 1))
    cliques = g2.enumerate_cliques(g)
    assert len(cliques) == 6
    assert all(not (a.rho(1) == 1 and a.rho(2) == 1) for a in cliques)
    # enumeration is lexicographic
    assert cliques == sorted(cliques)

    with pytest.raises(ValueError):
        g2.is_clique(g, g2.Assignment((1, 1)))


def test_removing_all_edges_between_two_parts_kills_all_cliques():
    missing = [((1, p), (2, q)) for p in (1, 2) for q in (1, 2)]
    g = g2.without_edges(g2.complete_graph(4), missing)
    assert g2.enumerate_cliques(g) == []
    assert g2.find_clique(g) is None


def test_to_2cnf_clause_encoding():
    g = g2.without_edges(g2.complete_graph(2), [((1, 1), (2, 1))])
    c = g2.to_2cnf(g)
    assert c.num_vars == 2
    # forbidding the pair (1,1),(2,1) is the clause (not x1 or not x2)
    assert c.clauses == (((1, False), (2, False)),)
    g = g2.without_edges(g2.complete_graph(2), [((1, 2), (2, 2))])
    assert g2.to_2cnf(g).clauses == (((1, True), (2, True)),)


def test_solve_2sat_forced_and_unsat():
    c = g2.Cnf2(1, (((1, True), (1, True)),))
    a = g2.solve_2sat(c)
    assert a is not None and a.rho(1) == 1
    c = g2.Cnf2(1, (((1, False), (1, False)),))
    a = g2.solve_2sat(c)
    assert a is not None and a.rho(1) == 2
    c = g2.Cnf2(1, (((1, True), (1, True)), ((1, False), (1, False))))
    assert g2.solve_2sat(c) is None
    # implication chain x1 -> x2 -> x3 with x1 forced true
    c = g2.Cnf2(3, (((1, True), (1, True)),
                    ((1, False), (2, True)),
                    ((2, False), (3, True))))
    a = g2.solve_2sat(c)
    assert a is not None and a.choice == (1, 1, 1)


def test_cnf2_validation():
    with pytest.raises(ValueError):
        g2.Cnf2(0, ())
    with pytest.raises(ValueError):
        g2.Cnf2(1, (((1, True), (2, True)),))
    with pytest.raises(ValueError):
        g2.Cnf2(2, (((1, 1), (2, True)),))  # polarity must be bool


def test_find_clique_agrees_with_enumeration():
    rng = random.Random(4242)
    for _ in range(80):
        n = rng.randint(2, 7)
        missing = []
        for (i, j) in itertools.combinations(range(1, n + 1), 2):
            for p in (1, 2):
                for q in (1, 2):
                    if rng.random() < 0.3:
                        missing.append(((i, p), (j, q)))
        g = g2.without_edges(g2.complete_graph(n), missing)
        cliques = g2.enumerate_cliques(g)
        found = g2.find_clique(g)
        if cliques:
            assert found is not None
            assert g2.is_clique(g, found)
            assert found in cliques
        else:
            assert found is None


def _satisfies(a: g2.Assignment, c: g2.Cnf2) -> bool:
    return all(any((a.rho(var) == 1) == pol for (var, pol) in cl)
               for cl in c.clauses)


def test_cnf_models_are_exactly_the_cliques():
    rng = random.Random(777)
    for _ in range(50):
        n = rng.randint(2, 8)
        missing = []
        for (i, j) in itertools.combinations(range(1, n + 1), 2):
            for p in (1, 2):
                for q in (1, 2):
                    if rng.random() < 0.25:
                        missing.append(((i, p), (j, q)))
        g = g2.without_edges(g2.complete_graph(n), missing)
        c = g2.to_2cnf(g)
        models = [a for a in (g2.Assignment(ch) for ch in
                              itertools.product((1, 2), repeat=n))
                  if _satisfies(a, c)]
        assert models == g2.enumerate_cliques(g)


def test_solve_2sat_agrees_with_brute_force():
    rng = random.Random(20260816)
    for _ in range(200):
        nv = rng.randint(1, 10)
        clauses = []
        for _ in range(rng.randint(0, 3 * nv)):
            clauses.append(((rng.randint(1, nv), rng.random() < 0.5),
                            (rng.randint(1, nv), rng.random() < 0.5)))
        c = g2.Cnf2(nv, tuple(clauses))
        sat = any(_satisfies(g2.Assignment(ch), c)
                  for ch in itertools.product((1, 2), repeat=nv))
        got = g2.solve_2sat(c)
        if sat:
            assert got is not None
            assert _satisfies(got, c)
        else:
            assert got is None


def test_enumerate_guard():
    g = g2.complete_graph(25)
    with pytest.raises(ScaleGuardError) as err:
        g2.enumerate_cliques(g)
    assert err.value.guard == "bruteforce"
    assert "bound 20" in str(err.value)
    # raising the bound unlocks it; 2SAT never needs the guard
    small = g2.enumerate_cliques(g2.complete_graph(3), bound=3)
    assert len(small) == 8
    assert g2.find_clique(g) is not None


def test_graph_json_round_trip():
    g = g2.without_edges(g2.complete_graph(3),
                         [((1, 1), (2, 1)), ((2, 2), (3, 1))])
    text = g2.graph_to_json(g)
    assert g2.graph_from_json(text) == g
    obj = g2.graph_to_dict(g)
    assert obj["n"] == 3
    assert [[1, 1], [2, 1]] in obj["missing_edges"]
    with pytest.raises(ValueError):
        g2.graph_from_dict({"n": "3", "missing_edges": []})


def test_dimacs_round_trip():
    g = g2.without_edges(g2.complete_graph(3),
                         [((1, 1), (2, 1)), ((1, 2), (3, 2))])
    c = g2.to_2cnf(g)
    text = g2.cnf_to_dimacs(c)
    lines = text.splitlines()
    assert lines[0] == "p cnf 3 2"
    assert all(ln.endswith(" 0") for ln in lines[1:])
    assert g2.cnf_from_dimacs(text) == c
    # comments and blank lines are fine
    assert g2.cnf_from_dimacs("c hi\n\n" + text) == c


def test_dimacs_parse_errors():
    with pytest.raises(ValueError):
        g2.cnf_from_dimacs("1 -2 0\n")  # clause before problem line
    with pytest.raises(ValueError):
        g2.cnf_from_dimacs("p cnf 2 1\n1 -2\n")  # missing terminator
    with pytest.raises(ValueError):
        g2.cnf_from_dimacs("p cnf 2 1\n1 -2 2 0\n")  # three literals
    with pytest.raises(ValueError):
        g2.cnf_from_dimacs("p cnf 2 2\n1 -2 0\n")  # count mismatch
    with pytest.raises(ValueError):
        g2.cnf_from_dimacs("p dnf 2 1\n1 -2 0\n")
    with pytest.raises(ValueError):
        g2.cnf_from_dimacs("")
