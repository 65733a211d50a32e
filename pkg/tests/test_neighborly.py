import itertools

import pytest

from omegapoly import neighborly as nb
from omegapoly.graph2p import Assignment, VertexRef
from omegapoly.guards import ScaleGuardError


def all_assignments(n):
    return [Assignment(c) for c in itertools.product((1, 2), repeat=n)]


def test_two_part_certificate_worked_example():
    a = Assignment((1, 1))
    b = Assignment((2, 2))
    c = nb.edge_certificate(2, a, b)
    assert c.alpha == {(2, 1, 1, 1): 1, (2, 1, 2, 2): 1,
                       (2, 1, 1, 2): 2, (2, 1, 2, 1): 2}
    assert c.f_a == 1 and c.f_b == 1 and c.min_other == 2
    assert nb.verify_certificate(c)


def test_marked_edges_are_deterministic():
    a = Assignment((1, 1, 1))
    b = Assignment((1, 1, 2))
    c = nb.edge_certificate(3, a, b)
    # first differing part is 3, partner part is 1
    assert c.marked_a == (VertexRef(3, 1), VertexRef(1, 1))
    assert c.marked_b == (VertexRef(3, 2), VertexRef(1, 1))
    c2 = nb.edge_certificate(3, a, b)
    assert c2 == c

    b = Assignment((2, 1, 1))
    c = nb.edge_certificate(3, a, b)
    assert c.marked_a == (VertexRef(1, 1), VertexRef(2, 1))
    assert c.marked_b == (VertexRef(1, 2), VertexRef(2, 1))


def test_certificates_for_every_pair_small_n():
    for n in (2, 3, 4):
        allv = all_assignments(n)
        for a, b in itertools.combinations(allv, 2):
            c = nb.edge_certificate(n, a, b)
            assert c.f_a == 1 and c.f_b == 1 and c.min_other >= 2
            assert nb.verify_certificate(c)
            # weights only use the agreed menu
            assert set(c.alpha.values()) <= {0, 1, 2}


def test_evaluate_alpha_is_linear_in_weights():
    a = Assignment((1, 2, 1))
    b = Assignment((2, 2, 2))
    c = nb.edge_certificate(3, a, b)
    doubled = {k: 2 * w for k, w in c.alpha.items()}
    for z in all_assignments(3):
        assert nb.evaluate_alpha(doubled, z) == 2 * nb.evaluate_alpha(c.alpha, z)


def test_verify_rejects_tampered_certificates():
    from dataclasses import replace
    a = Assignment((1, 1, 1))
    b = Assignment((1, 1, 2))
    c = nb.edge_certificate(3, a, b)

    zeroed = replace(c, alpha={k: 0 for k in c.alpha})
    assert not nb.verify_certificate(zeroed)

    doubled = replace(c, alpha={k: 2 * w for k, w in c.alpha.items()})
    assert not nb.verify_certificate(doubled)

    # move the marked weight of a onto an edge both cliques share
    tampered = dict(c.alpha)
    assert tampered[(3, 1, 1, 1)] == 1
    tampered[(3, 1, 1, 1)] = 0
    tampered[(2, 1, 1, 1)] = 1
    assert not nb.verify_certificate(replace(c, alpha=tampered))

    assert not nb.verify_certificate(replace(c, b=c.a))


def test_certificate_argument_validation():
    a = Assignment((1, 1))
    with pytest.raises(ValueError):
        nb.edge_certificate(2, a, a)
    with pytest.raises(ValueError):
        nb.edge_certificate(2, a, Assignment((1, 2, 2)))
    with pytest.raises(ValueError):
        nb.edge_certificate(1, Assignment((1,)), Assignment((2,)))
    with pytest.raises(ScaleGuardError):
        nb.edge_certificate(25, Assignment((1,) * 25), Assignment((2,) * 25))


def test_geometric_edge_count_two_parts():
    # four vertices, every pair an edge
    assert nb.edges_via_hull(2) == 6
    with pytest.raises(ValueError):
        nb.edges_via_hull(5)


def test_certificate_json_round_trip():
    a = Assignment((1, 2, 1))
    b = Assignment((2, 1, 1))
    c = nb.edge_certificate(3, a, b)
    back = nb.certificate_from_json(nb.certificate_to_json(c))
    assert nb.verify_certificate(back)
    assert back.alpha == c.alpha
    assert back.a == c.a and back.b == c.b
    assert nb.certificate_to_dict(back) == nb.certificate_to_dict(c)
    # pairs differing in part 1 keep their marked tuples verbatim
    back2 = nb.certificate_from_dict(nb.certificate_to_dict(c))
    assert back2 == c


def test_certificate_dict_layout():
    c = nb.edge_certificate(2, Assignment((1, 1)), Assignment((1, 2)))
    obj = nb.certificate_to_dict(c)
    assert obj["n"] == 2
    assert obj["a"] == [1, 1] and obj["b"] == [1, 2]
    assert obj["F_a"] == "1" and obj["F_b"] == "1"
    assert len(obj["alpha"]) == 4
    for ent in obj["alpha"]:
        assert set(ent) == {"i", "j", "p", "q", "w"}
        assert ent["i"] > ent["j"]
