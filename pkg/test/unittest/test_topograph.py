"""Unit tests for bdsa.topograph."""

import pytest

from bdsa.errors import TailAxiomFailure
from bdsa.instance_io import parse_instance
from bdsa.props import check_condition_L
from bdsa.topograph import (
    INFINITY_NODE,
    build_graph,
    cycle_to_loop,
    dom_r_size,
    is_loop,
    is_topologically_free,
    loops_without_entrances,
    maximal_tail_from_orbit,
    negative_orbit,
    orbit_tails,
    to_dot,
    vertex_classes,
)


@pytest.fixture
def f3_wide(fixture_texts):
    """f3 with I_x enlarged to the whole algebra."""
    return parse_instance(fixture_texts["f3"] + "ideal x = {a,b}\n")


def _edges(g):
    return [(e.label, e.d, e.r) for e in g.edges]


# ---------- construction ----------------------------------------------------


def test_build_graph_f1(f1):
    g = build_graph(f1)
    assert g.vertex_count == 1
    assert _edges(g) == [(0, 0, 0)]
    assert dom_r_size(g) == 1


def test_build_graph_f5(f5):
    assert _edges(build_graph(f5)) == [(0, 0, 0), (1, 1, 0)]


def test_partial_range_map(f3_wide):
    g = build_graph(f3_wide)
    assert _edges(g) == [(0, 0, None), (0, 1, 0)]
    assert dom_r_size(g) == 1


def test_default_ideals_only_cover_ranges(f3):
    assert _edges(build_graph(f3)) == [(0, 1, 0)]


# ---------- vertex classes --------------------------------------------------


def test_vertex_classes_f5(f5):
    classes = vertex_classes(build_graph(f5))
    assert (classes.sce, classes.rg, classes.sg) == (0b10, 0b01, 0b10)


def test_vertex_classes_f1(f1):
    classes = vertex_classes(build_graph(f1))
    assert (classes.sce, classes.rg, classes.sg) == (0, 0b1, 0)


def test_vertex_classes_f3(f3):
    classes = vertex_classes(build_graph(f3))
    assert (classes.sce, classes.rg) == (0b10, 0b01)


# ---------- loops -----------------------------------------------------------


def test_loops_without_entrances(f1, f2, f4, f5):
    assert loops_without_entrances(build_graph(f1)) == [(0,)]
    assert loops_without_entrances(build_graph(f2)) == []
    assert loops_without_entrances(build_graph(f4)) == [(0,), (1,)]
    assert loops_without_entrances(build_graph(f5)) == []


@pytest.mark.parametrize("name", ["f1", "f2", "f3", "f4", "f5"])
def test_topological_freeness_is_condition_L(request, name):
    inst = request.getfixturevalue(name)
    assert is_topologically_free(build_graph(inst)) == check_condition_L(inst)[0]


def test_longer_loop():
    inst = parse_instance("atoms a b\nlabels x y\nact x a = {b}\nact y b = {a}\n")
    g = build_graph(inst)
    loops = loops_without_entrances(g)
    assert len(loops) == 1
    assert is_loop(g, loops[0])
    assert sorted(loops[0]) == [0, 1]


def test_cycle_witness_maps_to_a_loop(f4):
    g = build_graph(f4)
    _, witness = check_condition_L(f4)
    path = cycle_to_loop(g, witness)
    assert path == (0,)
    assert is_loop(g, path)


def test_is_loop_rejects_broken_paths(f3_wide, f5):
    assert not is_loop(build_graph(f3_wide), (0,))
    assert not is_loop(build_graph(f5), (1,))
    assert not is_loop(build_graph(f5), ())


# ---------- negative orbits and tails ---------------------------------------


def test_negative_orbit(f5, f4):
    assert negative_orbit(build_graph(f5), 1) == [1]
    assert negative_orbit(build_graph(f5), 0) == [0]
    assert negative_orbit(build_graph(f4), 0) == [0]


@pytest.mark.parametrize(
    "name, start, complement",
    [("f1", 0, 0), ("f5", 1, 0), ("f5", 0, 0b10), ("f4", 0, 0b10), ("f4", 1, 0b01)],
)
def test_maximal_tail_from_orbit(request, name, start, complement):
    inst = request.getfixturevalue(name)
    tail = maximal_tail_from_orbit(inst, build_graph(inst), start)
    assert tail.complement_top == complement


def test_maximal_tail_from_orbit_out_of_range(f1):
    with pytest.raises(ValueError):
        maximal_tail_from_orbit(f1, build_graph(f1), 3)


def test_orbit_tails_f5(f5):
    tails = orbit_tails(f5, build_graph(f5))
    assert [(t.complement_top, t.cyclic) for t in tails] == [(0, False), (0b10, True)]


def test_tail_failure_is_a_cross_check_error():
    assert issubclass(TailAxiomFailure, Exception)
    err = TailAxiomFailure("negative orbit tail", {"start": "a"})
    assert err.verdicts == {"start": "a"}


# ---------- DOT -------------------------------------------------------------


def test_to_dot_f1(f1):
    assert to_dot(f1, build_graph(f1)) == (
        'digraph bds {\n  "a";\n  "a" -> "a" [label="x"];\n}\n'
    )


def test_to_dot_marks_undefined_range(f3_wide):
    text = to_dot(f3_wide, build_graph(f3_wide), name="arrow")
    assert text.startswith("digraph arrow {")
    assert f'"{INFINITY_NODE}" [shape=plaintext];' in text
    assert f'"a" -> "{INFINITY_NODE}" [label="x", style=dashed];' in text
    assert '"b" -> "a" [label="x"];' in text


def test_to_dot_f5(f5):
    text = to_dot(f5, build_graph(f5))
    assert '"a" -> "a" [label="x"];' in text
    assert '"b" -> "a" [label="y"];' in text
    assert INFINITY_NODE not in text
