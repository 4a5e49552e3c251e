"""
Hierarchical decomposition, clique reduction and the full pipeline.

The lemma checks run on perturbed random families of every generator kind.
"""
import pytest

from rectpack.cliques import Point, clique_number
from rectpack.errors import PreconditionViolated
from rectpack.geom import Instance, ensure_distinct_heights
from rectpack.hierarchy import (
    alpha_covering,
    build_decomposition,
    check_clique_lemma,
    check_partition_lemma,
    check_tree_invariants,
    check_witness_corollary,
    color_bound,
    compute_T,
    hierarchical_coloring,
    hierarchical_coloring_with_report,
    hierarchy_report,
    residual_clique_bound,
    round_cap,
    sparse_certificate,
)
from rectpack.oracles import validate_coloring
from rectpack.utils import binary_words

from conftest import box, random_instances

KINDS = ["uniform", "squares", "concentric", "vertical"]


@pytest.fixture
def nested_pair():
    return Instance([box("outer", 0, 10, 0, 10), box("inner", 2, 8, 2, 8)])


def test_caps_and_bound():
    assert round_cap(1, 1) == 150
    assert round_cap(3, 1) == 10 * (2 ** 6 - 1)
    assert color_bound(0) == 224
    assert color_bound(1) == 768
    assert color_bound(2) == 2176


def test_decomposition_independent_family(disjoint3):
    inst = ensure_distinct_heights(disjoint3)
    tree = build_decomposition(inst)
    assert tree.k == 0
    assert set(tree.sets[(0, "")]) == {"a", "b", "c"}
    a = inst["a"]
    assert tree.witnesses[(0, "a")] == {Point(a.x_lo, a.y_hi), Point(a.x_hi, a.y_hi)}


def test_decomposition_nested_pair(nested_pair):
    tree = build_decomposition(nested_pair)
    assert tree.omega == 2 and tree.k == 1
    assert tree.sets[(1, "0")] == ("outer",)
    assert tree.sets[(1, "1")] == ("inner",)
    assert tree.witnesses[(1, "inner")] == {Point(2, 8), Point(8, 8)}
    assert tree.word_of(1, "inner") == "1"


def test_decomposition_needs_distinct_heights():
    inst = Instance([box("a", 0, 1, 0, 1), box("b", 5, 6, 0, 1)])
    with pytest.raises(PreconditionViolated):
        build_decomposition(inst)


def test_decomposition_lemmas_hold():
    for inst in random_instances(KINDS, 24, 60, seed=40, grid=500, distinct=True):
        tree = build_decomposition(inst)
        assert tree.k == (clique_number(inst) - 1).bit_length()
        for check in (check_tree_invariants, check_partition_lemma, check_witness_corollary, check_clique_lemma):
            verdict = check(tree, inst)
            assert verdict, verdict.violation


def test_alpha_covering_finds_center():
    inst = Instance([
        box("top2", -1, 1, -1, 5),
        box("top1", -1, 1, -2, 4),
        box("mid", -1, 1, -3, 3),
        box("low1", -1, 1, -4, 2),
        box("low2", -1, 1, -5, 1),
    ])
    witness = alpha_covering(inst, None, "mid", 2)
    assert witness is not None
    assert witness.center == Point(-1, 1)
    assert witness.top_hits == {"top2", "top1"}
    assert witness.bottom_hits == {"low1", "low2"}
    assert alpha_covering(inst, None, "mid", 3) is None
    assert alpha_covering(inst, None, "top2", 1) is None


def test_alpha_zero_always_covers():
    inst = Instance([box("a", 0, 1, 0, 1)])
    witness = alpha_covering(inst, None, "a", 0)
    assert witness is not None and witness.covered == "a"


def test_residual_clique_bound_and_certificates():
    for inst in random_instances(["concentric", "uniform"], 16, 80, seed=77, n_min=20, grid=400, distinct=True):
        tree = build_decomposition(inst)
        for i in range(1, tree.k + 1):
            for w in binary_words(i):
                rest, bound = residual_clique_bound(tree, inst, i, w)
                assert rest <= bound
                T, witnesses = compute_T(tree, inst, i, w)
                assert set(witnesses) == set(T)
                if T:
                    cert = sparse_certificate(tree, inst, i, w, T, witnesses)
                    assert cert.s <= 3
                    assert cert.first_violation(inst) is None


def test_hierarchical_independent(disjoint3):
    coloring = hierarchical_coloring(ensure_distinct_heights(disjoint3))
    assert coloring.num_colors == 1
    assert coloring.algorithm == "hier"


def test_hierarchical_nested_pair_palettes(nested_pair):
    coloring, report = hierarchical_coloring_with_report(nested_pair)
    assert coloring.colors == {"outer": 0, "inner": 224}
    assert [row[0] for row in report.as_rows()] == ["S1:0", "S1:1"]
    assert report.peeled == 0
    assert report.bound == 768


def test_hierarchical_cross_grid(cross_grid):
    inst = ensure_distinct_heights(cross_grid)
    coloring = hierarchical_coloring(inst)
    assert validate_coloring(inst, coloring)
    assert coloring.num_colors <= color_bound(1)


def test_hierarchical_proper_and_bounded():
    for inst in random_instances(KINDS, 24, 80, seed=5, grid=400, distinct=True):
        coloring = hierarchical_coloring(inst)
        assert validate_coloring(inst, coloring)
        k = (clique_number(inst) - 1).bit_length()
        assert coloring.num_colors <= color_bound(k)


def test_hierarchical_independent_of_worker_count(monkeypatch):
    inst = random_instances(["concentric"], 1, 70, seed=13, n_min=70, grid=300, distinct=True)[0]
    monkeypatch.setenv("RECTPACK_THREADS", "1")
    serial = hierarchical_coloring(inst)
    monkeypatch.setenv("RECTPACK_THREADS", "4")
    threaded = hierarchical_coloring(inst)
    assert serial.colors == threaded.colors
    assert serial.palette_offsets == threaded.palette_offsets


def test_report_cells_fit_their_caps():
    inst = random_instances(["concentric"], 1, 60, seed=2, n_min=60, grid=300, distinct=True)[0]
    report = hierarchy_report(inst)
    assert report.n == 60
    for label, size, colors, cap, offset in report.as_rows():
        assert 0 < size and colors <= cap


def test_report_palettes_round_major_word_lexicographic():
    inst = random_instances(["concentric"], 1, 30, seed=4, n_min=30, grid=300, distinct=True)[0]
    report = hierarchy_report(inst)
    assert report.k >= 2
    rows = report.as_rows()
    keys = []
    for label, _, _, _, _ in rows:
        kind, word = label.split(":")
        # peeled rounds T1..Tk come before the leaf cells S_k
        keys.append((int(kind[1:]) if kind[0] == "T" else report.k + 1, word))
    assert keys == sorted(keys)
    offsets = [row[4] for row in rows]
    assert offsets == sorted(offsets)
    leaves = [label.split(":")[1] for label, *_ in rows if label.startswith("S")]
    assert leaves == [w for w in binary_words(report.k) if w in leaves]
