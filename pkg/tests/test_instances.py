"""
Instance files, seeded generators and SVG rendering.
"""
import json
from fractions import Fraction

import pytest

from rectpack.cliques import clique_number
from rectpack.errors import ParseError, ValidationError
from rectpack.geom import Instance, IntersectionType, classify
from rectpack.hooks.modules.instance import useGenerator
from rectpack.instances import (
    GeneratorSpec,
    generate,
    instance_document,
    load,
    load_coloring,
    load_id_list,
    parse_instance,
    save,
)
from rectpack.render import render_svg

from conftest import box


def document(*records):
    return json.dumps({"rectangles": list(records)})


def test_parse_exact_numbers():
    inst = parse_instance(document({"id": 1, "x1": "0", "y1": 0, "x2": "3/7", "y2": 0.25}))
    r = inst["1"]
    assert r.x_hi == Fraction(3, 7)
    assert r.y_hi == Fraction(1, 4)
    assert r.weight == 1


def test_parse_rejects_bad_json():
    with pytest.raises(ParseError) as err:
        parse_instance("{")
    assert err.value.location == "line 1"


def test_parse_reports_missing_field():
    with pytest.raises(ParseError) as err:
        parse_instance(document({"id": "a", "x1": 0, "y1": 0, "x2": 1}))
    assert err.value.location == "rectangles.0.y2"


def test_parse_reports_bad_number():
    with pytest.raises(ParseError) as err:
        parse_instance(document({"id": "a", "x1": "abc", "y1": 0, "x2": 1, "y2": 1}))
    assert err.value.location == "a.x1"


def test_parse_rejects_degenerate_rect():
    with pytest.raises(ValidationError) as err:
        parse_instance(document({"id": "flat", "x1": 2, "y1": 0, "x2": 2, "y2": 1}))
    assert err.value.rect_id == "flat"


def test_parse_rejects_duplicate_ids():
    rec = {"id": "a", "x1": 0, "y1": 0, "x2": 1, "y2": 1}
    with pytest.raises(ValidationError):
        parse_instance(document(rec, rec))


def test_parse_drops_zero_weight():
    text = document(
        {"id": "a", "x1": 0, "y1": 0, "x2": 1, "y2": 1, "weight": "0"},
        {"id": "b", "x1": 2, "y1": 0, "x2": 3, "y2": 1, "weight": "2"},
    )
    assert parse_instance(text).ids == ["a", "b"]
    assert parse_instance(text, drop_zero_weight=True).ids == ["b"]


def test_save_load_is_stable(tmp_path):
    inst = generate(GeneratorSpec(kind="concentric", n=15, seed=3, grid=11, weights="random"))
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    save(inst, first)
    save(load(first), second)
    assert first.read_text() == second.read_text()
    assert instance_document(load(first)) == instance_document(inst)


def test_load_missing_file(tmp_path):
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json")


def test_load_coloring_and_id_list(tmp_path):
    wrapped, bare = tmp_path / "wrapped.json", tmp_path / "bare.json"
    wrapped.write_text(json.dumps({"algorithm": "agb", "colors": {"a": 0, "b": 1}}))
    bare.write_text(json.dumps({"a": 2}))
    assert load_coloring(wrapped) == {"a": 0, "b": 1}
    assert load_coloring(bare) == {"a": 2}

    chosen, plain = tmp_path / "chosen.json", tmp_path / "plain.json"
    chosen.write_text(json.dumps({"chosen": ["a", "c"], "weight": "2"}))
    plain.write_text(json.dumps(["b"]))
    assert load_id_list(chosen) == ["a", "c"]
    assert load_id_list(plain) == ["b"]


def test_generators_are_deterministic():
    for kind in ("uniform", "squares", "concentric", "vertical", "crossgrid"):
        spec = GeneratorSpec(kind=kind, n=25, seed=42, grid=100, weights="random")
        assert instance_document(generate(spec)) == instance_document(generate(spec))


def test_generator_kinds_keep_their_shape():
    concentric = generate(GeneratorSpec(kind="concentric", n=30, seed=1, grid=50))
    vertical = generate(GeneratorSpec(kind="vertical", n=30, seed=1, grid=50))
    squares = generate(GeneratorSpec(kind="squares", n=30, seed=1, grid=50))
    for a in concentric:
        for b in concentric:
            if a.id != b.id:
                assert classify(a, b).kind in (IntersectionType.CROSSING, IntersectionType.CONTAINMENT)
    assert (vertical.adjacency == vertical.vertical).all()
    assert not squares.crossing.any()
    assert all(r.width == r.height for r in squares)


def test_generator_edge_cases():
    assert len(generate(GeneratorSpec(kind="uniform", n=0))) == 0
    grid = generate(GeneratorSpec(kind="crossgrid", n=4))
    assert clique_number(grid) == 2
    weighted = generate(GeneratorSpec(kind="uniform", n=50, seed=9, weights="random"))
    assert all(1 <= r.weight <= 100 for r in weighted)


def test_use_generator_validates():
    assert len(useGenerator(kind="squares", n=5, seed=0)) == 5
    with pytest.raises(ValidationError):
        useGenerator(kind="squares", n=-1, seed=0)
    with pytest.raises(ValidationError):
        useGenerator(kind="hexagons", n=3, seed=0)


def test_svg_empty_instance():
    svg = render_svg(Instance([]))
    assert "<svg" in svg and svg.rstrip().endswith("</svg>")
    assert "<rect" not in svg


def test_svg_colors_and_highlight(cross_pair):
    svg = render_svg(cross_pair, {"wide": 0, "tall": 1}, highlight=["tall"])
    assert svg.count("<rect") == 2
    wide = next(line for line in svg.splitlines() if 'id="wide"' in line)
    tall = next(line for line in svg.splitlines() if 'id="tall"' in line)
    fill = lambda line: line.split('fill="')[1].split('"')[0]
    assert fill(wide) != fill(tall)
    assert 'stroke-width="3"' in tall
    assert 'stroke-width="1"' in wide


def test_svg_escapes_ids():
    svg = render_svg(Instance([box('a"<b', 0, 1, 0, 1)]))
    assert 'id="a&quot;&lt;b"' in svg
