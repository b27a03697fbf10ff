import json

import pytest

from polystab import solve_minimal_expansion
from polystab.io import (
    ParseError,
    ValidationError,
    instance_digest,
    parse_instance,
    parse_result,
    write_instance,
    write_result,
)
from polystab.oracle import InstanceRecipe, random_instance

THREE = """{"version": 1, "polygons": [
  [[1,1],[-1,1],[-1,-1],[1,-1]],
  [[5,1],[3,1],[3,-1],[5,-1]],
  [[3,4],[1,4],[1,2],[3,2]]]}"""


def test_parse_text_and_path(tmp_path):
    cfg = parse_instance(THREE)
    assert len(cfg) == 3
    assert [p.centroid for p in cfg] == [(0, 0), (4, 0), (2, 3)]
    f = tmp_path / "three.json"
    f.write_text(THREE)
    assert parse_instance(f) == cfg
    assert parse_instance(str(f)) == cfg


def test_reflex_quadrilateral_names_polygon():
    text = '{"version": 1, "polygons": [[[0,0],[2,0],[1,0.5],[1,2]], [[5,5],[6,5],[5,6]]]}'
    with pytest.raises(ValidationError) as exc:
        parse_instance(text)
    assert exc.value.polygon == 1
    assert "polygon 1" in str(exc.value)


@pytest.mark.parametrize(
    "text",
    [
        '{"version": 1, "polygons": []}',
        '{"version": 1, "polygons": [[[0,0],[1,0],[0,1]]',
        '{"version": 2, "polygons": [[[0,0],[1,0],[0,1]]]}',
        '{"version": 1, "polygons": [[[0,0],[1,0],[0,"a"]]]}',
        '{"version": 1, "polygons": [[[0,0],[1,0,2],[0,1]]]}',
        '[1, 2]',
    ],
)
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_instance(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_instance('{"version": 1,\n "polygons": [[[0,0],[1,0]],,]}')
    assert exc.value.line == 2 and exc.value.column is not None


def test_instance_roundtrip_exact():
    for seed in range(100):
        cfg = random_instance(InstanceRecipe(seed, 1 + seed % 10))
        text = write_instance(cfg)
        again = parse_instance(text)
        assert again == cfg
        assert write_instance(again) == text


def test_result_roundtrip_exact():
    for seed in range(10):
        cfg = random_instance(InstanceRecipe(seed, 3 + seed % 5))
        sol = solve_minimal_expansion(cfg)
        text = write_result(sol, cfg)
        back, digest = parse_result(text)
        assert back == sol
        assert digest == instance_digest(cfg)
        assert write_result(back, cfg) == text


def test_result_roundtrip_with_arc():
    cfg = parse_instance('{"version": 1, "polygons": [[[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]],'
                         '[[1.5, 1.5], [2.5, 1.5], [2.5, 2.5], [1.5, 2.5]],'
                         '[[3.5, -0.5], [4.5, -0.5], [4.5, 0.5], [3.5, 0.5]]]}')
    sol = solve_minimal_expansion(cfg)
    assert len(sol.arcs) == 1
    back, _ = parse_result(write_result(sol, cfg))
    assert back == sol


def test_result_has_seventeen_digits_and_implicit_form():
    cfg = parse_instance(THREE)
    doc = json.loads(write_result(solve_minimal_expansion(cfg), cfg))
    line = doc["lines"][0]
    a, b, c = line["implicit"]["a"], line["implicit"]["b"], line["implicit"]["c"]
    assert a / b == pytest.approx(1.5) and c / b == pytest.approx(3.0)
    assert doc["classification"] == "initial_configuration"
    assert '"theta": 0.58800260354756761' in write_result(solve_minimal_expansion(cfg), cfg)


def test_malformed_result():
    with pytest.raises(ParseError):
        parse_result('{"version": 1, "c_m": 1.0}')
