import json
import random
import xml.etree.ElementTree as ET

from mcdm.model import Criterion, Direction, WeightVector, new_matrix
from mcdm.reporting import (
    emit_bar_chart,
    export_json,
    parse_topsis_json,
    render_sensitivity_table,
    render_topsis_table,
    render_weight_table,
)
from mcdm.repro import builtin_expected, builtin_fixture
from mcdm.sensitivity import rank_stability
from mcdm.topsis import topsis_rank
from mcdm.weighting import equal_weights

from .conftest import random_matrix

B = Direction.BENEFIT


def test_topsis_table_published_fixture():
    text = render_topsis_table(builtin_expected())
    lines = text.splitlines()
    assert lines[0] == "Alternative\tSi-\tSi+\tci\trank"
    ci_column = [line.split("\t")[3] for line in lines[1:]]
    assert ci_column[:2] == ["0.619168", "0.605111"]
    ranks = [line.split("\t")[4] for line in lines[1:]]
    assert ranks[:4] == ["3", "4", "2", "1"]


def test_topsis_table_deterministic():
    result = builtin_expected()
    assert render_topsis_table(result) == render_topsis_table(result)
    assert "\r" not in render_topsis_table(result)


def test_weight_table():
    w = equal_weights(2)
    text = render_weight_table(["c1", "c2"], w)
    assert "c1\t0.500000" in text


def test_export_json_schema():
    m = new_matrix(
        ["a", "b"], [Criterion("c1", B), Criterion("c2", B)], [[1.0, 2.0], [3.0, 1.0]]
    )
    result = topsis_rank(m, equal_weights(2))
    payload = json.loads(export_json(result))
    assert isinstance(payload, list) and len(payload) == 2
    assert sorted(payload[0]) == ["alternative", "closeness", "rank", "s_minus", "s_plus"]


def test_export_json_sorted_keys():
    m = new_matrix(
        ["a", "b"], [Criterion("c1", B), Criterion("c2", B)], [[1.0, 2.0], [3.0, 1.0]]
    )
    report = rank_stability(m, equal_weights(2), 0.1, 0.2)
    text = export_json(report)
    payload = json.loads(text)
    assert list(payload) == sorted(payload)
    assert "stability_score" in payload


def test_json_round_trip_random():
    rng = random.Random(3)
    for _ in range(50):
        m = random_matrix(rng)
        result = topsis_rank(m, equal_weights(m.n))
        assert parse_topsis_json(export_json(result)) == result


def test_bar_chart_fixture():
    result = builtin_expected()
    svg = emit_bar_chart(result)
    root = ET.fromstring(svg)
    assert root.tag.endswith("svg")
    bars = [el for el in root.iter() if el.tag.endswith("rect")]
    assert len(bars) == 11
    heights = [float(b.get("height")) for b in bars]
    assert max(range(11), key=lambda i: heights[i]) == 3  # rank-1 row is tallest
    assert "Satisfied with the working environment in an organization" in svg


def test_bar_chart_equal_heights():
    rows = topsis_rank(
        new_matrix(
            ["a", "b"],
            [Criterion("c1", B), Criterion("c2", B)],
            [[1.0, 2.0], [2.0, 1.0]],
        ),
        equal_weights(2),
    )
    svg = emit_bar_chart(rows)
    bars = [el for el in ET.fromstring(svg).iter() if el.tag.endswith("rect")]
    assert bars[0].get("height") == bars[1].get("height")


def test_bar_chart_well_formed_and_deterministic():
    result = topsis_rank(builtin_fixture(), equal_weights(11))
    svg = emit_bar_chart(result)
    ET.fromstring(svg)  # raises on malformed XML
    assert svg == emit_bar_chart(result)
    assert 'version="1.1"' in svg
