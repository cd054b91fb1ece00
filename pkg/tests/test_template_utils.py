"""Tests for the bound trace templates."""

import pytest
from jinja2 import UndefinedError

from src.template_utils import BOUND_TEMPLATES_DIR, TRACE_KEYS, render_trace, render_yaml_template


def test_render_yaml_template(tmp_path):
    (tmp_path / "bound.yaml").write_text(
        "formula: {{ name }}\n"
        "derivation: |\n"
        "  {% for step in steps %}{{ step }}\n"
        "  {% endfor %}value = {{ value }}\n"
    )
    rendered = render_yaml_template("bound.yaml", {"name": "demo", "steps": ["a = 1", "b = 2"], "value": 3}, tmp_path)
    assert rendered == {"formula": "demo", "derivation": "a = 1\nb = 2\nvalue = 3\n"}


def test_undefined_variables_are_errors(tmp_path):
    (tmp_path / "bound.yaml").write_text("derivation: value = {{ value }}\n")
    with pytest.raises(UndefinedError):
        render_yaml_template("bound.yaml", {}, tmp_path)


def test_render_trace(tmp_path):
    (tmp_path / "demo.yaml").write_text(
        "formula: demo\ntopic: Demo bound\nderivation: |\n  x = {{ value }}\n\n"
    )
    assert render_trace("demo", {"value": "2.0"}, tmp_path) == {
        "formula": "demo",
        "topic": "Demo bound",
        "derivation": "x = 2.0",
    }


def test_render_trace_needs_every_key(tmp_path):
    (tmp_path / "partial.yaml").write_text("formula: partial\nderivation: x\n")
    with pytest.raises(ValueError, match="lacks topic"):
        render_trace("partial", {}, tmp_path)
    (tmp_path / "scalar.yaml").write_text("just text\n")
    with pytest.raises(ValueError, match="not a mapping"):
        render_trace("scalar", {}, tmp_path)


def test_shipped_rho_template():
    trace = render_trace("rho", {"value": "13.0019539", "log_value": "2.5650996"})
    assert set(trace) == set(TRACE_KEYS)
    assert trace["formula"] == "rho"
    assert trace["derivation"].endswith("rho = 13.0019539")
    assert (BOUND_TEMPLATES_DIR / "merge.yaml").is_file()
