"""
Rendering of the YAML templates that describe how a bound was evaluated.

A trace template is a jinja2 YAML document with the keys `formula`, `topic` and
`derivation`. Undefined template variables are errors, so a trace never silently drops a
value.
"""

import pathlib
from functools import lru_cache
from typing import Any

import yaml
from jinja2 import Environment, FileSystemLoader, StrictUndefined

BOUND_TEMPLATES_DIR = pathlib.Path(__file__).parent / "templates" / "bounds"
TRACE_KEYS = ("formula", "topic", "derivation")


@lru_cache(maxsize=8)
def _environment(template_dir: str) -> Environment:
    return Environment(
        loader=FileSystemLoader(template_dir),
        undefined=StrictUndefined,
        keep_trailing_newline=True,
        auto_reload=False,
    )


def render_yaml_template(
    name: str, values: dict[str, Any], template_dir: pathlib.Path | str = BOUND_TEMPLATES_DIR
) -> Any:
    """
    Render a YAML template and parse the result.

    Args:
        name: File name of the template inside template_dir
        values: Template variables
        template_dir: Directory holding the templates

    Returns:
        The parsed YAML document
    """
    template = _environment(str(template_dir)).get_template(name)
    return yaml.safe_load(template.render(**values))


def render_trace(
    formula: str, values: dict[str, Any], template_dir: pathlib.Path | str = BOUND_TEMPLATES_DIR
) -> dict[str, str]:
    """
    Render the trace template of a bound formula.

    formula - the template name without the .yaml suffix.
    values - template variables; `value` holds the evaluated bound.

    Returns the formula name, topic and derivation, each with trailing whitespace removed.
    """
    rendered = render_yaml_template(f"{formula}.yaml", values, template_dir)
    if not isinstance(rendered, dict):
        raise ValueError(f"Trace template {formula}.yaml is not a mapping")
    missing = [key for key in TRACE_KEYS if key not in rendered]
    if missing:
        raise ValueError(f"Trace template {formula}.yaml lacks {', '.join(missing)}")
    return {key: str(rendered[key]).rstrip() for key in TRACE_KEYS}
