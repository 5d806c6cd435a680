"""GLSL 1.20 source export for every noise variant.

Sources are stored as template files under ``glsl/``.  The only placeholder
is ``@SCALE@``, filled with the variant's output scale so the shader and the
native evaluator share one constant.  ``simplex2`` has no placeholder: it is
kept byte-identical to the reference listing in ``tests/golden``.
"""

from __future__ import annotations

from importlib import resources

from .noise.params import OUTPUT_SCALE_LITERALS, VARIANTS

SHADER_KINDS = VARIANTS
VERSION_LINE = "#version 120\n"


def list_shader_kinds() -> tuple[str, ...]:
    return SHADER_KINDS


def _template(kind: str) -> str:
    path = resources.files("polynoise") / "glsl" / f"{kind}.glsl"
    return path.read_bytes().decode("utf-8")


def emit_shader_source(kind: str, standalone: bool = True) -> str:
    """Shader text for ``kind``.

    ``standalone=False`` drops the ``#version`` line so the functions can be
    pasted into an existing shader.
    """
    if kind not in SHADER_KINDS:
        raise ValueError(f"unknown shader kind {kind!r}; expected one of {', '.join(SHADER_KINDS)}")
    text = _template(kind)
    if "@SCALE@" in text:
        family, dim = kind[:-1], kind[-1]
        key = f"classic{dim}" if family == "periodic" else kind
        text = text.replace("@SCALE@", OUTPUT_SCALE_LITERALS[key])
    if not standalone:
        text = text.replace(VERSION_LINE, "", 1)
    return text
