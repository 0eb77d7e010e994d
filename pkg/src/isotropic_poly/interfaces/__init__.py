"""File formats, polynomial codecs and CLI configuration."""

from .formats import (
    parse_graph,
    format_graph,
    read_graph,
    write_graph,
    parse_altspace,
    format_altspace,
    read_altspace,
    write_altspace,
)
from .poly_codec import (
    PolynomialDocument,
    dumps_json,
    loads_json,
    render,
    render_text,
    render_latex,
)
from .cli_models import CommandEnum, OutputFormatEnum, RunConfig

__all__ = [
    "parse_graph",
    "format_graph",
    "read_graph",
    "write_graph",
    "parse_altspace",
    "format_altspace",
    "read_altspace",
    "write_altspace",
    "PolynomialDocument",
    "dumps_json",
    "loads_json",
    "render",
    "render_text",
    "render_latex",
    "CommandEnum",
    "OutputFormatEnum",
    "RunConfig",
]
