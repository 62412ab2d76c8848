"""Bar-chart renderer for qcss correlation profile CSVs."""

__version__ = "0.1.0"

from .render import ProfileFormatError, ProfileRow, parse_profile, render

__all__ = ["ProfileFormatError", "ProfileRow", "parse_profile", "render"]
