"""Shift-XOR ensembles of bit strings and their thermodynamic description."""

import json

from ._strtherm import *  # noqa: F401,F403
from ._strtherm import StrthermError, analyze_bytes

__all__ = [name for name in dir() if not name.startswith("_")]


def analyze(data, second=None, **options):
    """Analyze bytes and return the report as a dict."""
    return json.loads(analyze_bytes(data, second, format="json", **options))
