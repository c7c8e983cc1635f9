"""Invariant positive-definite inner products for Klein-Gordon type equations."""

import json

from ._kgip import *  # noqa: F401,F403
from ._kgip import KgipError, verify_report


def verify(dim=8, seed=42, tol=1e-10):
    """Run the property battery and return the report as a dict."""
    return json.loads(verify_report(dim, seed, tol))
