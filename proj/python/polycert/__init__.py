"""Exact combinatorial toolkit for simple polytopes.

All functions exchange JSON strings in the same schemas the CLI uses;
wrap them with json.loads/json.dumps on the Python side.
"""

try:
    from ._polycert import *  # noqa: F401,F403
except ImportError:  # running against a bare build tree
    from _polycert import *  # noqa: F401,F403
