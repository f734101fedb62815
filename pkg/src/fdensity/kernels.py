"""Census kernel selection: compiled extension with pure-Python fallback.

Set FDENSITY_PURE=1 to force the fallback (used by tests and benchmarks).
"""

from __future__ import annotations

import os

from . import _census_py

if os.environ.get("FDENSITY_PURE"):
    _impl = _census_py
    BACKEND = "pure"
else:
    try:
        from . import _census_cy as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _census_py
        BACKEND = "pure"


def bb_census(n: int, k: int, table: list[list[int]]) -> tuple[int, ...]:
    return _impl.bb_census(n, k, table)


def available_backends() -> dict[str, object]:
    """All importable kernels keyed by name (for benchmarks and tests)."""
    out: dict[str, object] = {"pure": _census_py.bb_census}
    try:
        from . import _census_cy

        out["compiled"] = _census_cy.bb_census
    except ImportError:
        pass
    return out
