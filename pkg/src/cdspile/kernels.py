"""Backend selection for the census kernel.

The compiled extension is used when it imports; set ``CDSPILE_PURE_PYTHON=1``
to force the pure-Python fallback.  Both expose ``census_chunk``,
``structure_census``, ``pile_values`` and ``merge_count`` with identical
results.
"""

from __future__ import annotations

import os

from . import _pykernels as python_backend

compiled_backend = None
if os.environ.get("CDSPILE_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as compiled_backend  # type: ignore[no-redef]
    except ImportError:
        compiled_backend = None

_impl = compiled_backend or python_backend
BACKEND = "cython" if compiled_backend is not None else "python"

census_chunk = _impl.census_chunk
pile_values = _impl.pile_values
merge_count = _impl.merge_count
structure_census = _impl.structure_census

__all__ = ["BACKEND", "census_chunk", "pile_values", "merge_count", "structure_census", "python_backend", "compiled_backend"]
