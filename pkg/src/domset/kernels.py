"""Backend selection for the search kernels.

The compiled extension ``domset._core`` is preferred when importable; the
pure-Python mirror ``domset._pure`` is the fallback.  Both implement the same
API over the same random stream, so the choice affects speed only.  Set the
environment variable ``DOMSET_PURE_PYTHON=1`` to force the pure backend (used
by the parity tests and the backend benchmark).
"""

from __future__ import annotations

import os

_force_pure = os.environ.get("DOMSET_PURE_PYTHON", "") not in ("", "0")

if _force_pure:
    from . import _pure as _impl
else:
    try:
        from . import _core as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pure as _impl

BACKEND = _impl.BACKEND_NAME

STOP_TIME = _impl.STOP_TIME
STOP_BOUND = _impl.STOP_BOUND
STOP_ITER = _impl.STOP_ITER
STOP_CYCLE_END = _impl.STOP_CYCLE_END

decode = _impl.decode
decode_weighted = _impl.decode_weighted
rlso_loop = _impl.rlso_loop
msrls_cycle = _impl.msrls_cycle
ant_construct = _impl.ant_construct
ls_remove_redundant = _impl.ls_remove_redundant

#: Map kernel stop codes to the stop-reason vocabulary used in run records.
STOP_REASONS = {
    STOP_TIME: "time",
    STOP_BOUND: "lower-bound-hit",
    STOP_ITER: "iteration-cap",
}
