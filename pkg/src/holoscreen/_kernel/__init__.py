"""Backend selection for the regular-subgroup search kernel.

The compiled Cython kernel and the pure-Python fallback implement the same
contract bit for bit; whichever is available is picked at import time.  Set
HOLOSCREEN_PURE=1 to force the fallback (useful for the differential tests
and the benchmark).
"""

import os

from . import pure

if os.environ.get("HOLOSCREEN_PURE") == "1":
    backend = pure
    HAVE_COMPILED = False
else:
    try:
        from . import _fiber as backend  # type: ignore[attr-defined]

        HAVE_COMPILED = True
    except ImportError:
        backend = pure
        HAVE_COMPILED = False

search_regular = backend.search_regular
BACKEND_NAME = "compiled" if HAVE_COMPILED else "pure"
