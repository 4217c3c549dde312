"""Backend selection for the search kernel.

The compiled extension is used when it was built; setting
``DEFECTCOLOR_PURE=1`` forces the pure-Python fallback.
"""

import os

BACKEND = "python"

if os.environ.get("DEFECTCOLOR_PURE", "") not in ("", "0"):
    from ._kernels_py import solve_csr
else:
    try:
        from ._kernels import solve_csr
        BACKEND = "cython"
    except ImportError:  # extension not built
        from ._kernels_py import solve_csr

from ._kernels_py import solve_csr as solve_csr_py

__all__ = ["BACKEND", "solve_csr", "solve_csr_py"]
