"""Monomial kernel selector.

Imports the compiled kernel when available, otherwise the pure-Python one.
Set SYZAL_PURE=1 to force the pure backend. Both backends are bit-identical
in behaviour; benchmarks/bench_kernel.py compares their speed.
"""
from __future__ import annotations

import os

if os.environ.get("SYZAL_PURE") == "1":
    from syzal import _kernel_py as _impl
else:
    try:
        from syzal import _kernel_c as _impl  # type: ignore[no-redef]
    except ImportError:
        from syzal import _kernel_py as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
mono_deg = _impl.mono_deg
mono_mul = _impl.mono_mul
mono_divides = _impl.mono_divides
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
mono_coprime = _impl.mono_coprime
cmp_grevlex = _impl.cmp_grevlex
cmp_grlex = _impl.cmp_grlex
