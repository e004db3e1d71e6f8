"""Three-valued function lattices, rough-set approximation by quasiorders,
and decision procedures for rough-set representability.

The heavy lifting lives in the compiled extension ``_rs3``; this package
re-exports its public surface.
"""

try:
    from ._rs3 import *  # noqa: F401,F403  (installed package layout)
    from . import _rs3 as _impl
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _rs3 import *  # noqa: F401,F403
    import _rs3 as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
__version__ = "0.1.0"
