"""Casimir and Casimir-Polder interactions from surface scattering operators.

The heavy lifting happens in the C++ extension; this package re-exports the
bound operations.
"""

try:
    from ._casimir_sso import *  # noqa: F401,F403  (installed layout)
    from ._casimir_sso import __doc__ as _ext_doc  # noqa: F401
except ImportError:  # in-tree build: extension on sys.path
    from _casimir_sso import *  # noqa: F401,F403

__version__ = "0.1.0"
