"""Decision procedure for graded modal logics over symmetric weighted frames.

Thin wrapper around the native module; see ``prove``, ``check``, ``tau``,
``eval`` and ``fuzz``.
"""

from _nsmb import check, eval, fuzz, prove, tau

__all__ = ["prove", "check", "tau", "eval", "fuzz"]
