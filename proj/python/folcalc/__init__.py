"""Exact calculus for singular holomorphic foliations on affine charts.

The heavy lifting lives in the compiled extension; this package re-exports
its surface.  The extension sits inside the package in a wheel install and
on sys.path in a build-tree run.
"""

try:
    from ._folcalc import *  # noqa: F401,F403
except ImportError:
    from _folcalc import *  # noqa: F401,F403
