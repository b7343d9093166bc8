"""Exact engines for the K-theoretic chromatic symmetric function."""

try:
    from ._kromatic import *  # noqa: F401,F403  (installed layout)
    from . import _kromatic as _impl
except ImportError:  # build-tree layout: extension sits next to the package dir
    from _kromatic import *  # noqa: F401,F403
    import _kromatic as _impl

__all__ = [name for name in dir(_impl) if not name.startswith("_")]
