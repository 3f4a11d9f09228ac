"""Backend selection: compiled extension if built, pure Python otherwise."""

try:
    from . import _ckernels as _impl
except ImportError:  # extension not built on this install
    from . import _pykernels as _impl

from . import _pykernels

BACKEND = _impl.BACKEND
pagerank_iterate = _impl.pagerank_iterate
hits_iterate = _impl.hits_iterate
eigenvector_iterate = _impl.eigenvector_iterate

__all__ = [
    "BACKEND",
    "pagerank_iterate",
    "hits_iterate",
    "eigenvector_iterate",
    "_pykernels",
]
