"""Single-photon frequency conversion model (python bindings)."""

try:
    from ._qfc import *  # noqa: F401,F403
    from ._qfc import __version__  # noqa: F401
except ImportError:  # building in-tree: the extension sits next to the package
    from _qfc import *  # noqa: F401,F403
    from _qfc import __version__  # noqa: F401
