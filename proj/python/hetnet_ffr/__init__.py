"""Edge-user coverage and rate for FFR multi-tier cellular downlinks.

Thin wrapper over the compiled extension; everything public lives there.
"""

try:
    from ._hetnet_ffr import *  # noqa: F401,F403
    from ._hetnet_ffr import __doc__ as _ext_doc  # noqa: F401
except ImportError:
    # Build-tree layout: the extension sits on sys.path rather than inside
    # the package (ctest points PYTHONPATH at the CMake output directory).
    from _hetnet_ffr import *  # noqa: F401,F403

__version__ = "0.1.0"
