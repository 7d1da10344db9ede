# SPDX-License-Identifier: Apache-2.0
"""Cramér-Rao bounds for near-field terminal positioning."""

try:
    from ._nearcrb import *  # installed-wheel layout
    from ._nearcrb import __doc__  # noqa: F401
except ImportError:  # in-tree CMake build puts the module at the top level
    from _nearcrb import *  # noqa: F401,F403
