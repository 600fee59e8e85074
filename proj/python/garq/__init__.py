# Copyright 2026 The garq Authors
# SPDX-License-Identifier: Apache-2.0
"""Grassmann and CAR algebra calculus for quasifree fermionic states."""

from ._garq import *  # noqa: F401,F403
from ._garq import Error, SizeError, ValidationError

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
