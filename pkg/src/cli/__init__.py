#!/usr/bin/env python3
"""EFPM Workbench command line"""

__version__ = "1.0.0"
