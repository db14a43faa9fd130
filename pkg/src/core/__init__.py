#!/usr/bin/env python3
"""
Core Module
"""

from .workbench_core import WorkbenchCore
