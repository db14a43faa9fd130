#!/usr/bin/env python3
"""
Utils Module
"""

from .logger import setup_logger
