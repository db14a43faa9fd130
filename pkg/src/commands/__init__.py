#!/usr/bin/env python3
"""
Commands Module
"""

from .command_processor import CommandProcessor