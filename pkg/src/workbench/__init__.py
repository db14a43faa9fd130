#!/usr/bin/env python3
"""
Workbench Module
"""
