#!/usr/bin/env python3
"""
Simplicial Module
"""
