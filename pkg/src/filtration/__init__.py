#!/usr/bin/env python3
"""
Filtration Module
"""
