#!/usr/bin/env python3
"""
Combinatorics Module
"""
