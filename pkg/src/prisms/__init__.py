#!/usr/bin/env python3
"""
Prisms Module
"""
