#!/usr/bin/env python3
"""
Transfers Module
"""
