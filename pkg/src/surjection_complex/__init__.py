#!/usr/bin/env python3
"""
Surjection Complex Module
"""
