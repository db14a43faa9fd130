#!/usr/bin/env python3
"""Put the project root on sys.path the way main.py does"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
