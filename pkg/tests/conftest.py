#!/usr/bin/env python3
"""
Shared fixtures for PRISMA tests
"""

import pytest
import yaml

from src.combinatorics.surjections import Surjection
from src.simplicial.bar_construction import Simplex


@pytest.fixture
def u12312():
    return Surjection((1, 2, 3, 1, 2), 3)


@pytest.fixture
def surj():
    """Build a surjection from its word; arity is the largest letter"""
    def build(*word):
        return Surjection(word, max(word))
    return build


@pytest.fixture
def simplex():
    """Build a simplex from vertex words"""
    def build(*words):
        return Simplex.from_words(words)
    return build


@pytest.fixture
def config_file(tmp_path, monkeypatch):
    """A config file with file logging off, picked up through PRISMA_CONFIG"""
    def write(**sections):
        settings = {'logging': {'level': 'WARNING', 'file': False},
                    'output': {'progress': False, 'color': False}}
        for key, value in sections.items():
            settings.setdefault(key, {}).update(value)
        path = tmp_path / 'prisma.yaml'
        path.write_text(yaml.safe_dump(settings), encoding='utf-8')
        monkeypatch.setenv('PRISMA_CONFIG', str(path))
        return path
    return write
