"""
CLI Package
Command-line entry point: add, sweep, verify, info and export-circuit.
"""

from .app import build_parser, main, setup_handlers

__all__ = [
    'build_parser',
    'main',
    'setup_handlers',
]
