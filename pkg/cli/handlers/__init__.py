"""
CLI Handlers Package
This package contains one module per subcommand.
"""

from .add import add_handler
from .sweep import sweep_handler
from .verify import verify_handler
from .info import info_handler
from .export import export_handler

__all__ = [
    'add_handler',
    'sweep_handler',
    'verify_handler',
    'info_handler',
    'export_handler',
]
