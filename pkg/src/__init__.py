"""
Fusion Loss Lab Package
"""

__version__ = "0.1.0"

# Import main CLI function for easy access
from .cli import main as cli_main

__all__ = ["cli_main", "__version__"]
