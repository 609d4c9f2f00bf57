#!/usr/bin/env python3
"""
Fusion Loss Lab CLI
Entry point for the fusion-cli command.
"""

from src.cli import main

if __name__ == "__main__":
    main()
