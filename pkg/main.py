#!/usr/bin/env python3
"""
Temporal proportionality toolkit

Checks proportionality axioms, runs voting rules and verifies the fixture
corpus for temporal approval elections.
"""

import sys

from config import Config
from src.cli import run


def main():
    """
    Entry point; settings come from config.py and the .env file.
    """
    sys.exit(run(sys.argv[1:], config=Config))


if __name__ == "__main__":
    main()
