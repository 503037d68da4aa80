#!/usr/bin/env python3
"""
Contact Invariants
Main Application Entry Point

Features:
- Localization counts of rational contact curves meeting general lines
- Gromov-Witten line-incidence numbers of P^3
- Fixed-point graph enumeration with an on-disk cache
- Legendrian checks for explicit parametrizations
- Reducible configuration tables

Usage:
    python app.py compute --degree 3 --invariant contact
    python app.py graphs --degree 2 --stats --format text
"""

import sys

from cli import main

if __name__ == "__main__":
    sys.exit(main())
