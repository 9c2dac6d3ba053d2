#!/usr/bin/env python3
"""
projcode - subspace codes for the injection metric.

    python projcode.py help
"""

import sys

from projcodes.cli import main


if __name__ == "__main__":
    sys.exit(main())
