#!/usr/bin/env python3
"""Regenerate all nine reference density panels (CSV + SVG) into figures/."""
import sys

from qwell.cli import main

if __name__ == "__main__":
    sys.exit(main(["figures", "--panel", "all"] + sys.argv[1:]))
