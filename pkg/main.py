"""
Alpha-Domination Toolkit - Command-Line Launcher
Bounds, randomized constructions and exact values for α-domination in graphs.

Usage:
    python main.py bounds --gen cycle:5 --alpha 1/2
    python main.py experiment paper-example --format csv
"""

import os
import sys

# Add src to path for imports
sys.path.insert(0, os.path.join(os.path.dirname(__file__), 'src'))

from src.cli.app import main


if __name__ == "__main__":
    sys.exit(main())
