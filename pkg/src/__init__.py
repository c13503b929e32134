"""
Alpha-Domination Toolkit
Bounds, randomized constructions and exact values for α-domination in graphs.
"""

__version__ = "1.0.0"
__author__ = "Alpha-Domination Toolkit Team"
