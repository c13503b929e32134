"""
Tests for the α-domination core and command-line front-end.
Run with: python -m pytest tests/
"""
