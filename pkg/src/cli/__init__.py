"""Command-line front-end for the Alpha-Domination Toolkit."""
