"""
hallcalc CLI Package

Command-line front end for the Hall-algebra library.
"""

__version__ = "0.1.0"
