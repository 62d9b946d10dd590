"""
Utility subpackage used to import experiment configurations from files.
"""
