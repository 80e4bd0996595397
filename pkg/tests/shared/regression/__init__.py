"""
Regression tests for shared code.

Tests that ensure previously fixed bugs in shared code do not reoccur.
"""
