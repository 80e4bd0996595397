"""
Tests for shared code.
"""
