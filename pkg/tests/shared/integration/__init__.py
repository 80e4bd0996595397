"""
Integration tests for shared code.

Tests that verify shared components work together correctly.
"""
