"""
Tests for endpoints.
"""
