"""
Tests module.

Test suites for shared code and endpoints.
"""
