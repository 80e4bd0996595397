"""
Detector presentation layer.

Config file schema and the detect subcommand.
"""
