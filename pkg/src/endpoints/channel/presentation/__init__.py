"""
Channel presentation layer.

Config file schema and the attack subcommand.
"""
