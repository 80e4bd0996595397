"""
Watermark presentation layer.

Config file schemas and the embed / bank subcommands.
"""
