"""
Watermark domain layer.

Keys, configuration, banks and placement of watermarks in host audio.
"""
