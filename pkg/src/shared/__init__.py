"""
Shared code module.

DSP primitives, audio models, file I/O, settings, logging and exceptions
used by every endpoint. Nothing in here knows about watermarks.
"""
