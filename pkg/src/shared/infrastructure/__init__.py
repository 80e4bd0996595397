"""
Shared infrastructure module.

Common infrastructure components (logging, settings, audio and artifact
files) used across all endpoints.
"""

from src.shared.infrastructure.audio_files import (
    atomic_text_writer,
    iter_wav_chunks,
    read_json,
    read_wav,
    staged_directory,
    write_json,
    write_text,
    write_wav,
)
from src.shared.infrastructure.logger import get_logger, set_level
from src.shared.infrastructure.settings import EigenmarkSettings, get_settings

__all__ = [
    "EigenmarkSettings",
    "atomic_text_writer",
    "iter_wav_chunks",
    "get_logger",
    "get_settings",
    "read_json",
    "read_wav",
    "set_level",
    "staged_directory",
    "write_json",
    "write_text",
    "write_wav",
]
