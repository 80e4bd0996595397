"""
WAV and artifact file access.

Reads and writes RIFF PCM WAV through soundfile, and writes every output
atomically (temporary file in the target directory, then rename) so that
a failing command never leaves a partial file behind.
"""

import json
import os
import shutil
import tempfile
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Any, TextIO, Union

import numpy as np
import soundfile as sf

from src.shared.exceptions import AudioIOError
from src.shared.infrastructure.logger import get_logger
from src.shared.models import PROCESSING_RATE, AudioClip

logger = get_logger(__name__)

PathLike = Union[str, Path]

PCM_SUBTYPES = {16: "PCM_16", 24: "PCM_24"}


def read_wav(path: PathLike, require_rate: int | None = PROCESSING_RATE) -> AudioClip:
    """
    Read a WAV file as a mono AudioClip.

    Multi-channel files are downmixed by averaging the channels, with a
    warning.

    Args:
        path: WAV file path.
        require_rate: Sample rate the file must have; None accepts any.

    Returns:
        Mono clip with samples in [-1, 1].

    Raises:
        AudioIOError: If the file is missing, unreadable or at another rate.
    """
    path = Path(path)
    if not path.is_file():
        raise AudioIOError(f"Audio file not found: {path}", str(path))
    try:
        data, rate = sf.read(str(path), dtype="float64", always_2d=True)
    except (RuntimeError, OSError) as exc:
        message = f"Unable to read audio file {path}: {exc}"
        raise AudioIOError(message, str(path)) from exc

    if require_rate is not None and rate != require_rate:
        raise AudioIOError(
            f"{path} is sampled at {rate} Hz; only {require_rate} Hz is supported",
            str(path),
        )
    if data.shape[1] > 1:
        logger.warning(f"Downmixing {data.shape[1]}-channel file {path} to mono")
    return AudioClip(data.mean(axis=1), rate)


def write_wav(path: PathLike, clip: AudioClip, bit_depth: int = 16) -> Path:
    """
    Write a clip as PCM WAV, atomically.

    Samples outside [-1, 1] are clipped (with a warning) before
    quantization.

    Args:
        path: Destination path.
        clip: Clip to write.
        bit_depth: 16 or 24.

    Returns:
        The destination path.

    Raises:
        AudioIOError: On an unsupported bit depth or a write failure.
    """
    if bit_depth not in PCM_SUBTYPES:
        raise AudioIOError(f"Unsupported bit depth {bit_depth}; use 16 or 24")
    path = Path(path)
    samples = clip.samples
    peak = float(np.max(np.abs(samples))) if len(clip) else 0.0
    if peak > 1.0:
        logger.warning(f"Clipping {path.name}: peak amplitude {peak:.3f} exceeds 1.0")
        samples = np.clip(samples, -1.0, 1.0)

    def _write(tmp: Path) -> None:
        sf.write(str(tmp), samples, clip.sample_rate, subtype=PCM_SUBTYPES[bit_depth])

    _atomic(path, _write, suffix=".wav")
    return path


def write_text(path: PathLike, text: str) -> Path:
    """
    Write a UTF-8 text file atomically.

    Args:
        path: Destination path.
        text: File content.

    Returns:
        The destination path.
    """
    path = Path(path)
    _atomic(path, lambda tmp: tmp.write_text(text, encoding="utf-8"), suffix=".tmp")
    return path


def write_json(path: PathLike, document: Any) -> Path:
    """
    Write a JSON document atomically (2-space indent, sorted keys).

    Args:
        path: Destination path.
        document: JSON-serializable object.

    Returns:
        The destination path.
    """
    return write_text(path, json.dumps(document, indent=2, sort_keys=True) + "\n")


def read_json(path: PathLike) -> Any:
    """
    Read a JSON document.

    Args:
        path: Source path.

    Returns:
        Parsed document.

    Raises:
        AudioIOError: If the file is missing or not valid JSON.
    """
    path = Path(path)
    try:
        return json.loads(path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        raise AudioIOError(f"File not found: {path}", str(path)) from exc
    except (OSError, json.JSONDecodeError) as exc:
        message = f"Unable to read JSON file {path}: {exc}"
        raise AudioIOError(message, str(path)) from exc


@contextmanager
def staged_directory(final_dir: PathLike) -> Iterator[Path]:
    """
    Stage a results directory and move it into place only on success.

    Files are written into a temporary sibling directory; on normal exit it
    replaces final_dir, on error it is removed.

    Args:
        final_dir: Directory that should exist once the block completes.

    Yields:
        Path of the staging directory.
    """
    final_dir = Path(final_dir)
    final_dir.parent.mkdir(parents=True, exist_ok=True)
    staging = Path(tempfile.mkdtemp(prefix=f".{final_dir.name}.", dir=final_dir.parent))
    try:
        yield staging
    except BaseException:
        shutil.rmtree(staging, ignore_errors=True)
        raise
    if final_dir.exists():
        shutil.rmtree(final_dir)
    os.replace(staging, final_dir)


def _atomic(path: Path, writer: Any, suffix: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, name = tempfile.mkstemp(
            prefix=f".{path.name}.", suffix=suffix, dir=path.parent
        )
        os.close(fd)
    except OSError as exc:
        raise AudioIOError(f"Unable to write {path}: {exc}", str(path)) from exc
    tmp = Path(name)
    try:
        writer(tmp)
        os.replace(tmp, path)
    except (RuntimeError, OSError) as exc:
        tmp.unlink(missing_ok=True)
        raise AudioIOError(f"Unable to write {path}: {exc}", str(path)) from exc


@contextmanager
def atomic_text_writer(path: PathLike) -> Iterator[TextIO]:
    """
    Open a text file for incremental writing that appears only on success.

    Lines go to a temporary file next to path; it is renamed onto path when
    the block exits normally and deleted when it raises.

    Args:
        path: Destination path.

    Yields:
        Writable text handle.

    Raises:
        AudioIOError: If the file cannot be created or renamed.
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, name = tempfile.mkstemp(
            prefix=f".{path.name}.", suffix=".tmp", dir=path.parent
        )
    except OSError as exc:
        raise AudioIOError(f"Unable to write {path}: {exc}", str(path)) from exc
    tmp = Path(name)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            yield handle
        os.replace(tmp, path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def iter_wav_chunks(
    path: PathLike, chunk_samples: int, require_rate: int = PROCESSING_RATE
) -> Iterator[np.ndarray]:
    """
    Read a WAV file as consecutive mono chunks.

    Args:
        path: WAV file path.
        chunk_samples: Frames per chunk (the last chunk may be shorter).
        require_rate: Sample rate the file must have.

    Yields:
        float64 mono sample arrays.

    Raises:
        AudioIOError: If the file is missing, unreadable or at another rate.
    """
    path = Path(path)
    if not path.is_file():
        raise AudioIOError(f"Audio file not found: {path}", str(path))
    try:
        with sf.SoundFile(str(path)) as handle:
            if handle.samplerate != require_rate:
                raise AudioIOError(
                    f"{path} is sampled at {handle.samplerate} Hz; "
                    f"only {require_rate} Hz is supported",
                    str(path),
                )
            if handle.channels > 1:
                logger.warning(
                    f"Downmixing {handle.channels}-channel file {path} to mono"
                )
            blocks = handle.blocks(
                blocksize=chunk_samples, dtype="float64", always_2d=True
            )
            for block in blocks:
                yield block.mean(axis=1)
    except RuntimeError as exc:
        message = f"Unable to read audio file {path}: {exc}"
        raise AudioIOError(message, str(path)) from exc
