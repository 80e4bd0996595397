"""
Host audio for experiments.

Synthetic generators (white noise, pink noise, random chords) and WAV
files, each rendered to a requested length from a seeded generator.
"""

import numpy as np
from numpy.typing import NDArray

from src.endpoints.evaluation.domain.models import HostSource
from src.shared.exceptions import SignalRangeError
from src.shared.infrastructure.audio_files import read_wav
from src.shared.models import PROCESSING_RATE, AudioClip

CHORD_SECONDS = 0.5
CHORD_NOTES = 3
CHORD_HARMONICS = 4
CHORD_EDGE_S = 0.005
CHORD_NOISE_FLOOR = 0.01


def render_host(
    source: HostSource, n_samples: int, rng: np.random.Generator
) -> AudioClip:
    """
    Render n_samples of host audio.

    Synthetic hosts are scaled to source.level_rms; file hosts keep their
    level and are cut from a random start.

    Args:
        source: Corpus entry.
        n_samples: Length in samples.
        rng: Generator driving every random choice.

    Returns:
        Mono 48 kHz clip.

    Raises:
        SignalRangeError: If a host file is shorter than n_samples.
    """
    if source.kind == "file":
        return AudioClip(_file_excerpt(source, n_samples, rng))
    if n_samples == 0:
        return AudioClip(np.zeros(0))
    if source.kind == "white":
        samples = rng.standard_normal(n_samples)
    elif source.kind == "pink":
        samples = _pink(n_samples, rng)
    else:
        samples = _chords(n_samples, rng)
    rms = float(np.sqrt(np.mean(samples**2)))
    return AudioClip(samples * (source.level_rms / rms) if rms > 0 else samples)


def assemble_host(
    sources: list[HostSource],
    lead: int,
    period: int,
    total: int,
    rng: np.random.Generator,
) -> AudioClip:
    """
    Host for a trial layout: a lead-in from the first source, then one
    period-long segment per trial with the sources used in rotation.

    Args:
        sources: Host corpus.
        lead: Lead-in length in samples.
        period: Segment length in samples.
        total: Total length in samples.
        rng: Generator for every segment.

    Returns:
        Clip of exactly total samples.
    """
    parts = [render_host(sources[0], min(lead, total), rng).samples]
    filled = parts[0].size
    segment = 0
    while filled < total:
        size = min(period, total - filled)
        parts.append(render_host(sources[segment % len(sources)], size, rng).samples)
        filled += size
        segment += 1
    return AudioClip(np.concatenate(parts))


def _pink(n_samples: int, rng: np.random.Generator) -> NDArray[np.float64]:
    spectrum = np.fft.rfft(rng.standard_normal(n_samples))
    freqs = np.fft.rfftfreq(n_samples)
    if freqs.size > 1:
        freqs[0] = freqs[1]
    else:
        freqs[0] = 1.0
    return np.fft.irfft(spectrum / np.sqrt(freqs), n_samples)


def _chords(n_samples: int, rng: np.random.Generator) -> NDArray[np.float64]:
    chord_len = int(CHORD_SECONDS * PROCESSING_RATE)
    edge = int(CHORD_EDGE_S * PROCESSING_RATE)
    t = np.arange(chord_len) / PROCESSING_RATE
    envelope = np.ones(chord_len)
    ramp = 0.5 - 0.5 * np.cos(np.pi * np.arange(edge) / edge)
    envelope[:edge] = ramp
    envelope[-edge:] = ramp[::-1]

    chords = []
    for _ in range(-(-n_samples // chord_len)):
        notes = rng.integers(48, 85, size=CHORD_NOTES)
        chord = np.zeros(chord_len)
        for note in notes:
            f0 = 440.0 * 2.0 ** ((note - 69) / 12.0)
            for harmonic in range(1, CHORD_HARMONICS + 1):
                if harmonic * f0 < PROCESSING_RATE / 2:
                    phase = rng.uniform(0.0, 2.0 * np.pi)
                    chord += np.sin(2.0 * np.pi * harmonic * f0 * t + phase) / harmonic
        chords.append(chord * envelope)
    samples = np.concatenate(chords)[:n_samples]
    floor = CHORD_NOISE_FLOOR * float(np.sqrt(np.mean(samples**2)))
    return samples + floor * rng.standard_normal(n_samples)


def _file_excerpt(
    source: HostSource, n_samples: int, rng: np.random.Generator
) -> NDArray[np.float64]:
    samples = read_wav(source.path).samples  # type: ignore[arg-type]
    if samples.size < n_samples:
        raise SignalRangeError(
            f"Host file {source.path} has {samples.size} samples, "
            f"a trial needs {n_samples}"
        )
    start = int(rng.integers(0, samples.size - n_samples + 1))
    return samples[start : start + n_samples]
