"""
Channel endpoint.

Simulated acoustic channels (room reverberation, clock drift, noise) and
standard processing attacks applied to watermarked audio.
"""
