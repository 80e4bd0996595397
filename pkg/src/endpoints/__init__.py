"""
Endpoints module.

One package per stage of the watermark pipeline: embedding, the simulated
acoustic channel, detection and evaluation. Each endpoint has its own main
entry point and can be run alone.
"""
