"""
Evaluation endpoint.

Detection trials over grids of watermark configs and channels, false
accept scans, ROC curves and sweep reports.
"""
