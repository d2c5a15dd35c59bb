"""
Metric fractal lab
Recursive graph families (diamond, Laakso, M), their metric structure and
distortion bounds between them.
"""

__version__ = "0.1.0"
