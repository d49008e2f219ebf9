"""
Monitoring module for benchmark timings and runtime growth fits.
"""
