"""
Test package for the vacuous reduct lab.
"""
