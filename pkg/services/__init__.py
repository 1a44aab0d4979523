"""
Services package containing the slice-regular calculus

Sub-packages: algebra, series, geometry, zeros.
"""
