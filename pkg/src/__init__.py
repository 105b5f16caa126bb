"""TraceHankel Package.

Exact spectral size, degeneracy test and spectral polynomial of a square matrix,
read off Hankel matrices of traces of its powers.
"""
