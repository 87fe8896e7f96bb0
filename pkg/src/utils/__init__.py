"""
Utility modules: error types and exact integer linear algebra.
"""
