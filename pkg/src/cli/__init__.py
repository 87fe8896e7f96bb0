"""
Command-line input parsing, output documents and text rendering.
"""
