"""
cydyn tests.io
"""
