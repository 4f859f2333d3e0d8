"""
cydyn tests.analysis
"""
