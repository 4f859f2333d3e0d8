"""
cydyn tests.core
"""
