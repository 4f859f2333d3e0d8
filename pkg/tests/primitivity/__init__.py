"""
cydyn tests.primitivity
"""
