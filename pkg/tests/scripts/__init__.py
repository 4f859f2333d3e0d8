"""
cydyn tests.scripts
"""
