"""
cydyn tests.geometry
"""
