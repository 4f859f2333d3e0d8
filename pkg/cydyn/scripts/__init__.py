"""
cydyn.scripts

cydyn CLI utility
"""
