"""Errors, coefficient helpers and dense linear algebra used across the kernel."""
