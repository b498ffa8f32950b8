"""Exact tools for G-Motzkin paths: enumeration, closed forms, generating
functions, Riordan arrays, and executable bijections."""

from gmotzkin.paths import Path, enumerate_paths, count_paths  # noqa: F401
