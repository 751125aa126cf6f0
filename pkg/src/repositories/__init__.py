"""Repositories for interchange files."""
