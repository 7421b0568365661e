"""Submodule code tests."""
