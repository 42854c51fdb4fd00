"""Integration tests for your graph."""
