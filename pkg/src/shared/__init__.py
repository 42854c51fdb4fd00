"""Logging, errors, configuration and report models shared by every package."""
