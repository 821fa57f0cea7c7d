"""Provides modules to handle configuration, logging and errors."""
