"""Provides mixin classes."""
