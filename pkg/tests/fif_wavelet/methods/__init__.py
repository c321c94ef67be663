"""Tests for transform methods package."""
