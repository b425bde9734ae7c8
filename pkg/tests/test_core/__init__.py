"""Tests for the core infrastructure."""
