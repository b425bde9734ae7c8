"""Tests for the global enums and exceptions."""
