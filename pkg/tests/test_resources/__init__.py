"""Tests for resource accounting."""
