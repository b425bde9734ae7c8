"""Tests for schedules, execution and fixtures."""
