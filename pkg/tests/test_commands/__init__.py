"""Tests for the protocol actions."""
