"""Tests for the party network."""
