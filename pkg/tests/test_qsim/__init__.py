"""Tests for the statevector engine."""
