"""Tests for the references and the correction solver."""
