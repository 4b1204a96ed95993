"""Tests for the qofc-cluster package."""
