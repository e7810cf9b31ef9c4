"""Utils module tests."""
