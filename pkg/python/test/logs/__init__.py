"""Logger module tests."""
