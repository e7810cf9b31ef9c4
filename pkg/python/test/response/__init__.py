"""Response module tests."""
