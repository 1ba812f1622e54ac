"""Unit tests for Form 13F AI Agent."""
