"""Tests for Form 13F AI Agent."""
