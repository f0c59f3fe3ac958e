"""Tests for RainbowForge."""
