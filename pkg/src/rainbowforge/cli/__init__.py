"""CLI for RainbowForge."""
