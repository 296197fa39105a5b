"""Application layer: CLI parsing, logging setup, wiring and command handlers."""
