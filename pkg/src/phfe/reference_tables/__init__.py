"""Bundled reference tables (JSON, one file per published table)."""
