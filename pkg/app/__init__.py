"""Entry wrappers for ``python -m app.main``."""
