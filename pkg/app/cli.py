"""Re-export of ``severi_genus.cli`` for callers that import ``app.cli``."""

from severi_genus.cli import build_parser, run  # noqa: F401
