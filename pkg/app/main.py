"""Entrypoint for ``python -m app.main <command>``."""

from severi_genus.cli import run


if __name__ == "__main__":
    raise SystemExit(run())
