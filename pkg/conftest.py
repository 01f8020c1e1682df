"""Root conftest: puts the repo root on sys.path so tests can import the `tests` package."""
