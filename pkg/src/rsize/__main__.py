"""Module entry point so `python -m rsize` matches the installed script."""

from .cli import run

if __name__ == "__main__":
    run()
