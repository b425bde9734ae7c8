"""Allows `python -m treegate`."""

from treegate.cli import main

if __name__ == "__main__":
    main()
