#!/usr/bin/env python3
"""
Main entry point for baselab.
Runs one command-line query, e.g. `python main.py valid "p -o p"`.
"""
import sys

from cli import main


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\nQuery interrupted by user.", file=sys.stderr)
        sys.exit(2)
