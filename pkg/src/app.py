"""Command-line entry point for the nisq-modal toolkit."""

from __future__ import annotations

import sys

from nisq_modal.cli import main

if __name__ == "__main__":
    sys.exit(main())
