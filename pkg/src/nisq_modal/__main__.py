"""Allow ``python -m nisq_modal``."""

import sys

from .cli import main

sys.exit(main())
