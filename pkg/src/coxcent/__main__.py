"""Module entry: python -m coxcent ..."""

import sys

from .cli import main

sys.exit(main())
