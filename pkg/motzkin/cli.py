"""Entry point for the ``motzkin`` console script."""

import os
import sys

from django.core.management import ManagementUtility


def run(argv=None) -> int:
    """Run one motzkin subcommand and return its exit status instead of exiting."""
    os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'MKX.settings')
    argv = list(sys.argv[1:] if argv is None else argv)
    utility = ManagementUtility(['motzkin', *argv])
    try:
        utility.execute()
    except SystemExit as exc:
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else 1
    return 0


def main():
    sys.exit(run())
