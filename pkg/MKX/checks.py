import os
import sys

from django.conf import settings
from django.core.checks import Error as CheckError
from django.core.checks import Warning as CheckWarning
from django.core.exceptions import ValidationError

from motzkin.scalars import parse_rational


def check_slow_tests(**kwargs):
    errors = []

    if settings.MOTZKIN['SLOW_TESTS'] and sys.flags.dev_mode:
        errors.append(
            CheckWarning(
                'MOTZKIN_SLOW_TESTS is on while Python development mode is active.',
                hint=(
                    'The exhaustive k=6 sweeps run several times slower in development mode. '
                    + "Unset PYTHONDEVMODE and drop '-X dev' for slow runs."
                ),
                id='MKX.W001',
            )
        )

    return errors


def check_threads(**kwargs):
    errors = []
    threads = settings.MOTZKIN['THREADS']

    if threads < 1:
        errors.append(
            CheckError(
                f'MOTZKIN_THREADS is {threads}; at least one worker is needed.',
                hint='Set MOTZKIN_THREADS to a positive integer, or unset it for 1.',
                id='MKX.E001',
            )
        )
    elif threads > (os.cpu_count() or 1):
        errors.append(
            CheckWarning(
                f'MOTZKIN_THREADS is {threads} but only {os.cpu_count()} CPUs are available.',
                hint='Gram matrix assembly will not get faster beyond the CPU count.',
                id='MKX.W002',
            )
        )

    return errors


def check_generic_s(**kwargs):
    errors = []

    for text in settings.MOTZKIN['GENERIC_S']:
        try:
            value = parse_rational(text)
        except ValidationError:
            value = None
        if value is None or value in (0, 1, -1):
            errors.append(
                CheckError(
                    f'MOTZKIN_GENERIC_S entry {text!r} is not a generic value of s.',
                    hint="Use rationals such as '5/7' other than 0, 1 and -1.",
                    id='MKX.E002',
                )
            )

    return errors
