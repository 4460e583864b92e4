from django.apps import AppConfig
from django.core import checks


class MKXAppConfig(AppConfig):
    name = 'MKX'

    def ready(self) -> None:
        from MKX.checks import check_generic_s, check_slow_tests, check_threads

        checks.register(check_slow_tests)
        checks.register(check_threads)
        checks.register(check_generic_s)
