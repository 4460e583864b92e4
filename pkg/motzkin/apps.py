from django.apps import AppConfig


class MotzkinConfig(AppConfig):
    name = 'motzkin'
    verbose_name = 'Motzkin algebra'
