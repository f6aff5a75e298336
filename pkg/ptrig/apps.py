from django.apps import AppConfig


class PtrigConfig(AppConfig):
    name = 'ptrig'
    verbose_name = 'Generalized trigonometric and hyperbolic functions'
