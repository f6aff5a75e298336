from django.apps import AppConfig


class MeansConfig(AppConfig):
    name = 'means'
    verbose_name = 'Bivariate means'
