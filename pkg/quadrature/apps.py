from django.apps import AppConfig


class QuadratureConfig(AppConfig):
    name = 'quadrature'
    verbose_name = 'Adaptive quadrature and bracketed roots'
