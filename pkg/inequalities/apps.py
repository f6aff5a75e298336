from django.apps import AppConfig


class InequalitiesConfig(AppConfig):
    name = 'inequalities'
    verbose_name = 'Inequality claim registry and grid scans'
