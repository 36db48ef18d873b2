from django.apps import AppConfig


class RealtreesConfig(AppConfig):
    name = 'realtrees'
    verbose_name = 'Árboles reales universales'
