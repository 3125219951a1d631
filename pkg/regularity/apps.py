from django.apps import AppConfig


class RegularityConfig(AppConfig):
    name = 'regularity'
    verbose_name = 'Betti tables and regularity'
