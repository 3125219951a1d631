from django.apps import AppConfig


class HomologyConfig(AppConfig):
    name = 'homology'
