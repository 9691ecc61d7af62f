from django.apps import AppConfig


class Gf2Config(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'gf2'
    verbose_name = 'GF(2) linear algebra'
