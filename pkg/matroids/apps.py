from django.apps import AppConfig


class MatroidsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'matroids'
    verbose_name = 'Binary matroids'
