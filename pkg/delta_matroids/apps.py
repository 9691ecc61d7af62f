from django.apps import AppConfig


class DeltaMatroidsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'delta_matroids'
    verbose_name = 'Set systems and delta-matroids'
