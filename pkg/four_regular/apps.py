from django.apps import AppConfig


class FourRegularConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'four_regular'
    verbose_name = '4-regular graphs and circuit partitions'
