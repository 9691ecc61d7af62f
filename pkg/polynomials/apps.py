from django.apps import AppConfig


class PolynomialsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'polynomials'
    verbose_name = 'Interlace and Tutte polynomials'
